"""Sequence generators over the dense and sparse spaces.

A :class:`SequenceSpec` couples a per-index generator with the space and
norm the sequence lives in.  Specs built by the constructors here also carry
a *structure* record: a vectorised description of the whole sequence that
the sweep engine uses to evaluate ``||x_n||`` or ``||x_n - c||`` for every
``n`` up to a horizon in one numpy pass.  Sequences without a structure fall
back to a per-index loop, which is fine for cheap generators and small
horizons but would be hopeless for, say, growing-support prefixes at
``n = 10^5``.

Structures are consistency-tested against the generators; they are an
evaluation strategy, never a second source of truth.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from . import density, parsing, spaces
from .density import HorizonExhausted
from .parsing import format_float
from .spaces import (
    DenseElement,
    Norm,
    Space,
    SparseElement,
    dense_space,
    norm as element_norm,
    p_norm,
    sparse_space,
    sub,
    sup_norm,
)

DEFAULT_DENSE_NORM = p_norm(2)
DEFAULT_SPARSE_NORM = sup_norm()

CORPUS_VERSION = "v1"


# ---------------------------------------------------------------------------
# structures: vectorised whole-sequence descriptions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SingleSupport:
    """Sparse ``x_n = value_of(n) * e_{index_of(n)}``."""

    index_of: Callable
    value_of: Callable


@dataclass(frozen=True)
class PrefixValues:
    """Sparse ``x_n = {k -> value_of(k) : k <= n}``."""

    value_of: Callable


@dataclass(frozen=True)
class FixedBasisCombo:
    """``x_n = sum_j coeff_of(n)[., j] * basis[j]`` over a fixed finite basis."""

    coeff_of: Callable      # (N,) int array -> (N, r) float array
    basis: tuple


@dataclass(frozen=True)
class DenseBlock:
    """Dense rows: ``block_of(ns)`` returns the ``(len(ns), dim)`` coordinate rows."""

    block_of: Callable


@dataclass(frozen=True)
class Reindexed:
    """``x_k = parent`` at the k-th member of an index set."""

    parent: "SequenceSpec"


@dataclass(frozen=True)
class Scaled:
    """``x_n = scale_of(n) * parent_n`` (norm sweeps only; distances stay generic)."""

    parent: "SequenceSpec"
    scale_of: Callable


@dataclass(frozen=True)
class SequenceSpec:
    """A sequence of space elements, one per index ``n >= 1``."""

    generator: Callable
    space: Space
    norm: Norm
    label: str
    seed: Optional[int] = None
    structure: object = None
    norm_bound: Optional[float] = None
    cache: dict = field(default_factory=dict, compare=False, repr=False)

    def __repr__(self):
        return f"SequenceSpec({self.label!r}, {self.space.describe()}, {self.norm.describe()})"


def _as_index_array(ns):
    return np.asarray(ns, dtype=np.int64)


def _default_norm(space):
    return DEFAULT_DENSE_NORM if space.kind == "dense" else DEFAULT_SPARSE_NORM


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------

def zero_sequence(space, norm=None):
    norm = norm or _default_norm(space)
    z = spaces.zero(space)
    if space.kind == "dense":
        dim = space.dim
        structure = DenseBlock(lambda ns: np.zeros((len(_as_index_array(ns)), dim)))
    else:
        structure = SingleSupport(
            lambda ns: np.ones(len(_as_index_array(ns)), dtype=np.int64),
            lambda ns: np.zeros(len(_as_index_array(ns))),
        )
    return SequenceSpec(lambda n: z, space, norm, "zero", structure=structure, norm_bound=0.0)


def constant_sequence(value, label=None):
    space = spaces.space_of(value)
    norm = _default_norm(space)
    if space.kind == "dense":
        row = np.asarray(value.coords)
        structure = DenseBlock(lambda ns: np.tile(row, (len(_as_index_array(ns)), 1)))
    else:
        structure = FixedBasisCombo(
            lambda ns: np.ones((len(_as_index_array(ns)), 1)), (value,)
        )
    return SequenceSpec(
        lambda n: value,
        space,
        norm,
        label or f"constant({spaces.format_element(value)})",
        structure=structure,
        norm_bound=element_norm(value, norm),
    )


def harmonic_prefix_sequence():
    """Growing prefixes of the reciprocals: ``x_n`` holds ``1/k`` at ``k <= n``."""

    def gen(n):
        return SparseElement({k: 1.0 / k for k in range(1, n + 1)})

    structure = PrefixValues(lambda ks: 1.0 / _as_index_array(ks).astype(float))
    return SequenceSpec(
        gen, sparse_space(), sup_norm(), "harmonic_prefix",
        structure=structure, norm_bound=1.0,
    )


def unit_coordinate_sequence():
    structure = SingleSupport(
        lambda ns: _as_index_array(ns),
        lambda ns: np.ones(len(_as_index_array(ns))),
    )
    return SequenceSpec(
        lambda n: SparseElement({n: 1.0}), sparse_space(), sup_norm(),
        "unit_coords", structure=structure, norm_bound=1.0,
    )


def prime_coordinate_sequence():
    """``x_n`` is the coordinate vector at the n-th prime."""

    def index_of(ns):
        ns = _as_index_array(ns)
        table = density.nth_primes(int(ns.max()))
        return table[ns - 1]

    structure = SingleSupport(index_of, lambda ns: np.ones(len(_as_index_array(ns))))
    return SequenceSpec(
        lambda n: SparseElement({int(density.nth_primes(n)[-1]): 1.0}),
        sparse_space(), sup_norm(), "prime_coords",
        structure=structure, norm_bound=1.0,
    )


def damped_unit_coordinate_sequence():
    """Coordinate vectors shrunk to norm ``1/sqrt(n)``: norm-null but spread out."""
    structure = SingleSupport(
        lambda ns: _as_index_array(ns),
        lambda ns: 1.0 / np.sqrt(_as_index_array(ns).astype(float)),
    )
    return SequenceSpec(
        lambda n: SparseElement({n: 1.0 / math.sqrt(n)}),
        sparse_space(), sup_norm(), "damped_unit_coords",
        structure=structure, norm_bound=1.0,
    )


def damped_prime_coordinate_sequence():
    def index_of(ns):
        ns = _as_index_array(ns)
        return density.nth_primes(int(ns.max()))[ns - 1]

    def value_of(ns):
        return 1.0 / np.sqrt(index_of(ns).astype(float))

    def gen(n):
        p = int(density.nth_primes(n)[-1])
        return SparseElement({p: 1.0 / math.sqrt(p)})

    return SequenceSpec(
        gen, sparse_space(), sup_norm(), "damped_prime_coords",
        structure=SingleSupport(index_of, value_of), norm_bound=1.0,
    )


def decaying_sequence(value, exponent=1.0, label=None):
    """``x_n = n^(-exponent) * value``; the workhorse null sequence."""
    space = spaces.space_of(value)
    norm = _default_norm(space)
    exponent = float(exponent)

    def gen(n):
        return spaces.scale(n ** (-exponent), value)

    if space.kind == "dense":
        row = np.asarray(value.coords)
        structure = DenseBlock(
            lambda ns: row[None, :] * (_as_index_array(ns).astype(float) ** -exponent)[:, None]
        )
    else:
        structure = FixedBasisCombo(
            lambda ns: (_as_index_array(ns).astype(float) ** -exponent)[:, None], (value,)
        )
    return SequenceSpec(
        gen, space, norm, label or f"null({spaces.format_element(value)})",
        structure=structure, norm_bound=element_norm(value, norm),
    )


def _identity_magnitude(ns):
    return np.asarray(ns, dtype=float)


def spike_sequence(base, spikes, magnitude=None, label=None):
    """``base`` with the terms on the index set ``spikes`` replaced.

    On a spike index ``n`` the term becomes ``magnitude(n) * e_n`` (sparse)
    or ``magnitude(n) * e_1`` (dense; the first coordinate carries dense
    spikes).  Off the spike set the base term passes through unchanged.
    ``magnitude`` must accept numpy index arrays; it defaults to ``n -> n``.
    """
    if isinstance(base, Space):
        base = zero_sequence(base)
    mag = magnitude if magnitude is not None else _identity_magnitude
    space, norm = base.space, base.norm
    base_gen = base.generator

    def mag_at(n):
        return float(mag(np.asarray([n], dtype=np.int64))[0])

    def mask_at(ns):
        ns = _as_index_array(ns)
        full = density.membership_mask(spikes, int(ns.max()))
        return full[ns - 1]

    if space.kind == "sparse":
        def gen(n):
            if spikes.contains(n):
                m = mag_at(n)
                return SparseElement({n: m} if m != 0.0 else {})
            return base_gen(n)

        structure = None
        if base.norm_bound == 0.0:
            structure = SingleSupport(
                lambda ns: _as_index_array(ns),
                lambda ns: np.where(mask_at(ns), mag(_as_index_array(ns)).astype(float), 0.0),
            )
    else:
        dim = space.dim

        def gen(n):
            if spikes.contains(n):
                coords = [0.0] * dim
                coords[0] = mag_at(n)
                return DenseElement(tuple(coords))
            return base_gen(n)

        structure = None
        if isinstance(base.structure, DenseBlock):
            base_block = base.structure.block_of

            def block_of(ns):
                ns = _as_index_array(ns)
                mask = mask_at(ns)
                block = base_block(ns).copy()
                block[mask] = 0.0
                block[mask, 0] = mag(ns).astype(float)[mask]
                return block

            structure = DenseBlock(block_of)

    return SequenceSpec(
        gen, space, norm,
        label or f"spike({spikes.describe()},n)",
        structure=structure, norm_bound=None,
    )


def index_sequence(dim=1):
    """``x_n = n * e_1`` in a dense space; the standard unbounded sequence."""
    space = dense_space(dim)

    def block_of(ns):
        ns = _as_index_array(ns)
        block = np.zeros((len(ns), dim))
        block[:, 0] = ns.astype(float)
        return block

    def gen(n):
        coords = [0.0] * dim
        coords[0] = float(n)
        return DenseElement(tuple(coords))

    return SequenceSpec(gen, space, DEFAULT_DENSE_NORM, "index_e1",
                        structure=DenseBlock(block_of))


def alternating_sequence(dim=1):
    """``x_n = (-1)^n * e_1`` in a dense space."""
    space = dense_space(dim)

    def block_of(ns):
        ns = _as_index_array(ns)
        block = np.zeros((len(ns), dim))
        block[:, 0] = np.where(ns % 2 == 0, 1.0, -1.0)
        return block

    def gen(n):
        coords = [0.0] * dim
        coords[0] = 1.0 if n % 2 == 0 else -1.0
        return DenseElement(tuple(coords))

    return SequenceSpec(gen, space, DEFAULT_DENSE_NORM, "alternating_e1",
                        structure=DenseBlock(block_of), norm_bound=1.0)


def _random_table(cache, seed, count, width):
    """Seeded uniform [-1, 1] table, grown as needed; prefixes are stable."""
    have = cache.get("table")
    if have is None or have.shape[0] < count:
        size = max(count, 2 * (have.shape[0] if have is not None else 0), 1024)
        rng = np.random.default_rng(seed)
        cache["table"] = rng.random((size, width)) * 2.0 - 1.0
    return cache["table"][:count]


def random_unit_ball(space, seed, norm=None):
    """Seeded random elements of norm at most 1; bitwise reproducible per seed."""
    norm = norm or _default_norm(space)
    seed = int(seed)
    cache = {}

    if space.kind == "dense":
        dim = space.dim

        def rows_upto(count):
            raw = _random_table(cache, seed, count, dim)
            if norm.kind == "sup":
                return raw   # already inside the sup ball
            lens = np.sum(np.abs(raw) ** norm.p, axis=1) ** (1.0 / norm.p)
            return raw / np.maximum(lens, 1.0)[:, None]

        def block_of(ns):
            ns = _as_index_array(ns)
            return rows_upto(int(ns.max()))[ns - 1]

        def gen(n):
            return DenseElement(tuple(float(c) for c in rows_upto(n)[n - 1]))

        structure = DenseBlock(block_of)
    else:
        def values_upto(count):
            return _random_table(cache, seed, count, 1)[:, 0]

        def gen(n):
            v = float(values_upto(n)[n - 1])
            return SparseElement({n: v} if v != 0.0 else {})

        structure = SingleSupport(
            lambda ns: _as_index_array(ns),
            lambda ns: values_upto(int(_as_index_array(ns).max()))[_as_index_array(ns) - 1],
        )

    return SequenceSpec(
        gen, space, norm, f"random_ball_{seed}", seed=seed,
        structure=structure, norm_bound=1.0,
    )


def combine(a, b, alpha, beta, label=None):
    """Pointwise ``alpha * a_n + beta * b_n``."""
    if a.space != b.space:
        raise ValueError(f"cannot combine {a.space.describe()} with {b.space.describe()}")
    if a.norm != b.norm:
        raise ValueError("combined sequences must share a norm")
    alpha, beta = float(alpha), float(beta)
    ga, gb = a.generator, b.generator

    def gen(n):
        return spaces.add(spaces.scale(alpha, ga(n)), spaces.scale(beta, gb(n)))

    structure = None
    sa, sb = a.structure, b.structure
    if isinstance(sa, DenseBlock) and isinstance(sb, DenseBlock):
        structure = DenseBlock(lambda ns: alpha * sa.block_of(ns) + beta * sb.block_of(ns))
    elif isinstance(sa, PrefixValues) and isinstance(sb, PrefixValues):
        structure = PrefixValues(lambda ks: alpha * sa.value_of(ks) + beta * sb.value_of(ks))
    elif isinstance(sa, FixedBasisCombo) and isinstance(sb, FixedBasisCombo):
        def coeff_of(ns):
            return np.concatenate([alpha * sa.coeff_of(ns), beta * sb.coeff_of(ns)], axis=1)

        structure = FixedBasisCombo(coeff_of, sa.basis + sb.basis)

    bound = None
    if a.norm_bound is not None and b.norm_bound is not None:
        bound = abs(alpha) * a.norm_bound + abs(beta) * b.norm_bound
    return SequenceSpec(
        gen, a.space, a.norm,
        label or f"combine({a.label},{b.label},{format_float(alpha)},{format_float(beta)})",
        structure=structure, norm_bound=bound,
    )


DEFAULT_MEMBER_CAP = 100_000_000


def subsequence(seq, along, cap=DEFAULT_MEMBER_CAP, label=None):
    """``x_k = seq`` at the k-th member of ``along``.

    Raises :class:`HorizonExhausted` if the set runs out of members (finite
    sets) or enumeration would pass ``cap``.
    """
    spec_cache = {}

    def members_upto(count):
        have = spec_cache.get("members")
        if have is None or len(have) < count:
            try:
                spec_cache["members"] = density.members(along, max(count, 64), cap=cap)
            except density.HorizonExhausted:
                # the set may simply be smaller than the chunk; only a
                # request it genuinely cannot satisfy should raise
                spec_cache["members"] = density.members(along, count, cap=cap)
        return spec_cache["members"][:count]

    def gen(k):
        m = int(members_upto(k)[k - 1])
        return seq.generator(m)

    out = SequenceSpec(
        gen, seq.space, seq.norm,
        label or f"subseq({seq.label},{along.describe()})",
        structure=Reindexed(seq),
        norm_bound=seq.norm_bound,
    )
    out.cache["members_upto"] = members_upto
    return out


# ---------------------------------------------------------------------------
# sweep engine
# ---------------------------------------------------------------------------

_CHUNK = 8192


def _chunked_abs_rowmax(coeff, mat, offset):
    """max_j |coeff @ mat - offset| per row, chunked to keep memory flat."""
    n = coeff.shape[0]
    out = np.empty(n)
    for lo in range(0, n, _CHUNK):
        hi = min(lo + _CHUNK, n)
        rows = coeff[lo:hi] @ mat
        if offset is not None:
            rows = rows - offset
        out[lo:hi] = np.max(np.abs(rows), axis=1) if rows.shape[1] else 0.0
    return out


def _sparse_support_arrays(x):
    items = sorted(x.support.items())
    idx = np.asarray([k for k, _ in items], dtype=np.int64)
    val = np.asarray([v for _, v in items])
    return idx, val


def _candidate_key(candidate):
    text = spaces.format_element(candidate)
    if len(text) <= 80:
        return text
    return "sha1:" + hashlib.sha1(text.encode()).hexdigest()


def _block_norms(block, nrm):
    if nrm.kind == "sup":
        return np.max(np.abs(block), axis=1)
    return np.sum(np.abs(block) ** nrm.p, axis=1) ** (1.0 / nrm.p)


def _is_zero_element(x):
    if isinstance(x, SparseElement):
        return not x.support
    return all(c == 0.0 for c in x.coords)


def _generic_sweep(seq, candidate, horizon):
    gen = seq.generator
    nrm = seq.norm
    if candidate is None:
        return np.asarray([element_norm(gen(n), nrm) for n in range(1, horizon + 1)])
    return np.asarray(
        [element_norm(sub(gen(n), candidate), nrm) for n in range(1, horizon + 1)]
    )


def _structured_sweep(seq, candidate, horizon):
    """Vectorised sweep; ``candidate=None`` means plain norms.  Returns None
    when the structure cannot handle the request."""
    st = seq.structure
    ns = np.arange(1, horizon + 1, dtype=np.int64)

    if isinstance(st, DenseBlock):
        block = st.block_of(ns)
        if candidate is not None:
            block = block - np.asarray(candidate.coords)[None, :]
        return _block_norms(block, seq.norm)

    if isinstance(st, SingleSupport):
        idx = st.index_of(ns)
        val = st.value_of(ns).astype(float)
        if candidate is None:
            return np.abs(val)
        cidx, cval = _sparse_support_arrays(candidate)
        if len(cidx) == 0:
            return np.abs(val)
        acv = np.abs(cval)
        top = int(np.argmax(acv))
        top_val = acv[top]
        second = np.max(np.delete(acv, top)) if len(acv) > 1 else 0.0
        off = np.where(idx == cidx[top], second, top_val)
        pos = np.searchsorted(cidx, idx)
        pos_ok = (pos < len(cidx)) & (cidx[np.minimum(pos, len(cidx) - 1)] == idx)
        c_at = np.where(pos_ok, cval[np.minimum(pos, len(cidx) - 1)], 0.0)
        return np.maximum(np.abs(val - c_at), off)

    if isinstance(st, PrefixValues):
        vals = st.value_of(ns).astype(float)
        if candidate is None:
            return np.maximum.accumulate(np.abs(vals))
        cidx, cval = _sparse_support_arrays(candidate)
        j = int(cidx.max()) if len(cidx) else 0
        cfull = np.zeros(max(horizon, j))
        if len(cidx):
            cfull[cidx - 1] = cval
        diff = np.abs(vals - cfull[:horizon])
        prefix = np.maximum.accumulate(diff)
        suffix_part = np.zeros(horizon)
        if j > 1:
            tail = np.abs(cfull[:j])
            rev = np.maximum.accumulate(tail[::-1])[::-1]   # rev[i] = max_{t >= i} |c_{t+1}|
            upto = min(horizon, j - 1)
            suffix_part[:upto] = rev[1 : upto + 1]
        return np.maximum(prefix, suffix_part)

    if isinstance(st, FixedBasisCombo):
        coeff = st.coeff_of(ns)
        support = set()
        for b in st.basis:
            support.update(b.support.keys())
        if candidate is not None:
            support.update(candidate.support.keys())
        uidx = np.asarray(sorted(support), dtype=np.int64)
        mat = np.zeros((len(st.basis), len(uidx)))
        lookup = {k: t for t, k in enumerate(uidx)}
        for r, b in enumerate(st.basis):
            for k, v in b.support.items():
                mat[r, lookup[k]] = v
        offset = None
        if candidate is not None:
            offset = np.zeros(len(uidx))
            for k, v in candidate.support.items():
                offset[lookup[k]] = v
        if len(uidx) == 0:
            return np.zeros(horizon)
        return _chunked_abs_rowmax(coeff, mat, offset)

    if isinstance(st, Reindexed):
        members_upto = seq.cache.get("members_upto")
        if members_upto is None:
            return None
        m = members_upto(horizon)
        parent_sweep = (
            norm_sweep(st.parent, int(m[-1]))
            if candidate is None
            else distance_sweep(st.parent, candidate, int(m[-1]))
        )
        return parent_sweep[m - 1]

    if isinstance(st, Scaled) and candidate is None:
        base = norm_sweep(st.parent, horizon)
        return np.abs(st.scale_of(ns).astype(float)) * base

    return None


def norm_sweep(seq, horizon):
    """``||x_n||`` for ``n = 1..horizon`` as one array (cached)."""
    horizon = int(horizon)
    key = "norms"
    have = seq.cache.get(key)
    if have is not None and len(have) >= horizon:
        return have[:horizon]
    arr = _structured_sweep(seq, None, horizon)
    if arr is None:
        arr = _generic_sweep(seq, None, horizon)
    seq.cache[key] = arr
    return arr


def distance_sweep(seq, candidate, horizon):
    """``||x_n - candidate||`` for ``n = 1..horizon`` as one array (cached)."""
    horizon = int(horizon)
    if spaces.space_of(candidate) != seq.space:
        raise ValueError("candidate lives in a different space than the sequence")
    if _is_zero_element(candidate):
        return norm_sweep(seq, horizon)
    key = ("dist", _candidate_key(candidate))
    have = seq.cache.get(key)
    if have is not None and len(have) >= horizon:
        return have[:horizon]
    arr = _structured_sweep(seq, candidate, horizon)
    if arr is None:
        arr = _generic_sweep(seq, candidate, horizon)
    seq.cache[key] = arr
    return arr


def element_block(seq, ns):
    """Dense coordinate rows at the given indices (vectorised when possible)."""
    if seq.space.kind != "dense":
        raise ValueError("element blocks are a dense-space facility")
    ns = _as_index_array(ns)
    st = seq.structure
    if isinstance(st, DenseBlock):
        return st.block_of(ns)
    return np.asarray([seq.generator(int(n)).coords for n in ns])


# ---------------------------------------------------------------------------
# descriptor grammar
# ---------------------------------------------------------------------------

def _parse_space_arg(cur, default_dim=3):
    """Either ``sparse`` or ``dim=K`` (default dense:3)."""
    if cur.try_eat("sparse"):
        return sparse_space()
    if cur.try_eat("dim"):
        cur.expect("=")
        return dense_space(cur.integer())
    return dense_space(default_dim)


def _parse_magnitude(cur):
    """``n`` for the identity magnitude, or a numeric constant."""
    if cur.try_eat("n"):
        return None
    value = cur.number()
    return lambda ns: np.full(len(_as_index_array(ns)), float(value))


def parse_sequence_at(cur, default_seed=7):
    name = cur.ident()
    if name == "harmonic":
        return harmonic_prefix_sequence()
    if name == "unit_coords":
        return unit_coordinate_sequence()
    if name == "prime_coords":
        return prime_coordinate_sequence()
    if name == "damped_unit_coords":
        return damped_unit_coordinate_sequence()
    if name == "damped_prime_coords":
        return damped_prime_coordinate_sequence()
    if name == "zero":
        space = sparse_space()
        if cur.try_eat("("):
            space = _parse_space_arg(cur)
            cur.expect(")")
        return zero_sequence(space)
    if name in ("constant", "null"):
        cur.expect("(")
        value = spaces.parse_element_at(cur)
        cur.expect(")")
        if name == "constant":
            return constant_sequence(value)
        return decaying_sequence(value)
    if name == "index":
        cur.expect("(")
        space = _parse_space_arg(cur, default_dim=1)
        cur.expect(")")
        if space.kind != "dense":
            cur.error("index sequences are dense")
        return index_sequence(space.dim)
    if name == "alternating":
        cur.expect("(")
        space = _parse_space_arg(cur, default_dim=1)
        cur.expect(")")
        if space.kind != "dense":
            cur.error("alternating sequences are dense")
        return alternating_sequence(space.dim)
    if name == "spike":
        cur.expect("(")
        spikes = density.parse_index_set_at(cur)
        cur.expect(",")
        mag = _parse_magnitude(cur)
        space = sparse_space()
        if cur.try_eat(","):
            space = _parse_space_arg(cur)
        cur.expect(")")
        return spike_sequence(space, spikes, magnitude=mag)
    if name == "random":
        cur.expect("(")
        space = dense_space(3)
        seed = default_seed
        while not cur.try_eat(")"):
            if cur.try_eat("seed"):
                cur.expect("=")
                seed = cur.integer()
            else:
                space = _parse_space_arg(cur)
            if not cur.try_eat(","):
                cur.expect(")")
                break
        return random_unit_ball(space, seed)
    if name == "combine":
        cur.expect("(")
        a = parse_sequence_at(cur, default_seed)
        cur.expect(",")
        b = parse_sequence_at(cur, default_seed)
        cur.expect(",")
        alpha = cur.number()
        cur.expect(",")
        beta = cur.number()
        cur.expect(")")
        return combine(a, b, alpha, beta)
    if name == "subseq":
        cur.expect("(")
        seq = parse_sequence_at(cur, default_seed)
        cur.expect(",")
        along = density.parse_index_set_at(cur)
        cur.expect(")")
        return subsequence(seq, along)
    cur.error(f"unknown sequence {name!r}")


def parse_sequence(text, default_seed=7):
    """Parse sequence descriptors like ``harmonic`` or ``spike(squares,n)``."""
    cur = parsing.Cursor(text)
    seq = parse_sequence_at(cur, default_seed)
    cur.finish("sequence")
    return seq


__all__ = [
    "CORPUS_VERSION",
    "DEFAULT_DENSE_NORM",
    "DEFAULT_SPARSE_NORM",
    "DEFAULT_MEMBER_CAP",
    "HorizonExhausted",
    "SequenceSpec",
    "SingleSupport",
    "PrefixValues",
    "FixedBasisCombo",
    "DenseBlock",
    "Reindexed",
    "Scaled",
    "zero_sequence",
    "constant_sequence",
    "harmonic_prefix_sequence",
    "unit_coordinate_sequence",
    "prime_coordinate_sequence",
    "damped_unit_coordinate_sequence",
    "damped_prime_coordinate_sequence",
    "decaying_sequence",
    "spike_sequence",
    "index_sequence",
    "alternating_sequence",
    "random_unit_ball",
    "combine",
    "subsequence",
    "parse_sequence",
    "parse_sequence_at",
    "norm_sweep",
    "distance_sweep",
    "element_block",
]
