"""Norm axioms and element algebra, mostly as hypothesis properties."""

import math

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from stconv import spaces

ATOL = spaces.ALGEBRA_TOL  # 1e-12 per module contract

finite_floats = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False, allow_infinity=False)

dense3 = st.tuples(finite_floats, finite_floats, finite_floats).map(spaces.dense_element)

sparse_elements = st.dictionaries(
    st.integers(min_value=1, max_value=40), finite_floats, max_size=6
).map(spaces.sparse_element)


def any_norm_for(x):
    if isinstance(x, spaces.SparseElement):
        return spaces.sup_norm()
    return spaces.p_norm(2.0)


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------

def test_space_validation():
    assert spaces.dense_space(3).dim == 3
    assert spaces.sparse_space().dim is None
    with pytest.raises(ValueError):
        spaces.Space("dense")
    with pytest.raises(ValueError):
        spaces.Space("sparse", dim=4)
    with pytest.raises(ValueError):
        spaces.Space("weird")


def test_norm_validation():
    assert spaces.p_norm(1.0).p == 1.0
    with pytest.raises(ValueError):
        spaces.p_norm(0.5)
    with pytest.raises(ValueError):
        spaces.Norm("other")


def test_sparse_element_prunes_zeros():
    x = spaces.sparse_element({1: 0.0, 2: 1.5, 7: 0.0})
    assert dict(x.support) == {2: 1.5}
    assert dict(spaces.sparse_element({}).support) == {}


def test_sparse_element_rejects_bad_indices():
    with pytest.raises(ValueError):
        spaces.sparse_element({0: 1.0})


def test_unit_coordinate():
    e5 = spaces.unit_coordinate(spaces.sparse_space(), 5)
    assert dict(e5.support) == {5: 1.0}
    assert spaces.norm(e5, spaces.sup_norm()) == 1.0
    e2 = spaces.unit_coordinate(spaces.dense_space(3), 2)
    assert e2.coords == (0.0, 1.0, 0.0)
    with pytest.raises(ValueError):
        spaces.unit_coordinate(spaces.dense_space(3), 4)


# ---------------------------------------------------------------------------
# norms vs direct computation
# ---------------------------------------------------------------------------

def test_sup_norm_sparse_matches_oracle():
    x = spaces.sparse_element({3: -2.5, 10: 1.0, 11: 2.5})
    assert spaces.norm(x, spaces.sup_norm()) == oracles.sparse_sup_norm({3: -2.5, 10: 1.0, 11: 2.5})
    assert spaces.norm(spaces.sparse_element({}), spaces.sup_norm()) == 0.0


def test_dense_norms_match_oracle():
    x = spaces.dense_element((3.0, -4.0, 0.0))
    assert spaces.norm(x, spaces.p_norm(2.0)) == pytest.approx(5.0, abs=ATOL)
    assert spaces.norm(x, spaces.p_norm(1.0)) == pytest.approx(7.0, abs=ATOL)
    assert spaces.norm(x, spaces.sup_norm()) == 4.0
    assert spaces.norm(x, spaces.p_norm(3.0)) == pytest.approx(
        oracles.dense_p_norm((3.0, -4.0, 0.0), 3.0), abs=ATOL
    )


# ---------------------------------------------------------------------------
# norm axioms (hypothesis)
# ---------------------------------------------------------------------------

@given(st.one_of(dense3, sparse_elements))
def test_norm_nonnegative_and_zero_only_at_zero(x):
    nrm = any_norm_for(x)
    value = spaces.norm(x, nrm)
    assert value >= 0.0
    is_zero = (
        not x.support if isinstance(x, spaces.SparseElement) else all(c == 0.0 for c in x.coords)
    )
    assert (value == 0.0) == is_zero


@given(st.one_of(dense3, sparse_elements), st.floats(min_value=-100, max_value=100, allow_nan=False))
def test_norm_absolute_homogeneity(x, alpha):
    nrm = any_norm_for(x)
    lhs = spaces.norm(spaces.scale(alpha, x), nrm)
    rhs = abs(alpha) * spaces.norm(x, nrm)
    assert lhs == pytest.approx(rhs, rel=1e-12, abs=ATOL)


@given(dense3, dense3)
def test_norm_triangle_inequality_dense(x, y):
    for nrm in (spaces.p_norm(1.0), spaces.p_norm(2.0), spaces.sup_norm()):
        lhs = spaces.norm(spaces.add(x, y), nrm)
        rhs = spaces.norm(x, nrm) + spaces.norm(y, nrm)
        assert lhs <= rhs + ATOL * max(1.0, rhs)


@given(sparse_elements, sparse_elements)
def test_norm_triangle_inequality_sparse(x, y):
    nrm = spaces.sup_norm()
    lhs = spaces.norm(spaces.add(x, y), nrm)
    rhs = spaces.norm(x, nrm) + spaces.norm(y, nrm)
    assert lhs <= rhs + ATOL * max(1.0, rhs)


# ---------------------------------------------------------------------------
# algebra
# ---------------------------------------------------------------------------

@given(sparse_elements, sparse_elements)
def test_sub_is_add_of_negation(x, y):
    direct = spaces.sub(x, y)
    via_add = spaces.add(x, spaces.scale(-1.0, y))
    assert dict(direct.support) == pytest.approx(dict(via_add.support), abs=ATOL)


@given(sparse_elements)
def test_subtracting_self_gives_zero(x):
    assert dict(spaces.sub(x, x).support) == {}


def test_add_mixed_spaces_rejected():
    with pytest.raises((ValueError, TypeError)):
        spaces.add(spaces.dense_element((1.0,)), spaces.sparse_element({1: 1.0}))


def test_add_mismatched_dims_rejected():
    with pytest.raises(ValueError):
        spaces.add(spaces.dense_element((1.0, 2.0)), spaces.dense_element((1.0,)))


def test_space_of():
    assert spaces.space_of(spaces.dense_element((1.0, 2.0))) == spaces.dense_space(2)
    assert spaces.space_of(spaces.sparse_element({2: 1.0})) == spaces.sparse_space()


def test_zero_elements():
    assert spaces.zero(spaces.dense_space(2)).coords == (0.0, 0.0)
    assert dict(spaces.zero(spaces.sparse_space()).support) == {}


# ---------------------------------------------------------------------------
# literals
# ---------------------------------------------------------------------------

def test_element_format_parse_round_trip():
    for x in (
        spaces.dense_element((1.0, -0.5, 0.0)),
        spaces.sparse_element({1: 1.0, 3: 0.25}),
        spaces.sparse_element({}),
    ):
        text = spaces.format_element(x)
        assert spaces.parse_element(text) == x


@given(sparse_elements)
def test_sparse_literal_round_trip(x):
    assert spaces.parse_element(spaces.format_element(x)) == x


def test_parse_element_errors():
    with pytest.raises(spaces.ParseError if hasattr(spaces, "ParseError") else Exception):
        spaces.parse_element("dense[1,")
    with pytest.raises(Exception):
        spaces.parse_element("box{1:2}")
