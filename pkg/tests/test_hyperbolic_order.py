from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from conftest import merge_interlaces, nonzero_rationals, rationals, root_lists, sorted_vectors
from hypmaj.errors import InvalidArgument, PreconditionViolation
from hypmaj.exact_poly import Poly
from hypmaj.hyperbolic_order import (
    Relation,
    center_polynomial,
    interlaces,
    interlacing_is_vacuous,
    majorizes,
    root_vector,
    vec_majorizes,
)

z = Poly.z()
F = Fraction
M, NM, IND = Relation.MAJORIZED, Relation.NOT_MAJORIZED, Relation.INDISTINGUISHABLE


# -- root vectors -----------------------------------------------------------


def test_root_vector_examples():
    assert [iv.lo for iv in root_vector(z**2 - 1).entries] == [-1, 1]
    assert [iv.lo for iv in root_vector((z + 2) ** 3).entries] == [-2, -2, -2]
    rv = root_vector(z**3 - 4 * z)
    assert [iv.lo for iv in rv.entries] == [-2, 0, 2] and rv.is_exact


def test_root_vector_rejects_nonreal_with_evidence():
    with pytest.raises(PreconditionViolation) as info:
        root_vector((z - 1) * (z**2 + 1))
    assert info.value.evidence["distinct_real_roots"] == 1
    assert info.value.evidence["distinct_roots"] == 3


def test_root_vector_width():
    rv = root_vector(z**3 - 2 * z, F(1, 2**20))
    assert len(rv.entries) == 3 and not rv.is_exact
    assert rv.width <= F(1, 2**20)


# -- vector majorization ----------------------------------------------------


@pytest.mark.parametrize(
    "x, y, rel",
    [
        ((0, 0), (-1, 1), M),
        ((-1, 1), (-1, 1), M),
        ((-2, 0, 2), (-3, 0, 3), M),
        ((-1, 1), (0, 1), NM),
    ],
)
def test_vec_majorizes_examples(x, y, rel):
    assert vec_majorizes(x, y).relation is rel


def test_vec_majorizes_failures_carry_index_and_margin():
    v = vec_majorizes((-1, 1), (0, 1))
    assert v.reason == "total_sum" and v.failing_index == 1 and v.margin == 1
    v = vec_majorizes((-3, 0, 3), (-2, 0, 2))
    assert v.reason == "partial_sum" and v.failing_index == 0 and v.margin == 1


def test_vec_majorizes_input_validation():
    with pytest.raises(InvalidArgument):
        vec_majorizes((1, 0), (0, 1))
    with pytest.raises(InvalidArgument):
        vec_majorizes((0,), (0, 1))


@given(st.integers(1, 5).flatmap(lambda n: st.tuples(sorted_vectors(n), sorted_vectors(n), sorted_vectors(n))))
def test_vec_majorizes_is_a_preorder_and_antisymmetric(xyz):
    x, y, w = xyz
    assert vec_majorizes(x, x).relation is M
    xy, yx = vec_majorizes(x, y).relation, vec_majorizes(y, x).relation
    if xy is M and yx is M:
        assert x == y
    if xy is M and vec_majorizes(y, w).relation is M:
        assert vec_majorizes(x, w).relation is M


@given(st.integers(2, 6).flatmap(lambda n: st.tuples(sorted_vectors(n), st.lists(st.integers(0, 100), min_size=n, max_size=n))))
def test_vec_majorizes_averaging_is_below(data):
    # x = D y for a doubly stochastic D built as an average of two permutations
    y, _ = data
    n = len(y)
    x = sorted((y[i] + y[n - 1 - i]) / 2 for i in range(n))
    assert vec_majorizes(x, y).relation is M


# -- polynomial majorization ------------------------------------------------


def test_majorizes_examples():
    assert majorizes(z**2, z**2 - 1).relation is M
    assert majorizes(z**3 - z, z**3 - 4 * z).relation is M
    v = majorizes(z**2 - 1, 2 * z**2 - 2)
    assert v.relation is NM and v.reason == "leading_coefficient"


def test_majorizes_degree_mismatch():
    assert majorizes(z, z**2).reason == "degree"


def test_majorizes_requires_hyperbolic():
    with pytest.raises(PreconditionViolation):
        majorizes(z**2 + 1, z**2 - 1)


def test_majorizes_threshold_tie_is_flagged():
    # top zero sqrt(2) on both sides: equal but never exactly isolated
    p = z**2 - 2
    assert majorizes(p, p).relation is IND
    assert majorizes(p, p, exact=False).relation is M


def test_majorizes_irrational_strict():
    # zeros +-sqrt(2) inside +-sqrt(3)
    assert majorizes(z**2 - 2, z**2 - 3).relation is M
    v = majorizes(z**2 - 3, z**2 - 2)
    assert v.relation is NM and v.margin > 0 and v.failing_index == 0


def test_majorizes_rejects_bad_threshold():
    with pytest.raises(InvalidArgument):
        majorizes(z, z, 0)


@given(st.integers(1, 6).flatmap(lambda n: st.tuples(root_lists(n, n), root_lists(n, n))), nonzero_rationals())
def test_majorizes_agrees_with_vectors(xy, c):
    x, y = sorted(xy[0]), sorted(xy[1])
    p, q = Poly.from_roots(x, c), Poly.from_roots(y, c)
    v, w = majorizes(p, q), vec_majorizes(x, y)
    assert v.relation is w.relation
    if v.relation is NM:
        assert v.failing_index == w.failing_index and v.margin > 0
    if v.relation is M:
        # order prerequisite: equal top two coefficients
        n = p.degree
        assert p.coefficient(n) == q.coefficient(n) and p.coefficient(n - 1) == q.coefficient(n - 1)


# -- center polynomial ------------------------------------------------------


def test_center_examples():
    assert center_polynomial(z**2 - 1) == z**2
    assert center_polynomial(z**3 - 3 * z**2 + z + 1) == (z - 1) ** 3
    assert center_polynomial(2 * z**2 + 4 * z) == 2 * (z + 1) ** 2


def test_center_rejects_constants():
    with pytest.raises(InvalidArgument):
        center_polynomial(Poly([3]))


@given(root_lists(2, 8), nonzero_rationals())
def test_center_is_minimum(roots, c):
    p = Poly.from_roots(roots, c)
    assert majorizes(center_polynomial(p), p).relation is M


# -- interlacing ------------------------------------------------------------


def test_interlacing_examples():
    assert interlaces(z**2 - 1, z)
    # nested zeros (-1, 1) inside (-2, 2) do not interlace; the Wronskian is -6z
    assert not interlaces(z**2 - 1, z**2 - 4)
    assert not merge_interlaces([-1, 1], [-2, 2])
    assert interlaces(z**2 - 1, (z + 2) * (z - F(1, 2)))
    assert not interlaces(z * (z - 1), (z - 10) * (z - 11))


def test_interlacing_with_constants():
    assert interlaces(Poly([1]), 2 * z)
    assert interlaces(Poly([1]), Poly([3])) and interlacing_is_vacuous(Poly([1]), Poly([3]))
    assert not interlaces(Poly([1]), z**2 - 1)


def test_interlacing_common_zeros():
    assert interlaces((z - 1) ** 2, z - 1)
    assert not interlaces(z**2, (z - 1) ** 2)


def test_interlacing_rejects_zero_and_nonreal():
    with pytest.raises(InvalidArgument):
        interlaces(Poly(), z)
    with pytest.raises(PreconditionViolation):
        interlaces(z**2 + 1, z)


@st.composite
def interlacing_pairs(draw):
    n = draw(st.integers(1, 5))
    extra = draw(st.integers(0, 1))
    pts = sorted(draw(st.lists(rationals(10, 3), min_size=2 * n + extra, max_size=2 * n + extra)))
    x, y = pts[0::2], pts[1::2]
    c1, c2 = draw(nonzero_rationals()), draw(nonzero_rationals())
    return x, y, Poly.from_roots(x, c1), Poly.from_roots(y, c2)


@given(interlacing_pairs())
def test_interlacing_by_construction(data):
    x, y, f, g = data
    assert merge_interlaces(x, y)
    assert interlaces(f, g) and interlaces(g, f)


@given(root_lists(1, 5, 6), root_lists(1, 5, 6), nonzero_rationals(), nonzero_rationals())
def test_interlacing_matches_merge_oracle(x, y, c1, c2):
    x, y = sorted(x), sorted(y)
    f, g = Poly.from_roots(x, c1), Poly.from_roots(y, c2)
    assert interlaces(f, g) == merge_interlaces(x, y)
