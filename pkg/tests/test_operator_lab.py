from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from builders import CLAUSES, degenerate_operator
from conftest import nonzero_rationals, polys
from hypmaj.errors import InvalidArgument, WrongBranch
from hypmaj.exact_poly import MINUS_INFINITY, Poly, is_hyperbolic
from hypmaj.operator_lab import (
    Budget,
    LinOp,
    Symbol,
    Verdict,
    apply,
    classify,
    classify_degenerate,
    degree_profile,
    derive_seed,
    falsify_preservation,
    falsify_stability,
    gamma_sequence,
    is_degenerate,
    is_scalar_multiple,
    line_grid,
    random_line,
    rank_of_image,
    symbol,
    top_degree_dominates,
    verify_certificate,
)

z = Poly.z()
F = Fraction


def sym(rows):
    return Symbol(tuple(tuple(F(c) for c in row) for row in rows))


# -- operators and application ---------------------------------------------


def test_apply_examples():
    assert apply(LinOp.identity(2), z**2 - 1) == z**2 - 1
    assert apply(LinOp.derivative(3), z**3 - z) == 3 * z**2 - 1
    T = LinOp.from_images([0, 1, 2 * z])
    assert apply(T, 3 * z**2 + 5 * z + 7) == 6 * z + 5


def test_apply_rejects_high_degree():
    with pytest.raises(InvalidArgument):
        apply(LinOp.identity(1), z**2)


def test_linop_validation():
    with pytest.raises(InvalidArgument):
        LinOp(2, [Poly()])
    with pytest.raises(InvalidArgument):
        LinOp(0, [Poly([1])])


def test_affine_operator():
    T = LinOp.affine(3, F(2), F(1))
    p = z**3 - z
    assert apply(T, p) == p.compose_affine(2, 1)


# -- symbol -----------------------------------------------------------------


def test_symbol_examples():
    assert symbol(LinOp.identity(1)) == sym([[0, 1], [1, 0]])
    S = symbol(LinOp.identity(2))
    assert S == sym([[0, 0, 1], [0, 2, 0], [1, 0, 0]])
    assert symbol(LinOp.identity(2), reflect=True) == sym([[0, 0, 1], [0, -2, 0], [1, 0, 0]])
    assert S(F(1), F(2)) == 9


@st.composite
def operators(draw, n=None):
    n = draw(st.integers(1, 4)) if n is None else n
    return LinOp(n, [draw(polys(4, 5)) for _ in range(n + 1)])


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(operators(n), operators(n))))
def test_symbol_is_linear(pair):
    S, T = pair
    assert symbol(S + T) == symbol(S) + symbol(T)


@given(operators(), st.sampled_from(range(60)))
def test_restriction_is_substitution(T, k):
    S = symbol(T)
    if S.is_zero():
        return
    a, b, c, d = random_line(3, k)
    g = S.restrict(a, b, c, d)
    for t in (F(0), F(1), F(-2, 3)):
        assert g(t) == S(a * t + c, b * t + d)


# -- rank and degenerate branch ---------------------------------------------


def test_rank_examples():
    assert rank_of_image(LinOp.derivative(2)) == 2 and is_degenerate(LinOp.derivative(2))
    assert rank_of_image(LinOp.identity(2)) == 3 and not is_degenerate(LinOp.identity(2))
    assert rank_of_image(LinOp(2, [Poly()] * 3)) == 0


def test_scalar_multiple():
    assert is_scalar_multiple(2 * z**2, z**2)
    assert not is_scalar_multiple(z**2 + 1, z**2)


def test_classify_degenerate_examples():
    rep = classify_degenerate(LinOp.derivative(2))
    assert rep.verdict is Verdict.CERTIFIED_PRESERVER
    (entry,) = [e for e in rep.ledger if e["check"] == "images_interlace"]
    assert entry["passed"] and entry["vacuous"] is False
    rep = classify_degenerate(LinOp.from_images([1, 0, z**2]))
    assert rep.verdict is Verdict.CERTIFIED_NON_PRESERVER and rep.certificate.clause == "lower_images_vanish"
    rep = classify_degenerate(LinOp.from_images([0, 2 * z**2, z**2]))
    assert rep.verdict is Verdict.CERTIFIED_NON_PRESERVER and rep.certificate.clause == "second_image_not_multiple"


def test_classify_degenerate_wrong_branch():
    with pytest.raises(WrongBranch):
        classify_degenerate(LinOp.identity(2))


@pytest.mark.parametrize("clause", CLAUSES)
def test_constructed_degenerate_operators(clause):
    for seed in range(10):
        T = degenerate_operator(seed, clause)
        rep = classify(T)
        if clause is None:
            assert rep.verdict is Verdict.CERTIFIED_PRESERVER
        else:
            assert rep.verdict is Verdict.CERTIFIED_NON_PRESERVER
            assert rep.certificate.clause == clause
            assert verify_certificate(T, rep.certificate)


@settings(max_examples=50)
@given(st.integers(0, 10**6), st.sampled_from(CLAUSES), nonzero_rationals())
def test_degenerate_verdict_invariant_under_scaling(seed, clause, c):
    T = degenerate_operator(seed, clause)
    assert classify_degenerate(T.scaled(c)).verdict is classify_degenerate(T).verdict


# -- structural filters -----------------------------------------------------


def test_degree_profile_examples():
    prof, ok = degree_profile(LinOp.identity(3))
    assert ok and (prof.K, prof.L, prof.M, prof.N) == (0, 3, 3, 3)
    prof, ok = degree_profile(LinOp.from_images([1, z, z**3, z**2]))
    assert not ok
    prof, ok = degree_profile(LinOp(2, [Poly()] * 3))
    assert not ok and prof.violation == "empty_support"
    assert degree_profile(LinOp.from_images([1, 0, z**2, z**3]))[0].violation == "support_not_interval"


def test_gamma_examples():
    g, ok = gamma_sequence(LinOp.identity(2))
    assert ok and g.r == 0 and g.gamma == (1, 1, 1)
    g, ok = gamma_sequence(LinOp.derivative(3))
    assert ok and g.r == -1 and g.gamma[1:] == (1, 2, 3) and g.support == [1, 2, 3]
    g, ok = gamma_sequence(LinOp.from_images([1, z**2, z**2]))
    assert not ok and g.violation == "support_not_interval"
    g, ok = gamma_sequence(LinOp.from_images([1, -z, -(z**2)]))
    assert not ok and g.violation == "sign_pattern"
    g, ok = gamma_sequence(LinOp.from_images([1, -z, z**2]))
    assert ok


def test_gamma_undefined_for_zero_operator():
    with pytest.raises(WrongBranch):
        gamma_sequence(LinOp(1, [Poly(), Poly()]))


def test_top_degree():
    assert top_degree_dominates(LinOp.identity(3)) == (True, None)
    assert top_degree_dominates(LinOp.from_images([z**2, z, z**2])) == (False, 0)
    assert Poly().degree == MINUS_INFINITY


# -- falsifiers -------------------------------------------------------------


def test_stability_certificate_for_sum_of_squares():
    F2 = sym([[0, 0, 1], [0, 0, 0], [1, 0, 0]])  # z^2 + w^2
    run = falsify_stability(F2, 0, 0)
    assert run.refuted
    d = run.certificate.data
    assert (d["a"], d["b"], d["c"], d["d"]) == (1, 2, 0, 1) and d["grid"]
    assert d["restriction"] == 5 * z**2 + 4 * z + 1
    assert not is_hyperbolic(d["restriction"])


@pytest.mark.parametrize("T", [LinOp.identity(2), LinOp.identity(3)])
def test_stable_symbols_are_not_refuted(T):
    assert not falsify_stability(symbol(T), 300, 1).refuted


def test_line_sampler():
    assert len(line_grid()) == 49
    for k in range(50):
        a, b, c, d = random_line(5, k)
        assert a > 0 and b > 0 and abs(c) <= 1000 and abs(d) <= 1000
    assert random_line(5, 3) == random_line(5, 3)
    assert derive_seed(1, "x") != derive_seed(1, "y")


def test_falsify_preservation_derivative():
    run = falsify_preservation(LinOp.derivative(3), 1000, 9)
    assert not run.refuted and run.trials == 1000


def test_falsify_preservation_finds_nonreal_image():
    T = LinOp.from_images([0, z, z**2 + 1])
    run = falsify_preservation(T, 200, 0)
    assert run.refuted and run.certificate.clause == "image_not_hyperbolic"
    assert verify_certificate(T, run.certificate)


def test_falsify_preservation_rejects_negative_samples():
    with pytest.raises(InvalidArgument):
        falsify_preservation(LinOp.identity(2), -1, 0)


# -- classification ---------------------------------------------------------


def test_classify_examples():
    rep = classify(LinOp.identity(3), Budget(samples=100, seed=1))
    assert rep.verdict is Verdict.NOT_REFUTED and all(e["passed"] for e in rep.ledger)
    assert classify(LinOp.derivative(2)).verdict is Verdict.CERTIFIED_PRESERVER
    T = LinOp.from_images([1, z, z**2 + 1])
    rep = classify(T, Budget(samples=100))
    assert rep.verdict is Verdict.REFUTED_NON_PRESERVER and verify_certificate(T, rep.certificate)


@pytest.mark.parametrize(
    "images",
    [
        [0, 1, z**2 + 1, z**3],
        [0, 1, 2 * z, 3 * z**2 + 1],
        [1, z, z**2 + 1, z**3],
        [0, 1, 2 * z + 1, 3 * z**2],
    ],
)
def test_perturbed_preservers_are_refuted(images):
    T = LinOp.from_images(images)
    rep = classify(T, Budget(samples=500, seed=42))
    assert rep.verdict is Verdict.REFUTED_NON_PRESERVER
    assert verify_certificate(T, rep.certificate)


def test_classify_is_deterministic():
    T = LinOp.affine(3, F(-1, 2), F(3))
    assert classify(T, Budget(samples=60, seed=5)) == classify(T, Budget(samples=60, seed=5))


def test_tampered_certificate_fails_verification():
    T = LinOp.from_images([1, z, z**2 + 1])
    cert = classify(T, Budget(samples=50)).certificate
    assert not verify_certificate(LinOp.identity(2), cert)
