from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import rationals, root_lists
from hypmaj.errors import InvalidArgument
from hypmaj.exact_poly import Poly
from hypmaj.eigen_path import (
    check_convex_even,
    check_majorization_monotone,
    path_samples,
    promote,
    run_path_checks,
    uniform_grid,
)
from hypmaj.operator_lab import LinOp, verify_certificate

z = Poly.z()
F = Fraction
INJECTED = LinOp.from_images([1, z, z**2 + 1, z**3])


def test_uniform_grid():
    g = uniform_grid()
    assert len(g) == 33 and g[0] == -2 and g[-1] == 2 and g[1] - g[0] == F(1, 8)
    with pytest.raises(InvalidArgument):
        uniform_grid(1, 1, 4)


def test_identity_path():
    samples = path_samples(LinOp.identity(2), Poly([1]), 0, [0, 1, 2])
    for smp, t in zip(samples, (0, 1, 2)):
        assert [iv.lo for iv in smp.zeros.entries] == [-t, t]
        assert smp.partial_sums[0] == (t, t)
        assert smp.total == 0


def test_derivative_path_value():
    (smp,) = path_samples(LinOp.derivative(3), z, 0, [1], F(1, 2**30))
    assert smp.path == z**3 - z and smp.image == 3 * z**2 - 1
    lo, hi = smp.zeros.entries[1].lo, smp.zeros.entries[1].hi
    assert 3 * lo**2 < 1 < 3 * hi**2


def test_plus_minus_t_share_zeros():
    samples = path_samples(LinOp.derivative(4), z**2 - 1, F(1, 2), [-F(3, 2), F(3, 2)])
    assert samples[0].zeros == samples[1].zeros and samples[0].image == samples[1].image


@pytest.mark.parametrize(
    "r, n",
    [(2 * z, 3), (z**2 + 1, 4), (z, 4)],
)
def test_path_rejects_bad_r(r, n):
    with pytest.raises(InvalidArgument):
        path_samples(LinOp.identity(n), r)


def test_identity_convexity_at_zero_tolerance():
    samples = path_samples(LinOp.identity(2), Poly([1]), 0, [-2, -1, 0, 1, 2])
    rep = check_convex_even(samples, 0)
    assert not rep.convexity_violations and not rep.evenness_violations
    assert rep.totals_constant and rep.images_even


def test_convexity_needs_symmetric_uniform_grid():
    T, r = LinOp.identity(2), Poly([1])
    with pytest.raises(InvalidArgument):
        check_convex_even(path_samples(T, r, 0, [0, 1, 2]))
    with pytest.raises(InvalidArgument):
        check_convex_even(path_samples(T, r, 0, [-2, -1, 0, 2]))


@pytest.mark.parametrize("s", [0, 1])
def test_derivative_path_against_closed_form(s):
    # d/dz z^2 ((z+s)^2 - t^2) at s = 0 has zeros 0 and +-|t|/sqrt(2)
    grid = uniform_grid(-2, 2, 64)
    samples, rep = run_path_checks(LinOp.derivative(4), z**2, s, grid)
    assert rep.clean
    if s == 0:
        for smp in samples:
            lo, hi = smp.partial_sums[0]
            assert lo <= hi and 2 * lo**2 <= smp.t**2 <= 2 * hi**2 or smp.t == 0 == lo


def test_identity_monotone():
    samples = path_samples(LinOp.identity(2), Poly([1]), 0, [1, 2])
    assert not check_majorization_monotone(samples).monotonicity_violations


def test_injected_operator_is_caught():
    samples, rep = run_path_checks(INJECTED, z - 1, 1)
    assert rep.convexity_violations and rep.monotonicity_violations
    assert all(v.margin > 0 for v in rep.convexity_violations + rep.monotonicity_violations)
    cert = promote(rep, samples, z - 1, 1)
    assert cert.kind == "zero_path" and verify_certificate(INJECTED, cert)


def test_injected_convexity_certificate():
    samples, rep = run_path_checks(INJECTED, z - 1, 0)
    assert rep.convexity_violations and not rep.monotonicity_violations
    cert = promote(rep, samples, z - 1, 0)
    assert cert.clause == "path_not_convex" and verify_certificate(INJECTED, cert)
    assert not verify_certificate(LinOp.derivative(3), cert)


def test_anomalies_are_recorded():
    samples, rep = run_path_checks(INJECTED, z, 1)
    assert rep.anomalies and not rep.clean


@settings(max_examples=25)
@given(
    st.integers(2, 5).flatmap(lambda n: st.tuples(st.just(n), root_lists(n - 2, n - 2, 3))),
    rationals(2, 2),
    st.sampled_from(["identity", "derivative", "affine"]),
)
def test_known_preservers_give_clean_paths(nr, s, kind):
    n, roots = nr
    T = {"identity": LinOp.identity(n), "derivative": LinOp.derivative(n), "affine": LinOp.affine(n, F(-3, 2), F(1))}[kind]
    samples, rep = run_path_checks(T, Poly.from_roots(roots), s, uniform_grid(-2, 2, 8), F(1, 2**30))
    assert rep.clean
