from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from hypmaj.exact_poly import Poly

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


def rationals(bound=10, max_den=6):
    return st.builds(
        lambda n, d: Fraction(n, d),
        st.integers(-bound * max_den, bound * max_den),
        st.integers(1, max_den),
    ).filter(lambda x: abs(x) <= bound)


def nonzero_rationals(bound=10, max_den=6):
    return rationals(bound, max_den).filter(bool)


def polys(max_degree=6, bound=10):
    return st.lists(rationals(bound), max_size=max_degree + 1).map(Poly)


def root_lists(min_size=1, max_size=6, bound=10):
    return st.lists(rationals(bound, 4), min_size=min_size, max_size=max_size)


def sorted_vectors(n, bound=10):
    return st.lists(rationals(bound, 4), min_size=n, max_size=n).map(sorted)


GRID_DEN = 24
SCAN_BOUND = 12


def squarefree_family(draw_roots, draw_quads, scale=Fraction(1)) -> Poly:
    """Product of distinct linear factors and positive definite quadratics."""
    p = Poly([scale])
    for a in sorted(set(draw_roots)):
        p = p * Poly([-a, 1])
    for c, d in draw_quads:
        p = p * Poly([c * c + d * d, -2 * c, 1])  # (z - c)^2 + d^2, d != 0
    return p


@st.composite
def squarefree_polys(draw, max_degree=8):
    roots = draw(st.lists(st.sampled_from([Fraction(k, d) for d in (1, 2, 3, 4, 6, 12) for k in range(-10 * d, 10 * d + 1)]),
                          max_size=max_degree, unique=True))
    room = (max_degree - len(roots)) // 2
    quads = draw(st.lists(st.tuples(rationals(5, 3), nonzero_rationals(3, 3)), max_size=room, unique_by=lambda q: (q[0], q[1] * q[1])))
    scale = draw(nonzero_rationals(5, 5))
    return squarefree_family(roots, quads, scale)


def grid_points(lo=-SCAN_BOUND, hi=SCAN_BOUND):
    return [Fraction(k, GRID_DEN) for k in range(lo * GRID_DEN, hi * GRID_DEN + 1)]


def sign_scan_count(p: Poly, a=None, b=None) -> int:
    """Roots of a :func:`squarefree_polys` member in ``(a, b]`` by scanning signs on a fine grid.

    Every real root of the family lies on the grid, so the scan counts
    exact zeros and cross-checks that no sign change happens off-grid.
    """
    pts = [x for x in grid_points() if (a is None or x > a) and (b is None or x <= b)]
    zeros = 0
    prev = None
    for x in pts:
        s = p.sign_at(x)
        if s == 0:
            zeros += 1
            prev = None
            continue
        assert prev is None or s == prev, "sign change between grid points"
        prev = s
    return zeros


def merge_interlaces(x, y):
    """Definition of weak interlacing on sorted root vectors."""
    if len(x) < len(y):
        x, y = y, x
    if len(x) - len(y) > 1:
        return False
    if len(x) == len(y) + 1:
        chains = [(x, y)]
    else:
        chains = [(x, y), (y, x)]
    for a, b in chains:
        merged = [v for pair in zip(a, b) for v in pair] + list(a[len(b):])
        if all(u <= v for u, v in zip(merged, merged[1:])):
            return True
    return False
