import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lissaknot.angles import PI, ExactAngle
from lissaknot.curves import (
    TYPE_I,
    TYPE_II,
    LissajousParams,
    build_crossings,
    crossing_sign,
    crossing_sites,
    double_points,
    double_points_oracle,
    family_claims,
    family_params,
    family_phase_intervals,
    family_singular_phases,
    point,
    projection_degenerate,
    symmetry_check,
    validate_params,
)
from lissaknot.diagram import diagram_from_crossings
from lissaknot.errors import BadFrequency, DegenerateProjection, NonCoprimeFrequencies

HALF = Fraction(1, 2)


# -- validity ----------------------------------------------------------------

def test_forbidden_phase_is_singular():
    status = validate_params(LissajousParams(2, 3, 5, PI / 5, Fraction(3, 10), 0))
    assert not status
    assert "phi_x" in status.reason


def test_family_parameters_are_valid():
    assert validate_params(family_params(2))
    assert validate_params(LissajousParams(2, 5, 19, 0, HALF, "(19-3*pi)/10"))
    assert validate_params(LissajousParams(3, 4, 7, "0.1", "0.2", "0.3"))


def test_shifted_forbidden_family_detected():
    # phi_y = phi_z * ny/nz + pi/nz is forbidden once time is shifted to kill phi_z
    p = LissajousParams(3, 4, 5, "0.1", ExactAngle(Fraction(1, 5), Fraction(4, 50)), "0.1")
    assert not validate_params(p)


def test_non_coprime_rejected():
    with pytest.raises(NonCoprimeFrequencies):
        LissajousParams(2, 4, 5)
    with pytest.raises(BadFrequency):
        LissajousParams(0, 1, 1)


# -- double points -----------------------------------------------------------

@pytest.mark.parametrize("nx, ny, phy, n1, n2", [(2, 3, HALF, 3, 4), (4, 3, Fraction(1, 5), 9, 8), (1, 2, Fraction(3, 10), 0, 1)])
def test_double_point_counts(nx, ny, phy, n1, n2):
    pts = double_points(nx, ny, 0, phy)
    assert sum(d.kind == TYPE_I for d in pts) == n1
    assert sum(d.kind == TYPE_II for d in pts) == n2


@pytest.mark.parametrize("nx, ny, phy, grid, count", [(2, 3, HALF, 1024, 7), (4, 3, Fraction(1, 5), 2048, 17), (1, 2, Fraction(3, 10), 512, 1)])
def test_oracle_counts(nx, ny, phy, grid, count):
    # frozen: oracle run on the sampled polyline
    assert len(double_points_oracle(nx, ny, 0, phy, grid)) == count


def test_closed_form_points_are_self_intersections():
    for d in double_points(4, 3, 0, Fraction(1, 5)):
        a = (4 * d.t1).cos() - (4 * d.t2).cos()
        b = (3 * d.t1 + Fraction(1, 5)).cos() - (3 * d.t2 + Fraction(1, 5)).cos()
        assert abs(a) < 1e-9 and abs(b) < 1e-9
        assert 0 <= float(d.t1) < float(d.t2) < 2 * math.pi


def test_degenerate_projection():
    assert projection_degenerate(2, 3, 0, 0)
    with pytest.raises(DegenerateProjection):
        double_points(2, 3, 0, 0)


coprime_pairs = [(a, b) for a in range(1, 11) for b in range(1, 10) if math.gcd(a, b) == 1 and a * b > 1]


@pytest.mark.parametrize("nx, ny", coprime_pairs)
def test_type_counts_for_all_small_pairs(nx, ny):
    rng = random.Random(nx * 100 + ny)
    for _ in range(10):
        phx = Fraction(rng.randint(1, 997), 1000)
        phy = Fraction(rng.randint(1, 997), 1000)
        pts = double_points(nx, ny, phx, phy)
        assert sum(d.kind == TYPE_I for d in pts) == nx * ny - ny
        assert sum(d.kind == TYPE_II for d in pts) == nx * ny - nx


# -- signs ---------------------------------------------------------------------

def _fd_sign(p, t1, t2, h=1e-6):
    def xy(t):
        return math.cos(p.nx * t + float(p.phx)), math.cos(p.ny * t + float(p.phy))

    def z(t):
        return math.cos(p.nz * t + float(p.phz))

    def deriv(t):
        (xa, ya), (xb, yb) = xy(t + h), xy(t - h)
        return (xa - xb) / (2 * h), (ya - yb) / (2 * h)

    (x1, y1), (x2, y2) = deriv(t1), deriv(t2)
    value = (x1 * y2 - x2 * y1) * (z(t1) - z(t2))
    return 1 if value > 0 else -1


@pytest.mark.parametrize("params", [
    LissajousParams(3, 4, 7, "0.1", "0.2", "0.3"),
    LissajousParams(2, 5, 19, 0, HALF, "(19-3*pi)/10"),
    LissajousParams(3, 5, 7, "0.7", "0.3", "1.1"),
])
def test_sign_matches_finite_differences_and_swap(params):
    for d in double_points(params.nx, params.ny, params.phx, params.phy):
        s = crossing_sign(params, d)
        assert s == crossing_sign(params, d.swapped())
        assert s == _fd_sign(params, float(d.t1), float(d.t2))
        assert s == _fd_sign(params, float(d.t2), float(d.t1))


def test_build_crossings_counts():
    assert len(build_crossings(family_params(0))) == 2
    assert len(build_crossings(family_params(2))) == 26
    p = LissajousParams(3, 4, 7, "0.1", "0.2", "0.3")
    assert len(build_crossings(p)) == 2 * (2 * 12 - 7)


def test_over_matches_height():
    p = LissajousParams(3, 4, 7, "0.1", "0.2", "0.3")
    for site in crossing_sites(build_crossings(p)):
        z1, z2 = point(p, site.dp.t1)[2], point(p, site.dp.t2)[2]
        assert (site.over == "t1") == (z1 > z2)


# -- the n_x = 2 family --------------------------------------------------------

@pytest.mark.parametrize("m", range(0, 9))
def test_family_type_one_on_axis(m):
    pts = double_points(2, 2 * m + 1, 0, HALF)
    ones = [d for d in pts if d.kind == TYPE_I]
    assert all(abs(d.y) < 1e-9 for d in ones)
    assert all(abs(d.x) > 1e-6 for d in ones)
    assert sum(d.x > 0 for d in ones) == 2 * math.ceil(m / 2)


@pytest.mark.parametrize("m", range(1, 9))
def test_family_type_two_positions(m):
    pts = double_points(2, 2 * m + 1, 0, HALF)
    two = {(d.k, d.j): d for d in pts if d.kind == TYPE_II}
    s, c = math.sin(0.5), math.cos(0.5)
    for (k, j), d in two.items():
        if j == 1:
            assert d.y == pytest.approx((-1) ** (k + m + 1) * s, abs=1e-9)
            assert two[(k, 3)].y == pytest.approx(-d.y, abs=1e-9)
            assert two[(k, 3)].x == pytest.approx(d.x, abs=1e-9)
        if j == 2:
            assert d.y == pytest.approx((-1) ** (k + 1) * c, abs=1e-9)
            assert two[(2 * m + 1 - k, 2)].x == pytest.approx(d.x, abs=1e-9)


@pytest.mark.parametrize("m", range(1, 9))
def test_family_sign_symmetries(m):
    sites = crossing_sites(build_crossings(family_params(m)))
    sign = {(s.dp.k, s.dp.j): s.sign for s in sites if s.dp.kind == TYPE_II}
    for (k, j), value in sign.items():
        if j == 1:
            assert sign[(k, 3)] == value
        if j == 2:
            assert sign[(2 * m + 1 - k, 2)] == value
            x = next(s.dp.x for s in sites if s.dp.kind == TYPE_II and (s.dp.k, s.dp.j) == (k, 2))
            assert value == (-1 if x > 0 else 1)


@pytest.mark.parametrize("m", range(1, 9))
def test_family_claims_hold(m):
    assert family_claims(m) == {"type1": True, "type2_j2": True, "type2_j13": True}


def test_singular_phase_counts():
    assert len(family_singular_phases(1, 13)) == 4
    assert len(family_singular_phases(2, 19)) == 6
    assert len(family_phase_intervals(2, 19)) == 7
    assert len(family_phase_intervals(3, 25)) == 9
    with pytest.raises(BadFrequency):
        family_singular_phases(2, 15)


@pytest.mark.parametrize("m, nz", [(1, 13), (2, 19)])
def test_singular_phases_kill_a_crossing(m, nz):
    for phase in family_singular_phases(m, nz):
        p = family_params(m, nz, phase)
        gaps = [abs(point(p, d.t1)[2] - point(p, d.t2)[2]) for d in double_points(2, 2 * m + 1, 0, HALF)]
        assert min(gaps) < 1e-9


@pytest.mark.parametrize("m, nz", [(1, 13), (2, 19), (3, 25)])
def test_gauss_code_constant_inside_interval(m, nz):
    for interval in family_phase_intervals(m, nz):
        codes = {diagram_from_crossings(build_crossings(family_params(m, nz, interval.at(f)))).gauss
                 for f in (Fraction(1, 5), Fraction(1, 2), Fraction(4, 5))}
        assert len(codes) == 1


def test_default_phase_lies_in_a_safe_interval():
    p = family_params(2)
    inside = [iv for iv in family_phase_intervals(2, 19) if iv.lo < p.phz < iv.hi]
    assert len(inside) == 1


# -- symmetry --------------------------------------------------------------------

def test_all_odd_point_reflection():
    report = symmetry_check(LissajousParams(3, 5, 7, "0.1", "0.2", "0.3"))
    assert report.amphicheiral_identity is True
    assert report.two_periodic_identity is None


def test_even_frequency_half_turn():
    report = symmetry_check(LissajousParams(2, 3, 5, "0.1", "0.2", "0.3"))
    assert report.two_periodic_identity is True
    assert abs(report.axis_winding) == 1


@pytest.mark.parametrize("m", range(0, 9))
def test_family_axis_winding(m):
    assert abs(symmetry_check(family_params(m)).axis_winding) == 1


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([(a, b) for a in range(1, 8) for b in range(1, 8) if math.gcd(a, b) == 1 and a * b > 1]),
       st.fractions(Fraction(1, 97), Fraction(3), max_denominator=97),
       st.fractions(Fraction(1, 97), Fraction(3), max_denominator=97))
def test_total_double_points(pair, phx, phy):
    nx, ny = pair
    if projection_degenerate(nx, ny, phx, phy):
        return
    try:
        pts = double_points(nx, ny, phx, phy)
    except DegenerateProjection:
        return
    assert len(pts) == 2 * nx * ny - nx - ny
