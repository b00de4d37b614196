"""Analytic geometry of Lissajous knots.

A Lissajous knot is the closed curve ``t -> (cos(nx t + phx), cos(ny t + phy),
cos(nz t + phz))`` for ``t`` in ``[0, 2pi)``.  Everything here works on exact
times and phases (:class:`~lissaknot.angles.ExactAngle`): double points of the
xy-projection come from closed forms, membership in the forbidden phase
families is decided exactly, and only the final sign decisions are made
numerically (with a guarded margin).

Crossing signs follow the usual right-hand rule: +1 is a right-handed
(positive) crossing, -1 a left-handed one.  With this convention the type II
crossings with second index 2 of the twist family are left-handed exactly in
the right half-plane.
"""
from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import mpmath
import numpy as np

from .angles import PI, ZERO, ExactAngle
from .errors import (
    BadFrequency,
    DegenerateProjection,
    NonCoprimeFrequencies,
    SingularCrossing,
)
from .tolerances import EQ_TOL, WORKPREC, margin

TYPE_I = "I"
TYPE_II = "II"

# minimum planar separation between two distinct double points
_COINCIDENCE_TOL = 1e-7


# ---------------------------------------------------------------------------
# parameters and validity
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LissajousParams:
    nx: int
    ny: int
    nz: int
    phx: ExactAngle = ZERO
    phy: ExactAngle = ZERO
    phz: ExactAngle = ZERO

    def __post_init__(self):
        for name in ("phx", "phy", "phz"):
            object.__setattr__(self, name, ExactAngle.of(getattr(self, name)))
        if min(self.nx, self.ny, self.nz) < 1:
            raise BadFrequency(f"frequencies must be positive: {self.frequencies}")
        check_coprime(self.nx, self.ny, self.nz)

    @property
    def frequencies(self):
        return (self.nx, self.ny, self.nz)

    @property
    def phases(self):
        return (self.phx, self.phy, self.phz)

    def to_json(self):
        return {
            "nx": self.nx, "ny": self.ny, "nz": self.nz,
            "phx": str(self.phx), "phy": str(self.phy), "phz": str(self.phz),
        }


def check_coprime(*freqs: int):
    for a_i, a in enumerate(freqs):
        for b in freqs[a_i + 1:]:
            if math.gcd(a, b) != 1:
                raise NonCoprimeFrequencies(f"frequencies {freqs} are not pairwise coprime")


@dataclass(frozen=True)
class Valid:
    def __bool__(self):
        return True


@dataclass(frozen=True)
class Singular:
    reason: str

    def __bool__(self):
        return False


def validate_params(p: LissajousParams):
    """Return :class:`Valid` or :class:`Singular` for the forbidden phase families.

    Time is shifted so that the z phase vanishes; the curve then self-intersects
    iff ``phx`` or ``phy`` is a multiple of ``pi/nz`` or
    ``phx - (nx/ny) phy`` is a multiple of ``pi/ny``.
    """
    check_coprime(p.nx, p.ny, p.nz)
    shift = p.phz / p.nz
    phx = p.phx - p.nx * shift
    phy = p.phy - p.ny * shift
    if phx.is_multiple_of(Fraction(1, p.nz)):
        return Singular("singular phase: phi_x = k*pi/n_z")
    if phy.is_multiple_of(Fraction(1, p.nz)):
        return Singular("singular phase: phi_y = k*pi/n_z")
    if (phx - Fraction(p.nx, p.ny) * phy).is_multiple_of(Fraction(1, p.ny)):
        return Singular("singular phase: phi_x = (n_x/n_y)*phi_y + k*pi/n_y")
    return Valid()


# ---------------------------------------------------------------------------
# coordinates
# ---------------------------------------------------------------------------

def _cos(n: int, t: ExactAngle, ph: ExactAngle) -> float:
    return (n * t + ph).cos()


def _dcos(n: int, t: ExactAngle, ph: ExactAngle) -> float:
    return -n * (n * t + ph).sin()


def point(p: LissajousParams, t: ExactAngle):
    t = ExactAngle.of(t)
    return (_cos(p.nx, t, p.phx), _cos(p.ny, t, p.phy), _cos(p.nz, t, p.phz))


def sample(p: LissajousParams, count: int, t0: float = 0.0, t1: float = 2 * math.pi, endpoint=False):
    """Float samples ``(t, x, y, z)`` as numpy arrays."""
    t = np.linspace(t0, t1, count, endpoint=endpoint)
    x = np.cos(p.nx * t + float(p.phx))
    y = np.cos(p.ny * t + float(p.phy))
    z = np.cos(p.nz * t + float(p.phz))
    return t, x, y, z


# ---------------------------------------------------------------------------
# double points
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DoublePoint:
    kind: str
    k: int
    j: int
    t1: ExactAngle
    t2: ExactAngle
    x: float
    y: float

    def swapped(self) -> "DoublePoint":
        return DoublePoint(self.kind, self.k, self.j, self.t2, self.t1, self.x, self.y)

    @property
    def label(self):
        return f"C{self.kind}_{self.k},{self.j}"


def _bound(q: Fraction, phase: ExactAngle, rounding) -> int:
    """``rounding(q + phase/pi)``, exact; raises on an integer tie."""
    if phase.unit_part == 0:
        r = q + phase.pi_part
        if r.denominator == 1:
            raise DegenerateProjection("a double point falls on t = 0 (phase at a boundary tie)")
        return rounding(r)
    with mpmath.workprec(4 * WORKPREC):
        value = mpmath.mpf(q.numerator) / q.denominator + phase.mpf(4 * WORKPREC) / mpmath.pi
        return int(mpmath.ceil(value) if rounding is math.ceil else mpmath.floor(value))


def _family(kind, na, nb, pha, phb):
    """Time pairs where the ``na`` coordinate differs in time and ``nb`` sums."""
    out = []
    for k in range(1, na):
        lo = _bound(Fraction(nb * k, na), phb, math.ceil)
        hi = _bound(2 * nb - Fraction(nb * k, na), phb, math.floor)
        for j in range(lo, hi + 1):
            base = -phb / nb
            t1 = ExactAngle.pi(Fraction(-k, na) + Fraction(j, nb)) + base
            t2 = ExactAngle.pi(Fraction(k, na) + Fraction(j, nb)) + base
            out.append((kind, k, j, t1, t2))
    return out


def projection_degenerate(nx: int, ny: int, phx, phy) -> bool:
    """True when the planar curve is traced with a triple point or retraces itself."""
    phx, phy = ExactAngle.of(phx), ExactAngle.of(phy)
    return (ny * phx - nx * phy).is_multiple_of(1)


def double_points(nx: int, ny: int, phx, phy) -> list[DoublePoint]:
    """All double points of the projection ``(cos(nx t + phx), cos(ny t + phy))``.

    Type I pairs have ``t2 - t1 = 2k pi/nx`` and ``ny (t1 + t2) + 2 phy = 2j pi``;
    type II swaps the roles of the two coordinates.  There are ``nx*ny - ny``
    of type I and ``nx*ny - nx`` of type II.  The list is sorted by ``t1``.
    """
    if math.gcd(nx, ny) != 1:
        raise NonCoprimeFrequencies(f"gcd({nx}, {ny}) != 1")
    phx, phy = ExactAngle.of(phx), ExactAngle.of(phy)
    if projection_degenerate(nx, ny, phx, phy):
        raise DegenerateProjection("n_y*phi_x - n_x*phi_y is a multiple of pi")
    raw = _family(TYPE_I, nx, ny, phx, phy) + _family(TYPE_II, ny, nx, phy, phx)
    n_one = sum(1 for r in raw if r[0] == TYPE_I)
    if n_one != nx * ny - ny or len(raw) - n_one != nx * ny - nx:
        raise DegenerateProjection("double point count does not match the closed form")
    points = []
    for kind, k, j, t1, t2 in raw:
        x = _cos(nx, t1, phx)
        y = _cos(ny, t1, phy)
        points.append(DoublePoint(kind, k, j, t1, t2, x, y))
    points.sort(key=functools.cmp_to_key(lambda a, b: a.t1.compare(b.t1)))
    if len(points) > 1:
        xy = np.array([[d.x, d.y] for d in points])
        diff = xy[:, None, :] - xy[None, :, :]
        dist = np.hypot(diff[..., 0], diff[..., 1])
        np.fill_diagonal(dist, np.inf)
        if dist.min() < _COINCIDENCE_TOL:
            raise DegenerateProjection("two double points coincide in the plane")
    return points


def double_points_oracle(nx: int, ny: int, phx, phy, grid_size: int):
    """Brute-force self-intersections of the projected curve.

    The curve is sampled into a closed polyline, every pair of non-adjacent
    segments that intersect is found (candidate pairs come from a k-d tree on
    segment midpoints) and the crossing is refined with Newton's method on
    ``(x(a) - x(b), y(a) - y(b))``.  Returns sorted ``(t1, t2)`` float pairs
    with ``0 <= t1 < t2 < 2 pi``.  Meant for tests only.
    """
    from scipy.spatial import cKDTree

    phx, phy = float(ExactAngle.of(phx)), float(ExactAngle.of(phy))
    two_pi = 2 * math.pi
    n = int(grid_size)
    t = np.arange(n) * (two_pi / n)
    pts = np.column_stack([np.cos(nx * t + phx), np.cos(ny * t + phy)])
    nxt = np.roll(pts, -1, axis=0)
    mids = 0.5 * (pts + nxt)
    lengths = np.hypot(*(nxt - pts).T)
    tree = cKDTree(mids)
    pairs = tree.query_pairs(r=lengths.max() * 1.0001, output_type="ndarray")

    def seg_param(i, j):
        p, r = pts[i], nxt[i] - pts[i]
        q, s = pts[j], nxt[j] - pts[j]
        denom = r[0] * s[1] - r[1] * s[0]
        if denom == 0.0:
            return None
        qp = q - p
        u = (qp[0] * s[1] - qp[1] * s[0]) / denom
        v = (qp[0] * r[1] - qp[1] * r[0]) / denom
        eps = 1e-9
        if -eps <= u <= 1 + eps and -eps <= v <= 1 + eps:
            return u, v
        return None

    def newton(a, b):
        for _ in range(50):
            fx = math.cos(nx * a + phx) - math.cos(nx * b + phx)
            fy = math.cos(ny * a + phy) - math.cos(ny * b + phy)
            xa, xb = -nx * math.sin(nx * a + phx), -nx * math.sin(nx * b + phx)
            ya, yb = -ny * math.sin(ny * a + phy), -ny * math.sin(ny * b + phy)
            det = xa * (-yb) - (-xb) * ya
            if det == 0.0:
                break
            da = (fx * (-yb) - (-xb) * fy) / det
            db = (xa * fy - ya * fx) / det
            a, b = a - da, b - db
            if abs(da) + abs(db) < 1e-15:
                break
        return a % two_pi, b % two_pi

    found = []
    step = two_pi / n
    for i, j in pairs:
        if abs(int(i) - int(j)) <= 1 or abs(int(i) - int(j)) == n - 1:
            continue
        hit = seg_param(i, j)
        if hit is None:
            continue
        a, b = newton(t[i] + hit[0] * step, t[j] + hit[1] * step)
        a, b = min(a, b), max(a, b)
        if b - a < 1e-6:
            continue
        found.append((a, b))
    found.sort()
    unique = []
    for a, b in found:
        if unique and abs(unique[-1][0] - a) < 1e-8 and abs(unique[-1][1] - b) < 1e-8:
            continue
        unique.append((a, b))
    return unique


# ---------------------------------------------------------------------------
# crossings
# ---------------------------------------------------------------------------

def tangent_cross(nx, ny, phx, phy, t1: ExactAngle, t2: ExactAngle) -> float:
    """``x'(t1) y'(t2) - x'(t2) y'(t1)`` evaluated in high precision."""
    return _dcos(nx, t1, phx) * _dcos(ny, t2, phy) - _dcos(nx, t2, phx) * _dcos(ny, t1, phy)


def _height_gap(p: LissajousParams, dp: DoublePoint) -> float:
    return _cos(p.nz, dp.t1, p.phz) - _cos(p.nz, dp.t2, p.phz)


def crossing_sign(p: LissajousParams, dp: DoublePoint) -> int:
    """Sign of the crossing at ``dp``: ``sign[(x'1 y'2 - x'2 y'1)(z1 - z2)]``."""
    cross = tangent_cross(p.nx, p.ny, p.phx, p.phy, dp.t1, dp.t2)
    dz = _height_gap(p, dp)
    if abs(cross) < EQ_TOL:
        raise SingularCrossing(f"tangents are parallel at {dp.label}")
    if abs(dz) < EQ_TOL:
        raise SingularCrossing(f"heights coincide at {dp.label} (forbidden phase)")
    prod = cross * dz
    if abs(prod) < margin():
        raise SingularCrossing(f"crossing sign at {dp.label} is within the margin")
    return 1 if prod > 0 else -1


@dataclass(frozen=True)
class CrossingSite:
    dp: DoublePoint
    over: str  # "t1" or "t2": which visit passes over
    sign: int

    @property
    def over_time(self) -> ExactAngle:
        return self.dp.t1 if self.over == "t1" else self.dp.t2


@dataclass(frozen=True)
class CrossingVisit:
    """One pass of the traversal through a crossing."""

    crossing: int
    time: ExactAngle
    site: CrossingSite
    is_over: bool


def _visits_sorted(entries):
    out = sorted(entries, key=functools.cmp_to_key(lambda a, b: a.time.compare(b.time)))
    for a, b in zip(out, out[1:]):
        if a.time == b.time:
            raise DegenerateProjection("two visits happen at the same time")
    return out


def build_crossings(p: LissajousParams) -> list[CrossingVisit]:
    """Decorate every double point with over/under and sign; return the traversal.

    Each crossing appears twice (once per visit), in increasing time order
    starting from ``t = 0``.  Crossing ids are the positions in
    :func:`double_points` order.
    """
    status = validate_params(p)
    if not status:
        raise SingularCrossing(status.reason)
    visits = []
    for idx, dp in enumerate(double_points(p.nx, p.ny, p.phx, p.phy)):
        dz = _height_gap(p, dp)
        if abs(dz) < EQ_TOL:
            raise SingularCrossing(f"heights coincide at {dp.label}")
        site = CrossingSite(dp, "t1" if dz > 0 else "t2", crossing_sign(p, dp))
        visits.append(CrossingVisit(idx, dp.t1, site, site.over == "t1"))
        visits.append(CrossingVisit(idx, dp.t2, site, site.over == "t2"))
    return _visits_sorted(visits)


def crossing_sites(visits: list[CrossingVisit]) -> list[CrossingSite]:
    """Distinct crossing sites of a traversal, in crossing-id order."""
    seen = {}
    for v in visits:
        seen.setdefault(v.crossing, v.site)
    return [seen[i] for i in sorted(seen)]


# ---------------------------------------------------------------------------
# the n_x = 2 twist family
# ---------------------------------------------------------------------------

def family_params(m: int, nz: Optional[int] = None, phz=None) -> LissajousParams:
    """``x = cos 2t, y = cos((2m+1)t + 1/2), z = cos(nz t + phz)``.

    Defaults are ``nz = 6m + 7`` and ``phz = (nz - 3 pi)/(4m + 2)``, the
    parameters realising the twist knot with ``m`` diamonds.
    """
    if m < 0:
        raise BadFrequency("m must be non-negative")
    if nz is None:
        nz = 6 * m + 7
    if phz is None:
        phz = (ExactAngle(0, nz) - PI * 3) / (4 * m + 2)
    return LissajousParams(2, 2 * m + 1, nz, ZERO, ExactAngle(0, Fraction(1, 2)), ExactAngle.of(phz))


def _check_family(m: int, nz: int):
    if m < 0:
        raise BadFrequency("m must be non-negative")
    if nz % 2 == 0 or math.gcd(nz, 2 * m + 1) != 1:
        raise BadFrequency(f"n_z={nz} must be odd and coprime to {2 * m + 1}")


@dataclass(frozen=True)
class SingularPhases:
    """Phases in (0, pi) where some crossing of the family becomes singular.

    ``values`` holds the ``2m+1`` type I values and ``pi/2`` (type II with
    j = 1, 3) in increasing order; ``sources`` labels each one.  ``endpoints``
    records that 0 and pi are singular for the type II crossings with j = 2.
    """

    values: tuple
    sources: tuple
    endpoints: tuple = (ZERO, PI)

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]


def family_singular_phases(m: int, nz: int) -> SingularPhases:
    _check_family(m, nz)
    q = 2 * m + 1
    entries = []
    for j in range(m + 1, 3 * m + 2):
        phase = ExactAngle(Fraction(-j * nz, q), Fraction(nz, 2 * q)).mod_pi_into()
        entries.append((phase, f"I:j={j}"))
    entries.append((PI / 2, "II:j=1,3"))
    entries.sort(key=functools.cmp_to_key(lambda a, b: a[0].compare(b[0])))
    return SingularPhases(tuple(e[0] for e in entries), tuple(e[1] for e in entries))


@dataclass(frozen=True)
class PhaseInterval:
    lo: ExactAngle
    hi: ExactAngle

    @property
    def representative(self) -> ExactAngle:
        return (self.lo + self.hi) / 2

    def at(self, fraction) -> ExactAngle:
        return self.lo + (self.hi - self.lo) * Fraction(fraction)


def family_phase_intervals(m: int, nz: int) -> list[PhaseInterval]:
    """The ``2m + 3`` open intervals of (0, pi) free of singular phases."""
    cuts = [ZERO, *family_singular_phases(m, nz).values, PI]
    return [PhaseInterval(a, b) for a, b in zip(cuts, cuts[1:])]


def family_claims(m: int, nz: Optional[int] = None, phz=None) -> dict:
    """Handedness pattern of the twist-family crossings.

    Returns one boolean per statement:

    ``type1``: for even m, type I crossings right of the y-axis are left-handed
    and those left of it right-handed except the one nearest the axis, which is
    left-handed; for odd m the same with the half-planes exchanged.
    ``type2_j2``: type II crossings with j = 2 are left-handed iff x > 0.
    ``type2_j13``: type II crossings with j = 1, 3 are right-handed iff x > 0.
    """
    p = family_params(m, nz, phz)
    sites = crossing_sites(build_crossings(p))
    ones = [s for s in sites if s.dp.kind == TYPE_I]
    twos = [s for s in sites if s.dp.kind == TYPE_II]
    if m % 2 == 0:
        majority, minority, majority_sign = (
            [s for s in ones if s.dp.x > 0], [s for s in ones if s.dp.x < 0], -1)
    else:
        majority, minority, majority_sign = (
            [s for s in ones if s.dp.x < 0], [s for s in ones if s.dp.x > 0], 1)
    ok1 = all(s.sign == majority_sign for s in majority)
    if minority:
        nearest = min(minority, key=lambda s: abs(s.dp.x))
        ok1 = ok1 and nearest.sign == majority_sign
        ok1 = ok1 and all(s.sign == -majority_sign for s in minority if s is not nearest)
    ok3 = all((s.sign == -1) == (s.dp.x > 0) for s in twos if s.dp.j == 2)
    ok4 = all((s.sign == 1) == (s.dp.x > 0) for s in twos if s.dp.j in (1, 3))
    return {"type1": ok1, "type2_j2": ok3, "type2_j13": ok4}


# ---------------------------------------------------------------------------
# symmetry
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SymmetryReport:
    amphicheiral_identity: Optional[bool]
    two_periodic_identity: Optional[bool]
    axis_winding: Optional[int]
    axis: Optional[str] = None

    def to_json(self):
        return {
            "amphicheiral_identity": self.amphicheiral_identity,
            "two_periodic_identity": self.two_periodic_identity,
            "axis_winding": self.axis_winding,
            "axis": self.axis,
        }


def symmetry_check(p: LissajousParams, samples: int = 1000) -> SymmetryReport:
    """Check the point-reflection or half-turn identity and the axis winding.

    With all frequencies odd, ``K(t + pi) = -K(t)``.  With one even frequency
    the half-turn about that coordinate axis maps ``K(t)`` to ``K(t + pi)``, and
    the winding number of the other two coordinates about the axis is reported.
    """
    t = np.linspace(0.0, 2 * math.pi, samples, endpoint=False)
    freqs = p.frequencies
    phases = [float(ph) for ph in p.phases]
    now = np.array([np.cos(n * t + ph) for n, ph in zip(freqs, phases)])
    later = np.array([np.cos(n * (t + math.pi) + ph) for n, ph in zip(freqs, phases)])
    evens = [i for i, n in enumerate(freqs) if n % 2 == 0]
    if not evens:
        ok = bool(np.max(np.abs(later + now)) < EQ_TOL)
        return SymmetryReport(ok, None, None)
    axis = evens[0]
    flip = np.array([1.0 if i == axis else -1.0 for i in range(3)])[:, None]
    ok = bool(np.max(np.abs(later - flip * now)) < EQ_TOL)
    others = [i for i in range(3) if i != axis]
    dense = np.linspace(0.0, 2 * math.pi, 4096 * max(freqs) + 1)
    u = np.cos(freqs[others[0]] * dense + phases[others[0]])
    v = np.cos(freqs[others[1]] * dense + phases[others[1]])
    angle = np.unwrap(np.arctan2(v, u))
    winding = int(round((angle[-1] - angle[0]) / (2 * math.pi)))
    return SymmetryReport(None, ok, winding, "xyz"[axis])


# ---------------------------------------------------------------------------
# the Lissajous arc (zero phases, t in [0, pi])
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ArcCrossing:
    """A double point of the arc ``(cos nx s, cos ny s)``, ``0 < s1 < s2 < pi``.

    ``position`` is the braid generator index read off the arc: strands are
    the ``ny`` monotone pieces in y, numbered by increasing x.
    """

    s1: ExactAngle
    s2: ExactAngle
    x: float
    y: float
    position: int


def _arc_strand_x(nx: int, ny: int, piece: int, height: float) -> float:
    u = math.acos(max(-1.0, min(1.0, height)))
    arg = piece * math.pi + u if piece % 2 == 0 else (piece + 1) * math.pi - u
    return math.cos(nx * arg / ny)


def arc_double_points(nx: int, ny: int) -> list[ArcCrossing]:
    """Double points of the Lissajous arc in braid order (top to bottom).

    Crossings at equal height are listed by increasing generator index.
    """
    if math.gcd(nx, ny) != 1:
        raise NonCoprimeFrequencies(f"gcd({nx}, {ny}) != 1")
    pairs = set()
    for a in range(1, nx):
        for b in range(1, ny):
            for s1, s2 in (
                (Fraction(a, nx) - Fraction(b, ny), Fraction(a, nx) + Fraction(b, ny)),
                (Fraction(b, ny) - Fraction(a, nx), Fraction(b, ny) + Fraction(a, nx)),
            ):
                if 0 < s1 < s2 < 1:
                    pairs.add((s1, s2))
    out = []
    for s1, s2 in pairs:
        t1, t2 = ExactAngle.pi(s1), ExactAngle.pi(s2)
        x = (nx * t1).cos()
        y = (ny * t1).cos()
        through = {int(s1 * ny), int(s2 * ny)}
        left = 0
        for piece in range(ny):
            if piece in through:
                continue
            if _arc_strand_x(nx, ny, piece, y) < x:
                left += 1
        out.append(ArcCrossing(t1, t2, x, y, left + 1))
    out.sort(key=lambda c: (-round(c.y, 9), c.position))
    return out


def arc_branch_moves_left(nx: int, ny: int, s: ExactAngle) -> bool:
    """True if the arc at parameter ``s`` moves toward smaller x while descending in y."""
    dx = -nx * (nx * s).sin()
    dy = -ny * (ny * s).sin()
    return (-math.copysign(1.0, dy) * dx) < 0
