"""Oriented knot diagrams and the constructions that produce them.

A :class:`Diagram` is stored as its Gauss sequence: the crossings met along
the knot in traversal order, each with an over/under flag and the crossing
sign.  The PD code and the arc decomposition are derived from it.

Three constructions live here:

* :func:`diagram_from_crossings` reads a Lissajous traversal from
  :func:`lissaknot.curves.build_crossings`;
* :func:`diagram_from_plat` closes a braid with caps at both ends;
* :func:`band_shadow` / :func:`assign_twist_crossings` double a Lissajous arc
  into a band and close it up into a closed Lissajous projection.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .angles import ExactAngle
from .curves import (
    ArcCrossing,
    DoublePoint,
    arc_branch_moves_left,
    arc_double_points,
    double_points,
    tangent_cross,
)
from .errors import (
    IndexOutOfRange,
    MalformedTraversal,
    NoAssignmentFound,
    NonCoprimeFrequencies,
    NotAKnot,
)
from .words import BraidWord

__all__ = [
    "Arc",
    "Diagram",
    "diagram_from_crossings",
    "PlatSpec",
    "standard_pairing",
    "shifted_pairing",
    "plat_components",
    "diagram_from_plat",
    "arc_signs_from_braid",
    "arc_closure_diagram",
    "BandShadow",
    "band_shadow",
    "assign_twist_crossings",
    "twist_patterns",
]

OVER, UNDER = "O", "U"


@dataclass(frozen=True)
class Arc:
    """An over-strand arc: from one under-crossing to the next."""

    index: int
    start: int  # crossing where the arc emerges from underneath
    end: int  # crossing where it next goes under
    over: tuple[int, ...]  # crossings it passes over, in order


@dataclass(frozen=True)
class Diagram:
    """A one-component oriented knot diagram given by its Gauss sequence.

    Entries are ``(crossing_id, "O" | "U", sign)``.  Crossing ids are
    renumbered 1..C in order of first appearance so equal diagrams have
    equal sequences.
    """

    gauss: tuple[tuple[int, str, int], ...] = ()

    def __post_init__(self):
        relabel = {}
        entries = []
        for cid, flag, sign in self.gauss:
            if flag not in (OVER, UNDER):
                raise MalformedTraversal(f"over/under flag must be 'O' or 'U', got {flag!r}")
            if sign not in (1, -1):
                raise MalformedTraversal(f"crossing sign must be +1 or -1, got {sign!r}")
            relabel.setdefault(cid, len(relabel) + 1)
            entries.append((relabel[cid], flag, int(sign)))
        seen: dict[int, list] = {}
        for cid, flag, sign in entries:
            seen.setdefault(cid, []).append((flag, sign))
        for cid, uses in seen.items():
            if len(uses) != 2:
                raise MalformedTraversal(f"crossing {cid} is visited {len(uses)} times")
            (f1, s1), (f2, s2) = uses
            if f1 == f2:
                raise MalformedTraversal(f"crossing {cid} is visited twice as {f1}")
            if s1 != s2:
                raise MalformedTraversal(f"crossing {cid} has inconsistent signs")
        object.__setattr__(self, "gauss", tuple(entries))

    @classmethod
    def unknot(cls) -> "Diagram":
        return cls(())

    @property
    def crossing_count(self) -> int:
        return len(self.gauss) // 2

    @property
    def components(self) -> int:
        return 1

    @property
    def signs(self) -> dict[int, int]:
        return {cid: sign for cid, _, sign in self.gauss}

    @property
    def writhe(self) -> int:
        return sum(self.signs.values())

    def mirror(self) -> "Diagram":
        """Switch every crossing (the mirror image)."""
        flip = {OVER: UNDER, UNDER: OVER}
        return Diagram(tuple((c, flip[f], -s) for c, f, s in self.gauss))

    def reverse(self) -> "Diagram":
        """Same diagram traversed the other way; crossing signs are unchanged."""
        return Diagram(tuple(reversed(self.gauss)))

    # -- derived encodings -------------------------------------------------
    def _under_visits(self) -> list[int]:
        return [v for v, (_, flag, _) in enumerate(self.gauss) if flag == UNDER]

    def arcs(self) -> tuple[Arc, ...]:
        unders = self._under_visits()
        n = len(self.gauss)
        out = []
        for r, start in enumerate(unders):
            stop = unders[(r + 1) % len(unders)]
            over = []
            v = (start + 1) % n
            while v != stop:
                over.append(self.gauss[v][0])
                v = (v + 1) % n
            out.append(Arc(r, self.gauss[start][0], self.gauss[stop][0], tuple(over)))
        return tuple(out)

    def crossing_arcs(self) -> list[tuple[int, int, int, int]]:
        """Per crossing (in id order): ``(sign, over_arc, incoming_arc, outgoing_arc)``."""
        unders = self._under_visits()
        n = len(self.gauss)
        arc_of_visit = [0] * n
        for r, start in enumerate(unders):
            stop = unders[(r + 1) % len(unders)]
            v = (start + 1) % n
            arc_of_visit[start] = r
            while v != stop:
                arc_of_visit[v] = r
                v = (v + 1) % n
        info = {}
        count = len(unders)
        for r, u in enumerate(unders):
            info.setdefault(self.gauss[u][0], {})["under"] = ((r - 1) % count, r)
        for v, (cid, flag, sign) in enumerate(self.gauss):
            if flag == OVER:
                info[cid]["over"] = arc_of_visit[v]
                info[cid]["sign"] = sign
        rows = []
        for cid in sorted(info):
            d = info[cid]
            rows.append((d["sign"], d["over"], d["under"][0], d["under"][1]))
        return rows

    def pd(self) -> tuple[tuple[int, int, int, int], ...]:
        """PD code with edges 1..2C; edge ``v+1`` leaves the ``v``-th visit.

        Each crossing is listed counterclockwise starting from the incoming
        under-edge.
        """
        n = len(self.gauss)
        visits: dict[int, dict] = {}
        for v, (cid, flag, sign) in enumerate(self.gauss):
            visits.setdefault(cid, {"sign": sign})[flag] = (v if v >= 1 else n, v + 1)
        out = []
        for cid in sorted(visits):
            d = visits[cid]
            u_in, u_out = d[UNDER]
            o_in, o_out = d[OVER]
            if d["sign"] > 0:
                out.append((u_in, o_out, u_out, o_in))
            else:
                out.append((u_in, o_in, u_out, o_out))
        return tuple(out)

    def to_json(self):
        return {
            "gauss": [[c, f, s] for c, f, s in self.gauss],
            "pd": [list(x) for x in self.pd()],
        }

    @classmethod
    def from_json(cls, data) -> "Diagram":
        return cls(tuple((int(c), f, int(s)) for c, f, s in data["gauss"]))

    def gauss_string(self) -> str:
        return " ".join(f"{f}{c}{'+' if s > 0 else '-'}" for c, f, s in self.gauss)


def diagram_from_crossings(visits: Sequence) -> Diagram:
    """Diagram of a Lissajous traversal (the output of ``build_crossings``)."""
    if not visits:
        raise MalformedTraversal("empty traversal; use Diagram.unknot() for the crossingless circle")
    return Diagram(tuple((v.crossing, OVER if v.is_over else UNDER, v.site.sign) for v in visits))


# ---------------------------------------------------------------------------
# plat closures
# ---------------------------------------------------------------------------

def standard_pairing(strands: int) -> tuple[tuple[int, int], ...]:
    return tuple((i, i + 1) for i in range(1, strands, 2))


def shifted_pairing(strands: int) -> tuple[tuple[int, int], ...]:
    """``(1, 2n)(2, 3)...(2n-2, 2n-1)``: the outer cap spans all the others."""
    return ((1, strands),) + tuple((i, i + 1) for i in range(2, strands - 1, 2))


@dataclass(frozen=True)
class PlatSpec:
    """A braid on ``2n`` strands capped off at the top and the bottom."""

    word: BraidWord
    top_pairing: Optional[tuple] = None
    bottom_pairing: Optional[tuple] = None

    def __post_init__(self):
        n = self.word.strands
        if n % 2:
            raise IndexOutOfRange("a plat needs an even number of strands")
        allowed = {standard_pairing(n), shifted_pairing(n)}
        for name in ("top_pairing", "bottom_pairing"):
            value = getattr(self, name)
            if value is None:
                value = standard_pairing(n)
            value = tuple(sorted(tuple(sorted(p)) for p in value))
            if value not in allowed:
                raise IndexOutOfRange(f"{name} {value} is neither the standard nor the shifted pairing")
            object.__setattr__(self, name, value)

    @property
    def strands(self) -> int:
        return self.word.strands

    @property
    def modified(self) -> bool:
        return self.bottom_pairing != standard_pairing(self.strands) or self.top_pairing != standard_pairing(self.strands)


def _partner(pairing) -> dict[int, int]:
    out = {}
    for a, b in pairing:
        out[a], out[b] = b, a
    return out


def _permutation(word: BraidWord) -> list[int]:
    """``perm[p]`` is the bottom position of the strand starting at top position ``p``."""
    n = word.strands
    where = list(range(n + 1))  # where[p] = current position of strand started at p
    at = list(range(n + 1))  # at[pos] = strand currently at pos
    for a in word.letters:
        i = abs(a)
        s, t = at[i], at[i + 1]
        at[i], at[i + 1] = t, s
        where[s], where[t] = i + 1, i
    return where


def plat_components(spec: PlatSpec) -> int:
    n = spec.strands
    perm = _permutation(spec.word)
    parent = list(range(2 * n + 1))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        parent[find(a)] = find(b)

    # node p is top position p, node n + p is bottom position p
    for p in range(1, n + 1):
        union(p, n + perm[p])
    for a, b in spec.top_pairing:
        union(a, b)
    for a, b in spec.bottom_pairing:
        union(n + a, n + b)
    return len({find(v) for v in range(1, 2 * n + 1)})


def diagram_from_plat(spec: PlatSpec) -> Diagram:
    """Walk the plat closure starting down from top position 1.

    Positions are x coordinates, the braid is read downward and ``sigma_i``
    puts the strand coming from position ``i + 1`` over the one coming from
    ``i``.  Caps add no crossings.
    """
    if plat_components(spec) != 1:
        raise NotAKnot("the plat closure has more than one component")
    letters = spec.word.letters
    if not letters:
        return Diagram.unknot()
    top, bottom = _partner(spec.top_pairing), _partner(spec.bottom_pairing)
    visits = []  # (crossing, is_over, direction vector)
    pos, down = 1, True
    while True:
        heights = range(len(letters)) if down else range(len(letters) - 1, -1, -1)
        for h in heights:
            a = letters[h]
            i = abs(a)
            if pos not in (i, i + 1):
                continue
            new = i + 1 if pos == i else i
            above = pos if down else new
            is_over = (above == i + 1) == (a > 0)
            # direction of travel; y grows upward, the braid runs downward
            dx = new - pos
            vec = (dx, -1 if down else 1)
            visits.append((h, is_over, vec))
            pos = new
        if down:
            pos = bottom[pos]
        else:
            pos = top[pos]
            if pos == 1:
                break
        down = not down
    vectors: dict[int, dict] = {}
    for h, is_over, vec in visits:
        vectors.setdefault(h, {})[is_over] = vec
    signs = {}
    for h, d in vectors.items():
        (ox, oy), (ux, uy) = d[True], d[False]
        signs[h] = 1 if ox * uy - oy * ux > 0 else -1
    return Diagram(tuple((h, OVER if o else UNDER, signs[h]) for h, o, _ in visits))


# ---------------------------------------------------------------------------
# the Lissajous arc and its closure
# ---------------------------------------------------------------------------

def _check_coprime(nx, ny):
    from math import gcd

    if gcd(nx, ny) != 1:
        raise NonCoprimeFrequencies(f"gcd({nx}, {ny}) != 1")


def arc_signs_from_braid(word: BraidWord, nx: int, ny: int) -> tuple[bool, ...]:
    """Over/under data for the arc crossings realising ``word``.

    ``word`` must have ``ny`` strands and the projection of the arc braid
    (:func:`lissaknot.braids.lissajous_projection_word`).  Entry ``c`` is True
    when, at the ``c``-th arc crossing, the branch with the smaller arc
    parameter passes over.
    """
    arc = arc_double_points(nx, ny)
    if word.strands != ny or [c.position for c in arc] != [abs(a) for a in word.letters]:
        raise IndexOutOfRange("the braid does not have the projection of this Lissajous arc")
    out = []
    for c, a in zip(arc, word.letters):
        out.append(arc_branch_moves_left(nx, ny, c.s1) == (a > 0))
    return tuple(out)


def _sign_from_tangents(nx, ny, phx, phy, t1, t2, first_over: bool) -> int:
    cross = tangent_cross(nx, ny, phx, phy, t1, t2)
    if cross == 0:
        raise MalformedTraversal("tangent directions coincide at a crossing")
    s = 1 if cross > 0 else -1
    return s if first_over else -s


def arc_closure_diagram(nx: int, ny: int, arc_signs: Sequence[bool]) -> Diagram:
    """The arc ``s -> (cos nx s, cos ny s)``, ``0 <= s <= pi``, closed outside its bounding box.

    Both ends of the arc sit on corners of the box, so the closing strand
    adds no crossings.
    """
    _check_coprime(nx, ny)
    arc = arc_double_points(nx, ny)
    if len(arc_signs) != len(arc):
        raise IndexOutOfRange(f"expected {len(arc)} arc signs, got {len(arc_signs)}")
    visits = []
    for idx, (c, first_over) in enumerate(zip(arc, arc_signs)):
        sign = _sign_from_tangents(nx, ny, 0, 0, c.s1, c.s2, bool(first_over))
        visits.append((c.s1, idx, bool(first_over), sign))
        visits.append((c.s2, idx, not first_over, sign))
    if not visits:
        return Diagram.unknot()
    visits.sort(key=lambda v: v[0].pi_part)
    return Diagram(tuple((idx, OVER if o else UNDER, sign) for _, idx, o, sign in visits))


# ---------------------------------------------------------------------------
# band doubling of the arc
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BandShadow:
    """The closed Lissajous shadow obtained by retracing the arc as a thin band.

    ``points`` are the double points of the projection with phases
    ``(0, delta)``, which for small ``delta`` is the arc traced out and back
    with its two copies slightly pushed apart.  Every arc crossing spawns
    four shadow crossings (``quad_sites``) and every interior extremum of the
    arc one crossing where the band turns over (``twist_slots``).
    """

    nx: int
    ny: int
    delta: ExactAngle
    points: tuple[DoublePoint, ...]
    arc: tuple[ArcCrossing, ...]
    quad_sites: tuple[tuple[int, ...], ...]
    twist_slots: tuple[int, ...]
    traversal: tuple[tuple[int, int], ...] = field(repr=False)  # (point index, 1 or 2) in time order

    @property
    def total(self) -> int:
        return len(self.points)

    def to_json(self):
        return {
            "nx": self.nx,
            "ny": self.ny,
            "quad_crossings": 4 * len(self.quad_sites),
            "twist_slots": len(self.twist_slots),
            "total": self.total,
        }


def _arc_parameter(t: Fraction) -> Fraction:
    """Fold a limit time in (0, 2) (units of pi) onto the arc parameter in (0, 1)."""
    return t if t < 1 else 2 - t


def band_shadow(nx: int, ny: int) -> BandShadow:
    _check_coprime(nx, ny)
    delta = ExactAngle(0, Fraction(1, 4 * nx * ny))
    points = tuple(double_points(nx, ny, 0, delta))
    arc = tuple(arc_double_points(nx, ny))
    arc_index = {(c.s1.pi_part, c.s2.pi_part): i for i, c in enumerate(arc)}
    quads: list[list[int]] = [[] for _ in arc]
    twists = []
    for idx, dp in enumerate(points):
        s1 = _arc_parameter(dp.t1.pi_part)
        s2 = _arc_parameter(dp.t2.pi_part)
        if s1 == s2:
            twists.append(idx)
            continue
        key = (min(s1, s2), max(s1, s2))
        if key not in arc_index:
            raise MalformedTraversal(f"shadow crossing {dp.label} matches no arc crossing")
        quads[arc_index[key]].append(idx)
    if any(len(q) != 4 for q in quads) or len(twists) != nx + ny - 2:
        raise MalformedTraversal("band shadow bookkeeping does not match the arc")
    entries = []
    for idx, dp in enumerate(points):
        entries.append((dp.t1, idx, 1))
        entries.append((dp.t2, idx, 2))
    entries.sort(key=functools.cmp_to_key(lambda a, b: a[0].compare(b[0])))
    return BandShadow(
        nx,
        ny,
        delta,
        points,
        arc,
        tuple(tuple(q) for q in quads),
        tuple(twists),
        tuple((idx, which) for _, idx, which in entries),
    )


def _first_is_over(shadow: BandShadow, idx: int, arc_signs, twist_bits: dict, quad_of: dict) -> bool:
    """Whether the visit at ``t1`` passes over at shadow crossing ``idx``.

    Times below pi run along the arc (outgoing copy), above pi along the
    returning copy.  Outgoing against outgoing copies the arc sign; outgoing
    against returning puts the returning copy on top; returning against
    returning puts the earlier visit on top, so both copies of an arc crossing
    stack the same way.  At twist slots the bit says whether the returning
    copy is on top.
    """
    dp = shadow.points[idx]
    a1, a2 = dp.t1.pi_part < 1, dp.t2.pi_part < 1
    if idx in twist_bits:
        returning_over = twist_bits[idx]
        return (not a1) == returning_over
    if a1 and a2:
        s1, s2 = dp.t1.pi_part, dp.t2.pi_part
        first_over = arc_signs[quad_of[idx]]
        return first_over if s1 < s2 else not first_over
    if a1 != a2:
        return not a1
    return True


def _band_diagram(shadow: BandShadow, arc_signs, twist_bits: dict) -> Diagram:
    quad_of = {idx: q for q, members in enumerate(shadow.quad_sites) for idx in members}
    over = {}
    sign = {}
    for idx, dp in enumerate(shadow.points):
        first = _first_is_over(shadow, idx, arc_signs, twist_bits, quad_of)
        over[idx] = first
        sign[idx] = _sign_from_tangents(shadow.nx, shadow.ny, 0, shadow.delta, dp.t1, dp.t2, first)
    gauss = []
    for idx, which in shadow.traversal:
        is_over = over[idx] if which == 1 else not over[idx]
        gauss.append((idx, OVER if is_over else UNDER, sign[idx]))
    return Diagram(tuple(gauss))


def twist_patterns(count: int) -> Iterable[tuple[bool, ...]]:
    """Twist-slot patterns in search order: all True, all False, then Gray code."""
    if count == 0:
        yield ()
        return
    first, second = (True,) * count, (False,) * count
    yield first
    yield second
    for g in range(1 << count):
        code = g ^ (g >> 1)
        pattern = tuple(bool((code >> b) & 1) for b in range(count))
        if pattern not in (first, second):
            yield pattern


def assign_twist_crossings(shadow: BandShadow, arc_signs: Sequence[bool], target) -> Diagram:
    """Complete the band shadow to a diagram whose Alexander polynomial is ``target``.

    The arc crossings keep their over/under (``arc_signs``, as produced by
    :func:`arc_signs_from_braid`); only the twist slots are searched.
    """
    from .invariants import CanonicalAlexander, alexander

    if len(arc_signs) != len(shadow.arc):
        raise IndexOutOfRange(f"expected {len(shadow.arc)} arc signs, got {len(arc_signs)}")
    target = CanonicalAlexander(target)
    slots = shadow.twist_slots
    for pattern in twist_patterns(len(slots)):
        diagram = _band_diagram(shadow, tuple(arc_signs), dict(zip(slots, pattern)))
        if alexander(diagram) == target:
            return diagram
    raise NoAssignmentFound(f"no twist assignment on the ({shadow.nx},{shadow.ny}) band gives {target}")
