"""Knot invariants and the polynomial tests used to rule out Lissajous knots.

The Alexander polynomial is computed from the arc/crossing relation matrix of
a diagram.  At a crossing with over-arc ``o``, incoming under-arc ``i`` and
outgoing under-arc ``j`` the row is

* ``t*x_i - x_j + (1 - t)*x_o`` for a positive crossing,
* ``x_i - t*x_j + (t - 1)*x_o`` for a negative crossing

(the Fox derivatives of the two Wirtinger relations, the second multiplied by
``t``).  One row and one column are deleted and the determinant is taken over
the Laurent polynomials.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .errors import BadDeterminant, NotAKnot, NotCoprime
from .laurent import ONE, T, ZERO_POLY, LaurentPoly, determinant
from .words import BraidWord

__all__ = [
    "CanonicalAlexander",
    "KnotId",
    "alexander",
    "alexander_matrix",
    "arf",
    "twist_alexander",
    "torus_alexander",
    "is_perfect_square",
    "perfect_square_root",
    "is_square_mod2",
    "artin_action",
    "braid_equal",
    "identify",
]


class CanonicalAlexander(LaurentPoly):
    """A Laurent polynomial normalised up to units: lowest degree 0, positive constant."""

    __slots__ = ()

    def __init__(self, poly=()):
        if not isinstance(poly, LaurentPoly):
            poly = LaurentPoly(poly)
        canon = poly.canonical()
        self._set(0, list(canon.coeff_list))

    def to_json(self):
        return {"min_deg": 0, "coeffs": list(self.coeff_list)}

    @classmethod
    def from_json(cls, data) -> "CanonicalAlexander":
        return cls(LaurentPoly(data["coeffs"], data.get("min_deg", 0)))

    def __repr__(self):
        return f"CanonicalAlexander({self})"


def _as_poly(value) -> LaurentPoly:
    return value if isinstance(value, LaurentPoly) else LaurentPoly(value)


def alexander_matrix(diagram) -> list[list[LaurentPoly]]:
    rows = []
    n = diagram.crossing_count
    for sign, over, incoming, outgoing in diagram.crossing_arcs():
        row = [ZERO_POLY] * n
        if sign > 0:
            entries = ((incoming, T), (outgoing, -ONE), (over, ONE - T))
        else:
            entries = ((incoming, ONE), (outgoing, -T), (over, T - ONE))
        for col, val in entries:
            row[col] = row[col] + val
        rows.append(row)
    return rows


def alexander(diagram) -> CanonicalAlexander:
    """Canonical Alexander polynomial of a one-component diagram."""
    if getattr(diagram, "components", 1) != 1:
        raise NotAKnot("the Alexander polynomial is computed for knots only")
    if diagram.crossing_count == 0:
        return CanonicalAlexander(ONE)
    matrix = alexander_matrix(diagram)
    minor = [row[:-1] for row in matrix[:-1]]
    det = determinant(minor)
    if det.is_zero():
        raise BadDeterminant("Alexander minor vanished; the diagram is not a knot diagram")
    return CanonicalAlexander(det)


def arf(delta) -> int:
    """Arf invariant from ``|delta(-1)| mod 8``: 0 for 1 or 7, 1 for 3 or 5."""
    value = abs(_as_poly(delta).canonical().evaluate(-1))
    residue = value % 8
    if residue in (1, 7):
        return 0
    if residue in (3, 5):
        return 1
    raise BadDeterminant(f"determinant {value} is even; not a knot")


def twist_alexander(n: int) -> CanonicalAlexander:
    """Alexander polynomial ``n - (2n+1) t + n t^2`` of the twist knot with 2n half twists."""
    return CanonicalAlexander(LaurentPoly([n, -(2 * n + 1), n]))


def torus_alexander(p: int, q: int) -> CanonicalAlexander:
    if p < 2 or q < 2 or math.gcd(p, q) != 1:
        raise NotCoprime(f"torus knot needs coprime p, q >= 2, got ({p}, {q})")
    num = (T ** (p * q) - 1) * (T - 1)
    den = (T ** p - 1) * (T ** q - 1)
    return CanonicalAlexander(num.divexact(den))


def perfect_square_root(delta) -> Optional[LaurentPoly]:
    """An integer polynomial ``g`` with ``delta = g**2`` up to units, or None."""
    canon = _as_poly(delta).canonical()
    coeffs = canon.coeff_list
    if not coeffs:
        return None
    deg = len(coeffs) - 1
    if deg % 2:
        return None
    c0 = coeffs[0]
    r0 = math.isqrt(c0)
    if r0 * r0 != c0:
        return None
    root = [r0]
    for i in range(1, deg // 2 + 1):
        acc = coeffs[i] - sum(root[a] * root[i - a] for a in range(1, i))
        q, rem = divmod(acc, 2 * r0)
        if rem:
            return None
        root.append(q)
    g = LaurentPoly(root)
    return g if g * g == canon else None


def is_perfect_square(delta) -> bool:
    return perfect_square_root(delta) is not None


def is_square_mod2(delta) -> bool:
    """True iff ``delta`` reduced mod 2 is a square, i.e. a polynomial in ``t**2`` up to ``t**k``."""
    reduced = _as_poly(delta).mod2()
    if reduced.is_zero():
        return True
    return all((d - reduced.min_degree) % 2 == 0 for d in reduced.coefficients)


# ---------------------------------------------------------------------------
# braid group equality through the Artin action on a free group
# ---------------------------------------------------------------------------

def _reduce_concat(*words):
    out = []
    for w in words:
        for a in w:
            if out and out[-1] == -a:
                out.pop()
            else:
                out.append(a)
    return tuple(out)


def _inv(w):
    return tuple(-a for a in reversed(w))


def artin_action(word: BraidWord) -> tuple[tuple[int, ...], ...]:
    """Images of the free generators ``x_1..x_n`` under the automorphism of ``word``.

    ``sigma_i`` sends ``x_i -> x_i x_{i+1} x_i^-1`` and ``x_{i+1} -> x_i``;
    images are freely reduced words in ``+-1..+-n``.
    """
    images = [(k + 1,) for k in range(word.strands)]
    for a in word.letters:
        i = abs(a) - 1
        xi, xj = images[i], images[i + 1]
        if a > 0:
            images[i], images[i + 1] = _reduce_concat(xi, xj, _inv(xi)), xi
        else:
            images[i], images[i + 1] = xj, _reduce_concat(_inv(xj), xi, xj)
    return tuple(images)


def braid_equal(w1: BraidWord, w2: BraidWord) -> bool:
    """Exact equality in the braid group (the Artin action is faithful)."""
    if w1.strands != w2.strands:
        raise ValueError("braids live on different strand counts")
    return artin_action(w1) == artin_action(w2)


# ---------------------------------------------------------------------------
# identification against closed forms
# ---------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class KnotId:
    kind: str  # "unknot", "twist" or "torus"
    params: tuple = ()

    @classmethod
    def unknot(cls):
        return cls("unknot")

    @classmethod
    def twist(cls, m: int):
        return cls("twist", (m,))

    @classmethod
    def torus(cls, p: int, q: int):
        if math.gcd(p, q) != 1 or min(p, q) < 2:
            raise NotCoprime(f"bad torus knot ({p}, {q})")
        return cls("torus", (p, q))

    def __str__(self):
        if self.kind == "unknot":
            return "Unknot"
        name = "Twist" if self.kind == "twist" else "Torus"
        return f"{name}({','.join(str(v) for v in self.params)})"


@lru_cache(maxsize=1)
def _closed_form_table():
    table = {}
    for n in range(-64, 65):
        if n == 0:
            continue
        table.setdefault(twist_alexander(n), []).extend([KnotId.twist(2 * n), KnotId.twist(-2 * n - 1)])
    for p in range(2, 33):
        for q in range(p + 1, 33):
            if p * q <= 64 and math.gcd(p, q) == 1:
                table.setdefault(torus_alexander(p, q), []).append(KnotId.torus(p, q))
    return table


def identify(delta) -> list[KnotId]:
    """Knots among twist knots (``|n| <= 64``) and torus knots (``pq <= 64``) sharing ``delta``.

    Twist knots are reported with both labels of the mirror pair
    ``K_{2n}``/``K_{-2n-1}``.  Matches are candidates, not certificates.
    """
    canon = CanonicalAlexander(delta)
    if canon == ONE:
        return [KnotId.unknot()]
    found = _closed_form_table().get(canon, [])
    twists = sorted((k for k in found if k.kind == "twist"), key=lambda k: (abs(k.params[0]), k.params[0]))
    tori = sorted(k for k in found if k.kind == "torus")
    return twists + tori
