"""Integer Laurent polynomials in one variable ``t`` and exact determinants.

Polynomials are stored densely as ``(low, coeffs)``: the exponent of the
first coefficient and a tuple of integers with nonzero ends.  All arithmetic
is exact over the integers.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

__all__ = ["LaurentPoly", "determinant", "T", "ONE", "ZERO_POLY"]


class LaurentPoly:
    __slots__ = ("_low", "_coeffs", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | Sequence[int] | int = (), low: int = 0):
        if isinstance(coeffs, int):
            coeffs, low = (coeffs,), 0
        if isinstance(coeffs, Mapping):
            items = {d: int(c) for d, c in coeffs.items() if c}
            if items:
                low = min(items)
                seq = [0] * (max(items) - low + 1)
                for d, c in items.items():
                    seq[d - low] = c
            else:
                seq, low = [], 0
        else:
            seq = [int(c) for c in coeffs]
        self._set(low, seq)

    def _set(self, low, seq):
        start = 0
        while start < len(seq) and seq[start] == 0:
            start += 1
        end = len(seq)
        while end > start and seq[end - 1] == 0:
            end -= 1
        if start == end:
            self._low, self._coeffs = 0, ()
        else:
            self._low, self._coeffs = low + start, tuple(seq[start:end])
        self._hash = None

    @classmethod
    def _raw(cls, low, seq):
        obj = cls.__new__(cls)
        obj._set(low, seq)
        return obj

    @classmethod
    def monomial(cls, coeff: int = 1, degree: int = 0) -> "LaurentPoly":
        return cls._raw(degree, [coeff])

    # -- views ------------------------------------------------------------
    @property
    def coefficients(self) -> dict[int, int]:
        """Map from degree to (nonzero) coefficient."""
        return {self._low + i: c for i, c in enumerate(self._coeffs) if c}

    @property
    def min_degree(self) -> int:
        return self._low

    @property
    def max_degree(self) -> int:
        return self._low + len(self._coeffs) - 1

    @property
    def coeff_list(self) -> tuple[int, ...]:
        """Dense coefficients from ``min_degree`` upward."""
        return self._coeffs

    def __getitem__(self, degree: int) -> int:
        i = degree - self._low
        return self._coeffs[i] if 0 <= i < len(self._coeffs) else 0

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_unit(self) -> bool:
        return len(self._coeffs) == 1 and abs(self._coeffs[0]) == 1

    def __bool__(self):
        return bool(self._coeffs)

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        if not other._coeffs:
            return self
        if not self._coeffs:
            return other
        low = min(self._low, other._low)
        high = max(self.max_degree, other.max_degree)
        seq = [0] * (high - low + 1)
        for i, c in enumerate(self._coeffs):
            seq[self._low - low + i] += c
        for i, c in enumerate(other._coeffs):
            seq[other._low - low + i] += c
        return LaurentPoly._raw(low, seq)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self._low, [-c for c in self._coeffs])

    def __sub__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return ZERO_POLY
        if len(a) < len(b):
            a, b = b, a
        seq = [0] * (len(a) + len(b) - 1)
        for j, cb in enumerate(b):
            if cb:
                for i, ca in enumerate(a):
                    seq[i + j] += ca * cb
        return LaurentPoly._raw(self._low + other._low, seq)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_unit():
                raise ValueError("only units have negative powers")
            return LaurentPoly.monomial(self._coeffs[0] ** -n, -self._low * -n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def divexact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient ``self / other``; raises ``ArithmeticError`` if not exact."""
        other = _lift(other)
        if not other._coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self._coeffs:
            return ZERO_POLY
        num = list(self._coeffs)
        den = other._coeffs
        lead = den[-1]
        nq = len(num) - len(den) + 1
        if nq <= 0:
            raise ArithmeticError("inexact Laurent polynomial division")
        quot = [0] * nq
        for i in range(nq - 1, -1, -1):
            c = num[i + len(den) - 1]
            if c:
                q, r = divmod(c, lead)
                if r:
                    raise ArithmeticError("inexact Laurent polynomial division")
                quot[i] = q
                for k, d in enumerate(den):
                    num[i + k] -= q * d
        if any(num):
            raise ArithmeticError("inexact Laurent polynomial division")
        return LaurentPoly._raw(self._low - other._low, quot)

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``t**k``."""
        return LaurentPoly._raw(self._low + k, list(self._coeffs))

    def invert_variable(self) -> "LaurentPoly":
        """Substitute ``t -> 1/t``."""
        return LaurentPoly._raw(-self.max_degree, list(reversed(self._coeffs))) if self._coeffs else ZERO_POLY

    def evaluate(self, x):
        total = 0
        for c in reversed(self._coeffs):
            total = total * x + c
        if self._low < 0 and isinstance(x, int):
            return Fraction(total, x ** -self._low)
        return total * x ** self._low

    __call__ = evaluate

    def mod2(self) -> "LaurentPoly":
        return LaurentPoly._raw(self._low, [c % 2 for c in self._coeffs])

    def canonical(self) -> "LaurentPoly":
        """Representative up to units ``+-t^k``: lowest degree 0, positive constant."""
        if not self._coeffs:
            return self
        sign = -1 if self._coeffs[0] < 0 else 1
        return LaurentPoly._raw(0, [sign * c for c in self._coeffs])

    # -- comparisons and display ------------------------------------------
    def __eq__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return self._low == other._low and self._coeffs == other._coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._low, self._coeffs))
        return self._hash

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        if not self._coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self._coeffs):
            if not c:
                continue
            d = self._low + i
            mag = abs(c)
            if d == 0:
                body = str(mag)
            else:
                var = "t" if d == 1 else f"t^{d}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not terms:
                terms.append(("-" if c < 0 else "") + body)
            else:
                terms.append((" - " if c < 0 else " + ") + body)
        return "".join(terms)


def _lift(value):
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, int):
        return LaurentPoly._raw(0, [value])
    return NotImplemented


ZERO_POLY = LaurentPoly()
ONE = LaurentPoly(1)
T = LaurentPoly.monomial(1, 1)


def _unit_inverse(u: LaurentPoly) -> LaurentPoly:
    return LaurentPoly.monomial(u.coeff_list[0], -u.min_degree)


def determinant(matrix: Iterable[Iterable]) -> LaurentPoly:
    """Exact determinant of a square matrix over integer Laurent polynomials.

    Entries that are units (``+-t^k``) are eliminated first, choosing the one
    with the least fill-in; the remaining block is finished with fraction-free
    (Bareiss) elimination.  Both steps only ever divide exactly.
    """
    rows = [[_lift(e) if not isinstance(e, LaurentPoly) else e for e in row] for row in matrix]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix must be square")
    if n == 0:
        return ONE
    sparse = {i: {j: e for j, e in enumerate(r) if e} for i, r in enumerate(rows)}
    cols: dict[int, set] = {j: set() for j in range(n)}
    for i, r in sparse.items():
        for j in r:
            cols[j].add(i)
    row_order = list(range(n))
    col_order = list(range(n))
    factor = ONE

    while row_order:
        best = None
        for i in row_order:
            r = sparse[i]
            if not r:
                return ZERO_POLY
            for j, e in r.items():
                if e.is_unit():
                    cost = (len(r) - 1) * (len(cols[j]) - 1)
                    if best is None or cost < best[0]:
                        best = (cost, i, j)
                        if cost == 0:
                            break
            if best is not None and best[0] == 0:
                break
        if best is None:
            break
        _, pi, pj = best
        sign = (-1) ** (row_order.index(pi) + col_order.index(pj))
        pivot = sparse[pi][pj]
        factor = factor * pivot * sign
        inv = _unit_inverse(pivot)
        prow = sparse.pop(pi)
        row_order.remove(pi)
        col_order.remove(pj)
        for i in list(cols[pj]):
            if i == pi:
                continue
            r = sparse[i]
            mult = r.pop(pj) * inv
            for j, e in prow.items():
                if j == pj:
                    continue
                new = r.get(j, ZERO_POLY) - mult * e
                if new:
                    r[j] = new
                    cols[j].add(i)
                else:
                    r.pop(j, None)
                    cols[j].discard(i)
        for j in prow:
            cols[j].discard(pi)
        del cols[pj]

    if not row_order:
        return factor
    dense = [[sparse[i].get(j, ZERO_POLY) for j in col_order] for i in row_order]
    return factor * _bareiss(dense)


def _bareiss(m: list[list[LaurentPoly]]) -> LaurentPoly:
    n = len(m)
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if not m[k][k]:
            swap = None
            for i in range(k + 1, n):
                if m[i][k]:
                    if swap is None or len(m[i][k].coeff_list) < len(m[swap][k].coeff_list):
                        swap = i
            if swap is None:
                return ZERO_POLY
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i = m[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - lead * m[k][j]).divexact(prev)
            row_i[k] = ZERO_POLY
        prev = pivot
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det
