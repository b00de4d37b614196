"""Independent reference computations used only by the tests."""
from __future__ import annotations

from fractions import Fraction

from lissaknot.diagram import Diagram
from lissaknot.words import BraidWord


def closed_braid_diagram(word: BraidWord) -> Diagram:
    """Gauss sequence of the ordinary closure of ``word`` (all strands run downward)."""
    n = word.strands
    letters = word.letters
    # components of the closure follow the permutation cycles
    perm = list(range(n + 1))
    at = list(range(n + 1))
    for a in letters:
        i = abs(a)
        at[i], at[i + 1] = at[i + 1], at[i]
    for pos in range(1, n + 1):
        perm[at[pos]] = pos
    seen, p = set(), 1
    while p not in seen:
        seen.add(p)
        p = perm[p]
    if len(seen) != n:
        raise ValueError("closure is a link")
    gauss = []
    pos = 1
    for _ in range(n):
        for h, a in enumerate(letters):
            i = abs(a)
            if pos == i + 1:
                gauss.append((h, "O" if a > 0 else "U", 1 if a > 0 else -1))
                pos = i
            elif pos == i:
                gauss.append((h, "U" if a > 0 else "O", 1 if a > 0 else -1))
                pos = i + 1
    return Diagram(tuple(gauss))


def _identity(n):
    return [[Fraction(int(r == c)) for c in range(n)] for r in range(n)]


def _matmul(a, b):
    n = len(a)
    return [[sum(a[r][k] * b[k][c] for k in range(n)) for c in range(n)] for r in range(n)]


def fraction_det(m) -> Fraction:
    m = [list(map(Fraction, row)) for row in m]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            for k in range(c, n):
                m[r][k] -= f * m[c][k]
    return det


def _inverse(m):
    n = len(m)
    aug = [list(row) + _identity(n)[i] for i, row in enumerate(m)]
    for c in range(n):
        piv = next(r for r in range(c, n) if aug[r][c] != 0)
        aug[c], aug[piv] = aug[piv], aug[c]
        pv = aug[c][c]
        aug[c] = [v / pv for v in aug[c]]
        for r in range(n):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[c])]
    return [row[n:] for row in aug]


def reduced_burau(word: BraidWord, t) -> list:
    """Reduced Burau matrix of ``word`` evaluated at the rational ``t``."""
    t = Fraction(t)
    size = word.strands - 1
    total = _identity(size)
    for a in word.letters:
        i = abs(a) - 1
        m = _identity(size)
        if i > 0:
            m[i - 1][i] = t
        m[i][i] = -t
        if i < size - 1:
            m[i + 1][i] = Fraction(1)
        if a < 0:
            m = _inverse(m)
        total = _matmul(total, m)
    return total


def burau_alexander_value(word: BraidWord, t) -> Fraction:
    """``det(I - B(t)) / (1 + t + ... + t^(n-1))``: Alexander of the closure at ``t`` up to a unit."""
    t = Fraction(t)
    b = reduced_burau(word, t)
    size = len(b)
    m = [[int(r == c) - b[r][c] for c in range(size)] for r in range(size)]
    return fraction_det(m) / sum(t ** k for k in range(word.strands))


def is_unit_ratio(a: Fraction, b: Fraction, t: int) -> bool:
    """True when ``a / b = +-t^k`` for some integer ``k``."""
    if a == 0 or b == 0:
        return a == b
    r = abs(Fraction(a) / Fraction(b))
    while r.numerator % t == 0 and r != 1:
        r /= t
    while r.denominator % t == 0 and r != 1:
        r *= t
    return r == 1
