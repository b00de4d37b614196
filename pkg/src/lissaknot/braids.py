"""Braid words of Lissajous arcs and the rewrites that turn knots into them.

The arc ``s -> (cos nx s, cos ny s)``, ``0 <= s <= pi``, read from top to
bottom is a braid on ``ny`` strands whose shadow has a fixed shape
(:func:`lissajous_projection_word`).  A knot that is the closure of such an
arc has a Lissajous projection, so the pipelines here rewrite 2-bridge knots
(3-strand braids) and (3, q)-torus knots (6-strand plats) until their shadow
is an arc shadow.
"""
from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .diagram import (
    BandShadow,
    PlatSpec,
    arc_signs_from_braid,
    band_shadow,
    plat_components,
)
from .errors import (
    IndexOutOfRange,
    LinkNotKnot,
    NotADoubleLetter,
    NotAKnot,
    NotCoprime,
    NotCoprimeToThree,
    PatternNotFound,
)
from .invariants import braid_equal
from .words import BraidWord, ProjectionWord

__all__ = [
    "Side",
    "Rule",
    "lissajous_projection_word",
    "first_replacement",
    "alternate_3braid",
    "is_alternating",
    "TwoBridgeResult",
    "two_bridge_pipeline",
    "torus_seed",
    "torus_rewrite",
    "torus_rewrite_printed",
    "shadow_rewrites",
    "lift_template",
    "lift_signed",
    "TorusResult",
    "torus_pipeline",
]


class Side(enum.Enum):
    LEFT = "left"
    RIGHT = "right"


class Rule(enum.Enum):
    LIFT = "lift"  # (s3 s2)^3n or (s3 s4)^3n  ->  (s1 s3 s2 s4)^5n
    CLASP_SLIDE = "clasp-slide"  # suffix s3 s4 s3 s2  ->  s1 s3 s2 s4
    END_SLIDE = "end-slide"  # suffix s4 s3 s1 s2  ->  s1 s3 s2 s4 s1 s3, modified bottom caps


# ---------------------------------------------------------------------------
# arc shadows
# ---------------------------------------------------------------------------

def lissajous_projection_word(nx: int, ny: int) -> ProjectionWord:
    """Shadow of the Lissajous arc with frequencies ``(nx, ny)`` on ``ny`` strands.

    With ``s_even = s2 s4 ...`` and ``s_odd = s1 s3 ...`` (indices below ny):
    ``s_even (s_odd s_even)^(nx/2 - 1)`` for even nx,
    ``(s_odd s_even)^((nx-1)/2)`` for odd nx and even ny, and
    ``(s_even s_odd)^((nx-1)/2)`` when both are odd.
    """
    if math.gcd(nx, ny) != 1:
        raise NotCoprime(f"gcd({nx}, {ny}) != 1")
    if ny < 2 or nx < 1:
        raise IndexOutOfRange("need ny >= 2 and nx >= 1")
    even = tuple(range(2, ny, 2))
    odd = tuple(range(1, ny, 2))
    if nx % 2 == 0:
        letters = even + (odd + even) * (nx // 2 - 1)
    elif ny % 2 == 0:
        letters = (odd + even) * ((nx - 1) // 2)
    else:
        letters = (even + odd) * ((nx - 1) // 2)
    return ProjectionWord(ny, letters)


# ---------------------------------------------------------------------------
# making 3-strand shadows alternate
# ---------------------------------------------------------------------------

def first_replacement(w: BraidWord, pos: int, side: Side) -> BraidWord:
    """Replace the doubled letter ``sigma_i^e1 sigma_i^e2`` at ``pos`` by a six-letter word.

    Left:  ``sigma_{i-1}^-1 sigma_i^-1 sigma_{i-1}^e1 sigma_i sigma_{i-1} sigma_i^e2``
    Right: the same with ``i - 1`` replaced by ``i + 1``.
    Both equal the original pair in the braid group, and the new shadow
    contains ``(s_{i-1} s_i)^3`` (resp. ``(s_{i+1} s_i)^3``).
    """
    side = Side(side)
    letters = w.letters
    if not 0 <= pos < len(letters) - 1 or abs(letters[pos]) != abs(letters[pos + 1]):
        raise NotADoubleLetter(f"letters {pos}, {pos + 1} do not share a generator")
    i = abs(letters[pos])
    e1 = 1 if letters[pos] > 0 else -1
    e2 = 1 if letters[pos + 1] > 0 else -1
    if side is Side.LEFT:
        if i < 2:
            raise IndexOutOfRange("the left replacement needs i >= 2")
        j = i - 1
    else:
        if i > w.strands - 2:
            raise IndexOutOfRange("the right replacement needs i <= strands - 2")
        j = i + 1
    block = (-j, -i, e1 * j, i, j, e2 * i)
    return BraidWord(w.strands, letters[:pos] + block + letters[pos + 2:])


def is_alternating(word) -> bool:
    letters = [abs(a) for a in word]
    return all(a != b for a, b in zip(letters, letters[1:]))


def alternate_3braid(w: BraidWord) -> BraidWord:
    """An equal 3-strand braid whose shadow alternates between s1 and s2.

    Letters are prepended one at a time from the right; when a letter repeats
    the index at the front it is merged by :func:`first_replacement` (left for
    sigma_2, right for sigma_1).  The result starts with the opposite index,
    so no further collision can follow.
    """
    if w.strands != 3:
        raise IndexOutOfRange("alternate_3braid works on 3 strands")
    out: list[int] = []
    for a in reversed(w.letters):
        if not out or abs(out[0]) != abs(a):
            out.insert(0, a)
            continue
        pair = BraidWord(3, (a, out[0]))
        side = Side.LEFT if abs(a) == 2 else Side.RIGHT
        out = list(first_replacement(pair, 0, side).letters) + out[1:]
    return BraidWord(3, tuple(out))


# ---------------------------------------------------------------------------
# 2-bridge knots
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TwoBridgeResult:
    k: int
    nx: int
    ny: int
    alternated: BraidWord
    reduced: BraidWord
    shadow: BandShadow
    arc_signs: tuple[bool, ...]

    @property
    def frequencies(self) -> tuple[int, int]:
        return (self.nx, self.ny)


def _trim_cap_slides(word: BraidWord) -> BraidWord:
    """Drop leading and trailing sigma_1 letters; the caps over strands 1, 2 absorb them."""
    letters = list(word.letters)
    while letters and abs(letters[0]) == 1:
        letters.pop(0)
    while letters and abs(letters[-1]) == 1:
        letters.pop()
    return BraidWord(word.strands, tuple(letters))


def two_bridge_pipeline(w: BraidWord) -> TwoBridgeResult:
    """Lissajous arc data for the 4-plat of a 3-strand braid (fourth strand trivial).

    The braid is made alternating, its end sigma_1 letters are slid into the
    caps, leaving shadow ``s2 (s1 s2)^k``, the arc shadow for frequencies
    ``(2k + 2, 3)``.
    """
    if w.strands != 3:
        raise IndexOutOfRange("two_bridge_pipeline expects a braid on 3 strands")
    alternated = alternate_3braid(w)
    reduced = _trim_cap_slides(alternated)
    if not reduced.letters:
        raise NotAKnot("the braid reduces to the empty word, whose 4-plat is a two-component link")
    k = (len(reduced) - 1) // 2
    if k % 3 == 2:
        raise LinkNotKnot(f"shadow s2(s1 s2)^{k} with k = 2 mod 3 closes to a link")
    if plat_components(PlatSpec(w.with_strands(4))) != 1:
        raise NotAKnot("the 4-plat closure of the input has more than one component")
    nx, ny = 2 * k + 2, 3
    if reduced.projection().letters != lissajous_projection_word(nx, ny).letters:
        raise PatternNotFound("reduced braid does not have an arc shadow")
    signs = arc_signs_from_braid(reduced, nx, ny)
    return TwoBridgeResult(k, nx, ny, alternated, reduced, band_shadow(nx, ny), signs)


# ---------------------------------------------------------------------------
# (3, q) torus knots
# ---------------------------------------------------------------------------

def _check_q(q: int):
    if q < 2:
        raise IndexOutOfRange("q must be at least 2")
    if math.gcd(q, 3) != 1:
        raise NotCoprimeToThree(f"q = {q} is divisible by 3")


def torus_seed(q: int) -> BraidWord:
    """``sigma_2 (sigma_4 sigma_3)^q sigma_2^-1``; its 6-plat is the (3, q) torus knot."""
    _check_q(q)
    return BraidWord(6, (2,) + (4, 3) * q + (-2,))


_REWRITE_HEAD = (2, 4, 1, -3, 2, -4)
_REWRITE_TAIL = (4, 3, 1, 2)


def torus_rewrite(q: int) -> BraidWord:
    """``sigma_2 sigma_4 sigma_1 sigma_3^-1 sigma_2 sigma_4^-1 (sigma_3 sigma_2)^(q-1) sigma_4 sigma_3 sigma_1 sigma_2``.

    Its 6-plat is the (3, q) torus knot, and its shadow feeds the lift.
    """
    _check_q(q)
    return BraidWord(6, _REWRITE_HEAD + (3, 2) * (q - 1) + _REWRITE_TAIL)


def torus_rewrite_printed(q: int) -> BraidWord:
    """The same word starting with ``sigma_2^-1``; kept to document that its 6-plat differs."""
    _check_q(q)
    return BraidWord(6, (-2,) + _REWRITE_HEAD[1:] + (3, 2) * (q - 1) + _REWRITE_TAIL)


_FULL = (1, 3, 2, 4)
_TAILS = {
    Rule.CLASP_SLIDE: ((3, 4, 3, 2), (1, 3, 2, 4), False),
    Rule.END_SLIDE: ((4, 3, 1, 2), (1, 3, 2, 4, 1, 3), True),
}


def _find_block(letters, block) -> int:
    m = len(block)
    for start in range(len(letters) - m + 1):
        if tuple(letters[start:start + m]) == block:
            return start
    return -1


def shadow_rewrites(p: ProjectionWord, rule: Rule, n: int = 1) -> tuple[ProjectionWord, bool]:
    """Apply one shadow rewrite; returns ``(new word, bottom caps modified)``.

    ``LIFT`` replaces the leftmost block ``(s3 s2)^(3n)`` or ``(s3 s4)^(3n)``
    by ``(s1 s3 s2 s4)^(5n)``; the slides replace a fixed suffix.  The result
    lives on 5 strands.
    """
    rule = Rule(rule)
    letters = tuple(p.letters)
    strands = max(5, p.strands)
    if rule is Rule.LIFT:
        if n < 0:
            raise IndexOutOfRange("n must be non-negative")
        if n == 0:
            return ProjectionWord(p.strands, letters), False
        for pair in ((3, 2), (3, 4)):
            start = _find_block(letters, pair * (3 * n))
            if start >= 0:
                new = letters[:start] + _FULL * (5 * n) + letters[start + 6 * n:]
                return _on_five(new, strands), False
        raise PatternNotFound(f"no (s3 s2)^{3 * n} or (s3 s4)^{3 * n} block")
    suffix, replacement, modified = _TAILS[rule]
    if letters[-len(suffix):] != suffix:
        raise PatternNotFound(f"word does not end in {' '.join(f's{a}' for a in suffix)}")
    return _on_five(letters[: -len(suffix)] + replacement, strands), modified


def _on_five(letters, strands) -> ProjectionWord:
    if any(a > 4 for a in letters):
        return ProjectionWord(strands, letters)
    return ProjectionWord(5, letters)


def _pair_signs(word: BraidWord) -> dict:
    """Sum of crossing signs between each pair of strands (labelled by start position)."""
    at = list(range(word.strands + 1))
    sums: dict = {}
    for a in word.letters:
        i = abs(a)
        key = frozenset((at[i], at[i + 1]))
        sums[key] = sums.get(key, 0) + (1 if a > 0 else -1)
        at[i], at[i + 1] = at[i + 1], at[i]
    return {k: v for k, v in sums.items() if v}


@lru_cache(maxsize=None)
def lift_template(block: tuple[int, ...], strands: int = 5) -> BraidWord:
    """Signs for ``(s1 s3 s2 s4)^5`` making it equal to the signed 6-letter ``block``.

    Candidates are enumerated lexicographically (+1 before -1); those whose
    pairwise crossing-sign sums differ from the block's are skipped, since
    such sums are unchanged by braid relations on pure braids.  The first
    candidate equal to ``block`` in the braid group is returned.
    """
    source = BraidWord(strands, block)
    target_sums = _pair_signs(source)
    shape = _FULL * 5
    for signs in itertools.product((1, -1), repeat=len(shape)):
        cand = BraidWord(strands, tuple(a * s for a, s in zip(shape, signs)))
        if _pair_signs(cand) != target_sums:
            continue
        if braid_equal(cand, source):
            return cand
    raise PatternNotFound(f"no signed lift of block {block}")


def lift_signed(w: BraidWord, n: int) -> BraidWord:
    """Signed counterpart of the ``LIFT`` rewrite: replace the first ``3n``-fold block, 3 letter pairs at a time."""
    letters = list(w.letters)
    if n == 0:
        return w
    unsigned = [abs(a) for a in letters]
    for pair in ((3, 2), (3, 4)):
        start = _find_block(unsigned, pair * (3 * n))
        if start >= 0:
            break
    else:
        raise PatternNotFound(f"no (s3 s2)^{3 * n} or (s3 s4)^{3 * n} block")
    out = letters[:start]
    for chunk in range(n):
        block = tuple(letters[start + 6 * chunk:start + 6 * chunk + 6])
        out.extend(lift_template(block, w.strands).letters)
    out.extend(letters[start + 6 * n:])
    return BraidWord(w.strands, tuple(out))


@dataclass(frozen=True)
class TorusResult:
    q: int
    case: str  # "q = 1 mod 3" or "q = 2 mod 3"
    n: int
    frequencies: tuple[int, int]
    start: ProjectionWord
    steps: tuple[tuple[str, ProjectionWord], ...]
    word: ProjectionWord
    closure_modified: bool


def torus_pipeline(q: int) -> TorusResult:
    """Rewrite the (3, q) torus knot to an arc shadow on 5 strands.

    For ``q = 3n + 1`` the rewritten word is lifted and its end slid into
    modified bottom caps, giving ``(s2 s4 s1 s3)^(5n + 3)`` and frequencies
    ``(10n + 7, 5)``.  For ``q = 3n + 2`` the seed shadow
    ``s2 s4 (s3 s4)^(3n) s3 s4 s3 s2`` is lifted and clasp-slid, giving
    ``s2 s4 (s1 s3 s2 s4)^(5n + 1)`` and frequencies ``(10n + 4, 5)``.
    """
    _check_q(q)
    steps = []
    if q % 3 == 1:
        n = (q - 1) // 3
        start = torus_rewrite(q).projection()
        word, _ = shadow_rewrites(start, Rule.LIFT, n)
        steps.append((Rule.LIFT.value, word))
        word, modified = shadow_rewrites(word, Rule.END_SLIDE)
        steps.append((Rule.END_SLIDE.value, word))
        f = 10 * n + 7
        case = "q = 1 mod 3"
    else:
        n = (q - 2) // 3
        start = torus_seed(q).projection()
        word, _ = shadow_rewrites(start, Rule.LIFT, n)
        steps.append((Rule.LIFT.value, word))
        word, modified = shadow_rewrites(word, Rule.CLASP_SLIDE)
        steps.append((Rule.CLASP_SLIDE.value, word))
        f = 10 * n + 4
        case = "q = 2 mod 3"
    word = ProjectionWord(5, word.letters)
    expected = lissajous_projection_word(f, 5)
    if word.letters != expected.letters:
        raise PatternNotFound("rewrites did not end at an arc shadow")
    return TorusResult(q, case, n, (f, 5), start, tuple(steps), word, modified)
