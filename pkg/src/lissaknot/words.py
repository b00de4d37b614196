"""Braid words and their unsigned shadows.

``BraidWord`` letters are signed generator indices: ``2`` is sigma_2 and
``-1`` is sigma_1 inverse.  Words are read top to bottom and ``sigma_i``
means the string in position ``i + 1`` passes over the string in position
``i``.  A ``ProjectionWord`` forgets the signs (letters ``s_i``).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import IndexOutOfRange

__all__ = ["BraidWord", "ProjectionWord", "parse_word"]


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        letters = tuple(int(a) for a in self.letters)
        object.__setattr__(self, "letters", letters)
        if self.strands < 2:
            raise IndexOutOfRange("a braid needs at least two strands")
        for a in letters:
            if a == 0 or abs(a) > self.strands - 1:
                raise IndexOutOfRange(f"generator {a} out of range for {self.strands} strands")

    @classmethod
    def from_pairs(cls, strands: int, pairs: Iterable[tuple[int, int]]) -> "BraidWord":
        return cls(strands, tuple(i * e for i, e in pairs))

    @property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple((abs(a), 1 if a > 0 else -1) for a in self.letters)

    def projection(self) -> "ProjectionWord":
        return ProjectionWord(self.strands, tuple(abs(a) for a in self.letters))

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-a for a in reversed(self.letters)))

    def mirror(self) -> "BraidWord":
        """Switch every crossing."""
        return BraidWord(self.strands, tuple(-a for a in self.letters))

    def with_strands(self, strands: int) -> "BraidWord":
        return BraidWord(strands, self.letters)

    def __add__(self, other: "BraidWord") -> "BraidWord":
        if self.strands != other.strands:
            raise ValueError("cannot concatenate braids on different strand counts")
        return BraidWord(self.strands, self.letters + other.letters)

    def __mul__(self, n: int) -> "BraidWord":
        return BraidWord(self.strands, self.letters * n)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self):
        if not self.letters:
            return "1"
        return " ".join(f"s{a}" if a > 0 else f"s{-a}^-1" for a in self.letters)

    def to_json(self):
        return list(self.letters)


@dataclass(frozen=True)
class ProjectionWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        letters = tuple(int(a) for a in self.letters)
        object.__setattr__(self, "letters", letters)
        for a in letters:
            if not 1 <= a <= self.strands - 1:
                raise IndexOutOfRange(f"generator s{a} out of range for {self.strands} strands")

    def __add__(self, other: "ProjectionWord") -> "ProjectionWord":
        return ProjectionWord(max(self.strands, other.strands), self.letters + other.letters)

    def __mul__(self, n: int) -> "ProjectionWord":
        return ProjectionWord(self.strands, self.letters * n)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self):
        return " ".join(f"s{a}" for a in self.letters) or "1"

    def to_json(self):
        return list(self.letters)


def parse_word(text: str, strands: int) -> BraidWord:
    """Parse ``"2,2,-1"`` (or whitespace separated) into a braid word."""
    items = [tok for tok in text.replace(",", " ").split() if tok]
    return BraidWord(strands, tuple(int(tok) for tok in items))
