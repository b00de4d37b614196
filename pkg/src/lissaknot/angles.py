"""Exact angles of the form ``a*pi + b`` with rational ``a`` and ``b``.

Lissajous phases, crossing times and the singular phase families are all of
this shape, so keeping them exact lets us decide equalities (forbidden phases,
coincident times) without floating point.  Numeric values are produced with
mpmath after reducing the ``pi`` coefficient exactly modulo 2.
"""
from __future__ import annotations

import ast
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

import mpmath

from .errors import PhaseSyntaxError
from .tolerances import WORKPREC

__all__ = ["ExactAngle", "parse_phase", "PI", "ZERO"]


def _frac(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    if isinstance(value, float):
        # floats are accepted only when they are short decimals (0.5, 0.2, ...)
        return Fraction(repr(value))
    raise TypeError(f"cannot make an exact rational from {value!r}")


@dataclass(frozen=True, order=False)
class ExactAngle:
    """The real number ``pi_part * pi + unit_part``."""

    pi_part: Fraction = Fraction(0)
    unit_part: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "pi_part", _frac(self.pi_part))
        object.__setattr__(self, "unit_part", _frac(self.unit_part))

    @classmethod
    def of(cls, value) -> "ExactAngle":
        """Coerce ``value`` (ExactAngle, rational, decimal string or phase expression)."""
        if isinstance(value, ExactAngle):
            return value
        if isinstance(value, str):
            return parse_phase(value)
        return cls(0, _frac(value))

    @classmethod
    def pi(cls, coeff=1) -> "ExactAngle":
        return cls(_frac(coeff), 0)

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return ExactAngle(self.pi_part + other.pi_part, self.unit_part + other.unit_part)

    __radd__ = __add__

    def __neg__(self):
        return ExactAngle(-self.pi_part, -self.unit_part)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, k):
        if isinstance(k, ExactAngle):
            if k.pi_part == 0:
                k = k.unit_part
            elif self.pi_part == 0:
                return k * self.unit_part
            else:
                raise TypeError("product of two angles with pi parts is not an ExactAngle")
        k = _frac(k)
        return ExactAngle(self.pi_part * k, self.unit_part * k)

    __rmul__ = __mul__

    def __truediv__(self, k):
        if isinstance(k, ExactAngle):
            if k.pi_part != 0:
                raise TypeError("division by an angle with a pi part")
            k = k.unit_part
        k = _frac(k)
        return ExactAngle(self.pi_part / k, self.unit_part / k)

    # -- predicates -------------------------------------------------------
    @property
    def is_pi_rational(self) -> bool:
        """True when the angle is a rational multiple of pi."""
        return self.unit_part == 0

    def is_multiple_of(self, step: Fraction) -> bool:
        """True iff the angle equals ``k * step * pi`` for an integer ``k``."""
        step = _frac(step)
        if self.unit_part != 0:
            return False
        return (self.pi_part / step).denominator == 1

    def is_zero(self) -> bool:
        return self.pi_part == 0 and self.unit_part == 0

    # -- numerics ---------------------------------------------------------
    def mpf(self, prec: int = WORKPREC):
        with mpmath.workprec(prec):
            return mpmath.mpf(self.pi_part.numerator) / self.pi_part.denominator * mpmath.pi + (
                mpmath.mpf(self.unit_part.numerator) / self.unit_part.denominator
            )

    def __float__(self):
        return float(self.mpf())

    def reduced(self) -> "ExactAngle":
        """Same angle with the pi coefficient reduced into [0, 2)."""
        p = self.pi_part
        return ExactAngle(p - 2 * math.floor(p / 2), self.unit_part)

    def cos(self, prec: int = WORKPREC) -> float:
        with mpmath.workprec(prec):
            return float(mpmath.cos(self.reduced().mpf(prec)))

    def sin(self, prec: int = WORKPREC) -> float:
        with mpmath.workprec(prec):
            return float(mpmath.sin(self.reduced().mpf(prec)))

    def mod_pi_into(self, lo_open: bool = True) -> "ExactAngle":
        """Shift by an integer multiple of pi into [0, pi) (or (0, pi) if not exact)."""
        with mpmath.workprec(WORKPREC):
            i = int(mpmath.floor(self.mpf() / mpmath.pi))
        out = self - ExactAngle.pi(i)
        # floor may be off by one for values a hair away from a multiple of pi
        while float(out.mpf()) < 0:
            out = out + ExactAngle.pi(1)
        while out.compare(ExactAngle.pi(1)) >= 0:
            out = out - ExactAngle.pi(1)
        return out

    # -- comparison -------------------------------------------------------
    def compare(self, other) -> int:
        """Three-way comparison; exact for equal angles, high precision otherwise."""
        other = _coerce(other)
        if self == other:
            return 0
        diff = self - other
        if diff.unit_part == 0:
            return 1 if diff.pi_part > 0 else -1
        if diff.pi_part == 0:
            return 1 if diff.unit_part > 0 else -1
        with mpmath.workprec(4 * WORKPREC):
            return 1 if diff.mpf(4 * WORKPREC) > 0 else -1

    def __lt__(self, other):
        return self.compare(other) < 0

    def __le__(self, other):
        return self.compare(other) <= 0

    def __gt__(self, other):
        return self.compare(other) > 0

    def __ge__(self, other):
        return self.compare(other) >= 0

    def __str__(self):
        parts = []
        if self.unit_part != 0 or self.pi_part == 0:
            parts.append(str(self.unit_part))
        if self.pi_part != 0:
            coeff = self.pi_part
            sign = "-" if coeff < 0 else "+"
            coeff = abs(coeff)
            if coeff == 1:
                term = "pi"
            elif coeff.denominator == 1:
                term = f"{coeff.numerator}*pi"
            elif coeff.numerator == 1:
                term = f"pi/{coeff.denominator}"
            else:
                term = f"{coeff.numerator}*pi/{coeff.denominator}"
            if parts:
                parts.append(f"{sign}{term}")
            else:
                parts.append(term if sign == "+" else f"-{term}")
        return "".join(parts)

    def to_json(self):
        return {"pi": str(self.pi_part), "unit": str(self.unit_part), "value": float(self)}


def _coerce(value):
    if isinstance(value, ExactAngle):
        return value
    try:
        return ExactAngle(0, _frac(value))
    except TypeError:
        return NotImplemented


PI = ExactAngle.pi(1)
ZERO = ExactAngle()


_ALLOWED_BINOPS = (ast.Add, ast.Sub, ast.Mult, ast.Div)


def parse_phase(text: str) -> ExactAngle:
    """Parse phase expressions such as ``"(19-3*pi)/10"``, ``"pi/5"`` or ``"0.5"``.

    Numbers are read from their literal text, so decimals are exact
    (``0.2`` is 1/5).  Only ``+ - * /``, parentheses and the name ``pi`` are
    allowed, and the result must stay of the form ``a + b*pi``.
    """
    if not isinstance(text, str):
        return ExactAngle.of(text)
    source = text.strip()
    if not source:
        raise PhaseSyntaxError("empty phase expression")
    try:
        tree = ast.parse(source, mode="eval")
    except SyntaxError as exc:
        raise PhaseSyntaxError(f"cannot parse phase {text!r}") from exc

    def walk(node):
        if isinstance(node, ast.Expression):
            return walk(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)) and not isinstance(node.value, bool):
            literal = ast.get_source_segment(source, node)
            try:
                value = Fraction(literal)
            except (ValueError, TypeError) as exc:
                raise PhaseSyntaxError(f"bad number {literal!r}") from exc
            return ExactAngle(0, value)
        if isinstance(node, ast.Name) and node.id in ("pi", "PI"):
            return PI
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            val = walk(node.operand)
            return -val if isinstance(node.op, ast.USub) else val
        if isinstance(node, ast.BinOp) and isinstance(node.op, _ALLOWED_BINOPS):
            left, right = walk(node.left), walk(node.right)
            try:
                if isinstance(node.op, ast.Add):
                    return left + right
                if isinstance(node.op, ast.Sub):
                    return left - right
                if isinstance(node.op, ast.Mult):
                    return left * right
                if right.is_zero():
                    raise PhaseSyntaxError("division by zero")
                return left / right
            except TypeError as exc:
                raise PhaseSyntaxError(f"{text!r} is not of the form a + b*pi") from exc
        raise PhaseSyntaxError(f"unsupported syntax in phase {text!r}")

    return walk(tree)
