"""Exact arithmetic in Z[sqrt 2].

The roots of t^2 - 2t - 1 are alpha = 1 + sqrt 2 and beta = 1 - sqrt 2, both
units of Z[sqrt 2].  Doing Binet's formulas in this ring (rather than in
floating point) turns them into a second exact implementation of the Pell
numbers, with the final division by alpha - beta = 2 sqrt 2 checked for
exactness.
"""

from __future__ import annotations

import math

from genpell.errors import IntegrityError

SQRT2 = math.sqrt(2.0)


class QuadInt:
    """``a + b*sqrt(2)`` with arbitrary-precision integer coefficients."""

    __slots__ = ("a", "b")

    def __init__(self, a: int = 0, b: int = 0) -> None:
        self.a = a
        self.b = b

    @staticmethod
    def _lift(x: QuadInt | int) -> QuadInt:
        if isinstance(x, QuadInt):
            return x
        if isinstance(x, int):
            return QuadInt(x, 0)
        return NotImplemented

    def __repr__(self) -> str:
        return f"QuadInt({self.a}, {self.b})"

    def __str__(self) -> str:
        sign = "-" if self.b < 0 else "+"
        return f"{self.a}{sign}{abs(self.b)}√2"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.b == 0 and self.a == other
        if isinstance(other, QuadInt):
            return self.a == other.a and self.b == other.b
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.a, self.b)) if self.b else hash(self.a)

    def __neg__(self) -> QuadInt:
        return QuadInt(-self.a, -self.b)

    def __add__(self, other: QuadInt | int) -> QuadInt:
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadInt(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other: QuadInt | int) -> QuadInt:
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadInt(self.a - o.a, self.b - o.b)

    def __rsub__(self, other: QuadInt | int) -> QuadInt:
        return -self + other

    def __mul__(self, other: QuadInt | int) -> QuadInt:
        if isinstance(other, int):
            return QuadInt(self.a * other, self.b * other)
        if isinstance(other, QuadInt):
            return QuadInt(
                self.a * other.a + 2 * self.b * other.b,
                self.a * other.b + self.b * other.a,
            )
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int) -> QuadInt:
        if n < 0:
            return self.inverse() ** -n
        result, base = QuadInt(1, 0), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self) -> QuadInt:
        return QuadInt(self.a, -self.b)

    def norm(self) -> int:
        """Field norm ``a^2 - 2 b^2`` (multiplicative; +-1 exactly on units)."""
        return self.a * self.a - 2 * self.b * self.b

    def inverse(self) -> QuadInt:
        nrm = self.norm()
        if nrm not in (1, -1):
            raise ZeroDivisionError(f"{self} is not a unit of Z[sqrt 2]")
        return self.conj() * nrm

    def exact_div(self, other: QuadInt | int) -> QuadInt:
        """Quotient in Z[sqrt 2]; raises :class:`IntegrityError` if inexact."""
        o = self._lift(other)
        nrm = o.norm()
        if nrm == 0:
            raise ZeroDivisionError("division by zero in Z[sqrt 2]")
        num = self * o.conj()
        qa, ra = divmod(num.a, nrm)
        qb, rb = divmod(num.b, nrm)
        if ra or rb:
            raise IntegrityError(f"{self} is not divisible by {o} in Z[sqrt 2]")
        return QuadInt(qa, qb)

    def as_int(self) -> int:
        if self.b:
            raise IntegrityError(f"{self} has a nonzero sqrt(2) component")
        return self.a

    def to_real(self) -> float:
        return to_real(self)


ALPHA = QuadInt(1, 1)
BETA = QuadInt(1, -1)
ROOT_GAP = ALPHA - BETA  # 2 sqrt 2


def quad_mul(x: QuadInt, y: QuadInt) -> QuadInt:
    return x * y


def quad_conj(x: QuadInt) -> QuadInt:
    return x.conj()


def alpha_pow(n: int) -> QuadInt:
    """``alpha ** n`` for any signed n (alpha^-1 = -beta)."""
    return ALPHA**n


def beta_pow(n: int) -> QuadInt:
    return alpha_pow(n).conj()


def binet_pell(n: int) -> int:
    diff = alpha_pow(n) - beta_pow(n)
    # diff = 0 + 2c sqrt 2; anything else means the ring arithmetic is broken
    if diff.a != 0 or diff.b % 2:
        raise IntegrityError(f"alpha^{n} - beta^{n} = {diff} is not of the form 2c*sqrt(2)")
    return diff.exact_div(ROOT_GAP).as_int()


def binet_pell_lucas(n: int) -> int:
    return (alpha_pow(n) + beta_pow(n)).as_int()


def to_real(x: QuadInt) -> float:
    """``a + b*sqrt(2)`` in double precision (inexact; cancellation is not compensated)."""
    try:
        value = float(x.a) + float(x.b) * SQRT2
    except OverflowError as exc:
        raise OverflowError(f"{x} does not fit in a double") from exc
    if not math.isfinite(value):
        raise OverflowError(f"{x} does not fit in a double")
    return value
