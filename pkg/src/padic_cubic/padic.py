"""Exact p-adic rationals: valuation, unit decomposition, canonical digits.

A number is stored as an exact :class:`fractions.Fraction` together with its
prime, so every predicate downstream (norm comparisons, discriminant
vanishing, residue tests) is decided exactly.  Digit expansions are produced
on demand for the unit part only; the valuation is carried separately.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Union

from .errors import (
    DivisionByZero,
    PrimeError,
    ZeroArgument,
    ZeroDenominator,
)

#: Valuation reported for the zero element.
INFINITE_VALUATION = math.inf


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality check (desk-scale inputs)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    f = 5
    while f * f <= n:
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6
    return True


def int_valuation(n: int, p: int) -> int:
    """Exponent of p in a nonzero integer n."""
    if n == 0:
        raise ZeroArgument("valuation of integer zero is undefined")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


@dataclass(frozen=True)
class Prime:
    """A prime modulus p > 3 (smaller primes are outside the theory)."""

    p: int

    def __post_init__(self) -> None:
        if not isinstance(self.p, int) or self.p <= 3 or not is_prime(self.p):
            raise PrimeError(f"modulus must be a prime greater than 3, got {self.p!r}")

    def __int__(self) -> int:
        return self.p

    def __str__(self) -> str:
        return str(self.p)


@dataclass(frozen=True)
class DigitExpansion:
    """Truncated canonical expansion p^valuation * (d0 + d1*p + ...).

    The digits describe the unit part, so d0 is never zero; the expansion
    determines the number modulo p^(valuation + precision).
    """

    prime: Prime
    valuation: int
    digits: tuple[int, ...]

    def __post_init__(self) -> None:
        p = self.prime.p
        if not self.digits:
            raise ValueError("digit expansion needs at least one digit")
        if any(d < 0 or d >= p for d in self.digits):
            raise ValueError(f"digits must lie in 0..{p - 1}")
        if self.digits[0] == 0:
            raise ValueError("leading digit of a unit part cannot be 0")

    @property
    def precision(self) -> int:
        return len(self.digits)

    def unit_residue(self) -> int:
        """The integer d0 + d1*p + ... + d_{n-1}*p^{n-1}."""
        p = self.prime.p
        total = 0
        for d in reversed(self.digits):
            total = total * p + d
        return total

    def approximation(self) -> Fraction:
        """Exact rational p^valuation * unit_residue()."""
        return Fraction(self.prime.p) ** self.valuation * self.unit_residue()

    def unit_string(self) -> str:
        """Render the unit part as 'd0 + d1*p + ... + O(p^n)' with a middle dot."""
        p = self.prime.p
        parts = [str(self.digits[0])]
        for i, d in enumerate(self.digits[1:], start=1):
            parts.append(f"{d}·{p}" if i == 1 else f"{d}·{p}^{i}")
        parts.append(f"O({p}^{self.precision})")
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.unit_string()


@dataclass(frozen=True)
class PadicRational:
    """Exact p-adic number carried as a reduced rational with cached valuation."""

    prime: Prime
    value: Fraction

    @classmethod
    def from_ratio(cls, num: int, den: int, prime: Prime) -> "PadicRational":
        if den == 0:
            raise ZeroDenominator("denominator must be nonzero")
        return cls(prime, Fraction(num, den))

    @classmethod
    def from_value(cls, value: Union[int, Fraction], prime: Prime) -> "PadicRational":
        return cls(prime, Fraction(value))

    # Fraction keeps num/den reduced with den > 0, which the valuation relies on.
    @cached_property
    def valuation(self) -> Union[int, float]:
        if self.value == 0:
            return INFINITE_VALUATION
        p = self.prime.p
        return int_valuation(self.value.numerator, p) - int_valuation(
            self.value.denominator, p
        )

    @property
    def is_zero(self) -> bool:
        return self.value == 0

    def norm_exponent(self) -> int:
        """log_p of the p-adic norm, i.e. -valuation.  Requires a nonzero number."""
        if self.is_zero:
            raise ZeroArgument("zero has no norm exponent")
        return -self.valuation

    def unit_part(self) -> "PadicRational":
        """The unique unit u with self = u * p^valuation."""
        if self.is_zero:
            raise ZeroArgument("zero has no unit part")
        return PadicRational(
            self.prime, self.value / Fraction(self.prime.p) ** self.valuation
        )

    def leading_digit(self) -> int:
        """First canonical digit of the unit part (in 1..p-1)."""
        u = self.unit_part().value
        p = self.prime.p
        return u.numerator * pow(u.denominator, -1, p) % p

    def residue(self, power: int) -> int:
        """The value mod p^power as an integer in [0, p^power).

        Only defined for numbers of nonnegative valuation (p-adic integers).
        """
        if self.is_zero:
            return 0
        if self.valuation < 0:
            raise ValueError("no residue at negative valuation")
        m = self.prime.p**power
        return self.value.numerator * pow(self.value.denominator, -1, m) % m

    def digits(self, n: int) -> DigitExpansion:
        """First n canonical digits of the unit part."""
        if self.is_zero:
            raise ZeroArgument("zero has no canonical digits")
        if n < 1:
            raise ValueError("need at least one digit")
        p = self.prime.p
        r = self.unit_part().residue(n)
        digs = []
        for _ in range(n):
            digs.append(r % p)
            r //= p
        return DigitExpansion(self.prime, int(self.valuation), tuple(digs))

    def times_power(self, k: int) -> "PadicRational":
        """self * p^k."""
        return PadicRational(self.prime, self.value * Fraction(self.prime.p) ** k)

    def inverse(self) -> "PadicRational":
        if self.is_zero:
            raise DivisionByZero("cannot invert zero")
        return PadicRational(self.prime, 1 / self.value)

    # -- field arithmetic (exact, valuation recomputed lazily) --

    def _coerce(self, other: object) -> Fraction:
        if isinstance(other, PadicRational):
            if other.prime != self.prime:
                raise ValueError("mixed primes in p-adic arithmetic")
            return other.value
        if isinstance(other, (int, Fraction)):
            return Fraction(other)
        return NotImplemented

    def __add__(self, other: object) -> "PadicRational":
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return PadicRational(self.prime, self.value + v)

    __radd__ = __add__

    def __sub__(self, other: object) -> "PadicRational":
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return PadicRational(self.prime, self.value - v)

    def __rsub__(self, other: object) -> "PadicRational":
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return PadicRational(self.prime, v - self.value)

    def __mul__(self, other: object) -> "PadicRational":
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return PadicRational(self.prime, self.value * v)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "PadicRational":
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        if v == 0:
            raise DivisionByZero("division by zero")
        return PadicRational(self.prime, self.value / v)

    def __neg__(self) -> "PadicRational":
        return PadicRational(self.prime, -self.value)

    def __repr__(self) -> str:
        return f"PadicRational({self.value}, p={self.prime.p})"


def make_padic(num: int, den: int, prime: Prime) -> PadicRational:
    """Build an exact p-adic rational num/den (den nonzero)."""
    return PadicRational.from_ratio(num, den, prime)
