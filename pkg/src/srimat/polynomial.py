"""Exact integer polynomials in one variable ``t``.

Coefficients are restricted to the signed 64-bit range. Python integers never
wrap, so every arithmetic result is range-checked and an out-of-range value
raises :class:`OverflowError` instead of being silently promoted.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

INT64_MIN = -(1 << 63)
INT64_MAX = (1 << 63) - 1


def checked(value: int) -> int:
    if not INT64_MIN <= value <= INT64_MAX:
        raise OverflowError(f"{value} does not fit in a signed 64-bit integer")
    return value


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = [checked(int(c)) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial with ``coeffs[d]`` the coefficient of ``t**d``.

    Trailing zeros are stripped on construction, so equal polynomials compare
    equal and the zero polynomial has an empty coefficient tuple.

    >>> IntPolynomial([1, 2, 1, 0, 0])
    IntPolynomial(coeffs=(1, 2, 1))
    >>> str(IntPolynomial([1, -2, 1]))
    '1 - 2t + t^2'
    """

    coeffs: tuple[int, ...] = ()

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _trim(coeffs))

    @classmethod
    def constant(cls, c: int) -> IntPolynomial:
        return cls([c])

    @classmethod
    def monomial(cls, degree: int, c: int = 1) -> IntPolynomial:
        if degree < 0:
            raise ValueError("degree must be non-negative")
        return cls([0] * degree + [c])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, d: int) -> int:
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else 0

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        size = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(
            checked(self.coefficient(d) + other.coefficient(d)) for d in range(size)
        )

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: IntPolynomial | int) -> IntPolynomial:
        if isinstance(other, int):
            return IntPolynomial(checked(c * other) for c in self.coeffs)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = checked(out[i + j] + checked(a * b))
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> IntPolynomial:
        if e < 0:
            raise ValueError("exponent must be non-negative")
        result = IntPolynomial([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __call__(self, t: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = checked(checked(acc * t) + c)
        return acc

    def to_list(self) -> list[int]:
        return list(self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for d, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if d == 0:
                body = str(mag)
            else:
                var = "t" if d == 1 else f"t^{d}"
                body = var if mag == 1 else f"{mag}{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)


def poly_add(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    return a + b


def poly_multiply(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    return a * b


def poly_binomial_power(c: int, sign: int, e: int) -> IntPolynomial:
    """Return ``c * (1 + sign*t)**e`` with coefficients from Pascal's rule.

    >>> poly_binomial_power(2, 1, 3).to_list()
    [2, 6, 6, 2]
    >>> poly_binomial_power(1, -1, 2).to_list()
    [1, -2, 1]
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if e < 0:
        raise ValueError("exponent must be non-negative")
    row = [1]
    for _ in range(e):
        row = [1] + [checked(row[i] + row[i + 1]) for i in range(len(row) - 1)] + [1]
    return IntPolynomial(checked(c * b * sign**d) for d, b in enumerate(row))
