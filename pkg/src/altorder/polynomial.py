"""Exact univariate polynomials over the rationals."""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

from .errors import InterpolationInconsistent


def _frac(v) -> Fraction:
    return v if isinstance(v, Fraction) else Fraction(v)


class ExactPolynomial:
    """Polynomial with ``Fraction`` coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [_frac(v) for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> "ExactPolynomial":
        return cls([0] * degree + [coeff])

    @classmethod
    def constant(cls, c) -> "ExactPolynomial":
        return cls([c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def _lift(self, other) -> "ExactPolynomial":
        return other if isinstance(other, ExactPolynomial) else ExactPolynomial([other])

    def __add__(self, other):
        other = self._lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return ExactPolynomial([self.coeff(i) + other.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return ExactPolynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        if not self.coeffs or not other.coeffs:
            return ExactPolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return ExactPolynomial(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, ExactPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == ExactPolynomial([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"ExactPolynomial({[str(c) for c in self.coeffs]})"

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def int_coeffs(self) -> list:
        if not self.is_integral():
            raise ValueError(f"non-integer coefficients in {self!r}")
        return [int(c) for c in self.coeffs]

    def to_str(self, var: str = "q") -> str:
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            if mono and c == 1:
                terms.append(mono)
            elif mono:
                terms.append(f"{c}*{mono}")
            else:
                terms.append(str(c))
        return " + ".join(terms) if terms else "0"


def format_coeffs(coeffs: Sequence) -> str:
    """Semicolon-separated coefficient list, rationals as ``p/q``."""
    return ";".join(str(_frac(c)) for c in coeffs) if coeffs else "0"


def lagrange_interpolate(points: Sequence[tuple]) -> ExactPolynomial:
    """Unique polynomial of degree < len(points) through ``(x, y)`` pairs."""
    result = ExactPolynomial()
    xs = [_frac(x) for x, _ in points]
    for i, (_, yi) in enumerate(points):
        if yi == 0:
            continue
        basis = ExactPolynomial([1])
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            basis = basis * ExactPolynomial([-xj, 1])
            denom *= xs[i] - xj
        result = result + basis * (_frac(yi) / denom)
    return result


def interpolate_checked(sample, degree: int, extra: int = 2, start: int = 1) -> ExactPolynomial:
    """Interpolate ``sample`` at ``start .. start+degree+1`` and confirm it.

    ``sample(m)`` must return an integer.  The polynomial must have degree at
    most ``degree`` and agree with ``sample`` at ``extra`` further nodes.
    """
    nodes = list(range(start, start + degree + 2))
    poly = lagrange_interpolate([(m, sample(m)) for m in nodes])
    if poly.degree > degree:
        raise InterpolationInconsistent(f"interpolant degree {poly.degree} exceeds {degree}")
    for m in range(nodes[-1] + 1, nodes[-1] + 1 + extra):
        value = poly(m)
        if value.denominator != 1 or value != sample(m):
            raise InterpolationInconsistent(f"check at m={m} failed: {value} vs {sample(m)}")
    return poly


def gen_binomial(x, k: int) -> Fraction:
    """Generalized binomial ``x (x-1) ... (x-k+1) / k!`` for rational ``x``."""
    if k < 0:
        return Fraction(0)
    num = Fraction(1)
    x = _frac(x)
    for i in range(k):
        num *= x - i
    return num / factorial(k)


def binomial_poly(alpha: ExactPolynomial, k: int) -> ExactPolynomial:
    """Generalized binomial ``C(alpha, k)`` with ``alpha`` a polynomial."""
    out = ExactPolynomial([1])
    for i in range(k):
        out = out * (alpha - i)
    return out * Fraction(1, factorial(k))
