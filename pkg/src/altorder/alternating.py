"""Structure specific to the alternating group ordered by 3-cycles.

Covers the classification of ``x -> x a`` for a 3-cycle ``a`` by cycle
combinatorics, the product decomposition of principal intervals into
odd-cycle factors and an even part, and the rank generating function
``F_N(q) = sum over A_N of q^ocyc(x)`` together with its closed-form
exponential generating series.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod

from .errors import DegreeMismatch, IntervalTooLarge
from .perm import (
    ORACLE_CAP,
    CycleGenerator,
    Permutation,
    compose,
    compose_all,
    enumerate_alternating,
)
from .poset import DEFAULT_MAX_ELEMENTS, interval, three_cycle_context
from .polynomial import ExactPolynomial, binomial_poly

UP, DOWN, LEVEL = "up", "down", "level"


@dataclass(frozen=True)
class CoverCase:
    direction: str
    case_tag: str
    r_values: tuple = ()


def ell3(x: Permutation) -> int:
    return (x.n - x.ocyc()) // 2


def _r(x: Permutation, t: int, t2: int) -> int:
    """Smallest r >= 1 with x^r(t) == t2 (t, t2 distinct, same cycle)."""
    r, v = 1, x(t)
    while v != t2:
        v = x(v)
        r += 1
    return r


def classify_multiplication(x: Permutation, a: CycleGenerator) -> CoverCase:
    """Decide whether ``x a`` goes up, down or stays level in length.

    The answer is read off the cycles of ``x`` meeting ``a``; it is checked
    against the direct length computation before returning.
    """
    if a.n != x.n:
        raise DegreeMismatch(f"degrees {x.n} and {a.n} differ")
    i, j, k = a.entries
    cycle_of = {}
    for c in x.all_cycles():
        for v in c:
            cycle_of[v] = c
    zi, zj, zk = cycle_of[i], cycle_of[j], cycle_of[k]
    odd = lambda c: len(c) % 2 == 1
    distinct = len({zi, zj, zk})

    if distinct == 3:
        tag = "disjoint-cycles"
        direction = UP if sum(map(odd, (zi, zj, zk))) >= 2 else LEVEL
        r_values = ()
    elif distinct == 2:
        # rotate (i j k) so that the first two entries share a cycle
        if zi == zj:
            p, q, s = i, j, k
        elif zj == zk:
            p, q, s = j, k, i
        else:
            p, q, s = k, i, j
        zpq, zs = cycle_of[p], cycle_of[s]
        r = _r(x, p, q)
        r_values = (r,)
        if r % 2 == 1 and odd(zpq) and odd(zs):
            direction = UP
        elif r % 2 == 1 and not odd(zpq) and not odd(zs):
            direction = DOWN
        else:
            direction = LEVEL
        tag = "two-cycles:" + ("odd-odd" if odd(zpq) and odd(zs) else
                               "even-even" if not odd(zpq) and not odd(zs) else "mixed")
    else:
        rs = (_r(x, i, k), _r(x, k, j), _r(x, j, i))
        r_values = rs
        # i, k, j in this cyclic order iff walking from i meets k before j
        ikj = _r(x, i, k) < _r(x, i, j)
        direction = DOWN if ikj and sum(r % 2 for r in rs) >= 2 else LEVEL
        tag = "one-cycle:" + ("i-k-j" if ikj else "i-j-k")

    diff = ell3(compose(x, a.perm)) - ell3(x)
    expected = {UP: 1, DOWN: -1, LEVEL: 0}[direction]
    if diff != expected:
        raise AssertionError(f"cover rule disagrees with length for x={x}, a={a}: {direction} vs {diff}")
    return CoverCase(direction, tag, r_values)


@dataclass
class Decomposition:
    odd_factors: list
    even_part: Permutation
    sizes: list
    even_size: int
    interval_size: int | None
    bijective: bool | None


def decompose_interval(x: Permutation, max_elements: int = DEFAULT_MAX_ELEMENTS, build: bool = True) -> Decomposition:
    """Split ``[e, x]`` into odd-cycle factors and the even part.

    With ``build`` set, every factor interval and ``[e, x]`` itself are
    built and the product map is checked to be a rank-preserving bijection.
    """
    if not x.is_even():
        raise ValueError(f"{x} is not even")
    n = x.n
    odd_factors = [Permutation.from_cycles([c], n) for c in x.cycles() if len(c) % 2 == 1]
    even_part = Permutation.from_cycles([c for c in x.cycles() if len(c) % 2 == 0], n)
    if not build:
        return Decomposition(odd_factors, even_part, [], 0, None, None)
    ctx = three_cycle_context(n)
    e = Permutation.identity(n)
    factors = [interval(ctx, e, f, max_elements) for f in odd_factors]
    even_iv = interval(ctx, e, even_part, max_elements)
    whole = interval(ctx, e, x, max_elements)
    sizes = [len(f) for f in factors]
    expected = prod(sizes) * len(even_iv)
    if expected > max_elements:
        raise IntervalTooLarge(f"product size {expected} exceeds {max_elements}")

    images = {}
    bijective = len(whole) == expected
    # product map (x_1, ..., x_k, y) -> x_1 ... x_k y must hit every element once
    combos = [[(el, f.ranks[i]) for i, el in enumerate(f.elements)] for f in factors]
    combos.append([(el, even_iv.ranks[i]) for i, el in enumerate(even_iv.elements)])
    stack = [(Permutation.identity(n), 0, 0)]
    while stack and bijective:
        acc, depth, rank = stack.pop()
        if depth == len(combos):
            if acc.key in images or acc not in whole or whole.ranks[whole.index(acc)] != rank:
                bijective = False
            images[acc.key] = rank
            continue
        for el, r in combos[depth]:
            stack.append((compose(acc, el), depth + 1, rank + r))
    bijective = bijective and len(images) == len(whole)
    return Decomposition(odd_factors, even_part, sizes, len(even_iv), len(whole), bijective)


def rank_generating_polynomial(n: int, cap: int = ORACLE_CAP) -> tuple:
    """``(F_n(q), sum over A_n of q^ell3(x))`` by enumeration of A_n."""
    by_ocyc = [0] * (n + 1)
    by_len = [0] * (n // 2 + 1)
    for x in enumerate_alternating(n, cap):
        o = x.ocyc()
        by_ocyc[o] += 1
        by_len[(n - o) // 2] += 1
    return ExactPolynomial(by_ocyc), ExactPolynomial(by_len)


def ocyc_to_length(f: ExactPolynomial, n: int) -> ExactPolynomial:
    """Substitute ``q^N F_N(q^(-1/2))`` rewritten with integer exponents."""
    out = [0] * (n // 2 + 1)
    for o, c in enumerate(f.coeffs):
        if c:
            out[(n - o) // 2] += c
    return ExactPolynomial(out)


@dataclass
class SeriesFtq:
    """Truncated series in t with coefficients polynomial in q."""

    order: int
    coefficients: list

    def egf_coefficient(self, n: int) -> ExactPolynomial:
        """Coefficient of ``t^n / n!``."""
        return self.coefficients[n] * factorial(n)

    def specialize(self, q) -> list:
        return [c(q) for c in self.coefficients]


def _power_series(alpha: ExactPolynomial, sign: int, order: int) -> list:
    """Coefficients of ``(1 + sign t)^alpha`` up to ``t^order``."""
    return [binomial_poly(alpha, j) * (sign ** j) for j in range(order + 1)]


def _mul_series(a: list, b: list, order: int) -> list:
    out = [ExactPolynomial() for _ in range(order + 1)]
    for i in range(order + 1):
        for j in range(order + 1 - i):
            out[i + j] = out[i + j] + a[i] * b[j]
    return out


def series_closed_form(order: int = 12) -> SeriesFtq:
    """Expand the closed form of ``F(t, q) = sum F_N(q) t^N / N!``.

    F = ((1+t)^((q-1)/2) (1-t)^(-(q+1)/2) + (1+t)^((q+1)/2) (1-t)^(-(q-1)/2)) / 2
    """
    q = ExactPolynomial([0, 1])
    half = Fraction(1, 2)
    a1 = _power_series((q - 1) * half, 1, order)
    b1 = _power_series(-(q + 1) * half, -1, order)
    a2 = _power_series((q + 1) * half, 1, order)
    b2 = _power_series(-(q - 1) * half, -1, order)
    first = _mul_series(a1, b1, order)
    second = _mul_series(a2, b2, order)
    coeffs = [(first[i] + second[i]) * half for i in range(order + 1)]
    return SeriesFtq(order, coeffs)
