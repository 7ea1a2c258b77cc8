"""Noncrossing partitions with odd blocks and odd gaps, and their counts.

An element of NC_N is a permutation below the long cycle ``c = (1 ... N)``
for the transposition order; its cycles are increasing and pairwise
noncrossing.  ONC_N keeps those whose cycles all have odd length with odd
differences between consecutive entries (the OD condition).  For odd N this
set is exactly the 3-cycle interval ``[e, c]``.

The module also carries the closed-form enumeration of that interval, the
numerology of ``[e, x_{p,q}]`` for two even cycles, and the k-cycle
generalization.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .errors import (
    DegreeAboveCap,
    NotNiceElement,
    ParameterOutOfRange,
    RankJumpMismatch,
    SupportOutsideTarget,
    ZeroDenominator,
)
from .perm import (
    TRANSPOSITIONS,
    CycleGenerator,
    Permutation,
    compose,
    inverse,
    long_cycle,
)
from .poset import (
    DEFAULT_MAX_ELEMENTS,
    GeneratorContext,
    IntervalPoset,
    bfs_lengths,
    interval,
    is_below,
    is_nice,
    moebius,
    three_cycle_context,
)
from .polynomial import ExactPolynomial, gen_binomial

ONC_CAP = 15


# ---------------------------------------------------------------------------
# membership


@dataclass
class OncWitness:
    is_nc: bool
    od_ok: bool
    p_ok: bool
    violating_cycle: tuple | None = None
    violating_index: int | None = None

    @property
    def member(self) -> bool:
        return self.is_nc and self.od_ok


def is_noncrossing(x: Permutation) -> bool:
    """``x <= (1 ... N)`` in the transposition order."""
    n = x.n
    if n == 0:
        return True
    ctx = GeneratorContext(n, TRANSPOSITIONS)
    return is_below(ctx, x, long_cycle(n))


def is_noncrossing_geometric(x: Permutation) -> bool:
    """Independent test: increasing cycles whose blocks do not cross."""
    blocks = x.all_cycles()
    for c in blocks:
        s = sorted(c)
        # cycle must read s_1 -> s_2 -> ... -> s_q -> s_1
        if any(x(s[i]) != s[(i + 1) % len(s)] for i in range(len(s))):
            return False
    owner = {}
    for bi, c in enumerate(blocks):
        for v in c:
            owner[v] = bi
    n = x.n
    for a, b in itertools.combinations(range(1, n + 1), 2):
        if owner[a] == owner[b]:
            continue
        for c_ in range(b + 1, n + 1):
            if owner[c_] != owner[a]:
                continue
            for d in range(c_ + 1, n + 1):
                if owner[d] == owner[b]:
                    return False
    return True


def _od_cycle(c: tuple) -> bool:
    s = sorted(c)
    return len(s) % 2 == 1 and all((s[j + 1] - s[j]) % 2 == 1 for j in range(len(s) - 1))


def onc_membership(x: Permutation) -> OncWitness:
    """All three flags for ``x``; membership is ``is_nc and od_ok``."""
    is_nc = is_noncrossing(x)
    bad_cycle = next((c for c in x.all_cycles() if not _od_cycle(c)), None)
    bad_index = next(
        (j for j in range(1, x.n + 1) if (j < x(j)) != ((x(j) - j) % 2 == 1)), None
    )
    return OncWitness(
        is_nc=is_nc,
        od_ok=bad_cycle is None,
        p_ok=bad_index is None,
        violating_cycle=bad_cycle,
        violating_index=bad_index,
    )


# ---------------------------------------------------------------------------
# enumeration


@lru_cache(maxsize=None)
def _nc_blocks(length: int, od: bool) -> tuple:
    """Noncrossing partitions of ``0 .. length-1`` as tuples of sorted blocks.

    The block of the first point is chosen first; every gap it leaves is an
    independent smaller problem.  With ``od`` set, blocks have odd size and
    odd steps, which forces every inner gap to have even length.
    """
    if length == 0:
        return ((),)
    out = []
    for rest in itertools.chain.from_iterable(
        itertools.combinations(range(1, length), r) for r in range(length)
    ):
        block = (0,) + rest
        if od and not _od_cycle(block):
            continue
        pieces = [(block[j] + 1, block[j + 1]) for j in range(len(block) - 1)]
        if od and any((hi - lo) % 2 for lo, hi in pieces):
            continue
        pieces.append((block[-1] + 1, length))
        choices = [[tuple(tuple(v + lo for v in b) for b in part) for part in _nc_blocks(hi - lo, od)]
                   for lo, hi in pieces]
        for combo in itertools.product(*choices):
            out.append((block,) + tuple(b for part in combo for b in part))
    return tuple(out)


def _blocks_to_perm(blocks, n: int) -> Permutation:
    return Permutation.from_cycles([[v + 1 for v in b] for b in blocks if len(b) > 1], n)


def enumerate_nc(n: int, cap: int = ONC_CAP) -> list:
    """All of NC_n."""
    if n > cap:
        raise DegreeAboveCap(f"NC_{n} enumeration refused above {cap}")
    return [_blocks_to_perm(b, n) for b in _nc_blocks(n, False)]


def enumerate_onc(n: int, cap: int = ONC_CAP) -> list:
    """ONC_n, sorted by (length, cycles).

    Odd degree walks down the 3-cycle covers from the long cycle.  Even
    degree uses the OD-pruned noncrossing generator.
    """
    if n > cap:
        raise DegreeAboveCap(f"ONC_{n} enumeration refused above {cap}")
    if n % 2 == 1:
        return list(interval(three_cycle_context(n), Permutation.identity(n), long_cycle(n)).elements)
    out = [_blocks_to_perm(b, n) for b in _nc_blocks(n, True)]
    return sorted(out, key=lambda x: ((n - x.ocyc()) // 2, x.sort_key()))


def onc_poset(n: int) -> IntervalPoset:
    """``[e, (1 ... 2n+1)]`` in the 3-cycle order."""
    if n < 1:
        raise ParameterOutOfRange("n must be at least 1")
    N = 2 * n + 1
    if N > ONC_CAP:
        raise DegreeAboveCap(f"degree {N} above cap {ONC_CAP}")
    return interval(three_cycle_context(N), Permutation.identity(N), long_cycle(N))


# ---------------------------------------------------------------------------
# closed forms


def _as_int(v: Fraction) -> int:
    if v.denominator != 1:
        raise ArithmeticError(f"closed form produced non-integer {v}")
    return int(v)


def zeta_closed_form(n: int) -> ExactPolynomial:
    """``Z(q) = q/(q(2n+1)-n) C(q(2n+1)-n, n)`` as a polynomial in q."""
    if n < 1:
        raise ParameterOutOfRange("n must be at least 1")
    q = ExactPolynomial([0, 1])
    X = q * (2 * n + 1) - n
    out = q * Fraction(1, factorial(n))
    # C(X, n) / X = (X-1)(X-2)...(X-n+1) / n!
    for i in range(1, n):
        out = out * (X - i)
    return out


def rank_number_closed_form(n: int, k: int) -> int:
    if not 0 <= k <= n:
        raise ParameterOutOfRange(f"rank {k} outside [0, {n}]")
    N = 2 * n + 1
    v = Fraction(N, (N - k) * (N - (n - k))) * comb(N - k, k) * comb(n + 1 + k, n - k)
    return _as_int(v)


CLOSED_KINDS = ("cardinality_odd", "cardinality_even", "rank", "max_chains", "moebius", "interval_count", "zeta")


def closed_counts(n: int, kind: str, k: int | None = None, q=None):
    """Closed-form enumeration of ONC posets.

    ``rank`` needs ``k``; ``zeta`` returns the polynomial, or its value when
    ``q`` is given.  ``moebius`` returns the signed Moebius number.
    """
    if n < 1:
        raise ParameterOutOfRange("n must be at least 1")
    if kind == "cardinality_odd":
        return comb(3 * n + 1, n) // (n + 1)
    if kind == "cardinality_even":
        return comb(3 * n, n) // (2 * n + 1)
    if kind == "rank":
        if k is None:
            raise ParameterOutOfRange("rank needs k")
        return rank_number_closed_form(n, k)
    if kind == "max_chains":
        return (2 * n + 1) ** (n - 1)
    if kind == "moebius":
        return (-1) ** n * (comb(4 * n + 1, n) // (4 * n + 1))
    if kind == "interval_count":
        return _as_int(Fraction(3, 5 * n + 3) * comb(5 * n + 3, n))
    if kind == "zeta":
        z = zeta_closed_form(n)
        return z if q is None else _as_int(z(q))
    raise ParameterOutOfRange(f"unknown kind {kind!r}")


def rank_jump_count(n: int, r) -> int:
    """Multichains of ``[e, (1 ... 2n+1)]`` with rank jump vector ``r``."""
    r = tuple(int(v) for v in r)
    if not r or any(v < 0 for v in r) or sum(r) != n:
        raise RankJumpMismatch(f"rank jumps {r} do not sum to {n}")
    N = 2 * n + 1
    v = Fraction(N) ** (len(r) - 1)
    for ri in r:
        v *= Fraction(comb(N - ri, ri), N - ri)
    return _as_int(v)


def rank_jump_brute(iv: IntervalPoset, r) -> int:
    """Direct count of multichains of ``iv`` with rank jump vector ``r``."""
    r = tuple(r)
    if sum(r) != iv.rank:
        raise RankJumpMismatch(f"rank jumps {r} do not sum to {iv.rank}")
    poset = iv.poset
    up = [[] for _ in range(len(iv))]
    for j in range(len(iv)):
        for i in poset.strictly_below(j):
            up[i].append(j)
    bottom, top = iv.index(iv.bottom), iv.index(iv.top)

    @lru_cache(maxsize=None)
    def count(i: int, step: int) -> int:
        if step == len(r):
            return 1 if i == top else 0
        want = iv.ranks[i] + r[step]
        total = count(i, step + 1) if r[step] == 0 else 0
        for j in up[i]:
            if iv.ranks[j] == want:
                total += count(j, step + 1)
        return total

    return count(bottom, 0)


def compositions(n: int, parts: int):
    """Weak compositions of ``n`` into ``parts`` nonnegative parts."""
    if parts == 0:
        if n == 0:
            yield ()
        return
    for bars in itertools.combinations(range(n + parts - 1), parts - 1):
        prev = -1
        out = []
        for b in bars:
            out.append(b - prev - 1)
            prev = b
        out.append(n + parts - 2 - prev)
        yield tuple(out)


def _rh_term(a, b, k) -> Fraction:
    den = a + b * k
    if den == 0:
        raise ZeroDenominator(f"a + b n = 0 for a={a}, b={b}, n={k}")
    return Fraction(a, den) * gen_binomial(den, k)


def rothe_hagen(a_vec, b: int, n: int) -> tuple:
    """Both sides of the multi-parameter Rothe-Hagen identity."""
    a_vec = tuple(int(v) for v in a_vec)
    if not a_vec or n < 0:
        raise ParameterOutOfRange("need at least one a_i and n >= 0")
    lhs = Fraction(0)
    for ns in compositions(n, len(a_vec)):
        term = Fraction(1)
        for ai, ni in zip(a_vec, ns):
            term *= _rh_term(ai, b, ni)
        lhs += term
    rhs = _rh_term(sum(a_vec), b, n)
    return lhs, rhs


# ---------------------------------------------------------------------------
# two even cycles


@dataclass(frozen=True)
class TwoEvenCycleTarget:
    """``x_{p,q} = (a_1 ... a_2p)(b_1 ... b_2q)``.

    Labels default to ``a_i = i`` and ``b_j = 2p + j``.  Both orders of p and
    q are accepted so the table layout with ``p <= q`` can be reproduced.
    """

    p: int
    q: int
    a_labels: tuple = ()
    b_labels: tuple = ()
    degree: int = 0

    def __post_init__(self):
        if self.p < 1 or self.q < 1:
            raise ParameterOutOfRange("p and q must be positive")
        a = tuple(self.a_labels) or tuple(range(1, 2 * self.p + 1))
        b = tuple(self.b_labels) or tuple(range(2 * self.p + 1, 2 * self.p + 2 * self.q + 1))
        if len(a) != 2 * self.p or len(b) != 2 * self.q or set(a) & set(b):
            raise ParameterOutOfRange("labels must be disjoint of sizes 2p and 2q")
        n = self.degree or max(a + b)
        object.__setattr__(self, "a_labels", a)
        object.__setattr__(self, "b_labels", b)
        object.__setattr__(self, "degree", n)

    @property
    def perm(self) -> Permutation:
        return Permutation.from_cycles([self.a_labels, self.b_labels], self.degree)

    def spec(self) -> str:
        return f"a={list(self.a_labels)} b={list(self.b_labels)}"


PURE_A, PURE_B, MIXED = "pure_a", "pure_b", "mixed"
ODD, EVEN = "odd", "even"


@dataclass(frozen=True)
class GeneratorClass:
    kind: str
    parity: str | None = None
    specification: str = ""


def classify_generator(target: TwoEvenCycleTarget, a: CycleGenerator) -> GeneratorClass:
    """Pure or mixed; mixed generators get a parity relative to ``target``."""
    A, B = target.a_labels, target.b_labels
    ent = a.entries
    if not all(v in A or v in B for v in ent):
        raise SupportOutsideTarget(f"{a} is not supported on {target.spec()}")
    if all(v in A for v in ent):
        return GeneratorClass(PURE_A, None, target.spec())
    if all(v in B for v in ent):
        return GeneratorClass(PURE_B, None, target.spec())
    # rotate so the first entry is an a-label and the last a b-label
    for s in range(len(ent)):
        rot = ent[s:] + ent[:s]
        if rot[0] in A and rot[-1] in B:
            break
    i = A.index(rot[0]) + 1
    k = B.index(rot[-1]) + 1
    return GeneratorClass(MIXED, ODD if (k - i) % 2 else EVEN, target.spec())


def max_chains_two_even(p: int, q: int) -> int:
    v = Fraction(2 * factorial(p + q - 1) * (2 * p) ** p * (2 * q) ** q,
                 factorial(p - 1) * factorial(q - 1))
    return _as_int(v)


def pure_count_two_even(p: int, q: int) -> int:
    return comb(3 * p - 1, p - 1) * comb(3 * q - 1, q - 1)


@dataclass
class XpqNumerology:
    p: int
    q: int
    m: int
    t: int
    mu: int
    r: list
    max_chains: int
    pure_even: int
    pure_odd: int
    max_chains_formula: int = 0
    pure_formula: int = 0
    kreweras_swaps_purity: bool = False
    extras: dict = field(default_factory=dict)


def xpq_numerology(p: int, q: int, max_elements: int = DEFAULT_MAX_ELEMENTS) -> XpqNumerology:
    target = TwoEvenCycleTarget(p, q)
    x = target.perm
    n = target.degree
    iv = interval(three_cycle_context(n), Permutation.identity(n), x, max_elements)
    A = set(target.a_labels)
    B = set(target.b_labels)
    kinds = {}
    for y in iv.elements:
        pure = all(set(c) <= A or set(c) <= B for c in y.cycles())
        if not pure:
            kinds[y.key] = MIXED
        elif any(len(c) % 2 == 0 for c in y.cycles()):
            kinds[y.key] = EVEN
        else:
            kinds[y.key] = ODD
    counts = {MIXED: 0, EVEN: 0, ODD: 0}
    for v in kinds.values():
        counts[v] += 1
    # the Kreweras map y -> y^-1 x should exchange even and odd pure elements
    swap = True
    for y in iv.elements:
        kind = kinds[y.key]
        if kind == MIXED:
            continue
        img = compose(inverse(y), x)
        if kinds.get(img.key) != (ODD if kind == EVEN else EVEN):
            swap = False
            break
    return XpqNumerology(
        p=p,
        q=q,
        m=counts[MIXED],
        t=len(iv),
        mu=moebius(iv),
        r=iv.rank_numbers(),
        max_chains=iv.poset.count_maximal_chains(),
        pure_even=counts[EVEN],
        pure_odd=counts[ODD],
        max_chains_formula=max_chains_two_even(p, q),
        pure_formula=pure_count_two_even(p, q),
        kreweras_swaps_purity=swap,
    )


# ---------------------------------------------------------------------------
# k-cycles


def k_count_closed(n: int, k: int) -> int:
    """Elements below ``(1 ... (k-1)n+1)`` for the k-cycle order."""
    if k < 3 or n < 0:
        raise ParameterOutOfRange("need k >= 3 and n >= 0")
    return _as_int(Fraction(2, (k - 1) * n + 2) * comb(k * n + 1, n))


def k_zeta_closed(n: int, k: int) -> ExactPolynomial:
    """``q/((q-1)(k-1)n+q) C((q-1)(k-1)n+q+n-1, n)`` as a polynomial."""
    if k < 3 or n < 1:
        raise ParameterOutOfRange("need k >= 3 and n >= 1")
    q = ExactPolynomial([0, 1])
    Y = (q - 1) * ((k - 1) * n) + q
    out = q * Fraction(1, factorial(n))
    # C(Y+n-1, n) / Y = (Y+1)...(Y+n-1) / n!
    for i in range(1, n):
        out = out * (Y + i)
    return out


def nice_length(x: Permutation, k: int) -> int:
    if not is_nice(x, k):
        raise NotNiceElement(f"{x} has a cycle length not congruent to 1 mod {k - 1}")
    return (x.n - x.cyc()) // (k - 1)


def k_count_bfs(n: int, k: int, cap: int = 10) -> int:
    """Brute-force count below the long cycle using the BFS length table."""
    N = (k - 1) * n + 1
    table = bfs_lengths(N, k, cap)
    c = long_cycle(N)
    top = table[c.key]
    total = 0
    for key, d in table.items():
        x = Permutation._raw(key)
        # x <= c  iff  len(c) == len(x) + len(x^-1 c)
        rest = compose(inverse(x), c)
        if d + table[rest.key] == top:
            total += 1
    return total


def k_generalization(n: int, k: int, what: str, x: Permutation | None = None, q=None):
    if what == "count_below_long_cycle":
        return k_count_closed(n, k)
    if what == "zeta":
        z = k_zeta_closed(n, k)
        return z if q is None else _as_int(z(q))
    if what == "nice_length":
        if x is None:
            raise ParameterOutOfRange("nice_length needs x")
        return nice_length(x, k)
    raise ParameterOutOfRange(f"unknown quantity {what!r}")
