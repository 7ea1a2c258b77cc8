"""Prefix orders on permutation groups generated by cycles.

A generating family (transpositions, 3-cycles or k-cycles) of a permutation
group induces a length function and the prefix order

    x <= y  iff  len(y) == len(x) + len(x^-1 y).

Intervals of this order are built by downward cover search and stored as
:class:`IntervalPoset`; the counting routines (multichains, maximal chains,
zeta polynomial, Moebius number) live on the generic :class:`FinitePoset`
so that other modules can reuse them on posets that are not intervals.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Hashable, Iterable, Sequence

from .errors import (
    DegreeAboveOracleCap,
    IntervalTooLarge,
    InterpolationInconsistent,
    NotComparable,
    NotInGeneratedGroup,
)
from .perm import (
    ORACLE_CAP,
    THREE_CYCLES,
    TRANSPOSITIONS,
    CycleGenerator,
    Permutation,
    compose,
    enumerate_generators,
    family_k,
    format_permutation,
    inverse,
)
from .polynomial import ExactPolynomial, interpolate_checked

DEFAULT_MAX_ELEMENTS = 500_000


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class FinitePoset:
    """A finite poset given by its cover relations.

    ``covers`` holds ``(lower, upper)`` index pairs.  The order relation is
    the reflexive-transitive closure, kept as one bitset per element.
    """

    def __init__(self, size: int, covers: Iterable[tuple]):
        self.size = size
        self.covers = sorted(set((int(a), int(b)) for a, b in covers))
        self.lower = [[] for _ in range(size)]
        self.upper = [[] for _ in range(size)]
        for a, b in self.covers:
            self.lower[b].append(a)
            self.upper[a].append(b)
        self._topo = None
        self._down = None
        self._down_lists = None

    @classmethod
    def from_order(cls, size: int, leq: Callable[[int, int], bool]) -> "FinitePoset":
        """Build from a full order predicate, keeping only cover pairs."""
        below = [0] * size
        for j in range(size):
            m = 0
            for i in range(size):
                if i != j and leq(i, j):
                    m |= 1 << i
            below[j] = m
        covers = []
        for j in range(size):
            strict = below[j]
            for i in _bits(strict):
                # i is covered by j unless some k strictly between
                if not any((below[k] >> i) & 1 for k in _bits(strict & ~(1 << i))):
                    covers.append((i, j))
        poset = cls(size, covers)
        return poset

    def topological_order(self) -> list:
        if self._topo is None:
            indeg = [len(l) for l in self.lower]
            queue = deque(i for i in range(self.size) if indeg[i] == 0)
            order = []
            while queue:
                i = queue.popleft()
                order.append(i)
                for j in self.upper[i]:
                    indeg[j] -= 1
                    if indeg[j] == 0:
                        queue.append(j)
            if len(order) != self.size:
                raise ValueError("cover relation contains a cycle")
            self._topo = order
        return self._topo

    @property
    def down(self) -> list:
        """``down[i]`` is the bitset of elements ``<= i``."""
        if self._down is None:
            down = [0] * self.size
            for i in self.topological_order():
                m = 1 << i
                for a in self.lower[i]:
                    m |= down[a]
                down[i] = m
            self._down = down
        return self._down

    def strictly_below(self, i: int) -> list:
        if self._down_lists is None:
            self._down_lists = [
                [j for j in _bits(m) if j != i] for i, m in enumerate(self.down)
            ]
        return self._down_lists[i]

    def leq(self, i: int, j: int) -> bool:
        return bool((self.down[j] >> i) & 1)

    def minimal(self) -> list:
        return [i for i in range(self.size) if not self.lower[i]]

    def maximal(self) -> list:
        return [i for i in range(self.size) if not self.upper[i]]

    def count_multichains(self, m: int) -> int:
        """Number of ``(m-1)``-multichains ``x_1 <= ... <= x_{m-1}``."""
        if m < 1:
            raise ValueError("m must be at least 1")
        if m == 1:
            return 1
        f = [1] * self.size
        for _ in range(m - 2):
            f = [f[i] + sum(f[j] for j in self.strictly_below(i)) for i in range(self.size)]
        return sum(f)

    def count_maximal_chains(self) -> int:
        paths = [0] * self.size
        for i in self.topological_order():
            paths[i] = 1 if not self.lower[i] else sum(paths[a] for a in self.lower[i])
        return sum(paths[i] for i in self.maximal())

    def moebius(self, lo: int, hi: int) -> int:
        """Recursive Moebius function ``mu(lo, hi)``."""
        if not self.leq(lo, hi):
            return 0
        inside = [i for i in self.topological_order() if self.leq(lo, i) and self.leq(i, hi)]
        mu = {}
        for i in inside:
            if i == lo:
                mu[i] = 1
            else:
                mu[i] = -sum(mu[j] for j in self.strictly_below(i) if j in mu)
        return mu[hi]

    def bounds(self) -> tuple:
        mins, maxs = self.minimal(), self.maximal()
        if len(mins) != 1 or len(maxs) != 1:
            raise ValueError("poset is not bounded")
        return mins[0], maxs[0]

    def moebius_number(self) -> int:
        lo, hi = self.bounds()
        return self.moebius(lo, hi)

    def zeta_polynomial(self, rank: int) -> ExactPolynomial:
        return interpolate_checked(self.count_multichains, rank)


# ---------------------------------------------------------------------------
# generating families and lengths


_BFS_TABLES: dict = {}


def bfs_lengths(n: int, k: int, cap: int = ORACLE_CAP) -> dict:
    """Word lengths of every element of the group generated by k-cycles."""
    if n > cap:
        raise DegreeAboveOracleCap(f"BFS oracle refuses degree {n} > {cap}")
    key = (n, k)
    if key not in _BFS_TABLES:
        gens = [g.perm.key for g in enumerate_generators(n, k)]
        start = tuple(range(n))
        dist = {start: 0}
        frontier = [start]
        d = 0
        while frontier:
            d += 1
            nxt = []
            for w in frontier:
                for g in gens:
                    v = tuple(w[j] for j in g)
                    if v not in dist:
                        dist[v] = d
                        nxt.append(v)
            frontier = nxt
        _BFS_TABLES[key] = dist
    return _BFS_TABLES[key]


def is_nice(x: Permutation, k: int) -> bool:
    return all(len(c) % (k - 1) == 1 % (k - 1) for c in x.all_cycles())


@dataclass(frozen=True)
class GeneratorContext:
    """A degree, a generating family and a length strategy.

    ``family`` is ``"transpositions"``, ``"three_cycles"`` or an int k.
    ``length_mode`` is ``"closed"`` (closed forms, falling back to BFS for
    non-nice k-cycle elements) or ``"bfs"`` (always the oracle).
    """

    degree: int
    family: object = THREE_CYCLES
    length_mode: str = "closed"
    oracle_cap: int = ORACLE_CAP

    @property
    def k(self) -> int:
        return family_k(self.family)

    @property
    def family_name(self) -> str:
        if self.family in (TRANSPOSITIONS, THREE_CYCLES):
            return self.family
        return f"{self.k}_cycles"

    def generators(self) -> list:
        return _generators(self.degree, self.k)

    def length(self, x: Permutation) -> int:
        if x.n != self.degree:
            raise NotInGeneratedGroup(f"degree {x.n} does not match context degree {self.degree}")
        k = self.k
        if self.length_mode == "closed":
            if k == 2:
                return x.n - x.cyc()
            if k == 3:
                if not x.is_even():
                    raise NotInGeneratedGroup(f"{x} is odd")
                return (x.n - x.ocyc()) // 2
            if is_nice(x, k):
                return (x.n - x.cyc()) // (k - 1)
        elif self.length_mode != "bfs":
            raise ValueError(f"unknown length mode {self.length_mode!r}")
        table = bfs_lengths(self.degree, k, self.oracle_cap)
        try:
            return table[x.key]
        except KeyError:
            raise NotInGeneratedGroup(f"{x} is not generated by {k}-cycles") from None


@lru_cache(maxsize=None)
def _generators(n: int, k: int) -> list:
    return enumerate_generators(n, k)


def three_cycle_context(n: int) -> GeneratorContext:
    return GeneratorContext(n, THREE_CYCLES)


def length(ctx: GeneratorContext, x: Permutation) -> int:
    return ctx.length(x)


def is_below(ctx: GeneratorContext, x: Permutation, y: Permutation) -> bool:
    return ctx.length(y) == ctx.length(x) + ctx.length(compose(inverse(x), y))


def lower_covers(ctx: GeneratorContext, y: Permutation) -> list:
    """Pairs ``(x, a)`` with ``x = y a^-1`` one step below ``y``."""
    ly = ctx.length(y)
    if ly == 0:
        return []
    out = []
    yp = y.key
    if ctx.k == 3 and ctx.length_mode == "closed":
        # length drops by one iff the number of odd cycles grows by two
        target = y.ocyc() + 2
        for a, ainv in _inverse_tables(ctx.degree, 3):
            xp = tuple(yp[j] for j in ainv)
            if _ocyc(xp) == target:
                out.append((Permutation._raw(xp), a))
        return out
    for a, ainv in _inverse_tables(ctx.degree, ctx.k):
        x = Permutation._raw(tuple(yp[j] for j in ainv))
        if ctx.length(x) == ly - 1:
            out.append((x, a))
    return out


def _ocyc(p: tuple) -> int:
    n = len(p)
    seen = bytearray(n)
    odd = 0
    for s in range(n):
        if seen[s]:
            continue
        size = 0
        j = s
        while not seen[j]:
            seen[j] = 1
            size += 1
            j = p[j]
        odd += size & 1
    return odd


@lru_cache(maxsize=None)
def _inverse_tables(n: int, k: int) -> list:
    return [(a, inverse(a.perm).key) for a in _generators(n, k)]


def lower_cover_elements(ctx: GeneratorContext, y: Permutation) -> list:
    seen = {}
    for x, _ in lower_covers(ctx, y):
        seen.setdefault(x.key, x)
    return list(seen.values())


# ---------------------------------------------------------------------------
# intervals


@dataclass
class IntervalPoset:
    context: GeneratorContext
    bottom: Permutation
    top: Permutation
    elements: list
    covers: list
    ranks: list
    poset: FinitePoset = field(repr=False)

    def __post_init__(self):
        self._index = {x.key: i for i, x in enumerate(self.elements)}

    def __len__(self):
        return len(self.elements)

    def index(self, x: Permutation) -> int:
        return self._index[x.key]

    def __contains__(self, x: Permutation) -> bool:
        return x.key in self._index

    @property
    def rank(self) -> int:
        return self.ranks[self.index(self.top)]

    def rank_numbers(self) -> list:
        counts = [0] * (self.rank + 1)
        for r in self.ranks:
            counts[r] += 1
        return counts

    def to_dict(self) -> dict:
        return {
            "degree": self.context.degree,
            "family": self.context.family_name,
            "bottom": format_permutation(self.bottom),
            "top": format_permutation(self.top),
            "elements": [format_permutation(x) for x in self.elements],
            "ranks": list(self.ranks),
            "covers": [[a, b] for a, b in self.covers],
        }

    def to_json(self, indent=None) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    def to_dot(self, name: str = "interval") -> str:
        return hasse_dot(
            [format_permutation(x) for x in self.elements], self.ranks, self.covers, name
        )


def hasse_dot(labels: Sequence[str], ranks: Sequence[int], covers: Sequence, name: str) -> str:
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
    for i, lab in enumerate(labels):
        lines.append(f'  n{i} [label="{lab}"];')
    for r in sorted(set(ranks)):
        members = " ".join(f"n{i};" for i, rr in enumerate(ranks) if rr == r)
        lines.append(f"  {{ rank=same; {members} }}")
    for a, b in covers:
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def interval(
    ctx: GeneratorContext,
    y: Permutation,
    z: Permutation,
    max_elements: int = DEFAULT_MAX_ELEMENTS,
) -> IntervalPoset:
    """The interval ``[y, z]`` by downward cover search from ``z``."""
    if not is_below(ctx, y, z):
        raise NotComparable(f"{y} is not below {z}")
    yinv = inverse(y)
    from_bottom = y.is_identity()
    found = {z.key: z}
    edges = []
    frontier = [z]
    while frontier:
        nxt = []
        for w in frontier:
            for x in lower_cover_elements(ctx, w):
                if not from_bottom and not is_below(ctx, y, x):
                    continue
                edges.append((x.key, w.key))
                if x.key not in found:
                    found[x.key] = x
                    nxt.append(x)
                    if len(found) > max_elements:
                        raise IntervalTooLarge(f"interval exceeds {max_elements} elements")
        frontier = nxt
    rank_of = {k: ctx.length(compose(yinv, x)) for k, x in found.items()}
    ordered = sorted(found.values(), key=lambda x: (rank_of[x.key], x.sort_key()))
    index = {x.key: i for i, x in enumerate(ordered)}
    covers = sorted({(index[a], index[b]) for a, b in edges})
    ranks = [rank_of[x.key] for x in ordered]
    return IntervalPoset(ctx, y, z, ordered, covers, ranks, FinitePoset(len(ordered), covers))


def kreweras(z: Permutation, x: Permutation) -> Permutation:
    """``K_z(x) = x^-1 z``."""
    return compose(inverse(x), z)


def anti_automorphism(y: Permutation, z: Permutation, x: Permutation) -> Permutation:
    """``x -> y x^-1 z``, order reversing on ``[y, z]``."""
    return compose(compose(y, inverse(x)), z)


def count_maximal_chains(iv: IntervalPoset) -> int:
    return iv.poset.count_maximal_chains()


def count_multichains(iv: IntervalPoset, m: int) -> int:
    return iv.poset.count_multichains(m)


def zeta_polynomial(iv: IntervalPoset) -> ExactPolynomial:
    return iv.poset.zeta_polynomial(iv.rank)


def moebius(iv: IntervalPoset) -> int:
    return iv.poset.moebius(iv.index(iv.bottom), iv.index(iv.top))


def zeta_and_moebius(iv: IntervalPoset) -> tuple:
    """Zeta polynomial and Moebius number, cross-checked against each other."""
    z = zeta_polynomial(iv)
    mu = moebius(iv)
    if z(-1) != mu:
        raise InterpolationInconsistent(f"Z(-1) = {z(-1)} but recursive mu = {mu}")
    return z, mu
