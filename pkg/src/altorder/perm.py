"""Permutations of [N] = {1, ..., N} and cycle generators.

Composition convention: ``compose(x, y)(p) == x(y(p))``, the rightmost
factor acts first.  With this convention ``w * (i j)`` joins the cycles of
``w`` that end at ``i`` and ``j``, and the Kreweras complement of ``x`` in
the long cycle satisfies ``K(x)(i) == x^-1(i + 1)``.  Every module in the
package relies on it.

Permutations carry their degree explicitly and never interoperate across
degrees.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import (
    DegreeAboveOracleCap,
    DegreeMismatch,
    DegreeTooSmall,
    EntryOutOfRange,
    MalformedCycleNotation,
    RepeatedEntry,
)

ORACLE_CAP = 10


class Permutation:
    """An immutable permutation of [n].

    Internally stored as a 0-based image tuple; the public surface is
    1-based throughout.
    """

    __slots__ = ("n", "_p", "_cycles", "_hash")

    def __init__(self, images: Sequence[int]):
        p = tuple(int(v) - 1 for v in images)
        n = len(p)
        if sorted(p) != list(range(n)):
            raise ValueError(f"not a permutation of [{n}]: {tuple(images)}")
        self.n = n
        self._p = p
        self._cycles = None
        self._hash = None

    @classmethod
    def _raw(cls, p: tuple) -> "Permutation":
        obj = cls.__new__(cls)
        obj.n = len(p)
        obj._p = p
        obj._cycles = None
        obj._hash = None
        return obj

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls._raw(tuple(range(n)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int) -> "Permutation":
        p = list(range(n))
        seen = set()
        for cyc in cycles:
            for v in cyc:
                if not 1 <= v <= n:
                    raise EntryOutOfRange(f"entry {v} outside [1, {n}]")
                if v in seen:
                    raise RepeatedEntry(f"entry {v} appears twice")
                seen.add(v)
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                p[a - 1] = b - 1
        return cls._raw(tuple(p))

    def __call__(self, i: int) -> int:
        return self._p[i - 1] + 1

    @property
    def images(self) -> tuple:
        return tuple(v + 1 for v in self._p)

    @property
    def key(self) -> tuple:
        """Hashable key, equivalent to the canonical notation."""
        return self._p

    def __eq__(self, other):
        return isinstance(other, Permutation) and self._p == other._p

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._p)
        return self._hash

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __repr__(self):
        return f"Permutation({format_permutation(self)!r}, n={self.n})"

    def __str__(self):
        return format_permutation(self)

    def all_cycles(self) -> tuple:
        """Cycles including fixed points, each min-first, sorted by minimum."""
        if self._cycles is None:
            p = self._p
            seen = [False] * self.n
            out = []
            for start in range(self.n):
                if seen[start]:
                    continue
                cyc = []
                j = start
                while not seen[j]:
                    seen[j] = True
                    cyc.append(j + 1)
                    j = p[j]
                out.append(tuple(cyc))
            self._cycles = tuple(out)
        return self._cycles

    def cycles(self) -> tuple:
        """Nontrivial cycles only."""
        return tuple(c for c in self.all_cycles() if len(c) > 1)

    def fixed_points(self) -> tuple:
        return tuple(c[0] for c in self.all_cycles() if len(c) == 1)

    def support(self) -> frozenset:
        return frozenset(i + 1 for i, v in enumerate(self._p) if v != i)

    def cyc(self) -> int:
        return len(self.all_cycles())

    def ocyc(self) -> int:
        return sum(1 for c in self.all_cycles() if len(c) % 2)

    def cycle_type(self) -> tuple:
        return tuple(sorted((len(c) for c in self.all_cycles()), reverse=True))

    def is_even(self) -> bool:
        return (self.n - self.cyc()) % 2 == 0

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self._p))

    def sort_key(self) -> tuple:
        return self.cycles()


def _check_degree(x: Permutation, y: Permutation) -> None:
    if x.n != y.n:
        raise DegreeMismatch(f"degrees {x.n} and {y.n} differ")


def compose(x: Permutation, y: Permutation) -> Permutation:
    """``(x y)(p) = x(y(p))``."""
    _check_degree(x, y)
    xp = x._p
    return Permutation._raw(tuple(xp[j] for j in y._p))


def compose_all(perms: Sequence[Permutation], n: int) -> Permutation:
    out = Permutation.identity(n)
    for q in perms:
        out = compose(out, q)
    return out


def inverse(x: Permutation) -> Permutation:
    inv = [0] * x.n
    for i, v in enumerate(x._p):
        inv[v] = i
    return Permutation._raw(tuple(inv))


def conjugate(x: Permutation, w: Permutation) -> Permutation:
    """``w^-1 x w``."""
    return compose(compose(inverse(w), x), w)


def long_cycle(n: int) -> Permutation:
    return Permutation._raw(tuple(list(range(1, n)) + [0])) if n > 0 else Permutation.identity(0)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_permutation(text: str, n: int) -> Permutation:
    """Read cycle notation such as ``"(1 2 3)(4,5)"`` or ``"e"``."""
    s = text.strip()
    if s == "e":
        return Permutation.identity(n)
    if not s:
        raise MalformedCycleNotation("empty permutation string")
    pos = 0
    cycles = []
    while pos < len(s):
        if s[pos].isspace():
            pos += 1
            continue
        m = _CYCLE_RE.match(s, pos)
        if m is None:
            raise MalformedCycleNotation(f"unexpected text at position {pos}: {s[pos:]!r}")
        body = m.group(1).strip()
        tokens = [t for t in re.split(r"[\s,]+", body) if t]
        if not tokens or not all(re.fullmatch(r"\d+", t) for t in tokens):
            raise MalformedCycleNotation(f"bad cycle {m.group(0)!r}")
        cycles.append([int(t) for t in tokens])
        pos = m.end()
    return Permutation.from_cycles(cycles, n)


def format_permutation(x: Permutation) -> str:
    cycles = x.cycles()
    if not cycles:
        return "e"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)


def cycle_stats(x: Permutation) -> dict:
    cyc = x.cyc()
    return {
        "cycle_type": x.cycle_type(),
        "cyc": cyc,
        "ocyc": x.ocyc(),
        "supp": x.support(),
        "is_even": (x.n - cyc) % 2 == 0,
        "ell2": x.n - cyc,
    }


@dataclass(frozen=True)
class CycleGenerator:
    """A k-cycle (e1 e2 ... ek) of [n], stored min-first.

    ``(1 2 3)`` and ``(1 3 2)`` are different generators.
    """

    entries: tuple
    n: int

    def __post_init__(self):
        e = tuple(int(v) for v in self.entries)
        if len(e) < 2:
            raise ValueError("a cycle generator needs at least two entries")
        if len(set(e)) != len(e):
            raise RepeatedEntry(f"repeated entry in {e}")
        if not all(1 <= v <= self.n for v in e):
            raise EntryOutOfRange(f"{e} not inside [1, {self.n}]")
        i = e.index(min(e))
        object.__setattr__(self, "entries", e[i:] + e[:i])

    @property
    def k(self) -> int:
        return len(self.entries)

    @property
    def perm(self) -> Permutation:
        return Permutation.from_cycles([self.entries], self.n)

    def inverse(self) -> "CycleGenerator":
        return CycleGenerator(tuple(reversed(self.entries)), self.n)

    def conjugate_by(self, w: Permutation) -> "CycleGenerator":
        """The generator ``w^-1 a w``: entries are mapped through ``w^-1``."""
        winv = inverse(w)
        return CycleGenerator(tuple(winv(v) for v in self.entries), self.n)

    def __str__(self):
        return "(" + " ".join(map(str, self.entries)) + ")"


THREE_CYCLES = "three_cycles"
TRANSPOSITIONS = "transpositions"


def enumerate_generators(n: int, family="three_cycles") -> list:
    """All generators of the family on [n].

    ``family`` is ``"transpositions"``, ``"three_cycles"`` or an integer
    k >= 2 meaning all k-cycles.
    """
    k = family_k(family)
    if n < k:
        raise DegreeTooSmall(f"no {k}-cycles on {n} points")
    out = []
    for subset in itertools.combinations(range(1, n + 1), k):
        first, rest = subset[0], subset[1:]
        for arrangement in itertools.permutations(rest):
            out.append(CycleGenerator((first,) + arrangement, n))
    return out


def family_k(family) -> int:
    if family == TRANSPOSITIONS:
        return 2
    if family == THREE_CYCLES:
        return 3
    if isinstance(family, int) and family >= 2:
        return family
    raise ValueError(f"unknown generator family {family!r}")


def enumerate_alternating(n: int, cap: int = ORACLE_CAP) -> Iterator[Permutation]:
    if n > cap:
        raise DegreeAboveOracleCap(f"A_{n} exceeds the oracle cap {cap}")
    for p in itertools.permutations(range(n)):
        x = Permutation._raw(p)
        if x.is_even():
            yield x


def enumerate_symmetric(n: int, cap: int = ORACLE_CAP) -> Iterator[Permutation]:
    if n > cap:
        raise DegreeAboveOracleCap(f"S_{n} exceeds the oracle cap {cap}")
    for p in itertools.permutations(range(n)):
        yield Permutation._raw(p)


def alternating_order(n: int) -> int:
    return max(1, math.factorial(n) // 2)
