"""Hurwitz action on reduced factorizations into cycles.

A word ``t_1 t_2 ... t_k`` stands for the product ``t_1 t_2 ... t_k`` under
the package composition convention.  The operators are

    sigma_i      : (t_i, t_{i+1}) -> (t_{i+1}, t_{i+1}^-1 t_i t_{i+1})
    sigma_i^-1   : (t_i, t_{i+1}) -> (t_i t_{i+1} t_i^-1, t_i)

and a braid word acts on a factorization word from the right end of the
braid word to the left, like a product of operators.

Internally a letter is the min-first entry tuple of its cycle; words are
tuples of letters so they hash cheaply during orbit searches.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from math import prod

from .errors import IndexOutOfRange, NotReducedWord, ParameterOutOfRange, TooManyWords
from .noncrossing import TwoEvenCycleTarget, classify_generator, MIXED
from .perm import CycleGenerator, Permutation, compose_all
from .poset import three_cycle_context, lower_covers

WORD_CAP = 1_000_000


# ---------------------------------------------------------------------------
# letters and words


def _canon(entries: tuple) -> tuple:
    i = entries.index(min(entries))
    return entries[i:] + entries[:i]


def _conj_by(a: tuple, b: tuple) -> tuple:
    """Letter ``b^-1 a b``: entries of ``a`` pushed through ``b^-1``."""
    pos = {v: i for i, v in enumerate(b)}
    return _canon(tuple(b[pos[v] - 1] if v in pos else v for v in a))


def _conj_by_inverse(a: tuple, b: tuple) -> tuple:
    """Letter ``b a b^-1``: entries of ``a`` pushed through ``b``."""
    pos = {v: i for i, v in enumerate(b)}
    k = len(b)
    return _canon(tuple(b[(pos[v] + 1) % k] if v in pos else v for v in a))


def _step(word: tuple, i: int, sign: int) -> tuple:
    if not 1 <= i < len(word):
        raise IndexOutOfRange(f"sigma_{i} needs 1 <= i < {len(word)}")
    t, u = word[i - 1], word[i]
    pair = (u, _conj_by(t, u)) if sign > 0 else (_conj_by_inverse(u, t), t)
    return word[: i - 1] + pair + word[i + 1:]


@dataclass(frozen=True)
class FactorizationWord:
    letters: tuple
    n: int

    @classmethod
    def from_entries(cls, entries, n: int) -> "FactorizationWord":
        return cls(tuple(CycleGenerator(tuple(e), n) for e in entries), n)

    @classmethod
    def parse(cls, text: str, n: int) -> "FactorizationWord":
        import re

        groups = re.findall(r"\(([^()]*)\)", text)
        return cls.from_entries([[int(t) for t in re.split(r"[\s,]+", g.strip()) if t] for g in groups], n)

    @property
    def key(self) -> tuple:
        return tuple(a.entries for a in self.letters)

    def __len__(self):
        return len(self.letters)

    def product(self) -> Permutation:
        return compose_all([a.perm for a in self.letters], self.n)

    def __str__(self):
        return "".join(str(a) for a in self.letters)


def _from_key(key: tuple, n: int) -> FactorizationWord:
    return FactorizationWord(tuple(CycleGenerator(e, n) for e in key), n)


def hurwitz_step(w: FactorizationWord, i: int, direction: int = 1) -> FactorizationWord:
    """``sigma_i`` (direction +1) or ``sigma_i^-1`` (direction -1)."""
    if direction not in (1, -1):
        raise ValueError("direction must be +1 or -1")
    return _from_key(_step(w.key, i, direction), w.n)


# ---------------------------------------------------------------------------
# braid words


@dataclass(frozen=True)
class BraidWord:
    """Signed generator indices, written left to right as in ``sigma_1 sigma_2^-1``."""

    letters: tuple = ()

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return BraidWord(self.letters + other.letters)

    def __pow__(self, k: int) -> "BraidWord":
        if k < 0:
            return self.inverse() ** (-k)
        return BraidWord(self.letters * k)

    def inverse(self) -> "BraidWord":
        return BraidWord(tuple((i, -s) for i, s in reversed(self.letters)))

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        if not self.letters:
            return "1"
        return " ".join(f"s{i}" if s > 0 else f"s{i}^-1" for i, s in self.letters)


def sigma(i: int, power: int = 1) -> BraidWord:
    sign = 1 if power > 0 else -1
    return BraidWord(((i, sign),) * abs(power))


def _run(indices, power: int = 1) -> BraidWord:
    out = BraidWord()
    for i in indices:
        out = out * sigma(i, power)
    return out


def apply_braid(w: FactorizationWord, braid: BraidWord) -> FactorizationWord:
    key = w.key
    for i, s in reversed(braid.letters):
        key = _step(key, i, s)
    return _from_key(key, w.n)


def _gamma(length: int) -> BraidWord:
    return _run(range(length - 1, 0, -1), -1) ** length


def _conj_long(length: int) -> BraidWord:
    return _run(range(1, length)) ** length


def _omega2(i: int) -> BraidWord:
    return sigma(1, -1) * sigma(2, -2) * _run(range(3, i + 2))


def _tau(i: int, k: int) -> BraidWord:
    return sigma(1, 2) * _run(range(2, k)) * sigma(k, -2) * _run(range(k + 1, i + k))


def _beta2(p: int, k: int) -> BraidWord:
    if k < 2:
        raise ParameterOutOfRange("beta needs k >= 2")
    out = BraidWord()
    for kk in range(k, 2, -1):
        out = out * _tau(p, kk)
    return out * _omega2(p)


def _mu2(k: int) -> BraidWord:
    if k < 3:
        return BraidWord()
    return sigma(1, 2) * _run(range(2, k - 1)) * sigma(k - 1, 2)


def _mu4(i: int) -> BraidWord:
    return sigma(i, 2) * sigma(i + 1)


def _nu(i: int) -> BraidWord:
    return _run(range(3, i + 2), -1)


def _omega4(i: int) -> BraidWord:
    out = BraidWord()
    for m in range(i + 1, 1, -1):
        out = out * _mu4(m)
    return out


def _xi(j: int, i: int) -> BraidWord:
    out = _nu(j)
    for m in range(i, 1, -1):
        out = out * _nu(m)
    return out


def _beta4(k: int, j: int) -> BraidWord:
    return sigma(1, -1) * _omega4(j) * sigma(1, -1) * sigma(2, -1) * _xi(k, j)


BRAID_KINDS = ("gamma", "conj_long", "w_k", "w_kj_step", "omega", "tau", "beta", "mu", "alpha", "mu4", "nu", "omega4", "xi", "beta4")


def make_braid(kind: str, **params) -> BraidWord:
    """Named braid words used to move reduced words around.

    ``gamma(length)`` shifts the labels of each cycle of ``x_{p,q}``;
    ``conj_long(length)`` conjugates every letter of a word of that length;
    ``w_k(k)`` is ``s1^-1 ... sk^-1``; ``w_kj_step(k, j)`` is
    ``s1^2 s2 ... s_{k+j}``; the others build the two-even-cycle families.
    """
    P = params
    builders = {
        "gamma": lambda: _gamma(P["length"]),
        "conj_long": lambda: _conj_long(P["length"]),
        "w_k": lambda: _run(range(1, P["k"] + 1), -1),
        "w_kj_step": lambda: sigma(1, 2) * _run(range(2, P["k"] + P["j"] + 1)),
        "omega": lambda: _omega2(P["i"]),
        "tau": lambda: _tau(P["i"], P["k"]),
        "beta": lambda: _beta2(P["p"], P["k"]),
        "mu": lambda: _mu2(P["k"]),
        "alpha": lambda: _mu2(P["k"]) ** P["j"] * _beta2(P["p"], P["k"]),
        "mu4": lambda: _mu4(P["i"]),
        "nu": lambda: _nu(P["i"]),
        "omega4": lambda: _omega4(P["i"]),
        "xi": lambda: _xi(P["j"], P["i"]),
        "beta4": lambda: _beta4(P["k"], P["j"]),
    }
    if kind not in builders:
        raise ParameterOutOfRange(f"unknown braid kind {kind!r}")
    try:
        return builders[kind]()
    except KeyError as exc:
        raise ParameterOutOfRange(f"braid {kind!r} needs parameter {exc}") from None


# ---------------------------------------------------------------------------
# canonical words


def canonical_word(target: TwoEvenCycleTarget, which: int) -> FactorizationWord:
    """The two reference words of ``x_{p,q}`` opening with mixed letters of opposite parity."""
    a = (None,) + target.a_labels
    b = (None,) + target.b_labels
    p, q = target.p, target.q
    if which == 1:
        head = [(a[1], a[2], b[2]), (a[2], b[2], b[1])]
    elif which == 2:
        head = [(a[2], a[1], b[2]), (a[1], b[2], b[1])]
    else:
        raise ParameterOutOfRange("which must be 1 or 2")
    tail = [(a[i], a[i + 1], a[i + 2]) for i in range(2, 2 * p - 1, 2)]
    tail += [(b[i], b[i + 1], b[i + 2]) for i in range(2, 2 * q - 1, 2)]
    return FactorizationWord.from_entries(head + tail, target.degree)


def long_cycle_word(n: int) -> FactorizationWord:
    """``u_1 u_3 ... u_{2n-1}`` with ``u_i = (i, i+1, i+2)``, a reduced word of ``(1 ... 2n+1)``."""
    return FactorizationWord.from_entries([(i, i + 1, i + 2) for i in range(1, 2 * n, 2)], 2 * n + 1)


def _u(i: int) -> tuple:
    return (i, i + 1, i + 2)


def display_w_k(n: int, k: int) -> FactorizationWord:
    letters = [(1, 2 * k + 2, 2 * k + 3)] + [_u(i) for i in range(1, 2 * n, 2) if i != 2 * k + 1]
    return FactorizationWord.from_entries(letters, 2 * n + 1)


def display_w_kj(n: int, k: int, j: int) -> FactorizationWord:
    """Read with ``x = u_{2k+2} u_{2k+4} ... u_{2k+2j}``, which multiplies to the long cycle."""
    x = [_u(i) for i in range(2 * k + 2, 2 * k + 2 * j + 1, 2)]
    y = [_u(i) for i in range(1, 2 * k, 2)]
    z = [_u(i) for i in range(2 * k + 2 * j + 3, 2 * n, 2)]
    return FactorizationWord.from_entries([(1, 2 * k + 2, 2 * k + 2 * j + 3)] + x + y + z, 2 * n + 1)


def display_beta(target: TwoEvenCycleTarget, k: int) -> FactorizationWord:
    a = (None,) + target.a_labels
    b = (None,) + target.b_labels
    p, q = target.p, target.q
    letters = [(a[1], b[2 * k - 1], b[2])]
    letters += [(a[1], b[m], b[m + 1]) for m in range(2 * k - 3, 2, -2)]
    letters += [(a[1], a[2], b[2]), (b[1], b[2 * k - 1], b[2 * k])]
    letters += [(a[i], a[i + 1], a[i + 2]) for i in range(2, 2 * p - 1, 2)]
    letters += [(b[i], b[i + 1], b[i + 2]) for i in range(2 * k, 2 * q - 1, 2)]
    return FactorizationWord.from_entries(letters, target.degree)


def display_alpha(target: TwoEvenCycleTarget, k: int, j: int) -> FactorizationWord:
    """Second line read as ``(a_1 b_m b_{m+1})`` with m = 2k-3, 2k-5, ..., 2j+3."""
    a = (None,) + target.a_labels
    b = (None,) + target.b_labels
    p, q = target.p, target.q
    letters = [(a[1], b[2 * k - 1], b[2 * j + 2])]
    letters += [(b[m], b[m + 1], b[2 * k - 1]) for m in range(2 * j, 1, -2)]
    letters += [(a[1], b[m], b[m + 1]) for m in range(2 * k - 3, 2 * j + 2, -2)]
    letters += [(a[1], a[2], b[2 * j + 2]), (b[1], b[2 * k - 1], b[2 * k])]
    letters += [(a[i], a[i + 1], a[i + 2]) for i in range(2, 2 * p - 1, 2)]
    letters += [(b[i], b[i + 1], b[i + 2]) for i in range(2 * k, 2 * q - 1, 2)]
    return FactorizationWord.from_entries(letters, target.degree)


def display_beta4(target: TwoEvenCycleTarget, k: int, j: int) -> FactorizationWord:
    """The pure a-tail skips ``(a_2k a_2k+1 a_2k+2)``; without the skip the word is one letter too long."""
    a = (None,) + target.a_labels
    b = (None,) + target.b_labels
    p, q = target.p, target.q
    letters = [(a[2 * k + 1], a[2 * j + 2], b[2]), (a[1], a[2 * k + 1], a[2 * k + 2])]
    letters += [(a[1], a[m], a[m + 1]) for m in range(2 * j, 1, -2)]
    letters += [(a[2 * j + 2], b[2], b[1])]
    letters += [(a[i], a[i + 1], a[i + 2]) for i in range(2 * j + 2, 2 * p - 1, 2) if i != 2 * k]
    letters += [(b[i], b[i + 1], b[i + 2]) for i in range(2, 2 * q - 1, 2)]
    return FactorizationWord.from_entries(letters, target.degree)


# ---------------------------------------------------------------------------
# reduced words and orbits


def is_reduced(w: FactorizationWord, x: Permutation) -> bool:
    return w.product() == x and len(w) == three_cycle_context(x.n).length(x)


def enumerate_reduced(x: Permutation, cap: int = WORD_CAP) -> list:
    """All reduced words of ``x`` into 3-cycles, as entry-tuple keys."""
    ctx = three_cycle_context(x.n)
    memo: dict = {}

    def words(y: Permutation) -> list:
        if y.key in memo:
            return memo[y.key]
        if y.is_identity():
            out = [()]
        else:
            out = []
            for below, a in lower_covers(ctx, y):
                for w in words(below):
                    out.append(w + (a.entries,))
                if len(out) > cap:
                    raise TooManyWords(f"more than {cap} reduced words")
        memo[y.key] = out
        return out

    return sorted(words(x))


def even_cycles(x: Permutation) -> list:
    return [c for c in x.all_cycles() if len(c) % 2 == 0]


@dataclass
class WordInvariants:
    matching: tuple
    parities: tuple


def _pair_target(z1: tuple, z2: tuple, n: int) -> TwoEvenCycleTarget:
    return TwoEvenCycleTarget(len(z1) // 2, len(z2) // 2, z1, z2, n)


def _invariants_from_key(key: tuple, x: Permutation, check: bool = True) -> WordInvariants:
    evens = even_cycles(x)
    where = {}
    for idx, c in enumerate(evens):
        for v in c:
            where[v] = idx
    parent = list(range(len(evens)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for letter in key:
        hit = sorted({where[v] for v in letter if v in where})
        for h in hit[1:]:
            parent[find(h)] = find(hit[0])
    classes = {}
    for i in range(len(evens)):
        classes.setdefault(find(i), []).append(i)
    groups = sorted(classes.values())
    if check and any(len(g) != 2 for g in groups):
        raise AssertionError(f"even cycles of {x} are not matched in pairs by {key}")
    matching = []
    parities = []
    for g in groups:
        if len(g) != 2:
            matching.append(tuple(evens[i] for i in g))
            parities.append(None)
            continue
        z1, z2 = evens[g[0]], evens[g[1]]
        target = _pair_target(z1, z2, x.n)
        support = set(z1) | set(z2)
        found = set()
        for letter in key:
            if set(letter) <= support:
                cls = classify_generator(target, CycleGenerator(letter, x.n))
                if cls.kind == MIXED:
                    found.add(cls.parity)
        if check and len(found) != 1:
            raise AssertionError(f"mixed letters of {key} on {z1}, {z2} have parities {found}")
        matching.append((z1, z2))
        parities.append(min(found) if found else None)
    return WordInvariants(tuple(matching), tuple(parities))


def word_invariants(w: FactorizationWord, x: Permutation) -> WordInvariants:
    """Matching of the even cycles and the mixed-letter parity of each pair.

    Pairs are specified with the cycle of smaller minimum as the ``a``
    cycle, each cycle read from its minimum.
    """
    if not is_reduced(w, x):
        raise NotReducedWord(f"{w} is not a reduced word of {x}")
    return _invariants_from_key(w.key, x)


@dataclass
class Orbit:
    size: int
    representative: str
    matching: list
    parities: list
    invariants_constant: bool


@dataclass
class OrbitReport:
    perm: str
    degree: int
    word_count: int
    orbit_count: int
    expected_orbits: int
    orbits: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (
            self.orbit_count == self.expected_orbits
            and sum(o.size for o in self.orbits) == self.word_count
            and all(o.invariants_constant for o in self.orbits)
        )

    def to_dict(self) -> dict:
        return {
            "perm": self.perm,
            "degree": self.degree,
            "word_count": self.word_count,
            "orbit_count": self.orbit_count,
            "expected_orbits": self.expected_orbits,
            "orbits": [
                {
                    "size": o.size,
                    "representative": o.representative,
                    "matching": [[list(c) for c in pair] for pair in o.matching],
                    "parities": list(o.parities),
                    "invariants_constant": o.invariants_constant,
                }
                for o in self.orbits
            ],
        }

    def to_json(self, indent=None) -> str:
        return json.dumps(self.to_dict(), indent=indent)


def expected_orbit_count(x: Permutation) -> int:
    """``(2k)_k = (k+1)(k+2)...(2k)`` with 2k the number of even cycles."""
    k = len(even_cycles(x)) // 2
    return prod(range(k + 1, 2 * k + 1))


def _neighbors(key: tuple):
    for i in range(1, len(key)):
        yield _step(key, i, 1)
        yield _step(key, i, -1)


def orbit_components(words: list) -> list:
    """Partition word keys into Hurwitz orbits (lists of keys, each sorted)."""
    seen = set()
    comps = []
    for start in words:
        if start in seen:
            continue
        seen.add(start)
        comp = [start]
        queue = deque([start])
        while queue:
            w = queue.popleft()
            for v in _neighbors(w):
                if v not in seen:
                    seen.add(v)
                    comp.append(v)
                    queue.append(v)
        comps.append(sorted(comp))
    return comps


def _fmt_key(key: tuple) -> str:
    return "".join("(" + " ".join(map(str, e)) + ")" for e in key)


def orbit_decomposition(x: Permutation, cap: int = WORD_CAP) -> OrbitReport:
    words = enumerate_reduced(x, cap)
    comps = orbit_components(words)
    if sum(len(c) for c in comps) != len(words):
        raise AssertionError("orbit search left the set of reduced words")
    orbits = []
    for comp in comps:
        invs = {(_inv.matching, _inv.parities) for _inv in (_invariants_from_key(k, x) for k in comp)}
        matching, parities = min(invs)
        orbits.append(Orbit(len(comp), _fmt_key(comp[0]), list(matching), list(parities), len(invs) == 1))
    orbits.sort(key=lambda o: o.representative)
    return OrbitReport(str(x), x.n, len(words), len(comps), expected_orbit_count(x), orbits)


def orbit_graph_dot(x: Permutation, cap: int = 5000) -> str:
    """Word graph with one color per orbit; sigma_i edges only."""
    words = enumerate_reduced(x, cap)
    comps = orbit_components(words)
    color_of = {}
    for ci, comp in enumerate(comps):
        for w in comp:
            color_of[w] = ci
    index = {w: i for i, w in enumerate(words)}
    palette = ["red", "blue", "darkgreen", "orange", "purple", "brown", "black", "cyan", "magenta", "gold", "gray", "pink"]
    lines = ["digraph hurwitz {", "  node [shape=box, fontsize=9];"]
    for w, i in index.items():
        lines.append(f'  w{i} [label="{_fmt_key(w)}", color={palette[color_of[w] % len(palette)]}];')
    for w, i in index.items():
        for s in range(1, len(w)):
            v = _step(w, s, 1)
            if v != w:
                lines.append(f'  w{i} -> w{index[v]} [label="s{s}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# display checks


@dataclass
class DisplayCheck:
    name: str
    params: dict
    computed: str
    displayed: str

    @property
    def ok(self) -> bool:
        return self.computed == self.displayed


def check_displays(max_pq: int = 4) -> list:
    """Compare every braid family's action with its displayed result."""
    out = []
    for n in range(1, 5):
        wc = long_cycle_word(n)
        for k in range(n):
            got = apply_braid(wc, make_braid("w_k", k=k))
            out.append(DisplayCheck("w_k", {"n": n, "k": k}, str(got), str(display_w_k(n, k))))
            for j in range(n - k - 1):
                got = apply_braid(display_w_kj(n, k, j), make_braid("w_kj_step", k=k, j=j))
                out.append(DisplayCheck("w_kj", {"n": n, "k": k, "j": j}, str(got), str(display_w_kj(n, k, j + 1))))
    for p in range(1, max_pq):
        for q in range(1, max_pq):
            if p + q > max_pq:
                continue
            t = TwoEvenCycleTarget(p, q)
            x1 = canonical_word(t, 1)
            for k in range(2, q + 1):
                got = apply_braid(x1, make_braid("beta", p=p, k=k))
                out.append(DisplayCheck("beta", {"p": p, "q": q, "k": k}, str(got), str(display_beta(t, k))))
                for j in range(k - 1):
                    got = apply_braid(x1, make_braid("alpha", p=p, k=k, j=j))
                    out.append(DisplayCheck("alpha", {"p": p, "q": q, "k": k, "j": j}, str(got), str(display_alpha(t, k, j))))
            for k in range(p):
                for j in range(k):
                    got = apply_braid(x1, make_braid("beta4", k=k, j=j))
                    out.append(DisplayCheck("beta4", {"p": p, "q": q, "k": k, "j": j}, str(got), str(display_beta4(t, k, j))))
    return out


def gamma_shift_ok(target: TwoEvenCycleTarget, words: list | None = None) -> bool:
    """``gamma`` moves every label one step along its cycle of ``x_{p,q}``."""
    x = target.perm
    length = target.p + target.q
    g = make_braid("gamma", length=length)
    if words is None:
        words = enumerate_reduced(x)
    for key in words:
        w = _from_key(key, x.n)
        got = apply_braid(w, g).key
        want = tuple(_canon(tuple(x(v) for v in letter)) for letter in key)
        if got != want:
            return False
    return True
