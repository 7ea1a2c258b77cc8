"""The m-divisible poset on multichains of ONC_{2n+1}.

An m-multichain ``C = (x_1 <= ... <= x_m)`` of ``[e, c]`` has the delta
sequence ``(d_0; d_1, ..., d_m)`` with ``d_i = x_i^-1 x_{i+1}``, where
``x_0 = e`` and ``x_{m+1} = c``.  Multichains are ordered by
``C <= C'`` iff ``d_i >= d'_i`` for every component in :data:`COMPARED`.
For m = 1 this is the Kreweras dual of the order on ``d_1 = x_1^-1 c`` and
so reproduces ONC_{2n+1} itself.

Conjectured closed forms for maximal chains, zeta values and the Moebius
numbers of the hat and bar variants are evaluated next to brute force in
:func:`conjecture_report`.  Those comparisons are data, not assertions.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from .errors import InterpolationInconsistent, ParameterOutOfRange, TooManyElements
from .noncrossing import onc_poset
from .perm import Permutation, compose, format_permutation, inverse, long_cycle
from .polynomial import gen_binomial, interpolate_checked
from .poset import FinitePoset, IntervalPoset

MDIV_CAP = 100_000


def compared_components(m: int, window: str = "1..m") -> range:
    """Delta indices used by the order.

    ``"1..m"`` is the default; ``"0..m-1"`` is the alternative reading and
    only exists so tests can show it breaks the m = 1 degeneration.
    """
    if window == "1..m":
        return range(1, m + 1)
    if window == "0..m-1":
        return range(0, m)
    raise ValueError(f"unknown index window {window!r}")


@dataclass(frozen=True)
class MultichainElement:
    chain: tuple  # interval indices of x_1 .. x_m
    delta: tuple  # interval indices of d_0 .. d_m


@dataclass
class MdivPoset:
    n: int
    m: int
    base: IntervalPoset = field(repr=False)
    elements: list
    poset: FinitePoset = field(repr=False)
    top: int
    minimal: list
    window: str = "1..m"

    def __len__(self):
        return len(self.elements)

    def chain_perms(self, i: int) -> list:
        return [self.base.elements[j] for j in self.elements[i].chain]

    def delta_perms(self, i: int) -> list:
        return [self.base.elements[j] for j in self.elements[i].delta]

    def label(self, i: int) -> str:
        return " <= ".join(format_permutation(x) for x in self.chain_perms(i))

    def ranks(self) -> list:
        """Longest-chain rank from the minimal elements."""
        r = [0] * self.poset.size
        for i in self.poset.topological_order():
            low = self.poset.lower[i]
            r[i] = 1 + max(r[a] for a in low) if low else 0
        return r

    def is_graded(self) -> bool:
        """Every maximal chain has the same length."""
        r = self.ranks()
        lo = [0] * self.poset.size
        for i in self.poset.topological_order():
            low = self.poset.lower[i]
            lo[i] = 1 + min(lo[a] for a in low) if low else 0
        return lo == r and len({r[i] for i in self.poset.maximal()}) == 1

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "elements": [self.label(i) for i in range(len(self))],
            "covers": [[a, b] for a, b in self.poset.covers],
            "top": self.top,
            "minimal": list(self.minimal),
        }


def _multichains(base: IntervalPoset, m: int) -> list:
    """All ``x_1 <= ... <= x_m`` in the interval, as index tuples."""
    p = base.poset
    up = [[j for j in range(p.size) if p.leq(i, j)] for i in range(p.size)]
    out = []

    def extend(prefix):
        if len(prefix) == m:
            out.append(tuple(prefix))
            return
        for j in up[prefix[-1]] if prefix else range(p.size):
            prefix.append(j)
            extend(prefix)
            prefix.pop()

    extend([])
    return out


def _delta(base: IntervalPoset, chain: tuple, c: Permutation) -> tuple:
    xs = [Permutation.identity(c.n)] + [base.elements[j] for j in chain] + [c]
    return tuple(base.index(compose(inverse(xs[i]), xs[i + 1])) for i in range(len(xs) - 1))


def build_mdiv(n: int, m: int, cap: int = MDIV_CAP, window: str = "1..m") -> MdivPoset:
    """Build ONC_{2n+1}^{(m)} with the order checked on construction."""
    if n < 1 or m < 1:
        raise ParameterOutOfRange("n and m must be at least 1")
    base = onc_poset(n)
    expected = base.poset.count_multichains(m + 1)
    if expected > cap:
        raise TooManyElements(f"{expected} multichains exceed cap {cap}")
    c = long_cycle(2 * n + 1)
    chains = sorted(_multichains(base, m))
    elements = [MultichainElement(ch, _delta(base, ch, c)) for ch in chains]
    size = len(elements)
    comps = list(compared_components(m, window))

    # mask[i][v]: elements C whose i-th delta lies weakly above v
    bp = base.poset
    by_value = [[0] * bp.size for _ in range(m + 1)]
    for e, el in enumerate(elements):
        for i, v in enumerate(el.delta):
            by_value[i][v] |= 1 << e
    mask = []
    for i in range(m + 1):
        row = []
        for v in range(bp.size):
            acc = 0
            for u in range(bp.size):
                if bp.leq(v, u):
                    acc |= by_value[i][u]
            row.append(acc)
        mask.append(row)

    below = []
    for el in elements:
        acc = (1 << size) - 1
        for i in comps:
            acc &= mask[i][el.delta[i]]
        below.append(acc)
    _check_order(below)

    covers = []
    for j in range(size):
        strict = below[j] & ~(1 << j)
        rest = strict
        while rest:
            low = rest & -rest
            i = low.bit_length() - 1
            rest ^= low
            # i is covered by j if no k strictly between
            between = strict & ~(1 << i)
            k_mask = between
            covered = True
            while k_mask:
                lk = k_mask & -k_mask
                k = lk.bit_length() - 1
                k_mask ^= lk
                if (below[k] >> i) & 1:
                    covered = False
                    break
            if covered:
                covers.append((i, j))
    poset = FinitePoset(size, covers)
    maxima = poset.maximal()
    if len(maxima) != 1:
        raise AssertionError(f"expected a greatest element, found {len(maxima)} maxima")
    return MdivPoset(n, m, base, elements, poset, maxima[0], poset.minimal(), window)


def _check_order(below: list) -> None:
    for j, mj in enumerate(below):
        if not (mj >> j) & 1:
            raise AssertionError("order is not reflexive")
        rest = mj & ~(1 << j)
        while rest:
            low = rest & -rest
            i = low.bit_length() - 1
            rest ^= low
            if (below[i] >> j) & 1:
                raise AssertionError(f"antisymmetry fails for {i}, {j}")
            if below[i] & ~mj:
                raise AssertionError(f"transitivity fails through {i} < {j}")


# ---------------------------------------------------------------------------
# statistics


@dataclass
class MdivStats:
    elements: int
    max_chains: int
    zeta: dict  # q -> Z(q)
    minimal: int
    rank: int
    graded: bool


def mdiv_stats(mp: MdivPoset, q_max: int | None = None) -> MdivStats:
    q_max = mp.n + 2 if q_max is None else q_max
    zeta = {q: mp.poset.count_multichains(q) for q in range(1, q_max + 1)}
    if q_max >= 2 and zeta[2] != len(mp):
        raise AssertionError(f"Z(2) = {zeta[2]} but the poset has {len(mp)} elements")
    return MdivStats(
        elements=len(mp),
        max_chains=mp.poset.count_maximal_chains(),
        zeta=zeta,
        minimal=len(mp.minimal),
        rank=mp.ranks()[mp.top],
        graded=mp.is_graded(),
    )


def zeta_fits_polynomial(mp: MdivPoset) -> bool:
    """Do the Z(q) values fit one polynomial of degree at most the rank?"""
    rank = mp.ranks()[mp.top]
    try:
        interpolate_checked(mp.poset.count_multichains, rank)
    except InterpolationInconsistent:
        return False
    return True


def _hat(p: FinitePoset) -> FinitePoset:
    bottom = p.size
    covers = list(p.covers) + [(bottom, i) for i in p.minimal()]
    return FinitePoset(p.size + 1, covers)


def _bar(p: FinitePoset) -> FinitePoset:
    # the collapsed minimum sits below y iff some original minimum does
    mins = set(p.minimal())
    rest = [i for i in range(p.size) if i not in mins]
    index = {old: new + 1 for new, old in enumerate(rest)}
    for i in mins:
        index[i] = 0
    covers = {(index[a], index[b]) for a, b in p.covers}
    return FinitePoset(len(rest) + 1, covers)


def mdiv_moebius_variants(mp: MdivPoset) -> dict:
    hat = _hat(mp.poset)
    bar = _bar(mp.poset)
    return {
        "mu_hat": hat.moebius(hat.size - 1, mp.top),
        "mu_bar": bar.moebius(0, bar.maximal()[0]),
    }


# ---------------------------------------------------------------------------
# conjectured closed forms


def _as_exact(v: Fraction):
    return v.numerator if v.denominator == 1 else v


def conj_max_chains(n: int, m: int) -> int:
    return m**n * (2 * n + 1) ** (n - 1)


def conj_zeta(n: int, m: int, q: int):
    a = m * (q - 1) + 1
    top = (2 * m * (q - 1) + 1) * n + m * (q - 1) + 1
    return _as_exact(Fraction(a, top) * gen_binomial(top, n))


def conj_mu_hat(n: int, m: int):
    t = m * (2 * n + 1) - 1
    return _as_exact((-1) ** (n - 1) * Fraction(m - 1, t) * gen_binomial(t, n))


def conj_mu_bar(n: int, m: int):
    t1 = (m + 1) * (2 * n + 1) - 1
    t0 = m * (2 * n + 1) - 1
    v = Fraction(m, t1) * gen_binomial(t1, n) - Fraction(m - 1, t0) * gen_binomial(t0, n)
    return _as_exact((-1) ** n * v)


@dataclass
class ConjectureRow:
    n: int
    m: int
    elements: int
    max_chains: int
    max_chains_conj: int
    zeta: dict
    zeta_conj: dict
    mu_hat: int
    mu_hat_conj: object
    mu_bar: int
    mu_bar_conj: object
    graded: bool
    zeta_polynomial_fit: bool

    @property
    def agree(self) -> dict:
        return {
            "max_chains": self.max_chains == self.max_chains_conj,
            "zeta": self.zeta == self.zeta_conj,
            "mu_hat": self.mu_hat == self.mu_hat_conj,
            "mu_bar": self.mu_bar == self.mu_bar_conj,
        }

    @property
    def proven(self) -> bool:
        """m = 1 reduces to statements about ONC_{2n+1} itself."""
        return self.m == 1

    def to_dict(self) -> dict:
        d = asdict(self)
        d["zeta"] = {str(k): v for k, v in self.zeta.items()}
        d["zeta_conj"] = {str(k): str(v) for k, v in self.zeta_conj.items()}
        d["mu_hat_conj"] = str(self.mu_hat_conj)
        d["mu_bar_conj"] = str(self.mu_bar_conj)
        d["agree"] = self.agree
        d["proven"] = self.proven
        return d


def conjecture_row(n: int, m: int, cap: int = MDIV_CAP) -> ConjectureRow:
    mp = build_mdiv(n, m, cap)
    st = mdiv_stats(mp)
    mu = mdiv_moebius_variants(mp)
    return ConjectureRow(
        n=n,
        m=m,
        elements=st.elements,
        max_chains=st.max_chains,
        max_chains_conj=conj_max_chains(n, m),
        zeta=st.zeta,
        zeta_conj={q: conj_zeta(n, m, q) for q in st.zeta},
        mu_hat=mu["mu_hat"],
        mu_hat_conj=conj_mu_hat(n, m),
        mu_bar=mu["mu_bar"],
        mu_bar_conj=conj_mu_bar(n, m),
        graded=st.graded,
        zeta_polynomial_fit=zeta_fits_polynomial(mp),
    )


@dataclass
class ConjectureReport:
    rows: list

    def to_dict(self) -> dict:
        return {"rows": [r.to_dict() for r in self.rows]}

    def to_json(self, indent=2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(
            ["n", "m", "elements", "max_chains", "max_chains_conj", "zeta", "zeta_conj",
             "mu_hat", "mu_hat_conj", "mu_bar", "mu_bar_conj",
             "agree_max_chains", "agree_zeta", "agree_mu_hat", "agree_mu_bar"]
        )
        for r in self.rows:
            a = r.agree
            w.writerow(
                [r.n, r.m, r.elements, r.max_chains, r.max_chains_conj,
                 ";".join(str(r.zeta[q]) for q in sorted(r.zeta)),
                 ";".join(str(r.zeta_conj[q]) for q in sorted(r.zeta_conj)),
                 r.mu_hat, r.mu_hat_conj, r.mu_bar, r.mu_bar_conj,
                 int(a["max_chains"]), int(a["zeta"]), int(a["mu_hat"]), int(a["mu_bar"])]
            )
        return buf.getvalue()


def conjecture_report(n_max: int, m_max: int, cap: int = MDIV_CAP) -> ConjectureReport:
    rows = [conjecture_row(n, m, cap) for n in range(1, n_max + 1) for m in range(1, m_max + 1)]
    return ConjectureReport(rows)
