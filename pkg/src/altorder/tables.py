"""Reproduction of the three numerical tables as CSV text.

Polynomial cells are coefficient lists, lowest degree first, separated by
semicolons.  Output is deterministic so it can be compared byte for byte
against the golden files under ``tests/golden``.
"""

from __future__ import annotations

import csv
import io

from .alternating import rank_generating_polynomial
from .noncrossing import onc_poset, xpq_numerology
from .polynomial import format_coeffs


def _csv(header: list, rows: list) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def table1_rows(max_n: int = 7) -> list:
    """``(n, F_n(q) by ocyc, sum of q^ell3)`` for A_n, n = 0..max_n."""
    rows = []
    for n in range(0, max_n + 1):
        f, ell = rank_generating_polynomial(n)
        rows.append((n, [int(c) for c in f.coeffs], [int(c) for c in ell.coeffs]))
    return rows


def table1_csv(max_n: int = 7) -> str:
    rows = [[n, format_coeffs(f), format_coeffs(e)] for n, f, e in table1_rows(max_n)]
    return _csv(["n", "F_n", "rank_generating"], rows)


def table2_rows(max_n: int = 5) -> list:
    return [(n, onc_poset(n).rank_numbers()) for n in range(1, max_n + 1)]


def table2_csv(max_n: int = 5) -> str:
    return _csv(["n", "rank_numbers"], [[n, format_coeffs(r)] for n, r in table2_rows(max_n)])


def table3_rows(max_pq: int = 5) -> list:
    out = []
    for s in range(2, max_pq + 1):
        for p in range(1, s // 2 + 1):
            out.append(xpq_numerology(p, s - p))
    return out


def table3_csv(max_pq: int = 5) -> str:
    rows = [[r.p, r.q, r.m, r.t, r.mu, format_coeffs(r.r)] for r in table3_rows(max_pq)]
    return _csv(["p", "q", "m", "t", "mu", "r"], rows)


TABLES = {1: table1_csv, 2: table2_csv, 3: table3_csv}
DEFAULT_MAX = {1: 7, 2: 5, 3: 5}
