"""Tabulate the m-divisible poset statistics against the conjectured formulas.

    python3 scripts/mdiv_conjectures.py --max-n 3 --max-m 2
"""

import argparse
import time

from altorder.mdiv import MDIV_CAP, conjecture_row


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=2)
    ap.add_argument("--max-m", type=int, default=3)
    ap.add_argument("--cap", type=int, default=MDIV_CAP)
    args = ap.parse_args()

    header = f"{'n':>2} {'m':>2} {'elems':>6} {'chains':>7} {'mu_hat':>7} {'mu_bar':>7}  agreement"
    print(header)
    for n in range(1, args.max_n + 1):
        for m in range(1, args.max_m + 1):
            start = time.perf_counter()
            row = conjecture_row(n, m, args.cap)
            flags = " ".join(f"{k}={'y' if v else 'N'}" for k, v in row.agree.items())
            tag = " (proven case)" if row.proven else ""
            print(
                f"{n:>2} {m:>2} {row.elements:>6} {row.max_chains:>7} {row.mu_hat:>7} {row.mu_bar:>7}  "
                f"{flags}{tag} [{time.perf_counter() - start:.1f}s]"
            )


if __name__ == "__main__":
    main()
