"""Write the rank and numerology tables as CSV files.

    python3 scripts/reproduce_tables.py --out results/
"""

import argparse
import time
from pathlib import Path

from altorder import tables


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Path("results"))
    ap.add_argument("--max-n1", type=int, default=tables.DEFAULT_MAX[1])
    ap.add_argument("--max-n2", type=int, default=tables.DEFAULT_MAX[2])
    ap.add_argument("--max-pq", type=int, default=tables.DEFAULT_MAX[3])
    args = ap.parse_args()

    args.out.mkdir(parents=True, exist_ok=True)
    limits = {1: args.max_n1, 2: args.max_n2, 3: args.max_pq}
    for t, limit in limits.items():
        start = time.perf_counter()
        path = args.out / f"table{t}.csv"
        path.write_text(tables.TABLES[t](limit))
        print(f"table {t}: {path} ({time.perf_counter() - start:.1f}s)")


if __name__ == "__main__":
    main()
