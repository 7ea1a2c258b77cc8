"""Count Hurwitz orbits on reduced 3-cycle words for every conjugacy class of A_N.

    python3 scripts/hurwitz_orbits.py --n 8
"""

import argparse

from altorder.hurwitz import expected_orbit_count, orbit_decomposition
from altorder.perm import Permutation


def class_representative(cycle_type, n):
    cycles, start = [], 1
    for length in cycle_type:
        cycles.append(tuple(range(start, start + length)))
        start += length
    return Permutation.from_cycles(cycles, n)


def even_cycle_types(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in even_cycle_types(n - k, k):
            yield (k,) + rest


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=7)
    ap.add_argument("--max-words", type=int, default=200_000)
    args = ap.parse_args()

    for ct in even_cycle_types(args.n):
        if sum(1 for k in ct if k % 2 == 0) % 2:
            continue  # odd permutation
        if all(k == 1 for k in ct):
            continue
        x = class_representative([k for k in ct if k > 1], args.n)
        rep = orbit_decomposition(x, args.max_words)
        want = expected_orbit_count(x)
        status = "ok" if rep.ok and rep.orbit_count == want else "MISMATCH"
        print(f"{str(x):<28} words {rep.word_count:>7}  orbits {rep.orbit_count:>3}  expected {want:>3}  {status}")


if __name__ == "__main__":
    main()
