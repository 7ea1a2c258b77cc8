"""Command-line front end.

Exit status is 0 on success, 2 when a verification finds a mismatch and 1
on usage errors (bad flags, malformed permutations, caps exceeded).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import mdiv, tables, verify
from .errors import AltOrderError
from .hurwitz import WORD_CAP, orbit_decomposition, orbit_graph_dot
from .noncrossing import ONC_CAP, enumerate_onc, onc_poset
from .perm import THREE_CYCLES, TRANSPOSITIONS, Permutation, format_permutation, parse_permutation
from .polynomial import format_coeffs
from .poset import DEFAULT_MAX_ELEMENTS, GeneratorContext, interval, zeta_and_moebius
from .trees import phi, phi_labels

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH = 0, 1, 2
LARGE_CAP = 5_000_000


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        kwargs.setdefault("allow_abbrev", False)
        super().__init__(*args, **kwargs)

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class CommandConfig:
    command: str
    fmt: str
    max_elements: int
    max_words: int
    threads: int
    args: argparse.Namespace

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "CommandConfig":
        if args.threads < 1:
            raise UsageError("--threads must be positive")
        if args.max_elements < 1 or args.max_words < 1:
            raise UsageError("caps must be positive")
        max_elements = max(args.max_elements, LARGE_CAP) if args.allow_large else args.max_elements
        return cls(args.command, getattr(args, "format", "text"), max_elements, args.max_words, args.threads, args)


def _family(text: str):
    if text in (TRANSPOSITIONS, THREE_CYCLES):
        return text
    try:
        k = int(text)
    except ValueError:
        raise UsageError(f"unknown family {text!r}") from None
    return k


def _interval_from(args, cfg) -> tuple:
    n = args.n
    top = parse_permutation(args.perm, n)
    bottom = parse_permutation(args.bottom, n) if args.bottom else Permutation.identity(n)
    ctx = GeneratorContext(n, _family(args.family))
    return interval(ctx, bottom, top, cfg.max_elements)


def _onc_interval(degree: int):
    if degree % 2 == 0:
        raise UsageError("--onc expects an odd degree 2n+1")
    return onc_poset((degree - 1) // 2)


def _poly_text(p) -> str:
    return format_coeffs(p.coeffs)


# ---------------------------------------------------------------------------
# subcommands


def cmd_interval(cfg, out) -> int:
    iv = _interval_from(cfg.args, cfg)
    if cfg.fmt == "json":
        out.write(iv.to_json(indent=2) + "\n")
    elif cfg.fmt == "dot":
        out.write(iv.to_dot())
    else:
        out.write(f"elements: {len(iv)}\nrank numbers: {format_coeffs(iv.rank_numbers())}\n")
        out.write(f"maximal chains: {iv.poset.count_maximal_chains()}\n")
    return EXIT_OK


def _zeta_target(cfg):
    a = cfg.args
    if a.onc is not None:
        return _onc_interval(a.onc)
    if a.perm is None or a.n is None:
        raise UsageError("give --onc N or both --perm and --n")
    return _interval_from(a, cfg)


def cmd_zeta(cfg, out) -> int:
    iv = _zeta_target(cfg)
    z, mu = zeta_and_moebius(iv)
    if cfg.args.q is not None:
        out.write(f"{z(cfg.args.q)}\n")
    elif cfg.fmt == "json":
        out.write(json.dumps({"coefficients": [str(c) for c in z.coeffs]}) + "\n")
    else:
        out.write(_poly_text(z) + "\n")
    return EXIT_OK


def cmd_moebius(cfg, out) -> int:
    _, mu = zeta_and_moebius(_zeta_target(cfg))
    out.write(f"{mu}\n")
    return EXIT_OK


def cmd_onc(cfg, out) -> int:
    N = cfg.args.n
    if N > ONC_CAP:
        raise UsageError(f"degree above {ONC_CAP}")
    if N % 2 == 1:
        iv = onc_poset((N - 1) // 2)
        if cfg.fmt == "dot":
            out.write(iv.to_dot(name=f"onc{N}"))
        elif cfg.fmt == "json":
            out.write(iv.to_json(indent=2) + "\n")
        else:
            for x, r in zip(iv.elements, iv.ranks):
                out.write(f"{r}\t{format_permutation(x)}\n")
        return EXIT_OK
    elems = enumerate_onc(N)
    if cfg.fmt == "dot":
        raise UsageError("ONC of even degree is not an interval; use text or json")
    if cfg.fmt == "json":
        out.write(json.dumps([format_permutation(x) for x in elems], indent=2) + "\n")
    else:
        for x in elems:
            out.write(format_permutation(x) + "\n")
    return EXIT_OK


def cmd_tables(cfg, out) -> int:
    a = cfg.args
    t = a.table
    if t == 3:
        limit = a.max_pq if a.max_pq is not None else tables.DEFAULT_MAX[3]
        if limit > 5 and not a.allow_large:
            raise UsageError("rows with p+q > 5 need --allow-large")
    else:
        limit = a.max_n if a.max_n is not None else tables.DEFAULT_MAX[t]
    out.write(tables.TABLES[t](limit))
    return EXIT_OK


def cmd_hurwitz(cfg, out) -> int:
    x = parse_permutation(cfg.args.perm, cfg.args.n)
    if cfg.fmt == "dot":
        out.write(orbit_graph_dot(x, cfg.max_words))
        return EXIT_OK
    rep = orbit_decomposition(x, cfg.max_words)
    if cfg.fmt == "json":
        out.write(rep.to_json(indent=2) + "\n")
    else:
        out.write(f"words: {rep.word_count}\norbits: {rep.orbit_count}\n")
        for o in rep.orbits:
            out.write(f"  size {o.size}: {o.representative}\n")
    return EXIT_OK if rep.ok else EXIT_MISMATCH


def cmd_bijection(cfg, out) -> int:
    x = parse_permutation(cfg.args.perm, cfg.args.n)
    tree = phi(x)
    if cfg.fmt == "json":
        out.write(tree.to_json(indent=2) + "\n")
    elif cfg.fmt == "dot":
        out.write(tree.to_dot(phi_labels(tree)))
    else:
        white, black, _ = tree.degrees()
        out.write(f"edges: {tree.edges}\nwhite degrees: {list(white)}\nblack degrees: {list(black)}\n")
    return EXIT_OK


def cmd_mdiv(cfg, out) -> int:
    a = cfg.args
    if a.conjectures:
        rep = mdiv.conjecture_report(a.max_n, a.max_m, cfg.max_elements)
        out.write(rep.to_csv() if cfg.fmt == "csv" else rep.to_json() + "\n")
        return EXIT_OK
    if a.n is None or a.m is None:
        raise UsageError("give --n and --m, or --conjectures")
    row = mdiv.conjecture_row(a.n, a.m, cfg.max_elements)
    if a.report == "json":
        out.write(json.dumps(row.to_dict(), indent=2) + "\n")
    else:
        out.write(f"elements: {row.elements}\nmaximal chains: {row.max_chains}\n")
        out.write(f"mu_hat: {row.mu_hat}\nmu_bar: {row.mu_bar}\n")
    return EXIT_OK


def cmd_verify(cfg, out) -> int:
    checks = verify.run_suite(cfg.args.suite, cfg.args.seed)
    for c in checks:
        out.write(c.line() + "\n")
    passed = sum(c.ok for c in checks)
    out.write(f"{passed}/{len(checks)} checks passed\n")
    return EXIT_OK if verify.suite_passed(checks) else EXIT_MISMATCH


COMMANDS = {
    "interval": cmd_interval,
    "zeta": cmd_zeta,
    "moebius": cmd_moebius,
    "onc": cmd_onc,
    "tables": cmd_tables,
    "hurwitz": cmd_hurwitz,
    "bijection": cmd_bijection,
    "mdiv": cmd_mdiv,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="altorder", description="Prefix order of the alternating group generated by 3-cycles.")
    p.add_argument("--threads", type=int, default=1, help="worker count (results do not depend on it)")
    p.add_argument("--max-elements", type=int, default=DEFAULT_MAX_ELEMENTS)
    p.add_argument("--max-words", type=int, default=WORD_CAP)
    p.add_argument("--allow-large", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def perm_args(sp, required=True):
        sp.add_argument("--perm", required=required, help='cycle notation, e.g. "(1 2)(3 4)"')
        sp.add_argument("--n", type=int, required=required, help="degree")

    sp = sub.add_parser("interval", help="an interval [bottom, perm] of the prefix order")
    perm_args(sp)
    sp.add_argument("--bottom", help="lower end, default the identity")
    sp.add_argument("--family", default=THREE_CYCLES, help="transpositions, three_cycles or k")
    sp.add_argument("--format", choices=["text", "json", "dot"], default="text")

    for name, text in (("zeta", "zeta polynomial or one of its values"), ("moebius", "Moebius number")):
        sp = sub.add_parser(name, help=text)
        sp.add_argument("--onc", type=int, help="odd degree N; uses [e, (1 ... N)]")
        perm_args(sp, required=False)
        sp.add_argument("--bottom")
        sp.add_argument("--family", default=THREE_CYCLES)
        sp.add_argument("--format", choices=["text", "json"], default="text")
        if name == "zeta":
            sp.add_argument("--q", type=int, help="evaluate at q")

    sp = sub.add_parser("onc", help="elements of ONC_N (Hasse diagram for odd N)")
    sp.add_argument("--n", type=int, required=True, help="degree N")
    sp.add_argument("--format", choices=["text", "json", "dot"], default="text")

    sp = sub.add_parser("tables", help="reproduce the rank and numerology tables as CSV")
    sp.add_argument("--table", type=int, choices=[1, 2, 3], required=True)
    sp.add_argument("--max-n", type=int)
    sp.add_argument("--max-pq", type=int)
    sp.add_argument("--format", choices=["csv"], default="csv")

    sp = sub.add_parser("hurwitz", help="Hurwitz orbits on reduced 3-cycle factorizations")
    perm_args(sp)
    sp.add_argument("--format", choices=["text", "json", "dot"], default="text")

    sp = sub.add_parser("bijection", help="tree bijections")
    sp.add_argument("which", choices=["phi"])
    perm_args(sp)
    sp.add_argument("--format", choices=["text", "json", "dot"], default="text")

    sp = sub.add_parser("mdiv", help="m-divisible posets and conjecture reports")
    sp.add_argument("--n", type=int)
    sp.add_argument("--m", type=int)
    sp.add_argument("--report", choices=["text", "json"], default="text")
    sp.add_argument("--conjectures", action="store_true")
    sp.add_argument("--max-n", type=int, default=2)
    sp.add_argument("--max-m", type=int, default=3)
    sp.add_argument("--format", choices=["json", "csv"], default="json")

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("--suite", choices=[*verify.SUITES, "all"], default="all")
    sp.add_argument("--seed", type=int, default=verify.DEFAULT_SEED, help="seed for randomized checks")
    return p


def run(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        cfg = CommandConfig.from_args(args)
        return COMMANDS[cfg.command](cfg, out)
    except (UsageError, AltOrderError) as exc:
        print(f"altorder: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
