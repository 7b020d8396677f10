"""Command-line entry point.

Exit status: 0 on success, 1 on invalid input or a computational failure,
2 when a verification suite reports a failed check.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import numth, suzuki, verify
from .groups import groupfile
from .groups.engine import DEFAULT_CAP, spectrum_of
from .spectrum import Spectrum, SpectrumError, gm_condition, max_coclique, nonsolvability_criterion, prime_graph

EXIT_OK, EXIT_FAIL, EXIT_VERIFY = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_FAIL, f"{self.prog}: error: {message}\n")


def _mu(text: str) -> Spectrum:
    if any(c.isspace() for c in text):
        raise argparse.ArgumentTypeError("write the list as comma-separated integers without spaces")
    try:
        return Spectrum.from_csv(text)
    except SpectrumError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _csv(values) -> str:
    return ",".join(map(str, values))


def _emit(fmt: str, data: dict, plain_lines: list[str]) -> None:
    if fmt == "json":
        print(json.dumps(data))
    else:
        print("\n".join(plain_lines))


def cmd_sz(args) -> int:
    p = suzuki.params(args.alpha)
    mu = suzuki.mu_sz(args.alpha)
    t, coclique = max_coclique(prime_graph(mu))
    data = {
        "alpha": p.alpha,
        "q": p.q,
        "order": p.order,
        "m": list(p.m),
        "mu": list(mu.mu),
        "t": t,
        "coclique": list(coclique),
    }
    _emit(
        args.format,
        data,
        [
            f"alpha={p.alpha}",
            f"q={p.q}",
            f"order={p.order}",
            f"m={_csv(p.m)}",
            f"mu={mu}",
            f"t={t}",
            f"coclique={_csv(coclique)}",
        ],
    )
    return EXIT_OK


def cmd_sz_square(args) -> int:
    mu = suzuki.square_spectrum(args.alpha)
    w = nonsolvability_criterion(mu)
    q = suzuki.params(args.alpha).q
    data = {
        "alpha": args.alpha,
        "q": q,
        "mu": list(mu.mu),
        "primes": list(mu.primes),
        "witness": list(w.sigma) if w else None,
    }
    _emit(
        args.format,
        data,
        [f"alpha={args.alpha}", f"q={q}", f"mu={mu}", f"primes={_csv(mu.primes)}", f"witness={_csv(w.sigma) if w else 'none'}"],
    )
    return EXIT_OK


def cmd_recognize_square(args) -> int:
    c = suzuki.classify_isospectral_squares(args.alpha)
    data = c.to_json()
    lines = [f"q={c.q}", f"count={c.count}"] + [f"{g.label} mu={g.mu}" for g in c.groups]
    if args.p is not None:
        spec, iso = suzuki.twisted_square_spectrum(args.alpha, args.p)
        n, reps = suzuki.outer_class_count(args.alpha, args.p)
        data["twist"] = {"p": args.p, "mu": list(spec.mu), "isospectral": iso, "classes": n, "representatives": reps}
        lines += [
            f"twist p={args.p} mu={spec}",
            f"twist isospectral={str(iso).lower()}",
            f"outer classes={n} representatives={_csv(reps)}",
        ]
    _emit(args.format, data, lines)
    return EXIT_OK


def cmd_spectrum(args) -> int:
    spec = groupfile.load(args.group)
    mu = spectrum_of(spec, args.cap)
    data = {"group": spec.describe(), "mu": list(mu.mu), "exponent": mu.exponent, "primes": list(mu.primes)}
    _emit(
        args.format,
        data,
        [f"group={spec.describe()}", f"mu={mu}", f"exponent={mu.exponent}", f"primes={_csv(mu.primes)}"],
    )
    return EXIT_OK


def cmd_criterion(args) -> int:
    w = nonsolvability_criterion(args.mu)
    data = {"mu": list(args.mu.mu), "witness": list(w.sigma) if w else None, "gm_condition": gm_condition(w) if w else None}
    lines = [f"mu={args.mu}", f"witness={_csv(w.sigma) if w else 'none'}"]
    if w:
        lines.append(f"gm_condition={str(gm_condition(w)).lower()}")
    _emit(args.format, data, lines)
    return EXIT_OK


def cmd_prime_graph(args) -> int:
    g = prime_graph(args.mu)
    if args.format == "dot":
        sys.stdout.write(g.to_dot())
        return EXIT_OK
    t, witness = max_coclique(g)
    data = {**g.to_json(), "t": t, "coclique": list(witness)}
    _emit(
        args.format,
        data,
        [
            f"vertices={_csv(g.vertices)}",
            "edges=" + ",".join(f"{p}-{q}" for p, q in sorted(g.edges)),
            f"t={t}",
            f"coclique={_csv(witness)}",
        ],
    )
    return EXIT_OK


def cmd_zsigmondy(args) -> int:
    res = numth.primitive_prime_divisor(args.base, args.exp)
    data = {"base": res.base, "exponent": res.exponent, "prime": res.prime, "exception": res.exception}
    line = f"prime={res.prime}" if res.exists else f"exception={res.exception}"
    _emit(args.format, data, [f"base={res.base}", f"exponent={res.exponent}", line])
    return EXIT_OK


def cmd_verify(args) -> int:
    names = verify.SUITES if args.suite == "all" else (args.suite,)
    reports = [verify.run_suite(n) for n in names]
    if args.format == "json":
        print(json.dumps({"passed": all(r.passed for r in reports), "suites": [r.to_json() for r in reports]}, indent=1))
    else:
        print("\n\n".join(r.to_table() for r in reports))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="orderspec", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def command(name, func, help, dot=False):
        p = sub.add_parser(name, help=help)
        choices = ["plain", "json"] + (["dot"] if dot else [])
        p.add_argument("--format", choices=choices, default="plain")
        p.set_defaults(func=func)
        return p

    p = command("sz", cmd_sz, "parameters and spectrum of Sz(2^alpha)")
    p.add_argument("--alpha", type=int, required=True)
    p = command("sz-square", cmd_sz_square, "spectrum of Sz(q) x Sz(q) and its criterion witness")
    p.add_argument("--alpha", type=int, required=True)
    p = command("recognize-square", cmd_recognize_square, "groups isospectral to Sz(q) x Sz(q)")
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--p", type=int, help="also report the order-p diagonal twisted extension")
    p = command("spectrum", cmd_spectrum, "spectrum of a group described by a JSON file")
    p.add_argument("--group", required=True, metavar="FILE")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="enumeration cap (default 2^21)")
    p = command("criterion", cmd_criterion, "search for a four-prime nonsolvability witness")
    p.add_argument("--mu", type=_mu, required=True, metavar="LIST")
    p = command("prime-graph", cmd_prime_graph, "prime graph of a spectrum", dot=True)
    p.add_argument("--mu", type=_mu, required=True, metavar="LIST")
    p = command("zsigmondy", cmd_zsigmondy, "smallest primitive prime divisor of Q^N - 1")
    p.add_argument("--base", type=int, required=True)
    p.add_argument("--exp", type=int, required=True)
    p = command("verify", cmd_verify, "run verification suites")
    p.add_argument("--suite", choices=verify.SUITES + ("all",), required=True)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ArithmeticError, RuntimeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
