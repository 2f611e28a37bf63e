"""Command line front end.

    braidalex --strands 2 --word "1 1 1" --mode alexander
    braidalex --strands 4 --word "1 -2 1 -2 1 -2 3" --format json --oracle-check
    braidalex selftest --seed 0 --trials 100

Exit status: 0 on success, 1 on bad input, 2 on an internal consistency
failure (inexact Torres-Fox division or oracle disagreement).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Sequence

from . import checks
from .alexander import LinkInvariantReport, full_report
from .braid import parse_word
from .errors import DivisibilityFailure, IndexOutOfRange, InputError, OracleMismatch, ParseError
from .fox import oracle_axis_polynomial
from .laurent import X, LaurentPoly, units_equal, var_name

MODES = ("axis", "invariant", "alexander", "all")
FORMATS = ("text", "json", "latex")
FIELDS = {"axis": "withAxis", "invariant": "invariant", "alexander": "alexander"}


@dataclass(frozen=True)
class CliConfig:
    strands: int
    word: str
    mode: str = "all"
    format: str = "text"
    oracle_check: bool = False
    seed: int | None = None

    def __post_init__(self):
        if self.strands < 1:
            raise IndexOutOfRange(f"--strands must be at least 1, got {self.strands}")
        if self.mode not in MODES:
            raise InputError(f"unknown mode {self.mode!r}")
        if self.format not in FORMATS:
            raise InputError(f"unknown format {self.format!r}")


def _selected(report: LinkInvariantReport, mode: str) -> dict[str, LaurentPoly]:
    polys = {
        "withAxis": report.with_axis,
        "invariant": report.invariant,
        "alexander": report.alexander,
    }
    if mode == "all":
        return polys
    key = FIELDS[mode]
    return {key: polys[key]}


def poly_to_json(p: LaurentPoly) -> dict:
    terms = []
    for m, c in p.sorted_terms():
        terms.append({"coeff": c, "exponents": {var_name(v): e for v, e in m}})
    return {"terms": terms}


def _var_from_name(name: str) -> int:
    if name == "x":
        return X
    if name.startswith("t") and name[1:].isdigit() and int(name[1:]) >= 1:
        return int(name[1:])
    raise ValueError(f"unknown variable name {name!r}")


def poly_from_json(obj: dict) -> LaurentPoly:
    return LaurentPoly.from_terms(
        ({_var_from_name(k): int(e) for k, e in t["exponents"].items()}, int(t["coeff"]))
        for t in obj["terms"]
    )


def render(report: LinkInvariantReport, fmt: str = "text", mode: str = "all") -> str:
    polys = _selected(report, mode)
    if fmt == "json":
        doc = {
            "strands": report.strands,
            "word": list(report.word.letters),
            "components": report.components,
            "variables": list(report.variables),
            "polynomials": {k: poly_to_json(p) for k, p in polys.items()},
        }
        return json.dumps(doc, indent=2)
    latex = fmt == "latex"
    return "\n".join(f"{k}: {p.to_text(latex=latex)}" for k, p in polys.items())


def run(config: CliConfig, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        word = parse_word(config.word, config.strands)
    except (ParseError, IndexOutOfRange) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=err)
        return 1
    try:
        report = full_report(word)
        if config.oracle_check:
            oracle = oracle_axis_polynomial(word)
            if not units_equal(oracle, report.with_axis):
                raise OracleMismatch(f"oracle gives {oracle}, pipeline gives {report.with_axis}")
    except (DivisibilityFailure, OracleMismatch) as exc:
        print(f"internal error: {type(exc).__name__}: {exc}", file=err)
        return 2
    print(render(report, config.format, config.mode), file=out)
    if config.oracle_check:
        print("oracle check: ok", file=err)
    return 0


def _selftest(argv: Sequence[str]) -> int:
    parser = argparse.ArgumentParser(prog="braidalex selftest", description="run randomized invariance suites")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--trials", type=int, default=None, help="trials per suite (default: per-suite minimum)")
    args = parser.parse_args(argv)
    results = checks.run_all(seed=args.seed, trials=args.trials)
    for r in results:
        print(r.line())
        for f in r.failures[:3]:
            print(f"    {f}")
    return 0 if all(r.passed for r in results) else 2


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if argv and argv[0] == "selftest":
        return _selftest(argv[1:])
    parser = argparse.ArgumentParser(
        prog="braidalex",
        description="Multivariable Alexander polynomial of a closed braid.",
        epilog='subcommand: "braidalex selftest [--seed K] [--trials M]"',
    )
    parser.add_argument("--strands", type=int, required=True)
    parser.add_argument("--word", default="", help='signed generator indices, e.g. "1 -2 1"')
    parser.add_argument("--mode", choices=MODES, default="all")
    parser.add_argument("--format", choices=FORMATS, default="text")
    parser.add_argument("--oracle-check", action="store_true")
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    try:
        config = CliConfig(args.strands, args.word, args.mode, args.format, args.oracle_check)
    except InputError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
