"""Command line front end: ``solve``, ``simulate``, ``check-partition``, ``figure``.

Results go to stdout as ``key = value`` lines, diagnostics to stderr.
Exit codes: 0 success, 2 usage or config error, 3 zero-probability
condition, 4 Monte Carlo run in which the observation never occurred.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Optional

from . import figures
from .montecarlo import EmptyConditionError, McConfig, simulate
from .prob import ZeroProbabilityError, as_rational
from .scenarios import (
    DARTS_SCENARIOS,
    ScenarioId,
    ScenarioParams,
    darts_demo,
    render_decimal,
    run,
    scenario_id,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_ZERO_PROB = 3
EXIT_EMPTY = 4

COMMANDS = ("solve", "simulate", "check-partition", "figure")
FLAGS = (
    "scenario", "p", "n", "names", "target", "girl-weight",
    "trials", "seed", "workers", "figure", "out",
)
DEFAULT_TRIALS = 10**6


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class Invocation:
    command: str
    scenario: Optional[ScenarioId] = None
    params: ScenarioParams = ScenarioParams()
    mc: Optional[McConfig] = None
    figure: Optional[str] = None
    figure_p: Optional[Fraction] = None
    out: Optional[Path] = None


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", metavar="PATH", help="key = value file; flags override it")
    for flag in FLAGS:
        common.add_argument(f"--{flag}", default=None)

    parser = argparse.ArgumentParser(prog="twochild", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    for cmd in COMMANDS:
        sub.add_parser(cmd, parents=[common])
    return parser


def read_config(path) -> dict:
    values = {}
    try:
        lines = Path(path).read_text().splitlines()
    except OSError as exc:
        raise UsageError(f"--config: cannot read {path}: {exc.strerror}") from None
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key = key.strip()
        if not sep or key not in FLAGS:
            raise UsageError(f"--config {path}:{lineno}: expected '<flag> = <value>' with a known flag, got {raw!r}")
        values[key] = value.strip()
    return values


def read_names(path) -> tuple:
    """Parse a ``label<TAB>num/den`` file into ``(labels, weights)``."""
    try:
        lines = Path(path).read_text().splitlines()
    except OSError as exc:
        raise UsageError(f"--names: cannot read {path}: {exc.strerror}") from None
    labels, weights = [], []
    for lineno, raw in enumerate(lines, 1):
        if not raw.strip():
            continue
        label, sep, weight = raw.partition("\t")
        if not sep:
            raise UsageError(f"--names {path}:{lineno}: expected 'label<TAB>num/den'")
        labels.append(label.strip())
        weights.append(_rational("names", weight))
    if sum(weights) != 1:
        raise UsageError(f"--names: weights must sum to exactly 1, got {sum(weights)}")
    return tuple(labels), tuple(weights)


def _rational(flag: str, text: str) -> Fraction:
    try:
        return as_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"--{flag}: {exc}") from None


def _int(flag: str, text: str, low: int = 0) -> int:
    try:
        value = int(text)
    except ValueError:
        raise UsageError(f"--{flag}: expected an integer, got {text!r}") from None
    if value < low:
        raise UsageError(f"--{flag}: must be >= {low}, got {value}")
    return value


def parse(argv) -> Invocation:
    """Validate ``argv`` into an :class:`Invocation` or raise :class:`UsageError`."""
    ns = _parser().parse_args(argv)
    opts = read_config(ns.config) if ns.config else {}
    for flag in FLAGS:
        value = getattr(ns, flag.replace("-", "_"))
        if value is not None:
            opts[flag] = value

    if ns.command == "figure":
        return _parse_figure(opts)

    if "scenario" not in opts:
        raise UsageError("--scenario is required")
    try:
        s = scenario_id(opts["scenario"])
    except ValueError as exc:
        raise UsageError(f"--scenario: {exc}") from None

    fields: dict = {}
    if "p" in opts:
        fields["p"] = _rational("p", opts["p"])
        if not 0 < fields["p"] <= 1:
            raise UsageError(f"--p: naming probability must satisfy 0 < p <= 1, got {fields['p']}")
    if "n" in opts:
        fields["n"] = _int("n", opts["n"], 2)
    if "girl-weight" in opts:
        fields["girl_weight"] = _rational("girl-weight", opts["girl-weight"])
        if not 0 <= fields["girl_weight"] <= 1:
            raise UsageError(f"--girl-weight: must lie in [0, 1], got {fields['girl_weight']}")
    if "names" in opts:
        fields["labels"], fields["weights"] = read_names(opts["names"])
    if "target" in opts:
        fields["target"] = opts["target"]
    params = ScenarioParams(**fields)
    if s is ScenarioId.ADAM_WEIGHTED:
        if params.target is not None and params.target not in (params.labels or ("Adam",)):
            raise UsageError(f"--target: {params.target!r} is not a name in the weights file")
        try:
            params.weighted_model()
        except ValueError as exc:
            raise UsageError(f"--names: {exc}") from None

    if s in DARTS_SCENARIOS and ns.command == "simulate":
        raise UsageError(f"--scenario: {s} is a partition demo and has no Monte Carlo form")
    if s not in DARTS_SCENARIOS and ns.command == "check-partition":
        raise UsageError(f"--scenario: check-partition needs a darts scenario, got {s}")

    mc = None
    if ns.command == "simulate":
        try:
            mc = McConfig(
                trials=_int("trials", opts.get("trials", str(DEFAULT_TRIALS)), 1),
                seed=_int("seed", opts.get("seed", "0")),
                workers=_int("workers", opts.get("workers", "1"), 1),
            )
        except ValueError as exc:
            raise UsageError(f"--seed: {exc}") from None
    return Invocation(ns.command, s, params, mc)


def _parse_figure(opts: dict) -> Invocation:
    name = opts.get("figure")
    if name is None:
        raise UsageError("--figure is required")
    if name not in figures.FIGURES:
        raise UsageError(f"--figure: unknown figure {name!r} (known: {', '.join(figures.FIGURES)})")
    p = _rational("p", opts["p"]) if "p" in opts else None
    try:
        figures.build(name, p)
    except ValueError as exc:
        raise UsageError(f"--p: {exc}") from None
    out = Path(opts["out"]) if "out" in opts else None
    return Invocation("figure", figure=name, figure_p=p, out=out)


def fmt(q: Optional[Fraction]) -> str:
    if q is None:
        return "none"
    return f"{q.numerator}/{q.denominator}"


def _emit(lines, stream=None) -> None:
    stream = stream or sys.stdout
    stream.write("".join(f"{k} = {v}\n" for k, v in lines))


def cmd_solve(inv: Invocation) -> int:
    try:
        report = run(inv.scenario, inv.params)
    except ZeroProbabilityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ZERO_PROB
    _emit([
        ("scenario", inv.scenario.value),
        ("exact", fmt(report.exact)),
        ("decimal", report.decimal),
        ("closed_form", fmt(report.closed_form)),
        ("match", str(report.match).lower()),
    ])
    return EXIT_OK


def cmd_simulate(inv: Invocation) -> int:
    cfg = inv.mc
    header = [
        ("scenario", inv.scenario.value),
        ("trials", cfg.trials),
        ("seed", cfg.seed),
        ("workers", cfg.workers),
    ]
    try:
        est = simulate(inv.scenario, inv.params, cfg)
    except EmptyConditionError as exc:
        _emit(header + [("a", exc.estimate.a), ("b", exc.estimate.b), ("ratio", "undefined")])
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EMPTY
    try:
        exact = run(inv.scenario, inv.params).exact
    except ZeroProbabilityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ZERO_PROB
    _emit(header + [
        ("a", est.a),
        ("b", est.b),
        ("ratio", render_decimal(Fraction(est.a, est.b))),
        ("stderr", f"{est.stderr:.6e}"),
        ("exact", fmt(exact)),
        ("sigma_distance", f"{est.sigma_distance(exact):.4f}"),
    ])
    return EXIT_OK


def cmd_check_partition(inv: Invocation) -> int:
    variant = "overlapping" if inv.scenario is ScenarioId.DARTS_OVERLAPPING else "disjoint"
    report = darts_demo(variant)
    lines = [
        ("scenario", inv.scenario.value),
        ("disjoint", str(report.disjoint).lower()),
        ("covering", str(report.covering).lower()),
    ]
    for label, (pf, cond) in zip(report.labels, report.per_part):
        lines.append((f"P({label})", fmt(pf)))
        lines.append((f"P(E|{label})", fmt(cond) if cond is not None else "undefined"))
    lines += [
        ("constant_conditional", fmt(report.constant_conditional)),
        ("P(E)", fmt(report.p_of_e)),
        ("total_probability_sum", fmt(report.total_prob_identity)),
        ("law_applies", str(report.law_applies).lower()),
    ]
    _emit(lines)
    return EXIT_OK


def cmd_figure(inv: Invocation) -> int:
    svg = figures.render_svg(figures.build(inv.figure, inv.figure_p))
    if inv.out is None:
        sys.stdout.write(svg)
    else:
        inv.out.parent.mkdir(parents=True, exist_ok=True)
        inv.out.write_text(svg)
        print(f"wrote {inv.out}", file=sys.stderr)
    return EXIT_OK


_DISPATCH = {
    "solve": cmd_solve,
    "simulate": cmd_simulate,
    "check-partition": cmd_check_partition,
    "figure": cmd_figure,
}


def main(argv=None) -> int:
    try:
        inv = parse(sys.argv[1:] if argv is None else argv)
    except UsageError as exc:
        print(f"twochild: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:
        return int(exc.code or 0)
    return _DISPATCH[inv.command](inv)


def entry() -> None:
    sys.exit(main())
