"""Command-line interface.

    twisted-hv COMMAND [--h P/Q] [--hI P/Q] [--cL P/Q] [--cLI P/Q] [--cI P/Q]
               [--max-degree N] [--degree N] [--mode evaluated|symbolic]
               [--seed S] [--format table|json]

Exit codes: 0 success, 1 a verification failed, 2 usage or domain error.
"""
from __future__ import annotations

import argparse
import json
import os
import random
import sys
from dataclasses import dataclass, field
from typing import Optional

from .algebra import HighestWeight
from .properties import DEFAULT_CASES, run_all
from .scalars import (
    DEFAULT_SYMBOLIC_DIM, ParamPoly, UnsupportedModeError, format_scalar, parse_rational,
    symbolic_parameters,
)
from .shapovalov import (
    FormulaDomainError, InconclusiveError, check_symbolic_size, gram_report, kn_constancy_check, p2,
    sample_points,
)
from .structure import (
    TRUNCATION_NOTE, OutsideTheoremError, character_series, predicted_p,
    quotient_singular_check, singular_vectors, submodule_slice, verify_theorem1,
)
from .verma import verma_module

COMMANDS = ("gram", "det", "verify-det", "singular", "character", "quotient",
            "verify-theorem1", "property-suite")
NEEDS_NULLSPACE = {"singular", "quotient", "verify-theorem1"}
PARAMS = ("h", "hI", "cL", "cLI", "cI")
DEFAULT_WEIGHT = {"h": "0", "hI": "0", "cL": "0", "cLI": "1", "cI": "0"}


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    hw: HighestWeight
    max_degree: int = 5
    mode: str = "evaluated"
    seed: int = 0
    format: str = "table"
    degree: Optional[int] = None
    cases: int = DEFAULT_CASES
    max_symbolic_dim: int = DEFAULT_SYMBOLIC_DIM
    explicit: tuple = ()


def _rational_arg(text):
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _seed_arg(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"seed must be an integer: {text!r}") from None
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError("seed must be a 64-bit unsigned integer")
    return v


def _positive(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return v


def _non_negative(text):
    v = int(text) if text.lstrip("-").isdigit() else None
    if v is None or v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer: {text!r}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    for name in PARAMS:
        common.add_argument(f"--{name}", type=_rational_arg, default=None, metavar="P/Q",
                            help=f"highest-weight parameter {name} (default {DEFAULT_WEIGHT[name]})")
    common.add_argument("--max-degree", type=_positive, default=5)
    common.add_argument("--degree", type=_non_negative, default=None,
                        help="restrict gram/det/singular/quotient to one degree")
    common.add_argument("--mode", choices=("evaluated", "symbolic"), default="evaluated")
    common.add_argument("--seed", type=_seed_arg, default=0)
    common.add_argument("--format", choices=("table", "json"), default="table")
    common.add_argument("--cases", type=_positive, default=DEFAULT_CASES,
                        help="cases per property suite")
    common.add_argument("--max-symbolic-dim", type=_positive, default=DEFAULT_SYMBOLIC_DIM,
                        help="largest Gram matrix for a symbolic determinant")
    parser = argparse.ArgumentParser(prog="twisted-hv",
                                     description="Verma modules over the twisted Heisenberg-Virasoro algebra")
    sub = parser.add_subparsers(dest="command", required=True)
    for cmd in COMMANDS:
        sub.add_parser(cmd, parents=[common])
    return parser


def parse_args(argv) -> RunConfig:
    ns = build_parser().parse_args(argv)
    explicit = tuple(p for p in PARAMS if getattr(ns, p) is not None)
    if ns.mode == "symbolic":
        if ns.command in NEEDS_NULLSPACE:
            raise UsageError(f"{ns.command} needs --mode evaluated (exact nullspaces are rational only)")
        generic = dict(zip(PARAMS, symbolic_parameters()))
        vals = [ParamPoly.constant(getattr(ns, p)) if p in explicit else generic[p] for p in PARAMS]
        hw = HighestWeight(*vals)
    else:
        hw = HighestWeight(*[getattr(ns, p) if p in explicit else parse_rational(DEFAULT_WEIGHT[p])
                             for p in PARAMS])
    if ns.command in {"verify-theorem1", "quotient"} and hw.mode == "evaluated":
        try:
            predicted_p(hw)
        except OutsideTheoremError as exc:
            raise UsageError(f"outside the theorem's hypotheses: {exc}") from None
    return RunConfig(ns.command, hw, ns.max_degree, ns.mode, ns.seed, ns.format, ns.degree,
                     ns.cases, ns.max_symbolic_dim, explicit)


@dataclass
class Report:
    header: dict
    records: list = field(default_factory=list)

    def add(self, check, degree, passed, detail="", **data):
        self.records.append({"check": check, "degree": degree, "passed": passed,
                             "detail": detail, **data})

    @property
    def failed(self) -> bool:
        return any(r["passed"] is False for r in self.records)


def _degrees(config: RunConfig, start: int):
    degs = [config.degree] if config.degree is not None else list(range(start, config.max_degree + 1))
    if config.mode == "symbolic" and config.command in {"gram", "det", "verify-det"}:
        hw = HighestWeight.symbolic(level_zero=True) if config.command == "verify-det" else config.hw
        for n in degs:
            check_symbolic_size(n, hw, config.max_symbolic_dim)
    return degs


def _header(config: RunConfig, **extra) -> dict:
    head = {"command": config.command, "mode": config.mode}
    if config.command not in {"property-suite", "verify-det"}:
        head["weight"] = config.hw.as_strings()
    head["max_degree"] = config.max_degree
    head["seed"] = config.seed
    head.update(extra)
    return head


def _run_gram(config: RunConfig, with_matrix: bool) -> Report:
    rep = Report(_header(config))
    for n in _degrees(config, 0):
        g = gram_report(n, config.hw, max_symbolic_dim=config.max_symbolic_dim).to_json()
        if not with_matrix:
            g.pop("matrix")
        detail = f"det = {g['determinant']}"
        if g["kn_ratio"] is not None:
            detail += f"; det / product = {g['kn_ratio']}"
        rep.add("gram" if with_matrix else "det", n, None, detail, report=g)
    return rep


def _run_verify_det(config: RunConfig) -> Report:
    if config.mode == "symbolic":
        rep = Report(_header(config))
        for n in _degrees(config, 1):
            r = kn_constancy_check(n, mode="symbolic", max_symbolic_dim=config.max_symbolic_dim)
            rep.add("kn_constant", n, r.passed, f"K_n = {format_scalar(r.constant) if r.passed else r.note}",
                    report=r.to_json())
        return rep
    points = sample_points(random.Random(config.seed))
    rep = Report(_header(config, sample_points=[p.as_strings() for p in points]))
    for n in _degrees(config, 1):
        r = kn_constancy_check(n, points)
        detail = f"K_n = {format_scalar(r.constant)}" if r.passed else "ratios differ"
        if r.note:
            detail += f" ({r.note})"
        rep.add("kn_constant", n, r.passed, detail, report=r.to_json())
    return rep


def _run_singular(config: RunConfig) -> Report:
    rep = Report(_header(config))
    for n in _degrees(config, 1):
        res = singular_vectors(n, config.hw)
        detail = f"kernel dimension {res.dimension}"
        if res.kernel_basis:
            detail += ": " + "; ".join(str(v) for v in res.kernel_basis)
        rep.add("singular", n, None, detail, result=res.to_json())
    return rep


def _character_p(hw: HighestWeight):
    if hw.mode != "evaluated":
        return None
    try:
        return predicted_p(hw)[0]
    except OutsideTheoremError:
        return None


def _run_character(config: RunConfig) -> Report:
    p = _character_p(config.hw)
    series = character_series(p, config.max_degree)
    rep = Report(_header(config, p=p))
    for n, c in enumerate(series.coeffs):
        rep.add("character", n, None, f"n={n}: {c}", coefficient=c, verma=p2(n))
    return rep


def _run_quotient(config: RunConfig) -> Report:
    hw = config.hw
    p, case = predicted_p(hw)
    rep = Report(_header(config, p=p, case=case, note=TRUNCATION_NOTE))
    v = None
    if p is not None:
        res = singular_vectors(p, hw)
        if not res.kernel_basis:
            rep.add("singular_vector_exists", p, False, "kernel dimension 0")
            return rep
        v = res.kernel_basis[0]
    series = character_series(p, config.max_degree)
    for n in _degrees(config, 1):
        slice_rank = submodule_slice(v, n).rank if v is not None else 0
        qdim = p2(n) - slice_rank
        rep.add("quotient_dim", n, qdim == series[n], f"{qdim} (expected {series[n]})",
                quotient_dim=qdim, slice_rank=slice_rank)
        q = quotient_singular_check(v, n, module=verma_module(hw))
        rep.add("lemma7_quotient", n, q.passed, f"solutions {q.solution_dim}, slice rank {q.slice_rank}")
    return rep


def _run_theorem(config: RunConfig) -> Report:
    tr = verify_theorem1(config.hw, config.max_degree)
    rep = Report(_header(config, case=tr.case, p=tr.p, note=TRUNCATION_NOTE))
    if tr.singular_vector is not None:
        rep.header["singular_vector"] = str(tr.singular_vector)
    for r in tr.records:
        detail = ", ".join(f"{k}={v}" for k, v in r.witness.items() if not isinstance(v, list))
        vecs = r.witness.get("vectors")
        if vecs:
            detail = (detail + "; " if detail else "") + "; ".join(vecs)
        rep.add(r.check, r.degree, r.passed, detail, witness=r.witness)
    return rep


def _run_properties(config: RunConfig) -> Report:
    rep = Report(_header(config, cases_per_suite=config.cases))
    for res in run_all(config.seed, config.cases):
        detail = f"{res.cases} cases, {res.failures} failures"
        if res.counterexample:
            detail += f"; e.g. {res.counterexample}"
        rep.add(res.name, None, res.passed, detail, cases=res.cases, failures=res.failures)
    return rep


def run_report(config: RunConfig) -> Report:
    dispatch = {
        "gram": lambda c: _run_gram(c, True),
        "det": lambda c: _run_gram(c, False),
        "verify-det": _run_verify_det,
        "singular": _run_singular,
        "character": _run_character,
        "quotient": _run_quotient,
        "verify-theorem1": _run_theorem,
        "property-suite": _run_properties,
    }
    return dispatch[config.command](config)


def _styled(text: str, ok) -> str:
    if ok is None or os.environ.get("HV_COLOR") == "0" or not sys.stdout.isatty():
        return text
    return f"\x1b[{32 if ok else 31}m{text}\x1b[0m"


def emit_report(report: Report, fmt: str) -> str:
    if fmt == "json":
        payload = {"header": report.header, "records": report.records}
        return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"
    lines = [f"# {k}: {json.dumps(v, ensure_ascii=False) if not isinstance(v, str) else v}"
             for k, v in report.header.items()]
    rows = []
    for r in report.records:
        status = "-" if r["passed"] is None else ("PASS" if r["passed"] else "FAIL")
        deg = "" if r["degree"] is None else str(r["degree"])
        rows.append((r["check"], deg, status, r["detail"], r["passed"]))
    w_check = max([len("check")] + [len(r[0]) for r in rows])
    w_deg = max([len("degree")] + [len(r[1]) for r in rows])
    lines.append(f"{'check':<{w_check}}  {'degree':>{w_deg}}  status  detail")
    for check, deg, status, detail, ok in rows:
        lines.append(f"{check:<{w_check}}  {deg:>{w_deg}}  {_styled(f'{status:<6}', ok)}  {detail}".rstrip())
    return "\n".join(lines) + "\n"


def run(config: RunConfig, out=None) -> int:
    out = out or sys.stdout
    report = run_report(config)
    out.write(emit_report(report, config.format))
    return 1 if report.failed else 0


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        config = parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    except UsageError as exc:
        print(f"twisted-hv: error: {exc}", file=sys.stderr)
        return 2
    try:
        return run(config)
    except (OutsideTheoremError, UnsupportedModeError, FormulaDomainError, InconclusiveError) as exc:
        print(f"twisted-hv: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
