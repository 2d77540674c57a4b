"""Command-line interface.

Subcommands: ``validate`` (residual table for a measurement file),
``analyze`` (bound report for one state as JSON), ``sweep`` (qubit Bloch
sweep as CSV), ``check`` (property suites), ``catalog`` (list or export the
built-in measurements).  Exit codes: 0 success, 1 invalid input or failed
checks, 2 unreadable or malformed files.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import catalog, checks, serialize
from .bounds import evaluate_report
from .errors import GeamError, NonQubit, ParseError, UnknownId
from .linalg import bloch_to_density
from .measurements import (EquiangularMeasurement, conical_design_params,
                           equiangular_diagnostics, is_informationally_complete,
                           operator_span_rank, outcome_count_matches,
                           symmetric_diagnostics)


def _parse_alphas(text: str) -> list[float]:
    try:
        vals = [float(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise ParseError(f"cannot parse orders from {text!r}") from None
    if not vals or any(a <= 0.0 for a in vals):
        raise ParseError("entropy orders must be positive")
    return vals


def _fmt(x: float) -> str:
    return repr(float(x))


def cmd_validate(args) -> int:
    d, groups, gammas = serialize.load_measurement_raw(args.measurement)
    n_out = sum(len(g) for g in groups)
    if gammas is not None:
        diag = equiangular_diagnostics(groups)
        print(f"kind: equiangular measurement, dimension {d}, "
              f"{len(groups)} groups, {n_out} outcomes")
    else:
        diag = symmetric_diagnostics(groups)
        print(f"kind: symmetric POVM set, dimension {d}, "
              f"{len(groups)} POVMs, {n_out} outcomes")
    failures = list(diag.failures)
    for name, resid in diag.residuals.items():
        flag = "FAIL" if name in diag.failures else "ok"
        print(f"  {name:<24} {resid: .3e}  {flag}")
    if gammas is not None:
        declared = np.asarray(gammas, dtype=float)
        resid = float(np.max(np.abs(declared - diag.params.weights)))
        flag = "ok" if resid <= 1e-8 else "FAIL"
        if flag == "FAIL":
            failures.append("declared_gamma")
        print(f"  {'declared_gamma':<24} {resid: .3e}  {flag}")
    rank = operator_span_rank([q for g in groups for q in g])
    if gammas is not None and not failures:
        m = serialize.load_measurement(args.measurement)
        try:
            cp = conical_design_params(m)
            print(f"conical design: yes (kappa_plus={_fmt(cp.kappa_plus)}, "
                  f"kappa_minus={_fmt(cp.kappa_minus)})")
        except GeamError as exc:
            print(f"conical design: no ({exc})")
        complete, rank = is_informationally_complete(m)
        print(f"informationally complete: {'yes' if complete else 'no'} "
              f"(span rank {rank} of {d**2}, minimal outcome count "
              f"{'matches' if outcome_count_matches(m) else 'differs'})")
    else:
        print(f"operator span rank: {rank} of {d**2}")
    valid = not failures
    print("valid" if valid else "INVALID")
    return 0 if valid else 1


def cmd_analyze(args) -> int:
    m = serialize.load_measurement(args.measurement)
    rho = serialize.load_state(args.state)
    report = evaluate_report(m, rho, _parse_alphas(args.alpha))
    print(serialize.dumps(serialize.report_to_obj(report)), end="")
    return 0


def _sweep_rows(m, axis: str, steps: int, alphas):
    if m.dim != 2:
        raise NonQubit(f"sweep needs a qubit measurement, got dimension {m.dim}")
    if steps < 2:
        raise ParseError("steps must be at least 2")
    direction = {"x": (1.0, 0.0, 0.0), "y": (0.0, 1.0, 0.0),
                 "z": (0.0, 0.0, 1.0)}[axis]
    geam = isinstance(m, EquiangularMeasurement)
    n_groups = m.n_groups

    header = ["r2"]
    for a in alphas:
        tag = _fmt(a)
        header += [f"tsallis_povm{mu + 1}_a{tag}" for mu in range(n_groups)]
        header += [f"tsallis_avg_a{tag}", f"tsallis_avg_bound_a{tag}",
                   f"renyi_avg_a{tag}", f"renyi_avg_bound_a{tag}",
                   f"tsallis_full_a{tag}", f"tsallis_full_bound_a{tag}",
                   f"renyi_full_a{tag}", f"renyi_full_bound_a{tag}"]
    yield "# " + ",".join(header)

    for r2 in np.linspace(0.0, 1.0, steps):
        r = float(np.sqrt(r2))
        rho = bloch_to_density([r * c for c in direction])
        report = evaluate_report(m, rho, alphas)
        cells = [_fmt(r2)]
        for a in alphas:
            cells += [_fmt(v) for v in report.group_tsallis[a]]
            wts = report.avg_weights
            if wts is None:
                cells += ["", ""]
            else:
                e = report.entry("avg_tsallis", a)
                cells += [_fmt(float(np.dot(wts, report.group_tsallis[a]))),
                          _fmt(e.rhs) if e.applicable else ""]
            if wts is None:
                cells += ["", ""]
            else:
                e = report.entry("avg_renyi", a)
                cells += [_fmt(float(np.dot(wts, report.group_renyi[a]))),
                          _fmt(e.rhs) if e.applicable else ""]
            if geam:
                e_t = report.entry("conical_tsallis", a)
                e_r = report.entry("conical_renyi", a)
                cells += [_fmt(report.full_tsallis[a]),
                          _fmt(e_t.rhs) if e_t.applicable else "",
                          _fmt(report.full_renyi[a]),
                          _fmt(e_r.rhs) if e_r.applicable else ""]
            else:
                cells += ["", "", "", ""]
        yield ",".join(cells)


def cmd_sweep(args) -> int:
    m = serialize.load_measurement(args.measurement)
    for row in _sweep_rows(m, args.axis, args.steps, _parse_alphas(args.alpha)):
        print(row)
    return 0


def cmd_check(args) -> int:
    results, code = checks.run(args.suite, args.trials, args.seed,
                               alpha_extended=args.alpha_extended)
    width = max((len(r.name) for r in results), default=10)
    for r in results:
        status = "info" if r.informational else ("ok" if r.passed else "FAIL")
        worst = "inf" if not np.isfinite(r.worst_slack) else f"{r.worst_slack:.3e}"
        note = f"  ({r.note})" if r.note else ""
        print(f"{r.name:<{width}}  checks={r.checks:<6d} "
              f"violations={r.violations:<4d} worst_slack={worst}  "
              f"{status}{note}")
    total = sum(r.checks for r in results if not r.informational)
    bad = sum(r.violations for r in results if not r.informational)
    print(f"total: {total} checks, {bad} violations -> "
          f"{'ok' if code == 0 else 'FAIL'}")
    return code


def cmd_catalog(args) -> int:
    if args.action == "list":
        for entry_id, entry in sorted(catalog.entries().items()):
            m = entry.measurement
            kind = ("equiangular" if isinstance(m, EquiangularMeasurement)
                    else "symmetric")
            print(f"{entry_id:<12} d={m.dim}  {kind:<12} {entry.description}")
        return 0
    if args.id is None or args.out is None:
        raise ParseError("export needs an id and an output path")
    entry = catalog.get(args.id)
    serialize.save_measurement(entry.measurement, args.out)
    print(f"wrote {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="geam",
        description="Equiangular-measurement toolbox: validation, entropy "
                    "statistics and uncertainty bounds.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a measurement file")
    p.add_argument("measurement")
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("analyze", help="bound report for one state (JSON)")
    p.add_argument("measurement")
    p.add_argument("state")
    p.add_argument("--alpha", default="1", help="comma-separated entropy orders")
    p.set_defaults(fn=cmd_analyze)

    p = sub.add_parser("sweep", help="qubit Bloch-vector sweep (CSV)")
    p.add_argument("measurement")
    p.add_argument("--axis", choices=("x", "y", "z"), default="z")
    p.add_argument("--steps", type=int, default=41)
    p.add_argument("--alpha", default="0.8")
    p.set_defaults(fn=cmd_sweep)

    p = sub.add_parser("check", help="run property suites")
    p.add_argument("--suite", choices=checks.SUITES, default="all")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=20240815)
    p.add_argument("--alpha-extended", action="store_true",
                   help="also probe the averaged Renyi relation below "
                        "order 1 (unproven; informational only)")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("catalog", help="list or export built-in measurements")
    p.add_argument("action", choices=("list", "export"))
    p.add_argument("id", nargs="?")
    p.add_argument("out", nargs="?")
    p.set_defaults(fn=cmd_catalog)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except UnknownId as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except GeamError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
