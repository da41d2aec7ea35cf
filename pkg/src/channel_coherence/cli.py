"""Command-line front end.

Subcommands: potential, figure, report, sweep, audit. Series are written as
CSV by default and reports as JSON. Numbers are printed with 12 significant
digits so identical invocations give byte-identical output.

Exit codes: 0 success, 2 invalid input, 3 numerical or domain failure.
"""

from __future__ import annotations

import argparse
import io
import json
import math
import sys
from pathlib import Path
from typing import Any, Iterable, Sequence

import numpy as np

from . import units
from .audit import default_scenario_grid, default_theta_grid, run_audit
from .coherence import REPORT_FIELDS, build_report, ratio_from_coherence
from .errors import DomainError, InputError
from .potential import DoubleWell, WellGeometry, analyze, evaluate
from .spectral_thermo import CONVENTIONS, gated_inverse_temperature, temperature_ratio
from .timescales import CONSTANTS, ChannelScenario, decoherence_time, dwell_time, normalized_ratio

EXIT_OK, EXIT_INPUT, EXIT_DOMAIN = 0, 2, 3

SCENARIO_KEYS = {"mass", "gamma", "tau_m", "epsilon0", "w", "potential", "conventions"}
POTENTIAL_KEYS = {"m", "omega", "a", "A", "B"}
CONVENTION_KEYS = {"eq7", "constant"}


# formatting

def format_number(x: Any) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, str):
        return x
    x = float(x)
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    if math.isnan(x):
        return "nan"
    return format(x, ".12g")


def json_value(x: Any) -> Any:
    if isinstance(x, (bool, str)) or x is None:
        return x
    if isinstance(x, dict):
        return {k: json_value(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [json_value(v) for v in x]
    if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
        return int(x)
    x = float(x)
    if not math.isfinite(x):
        return format_number(x)
    return float(format(x, ".12g"))


def render_csv(header: Sequence[str], rows: Iterable[Sequence[Any]], trailer: Sequence[str] = ()) -> str:
    buf = io.StringIO()
    buf.write(",".join(header) + "\n")
    for row in rows:
        buf.write(",".join(format_number(v) for v in row) + "\n")
    for line in trailer:
        buf.write(f"# {line}\n")
    return buf.getvalue()


def render_json(obj: Any) -> str:
    return json.dumps(json_value(obj), indent=2) + "\n"


def render_table(pairs: Sequence[tuple[str, Any]]) -> str:
    width = max(len(k) for k, _ in pairs)
    return "".join(f"{k:<{width}}  {format_number(v) if not isinstance(v, dict) else json.dumps(json_value(v))}\n"
                   for k, v in pairs)


# inputs

def parse_grid(spec: str) -> list[float]:
    """START:STOP:STEPS, STEPS points inclusive of both ends."""
    parts = spec.split(":")
    if len(parts) != 3:
        raise InputError(f"grid must be START:STOP:STEPS, got {spec!r}")
    try:
        start, stop, steps = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise InputError(f"malformed grid {spec!r}") from None
    if steps < 1 or not (math.isfinite(start) and math.isfinite(stop)):
        raise InputError(f"malformed grid {spec!r}")
    if steps == 1:
        return [start]
    return np.linspace(start, stop, steps).tolist()


def parse_points(spec: str) -> list[float]:
    try:
        values = [float(v) for v in spec.split(",") if v.strip()]
    except ValueError:
        raise InputError(f"malformed point list {spec!r}") from None
    if not values:
        raise InputError("empty point list")
    return values


def _axis(args: argparse.Namespace) -> list[float]:
    if args.points is not None:
        return parse_points(args.points)
    if args.grid is not None:
        return parse_grid(args.grid)
    raise InputError("either --grid or --points is required")


def _number(d: dict, key: str, where: str) -> float:
    v = d[key]
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise InputError(f"{where}{key} must be a number")
    v = float(v)
    if not (math.isfinite(v) and v > 0) and key not in ("A", "B"):
        raise InputError(f"{where}{key} must be positive and finite")
    return v


def load_scenario(
    doc: dict, si: bool = False
) -> tuple[ChannelScenario, WellGeometry | None, dict[str, str]]:
    """Validate a scenario document and convert it to natural units.

    Returns the scenario, the analyzed well geometry when a potential block
    is present, and the conventions block with defaults filled in.
    """
    if not isinstance(doc, dict):
        raise InputError("scenario must be a JSON object")
    unknown = set(doc) - SCENARIO_KEYS
    if unknown:
        raise InputError(f"unknown scenario keys: {sorted(unknown)}")

    conv = doc.get("conventions", {}) or {}
    if not isinstance(conv, dict) or set(conv) - CONVENTION_KEYS:
        raise InputError(f"conventions block accepts only {sorted(CONVENTION_KEYS)}")
    conventions = {"eq7": conv.get("eq7", "printed"), "constant": conv.get("constant", "paper_4_5")}
    if conventions["eq7"] not in CONVENTIONS:
        raise InputError(f"conventions.eq7 must be one of {CONVENTIONS}")
    if conventions["constant"] not in CONSTANTS:
        raise InputError(f"conventions.constant must be one of {CONSTANTS}")

    for key in ("gamma", "tau_m"):
        if key not in doc:
            raise InputError(f"missing scenario key {key!r}")
    gamma = units.to_natural(_number(doc, "gamma", ""), "rate") if si else _number(doc, "gamma", "")
    tau_m = units.to_natural(_number(doc, "tau_m", ""), "time") if si else _number(doc, "tau_m", "")

    has_pair = "epsilon0" in doc or "w" in doc
    has_potential = "potential" in doc
    if has_pair == has_potential:
        raise InputError("give exactly one of the (epsilon0, w) pair or a potential block")

    geometry = None
    if has_potential:
        pot = doc["potential"]
        if not isinstance(pot, dict) or set(pot) - POTENTIAL_KEYS or not {"m", "omega", "a"} <= set(pot):
            raise InputError("potential block needs m, omega, a and optionally A, B")
        well = _well_from(
            {k: _number(pot, k, "potential.") for k in pot}, si=si
        )
        geometry = analyze(well)
        if not geometry.epsilon0 > 0:
            raise DomainError("potential has zero asymmetry energy")
        mass = well.m
        if "mass" in doc:
            given = _number(doc, "mass", "")
            given = units.to_natural(given, "mass") if si else given
            if not math.isclose(given, mass, rel_tol=1e-12):
                raise InputError("mass disagrees with potential.m")
        epsilon0, w = geometry.epsilon0, geometry.w
    else:
        for key in ("mass", "epsilon0", "w"):
            if key not in doc:
                raise InputError(f"missing scenario key {key!r}")
        mass, epsilon0, w = (_number(doc, k, "") for k in ("mass", "epsilon0", "w"))
        if si:
            mass = units.to_natural(mass, "mass")
            epsilon0 = units.to_natural(epsilon0, "energy")
            w = units.to_natural(w, "length")

    scenario = ChannelScenario(m=mass, gamma=gamma, tau_M=tau_m, epsilon0=epsilon0, w=w)
    return scenario, geometry, conventions


def _well_from(params: dict[str, float], si: bool) -> DoubleWell:
    m, omega, a = params["m"], params["omega"], params["a"]
    if si:
        m = units.to_natural(m, "mass")
        omega = units.to_natural(omega, "rate")
        a = units.to_natural(a, "length")
    kwargs = {k: params[k] for k in ("A", "B") if k in params}
    return DoubleWell(m=m, omega=omega, a=a, **kwargs)


# commands

def cmd_potential(args: argparse.Namespace) -> str:
    well = _well_from(
        {"m": args.m, "omega": args.omega, "a": args.a, "A": args.A, "B": args.B}, si=args.si
    )
    geom = analyze(well)
    xs = _axis(args)
    rows = []
    for x in xs:
        x_nat = units.to_natural(x, "length") if args.si else x
        v = evaluate(well, x_nat)
        rows.append((x, units.from_natural(v, "energy") if args.si else v))

    def out(q: float, kind: str) -> float:
        return units.from_natural(q, kind) if args.si else q

    summary = {
        "xi_points": [geom.xi_upper, geom.xi_barrier, geom.xi_lower],
        "epsilon0": out(geom.epsilon0, "energy"),
        "w": out(geom.w, "length"),
        "nu": geom.nu,
        "barrier_height_upper": out(geom.barrier_height_upper, "energy"),
    }
    if args.format == "json":
        return render_json({"geometry": summary, "series": [{"x": x, "V": v} for x, v in rows]})
    pts = sorted(summary["xi_points"])
    line = (
        "xi_points=" + ";".join(format_number(p) for p in pts)
        + f" epsilon0={format_number(summary['epsilon0'])}"
        + f" w={format_number(summary['w'])}"
        + f" nu={format_number(summary['nu'])}"
    )
    return render_csv(("x", "V"), rows, trailer=(line,))


def figure_series(name: str, xs: Sequence[float], convention: str = "printed") -> tuple[tuple[str, str], list]:
    if name == "fig2":
        return ("theta", "T_spec_over_T_k"), [(t, temperature_ratio(t, convention)) for t in xs]
    if name == "fig3":
        return ("theta", "tau_ratio_over_F"), [(t, normalized_ratio(t)) for t in xs]
    if name == "fig4":
        return ("g1", "tau_ratio"), [(g, ratio_from_coherence(g)) for g in xs]
    raise InputError(f"unknown figure {name!r}")


def cmd_figure(args: argparse.Namespace) -> str:
    header, rows = figure_series(args.name, _axis(args), args.convention or "printed")
    if args.format == "json":
        return render_json([dict(zip(header, r)) for r in rows])
    return render_csv(header, rows)


def scenario_report(
    scenario: ChannelScenario,
    geometry: WellGeometry | None,
    convention: str,
    constant: str,
    si: bool = False,
) -> dict[str, Any]:
    report = build_report(scenario, geometry, convention=convention, constant=constant)
    kT = 1.0 / gated_inverse_temperature(scenario.gamma, scenario.tau_M, scenario.epsilon0)
    tau_dwell = dwell_time(scenario.gamma, scenario.tau_M)
    tau_dec = decoherence_time(scenario.m, scenario.gamma, kT, scenario.w)
    if si:
        tau_dwell = units.from_natural(tau_dwell, "time")
        tau_dec = units.from_natural(tau_dec, "time")
        kT = units.from_natural(kT, "energy")
    out = report.as_dict()
    out.update(
        tau_dwell=tau_dwell,
        tau_dec=tau_dec,
        kT_spec=kT,
        units="si" if si else "natural",
        convention=convention,
        constant=constant,
    )
    return out


def cmd_report(args: argparse.Namespace) -> str:
    try:
        doc = json.loads(Path(args.scenario).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read scenario {args.scenario}: {exc}") from None
    scenario, geometry, conv = load_scenario(doc, si=args.si)
    convention = args.convention or conv["eq7"]
    constant = args.constant or conv["constant"]
    out = scenario_report(scenario, geometry, convention, constant, si=args.si)
    fmt = args.format or "json"
    if fmt == "json":
        return render_json(out)
    if fmt == "table":
        return render_table(list(out.items()))
    return render_csv(tuple(out), [tuple(out.values())])


def canonical_scenario(Q: float, theta: float) -> ChannelScenario:
    """m = w = gamma = 1 scenario with coherence exponent Q and gate interval theta."""
    return ChannelScenario(m=1.0, gamma=1.0, tau_M=theta, epsilon0=2.0 * Q * Q, w=1.0)


def sweep_rows(qs: Sequence[float], thetas: Sequence[float], convention: str, constant: str) -> list[tuple]:
    rows = []
    for Q in sorted(qs):
        for theta in sorted(thetas):
            r = build_report(canonical_scenario(Q, theta), convention=convention, constant=constant)
            rows.append(tuple(getattr(r, f) for f in REPORT_FIELDS))
    return rows


def cmd_sweep(args: argparse.Namespace) -> str:
    rows = sweep_rows(
        parse_grid(args.q_grid),
        parse_grid(args.theta_grid),
        args.convention or "printed",
        args.constant or "paper_4_5",
    )
    if args.format == "json":
        return render_json([dict(zip(REPORT_FIELDS, r)) for r in rows])
    return render_csv(REPORT_FIELDS, rows)


def cmd_audit(args: argparse.Namespace) -> str:
    thetas = parse_grid(args.grid) if args.grid else default_theta_grid()
    if args.scenarios:
        try:
            docs = json.loads(Path(args.scenarios).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise InputError(f"cannot read scenarios {args.scenarios}: {exc}") from None
        if not isinstance(docs, list):
            raise InputError("scenario grid must be a JSON list")
        scenarios = [load_scenario(d, si=args.si)[0] for d in docs]
    else:
        scenarios = default_scenario_grid()
    report = run_audit(thetas, scenarios)
    if (args.format or "json") == "table":
        pairs = [(name, getattr(report, name)) for name in
                 ("eq7_factor", "eq8_chain_factor", "eq9_constant_gap", "eq16_exponent_factor", "eq17_residual")]
        lines = [f"{'factor':<22}{'value':>20}{'spread':>14}\n"]
        for name, value in pairs:
            lines.append(f"{name:<22}{format_number(value):>20}{format(report.constancy_spread[name], '.2e'):>14}\n")
        lines.append(f"grid: {report.n_theta} theta x {report.n_scenarios} scenarios\n")
        lines.extend(f"note: {flag}\n" for flag in report.flags)
        return "".join(lines)
    return render_json(report.as_dict())


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", "-o", help="output path (default stdout)")
    common.add_argument("--format", choices=("csv", "json", "table"))
    common.add_argument("--convention", choices=CONVENTIONS, help="T_spec/T_k form")
    common.add_argument("--constant", choices=CONSTANTS, help="quasi-static coefficient")
    common.add_argument("--si", action="store_true", help="inputs and outputs in SI units")

    parser = argparse.ArgumentParser(prog="channel-coherence", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("potential", parents=[common], help="tabulate V(x) and the well geometry")
    p.add_argument("--m", type=float, default=1.0)
    p.add_argument("--omega", type=float, default=1.0)
    p.add_argument("--a", type=float, default=1.0)
    p.add_argument("--A", type=float, default=14.0)
    p.add_argument("--B", type=float, default=45.0)
    p.add_argument("--grid", default="0:9:200", help="x grid START:STOP:STEPS")
    p.add_argument("--points", help="explicit comma-separated x values")
    p.set_defaults(func=cmd_potential)

    p = sub.add_parser("figure", parents=[common], help="data series for fig2, fig3 or fig4")
    p.add_argument("name", choices=("fig2", "fig3", "fig4"))
    p.add_argument("--grid", help="theta grid (fig2, fig3) or g grid (fig4)")
    p.add_argument("--points", help="explicit comma-separated values")
    p.set_defaults(func=cmd_figure)

    p = sub.add_parser("report", parents=[common], help="coherence report for a scenario file")
    p.add_argument("scenario", help="scenario JSON file")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("sweep", parents=[common], help="report scalars over a (Q, theta) rectangle")
    p.add_argument("--q-grid", required=True)
    p.add_argument("--theta-grid", required=True)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("audit", parents=[common], help="discrepancy factors and their spreads")
    p.add_argument("--grid", help="theta grid (default 20 log-spaced points in [0.1, 40])")
    p.add_argument("--scenarios", help="JSON list of scenario objects")
    p.set_defaults(func=cmd_audit)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text = args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    if args.output:
        with open(args.output, "w", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
