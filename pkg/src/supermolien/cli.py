"""Command-line frontend.

Subcommands compute one object each (a Molien series, a cycle index, a
wreath Hilbert series, a collated generating function, a shuffle product)
or run a named verification suite.  Output is deterministic JSON by
default; `--format table` renders series coefficients as aligned grids.

Exit codes: 0 on success or match, 1 when a requested comparison fails,
2 on bad input (malformed JSON, dimension mismatches, cap violations).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from .errors import SuperMolienError
from .groups import MatrixGroup, PermGroup
from .molien import GroupAction, super_molien
from .rationals import format_rational
from .series import TrigradedSeries
from .shuffle import shuffle_product
from .superalgebra import SuperPolynomial
from .symfunc import SymFuncPoly, cycle_index
from .verify import SUITES, run_suite
from .wreath_series import (
    CollationSpec,
    check_collation,
    check_wreath_routes,
    collated_sum_series,
    wreath_hilbert_plethysm,
)


@dataclass(frozen=True)
class CommandConfig:
    """Everything one invocation needs, parsed and validated."""

    subcommand: str
    group_path: str | None = None
    perm_path: str | None = None
    left_path: str | None = None
    right_path: str | None = None
    expect_path: str | None = None
    character: str = "trivial"
    flavor: str = "invariant"
    suite: str = "all"
    dt: int | None = None
    dq: int | None = None
    du: int | None = None
    n: int | None = None
    seed: int = 42
    fmt: str = "json"
    check: bool = False
    signed: bool = False

    def __post_init__(self):
        for cap in (self.dt, self.dq, self.du, self.n):
            if cap is not None and cap < 0:
                raise ValueError(f"caps must be nonnegative, got {cap}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="supermolien",
        description="Hilbert series of invariants in free supercommutative algebras",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("molien", help="character-weighted Molien series of a matrix group")
    p.add_argument("--group", required=True, help="matrix group JSON file")
    p.add_argument("--character", default="trivial", help="'trivial', 'sgn', or a values file")
    p.add_argument("--dq", type=int, default=6)
    p.add_argument("--du", type=int, default=None)
    p.add_argument("--expect", default=None, help="series JSON to compare against; exit 1 on mismatch")
    _format_flag(p)

    p = sub.add_parser("cycle-index", help="cycle index of a permutation group")
    p.add_argument("--perm", required=True, help="permutation group JSON file")
    p.add_argument("--flavor", choices=("plain", "sgn", "character"), default="plain")
    p.add_argument("--character", default=None, help="values file, required for flavor 'character'")
    _format_flag(p)

    p = sub.add_parser("wreath", help="Hilbert series of a wreath product action")
    p.add_argument("--perm", required=True)
    p.add_argument("--group", required=True)
    p.add_argument("-n", type=int, required=True, help="number of rows acted on")
    p.add_argument("--flavor", choices=("invariant", "antiinvariant"), default="invariant")
    p.add_argument("--dq", type=int, default=6)
    p.add_argument("--du", type=int, default=None)
    p.add_argument("--check", action="store_true", help="compare the direct and plethysm routes")
    _format_flag(p)

    p = sub.add_parser("collate", help="collated generating function over all row counts")
    p.add_argument("--group", required=True)
    p.add_argument("-N", type=int, default=3, help="largest row count collected")
    p.add_argument("--dq", type=int, default=6)
    p.add_argument("--du", type=int, default=None)
    p.add_argument("--flavor", choices=("invariant", "antiinvariant"), default="invariant")
    p.add_argument("--check", action="store_true", help="compare the sum and product forms")
    _format_flag(p)

    p = sub.add_parser("shuffle", help="shuffle product of two invariants")
    p.add_argument("left", help="SuperPolynomial JSON file")
    p.add_argument("right", help="SuperPolynomial JSON file")
    p.add_argument("--signed", action="store_true")
    _format_flag(p)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--seed", type=int, default=42)
    _format_flag(p)

    return parser


def _format_flag(p: argparse.ArgumentParser):
    p.add_argument("--format", choices=("json", "table"), default="json", dest="fmt")


def config_from_args(args: argparse.Namespace) -> CommandConfig:
    d = vars(args)
    return CommandConfig(
        subcommand=d["subcommand"],
        group_path=d.get("group"),
        perm_path=d.get("perm"),
        left_path=d.get("left"),
        right_path=d.get("right"),
        expect_path=d.get("expect"),
        character=d.get("character") or "trivial",
        flavor=d.get("flavor") or "invariant",
        suite=d.get("suite") or "all",
        dq=d.get("dq"),
        du=d.get("du"),
        n=d.get("n") if "n" in d else d.get("N"),
        seed=d.get("seed", 42),
        fmt=d.get("fmt", "json"),
        check=d.get("check", False),
        signed=d.get("signed", False),
    )


# -- input loading ----------------------------------------------------------


def _load_json(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _load_matrix_group(path: str) -> MatrixGroup:
    try:
        return MatrixGroup.from_json_dict(_load_json(path))
    except KeyError as exc:
        raise ValueError(f"{path}: not a matrix group file, missing field {exc}") from exc


def _load_perm_group(path: str) -> PermGroup:
    try:
        return PermGroup.from_json_dict(_load_json(path))
    except KeyError as exc:
        raise ValueError(f"{path}: not a permutation group file, missing field {exc}") from exc


def _load_character(spec: str):
    """'trivial' and 'sgn' pass through; anything else is a values file."""
    if spec in ("trivial", "sgn"):
        return spec
    values = _load_json(spec)
    if not isinstance(values, list):
        raise ValueError(f"character file {spec} must hold a JSON list of values")
    return [Fraction(str(v)) for v in values]


# -- rendering --------------------------------------------------------------


def render_series_table(series: TrigradedSeries) -> str:
    """One aligned grid per t-degree: rows are q-degrees, columns u-degrees."""
    caps = series.caps
    cells = {}
    widths = [1] * (caps.u + 2)
    widths[0] = max(len(f"q^{caps.q}"), len("q\\u"))
    for u in range(caps.u + 1):
        widths[u + 1] = len(str(u))
    for (t, q, u), c in series.items():
        text = format_rational(c)
        cells[(t, q, u)] = text
        widths[u + 1] = max(widths[u + 1], len(text))
    lines = []
    for t in range(caps.t + 1):
        lines.append(f"t^{t}")
        header = ["q\\u".ljust(widths[0])]
        header += [str(u).rjust(widths[u + 1]) for u in range(caps.u + 1)]
        lines.append("  ".join(header))
        for q in range(caps.q + 1):
            row = [f"q^{q}".ljust(widths[0])]
            row += [
                cells.get((t, q, u), ".").rjust(widths[u + 1]) for u in range(caps.u + 1)
            ]
            lines.append("  ".join(row))
        lines.append("")
    return "\n".join(lines).rstrip("\n")


def _render_report_table(report: dict) -> str:
    lines = []
    for c in report["checks"]:
        extras = ", ".join(f"{k}={v}" for k, v in c.items() if k not in ("name", "pass"))
        status = "PASS" if c["pass"] else "FAIL"
        lines.append(f"{status}  {c['name']}" + (f"  ({extras})" if extras else ""))
    lines.append(f"suite={report['suite']} seed={report['seed']} "
                 f"passed={report['passed']} failed={report['failed']}")
    return "\n".join(lines)


def _render_dict_table(d: dict) -> str:
    return "\n".join(f"{k}: {json.dumps(v, sort_keys=True)}" for k, v in sorted(d.items()))


def _emit(payload, fmt: str, out) -> None:
    if fmt == "table":
        if isinstance(payload, TrigradedSeries):
            out.write(render_series_table(payload) + "\n")
            return
        if isinstance(payload, dict) and "checks" in payload:
            out.write(_render_report_table(payload) + "\n")
            return
        if isinstance(payload, dict):
            out.write(_render_dict_table(payload) + "\n")
            return
    if isinstance(payload, (TrigradedSeries, SymFuncPoly, SuperPolynomial)):
        payload = payload.to_json_dict()
    out.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")


# -- subcommands ------------------------------------------------------------


def _cmd_molien(cfg: CommandConfig, out) -> int:
    G = _load_matrix_group(cfg.group_path)
    action = GroupAction.from_matrix_group(G, character=_load_character(cfg.character))
    series = super_molien(action, cfg.dq, cfg.du)
    if cfg.expect_path is not None:
        expected = TrigradedSeries.from_json_dict(_load_json(cfg.expect_path))
        match = series == expected
        _emit({"match": match}, cfg.fmt, out)
        return 0 if match else 1
    _emit(series, cfg.fmt, out)
    return 0


def _cmd_cycle_index(cfg: CommandConfig, out) -> int:
    P = _load_perm_group(cfg.perm_path)
    if cfg.flavor == "character":
        chi = _load_character(cfg.character)
        if isinstance(chi, str):
            raise ValueError("flavor 'character' needs --character pointing at a values file")
        from .groups import validate_character

        z = cycle_index(P, "character", validate_character(chi, P))
    else:
        z = cycle_index(P, cfg.flavor)
    _emit(z, cfg.fmt, out)
    return 0


def _cmd_wreath(cfg: CommandConfig, out) -> int:
    P = _load_perm_group(cfg.perm_path)
    G = _load_matrix_group(cfg.group_path)
    if cfg.check:
        rep = check_wreath_routes(P, G, cfg.n, cfg.flavor, cfg.dq, cfg.du)
        _emit(rep, cfg.fmt, out)
        return 0 if rep["match"] else 1
    series = wreath_hilbert_plethysm(P, G, cfg.n, cfg.flavor, cfg.dq, cfg.du)
    _emit(series, cfg.fmt, out)
    return 0


def _cmd_collate(cfg: CommandConfig, out) -> int:
    G = _load_matrix_group(cfg.group_path)
    du = cfg.du if cfg.du is not None else max(1, cfg.n * G.r1)
    spec = CollationSpec(group=G, n_max=cfg.n, dq=cfg.dq, du=du, flavor=cfg.flavor)
    if cfg.check:
        rep = check_collation(spec)
        _emit(rep, cfg.fmt, out)
        return 0 if rep["match"] else 1
    _emit(collated_sum_series(spec), cfg.fmt, out)
    return 0


def _cmd_shuffle(cfg: CommandConfig, out) -> int:
    A = SuperPolynomial.from_json_dict(_load_json(cfg.left_path))
    B = SuperPolynomial.from_json_dict(_load_json(cfg.right_path))
    _emit(shuffle_product(A, B, signed=cfg.signed), cfg.fmt, out)
    return 0


def _cmd_verify(cfg: CommandConfig, out) -> int:
    report = run_suite(cfg.suite, cfg.seed)
    _emit(report, cfg.fmt, out)
    return 0 if report["failed"] == 0 else 1


_DISPATCH = {
    "molien": _cmd_molien,
    "cycle-index": _cmd_cycle_index,
    "wreath": _cmd_wreath,
    "collate": _cmd_collate,
    "shuffle": _cmd_shuffle,
    "verify": _cmd_verify,
}


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from_args(args)
        return _DISPATCH[cfg.subcommand](cfg, out)
    except (SuperMolienError, ValueError, KeyError, TypeError, OSError,
            json.JSONDecodeError) as exc:
        err.write(f"error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())
