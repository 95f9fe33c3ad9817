"""Command-line front end.

    pivotlab det|inv|trace|bench|validate <input> [--arith exact|float]
        [--strategy first-nonzero|row-max|global-max|scripted:<file>]
        [--format text|json] [--epsilon <float>] [--oracle]

Exit codes: 0 success, 1 singular matrix, 2 parse or usage error,
3 I/O error, 4 engine/oracle disagreement (``validate``).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import bench as benchmod
from .determinant import determinant_trace
from .dictionary import Singular, inverse_trace
from .matrix import Matrix, ParseError, read_matrix, serialize_matrix
from .oracle import OracleRefusal, adjugate_inverse, laplace_det
from .scalar import EXACT, format_scalar, arithmetic
from .strategies import STRATEGIES, ScriptedPivotError, get_strategy

EXIT_OK, EXIT_SINGULAR, EXIT_PARSE, EXIT_IO, EXIT_MISMATCH = 0, 1, 2, 3, 4

TRACE_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "required": ["algorithm", "n", "iterations", "result"],
    "properties": {
        "algorithm": {"enum": ["det", "inv"]},
        "n": {"type": "integer", "minimum": 1},
        "iterations": {
            "type": "array",
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": ["step", "p", "k", "pivot", "sign"],
                "properties": {
                    "step": {"type": "integer", "minimum": 1},
                    "p": {"type": "integer", "minimum": 1},
                    "k": {"type": ["integer", "null"], "minimum": 1},
                    "pivot": {"type": ["string", "null"]},
                    "sign": {"enum": [1, -1, None]},
                    "d_accum": {"type": "string"},
                    "basis": {"type": "array", "items": {"type": "string"}},
                },
            },
        },
        "result": {
            "oneOf": [
                {"type": "string"},
                {"type": "array", "items": {"type": "array", "items": {"type": "string"}}},
                {
                    "type": "object",
                    "required": ["singular"],
                    "properties": {"singular": {"const": True}},
                },
            ]
        },
    },
}


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    input: str
    arith: str = "exact"
    strategy: str = "first-nonzero"
    format: str | None = None
    epsilon: float | None = None
    oracle: bool = False
    algorithm: str | None = None
    orders: str = "2..6"
    seed: int = 0

    def __post_init__(self):
        if self.format is not None and self.command not in ("trace", "bench"):
            raise UsageError(f"--format is not accepted by {self.command}")
        if self.oracle and self.arith != "exact":
            raise UsageError("--oracle works in exact arithmetic only")
        if self.command == "validate" and self.arith != "exact":
            raise UsageError("validate compares against exact oracles; use --arith exact")

    @property
    def arithmetic(self):
        return arithmetic(self.arith, self.epsilon)

    def new_strategy(self):
        # Fresh object per run: scripted strategies carry a cursor.
        return get_strategy(self.strategy)


def matrix_strings(m: Matrix) -> list[list[str]]:
    return [[format_scalar(v) for v in row] for row in m.rows]


def det_trace_json(n: int, d, steps) -> dict:
    return {
        "algorithm": "det",
        "n": n,
        "iterations": [
            {
                "step": s.iteration,
                "p": s.p,
                "k": s.k,
                "pivot": None if s.pivot is None else format_scalar(s.pivot),
                "sign": s.sign,
                "d_accum": format_scalar(s.d_accum),
            }
            for s in steps
        ],
        "result": format_scalar(d),
    }


def inv_trace_json(n: int, outcome, steps) -> dict:
    return {
        "algorithm": "inv",
        "n": n,
        "iterations": [
            {
                "step": s.iteration,
                "p": s.p,
                "k": s.k,
                "pivot": format_scalar(s.pivot),
                "sign": -1 if (s.p + s.k) % 2 else 1,
                "basis": list(s.basis),
            }
            for s in steps
        ],
        "result": {"singular": True} if isinstance(outcome, Singular) else matrix_strings(outcome),
    }


def _grid(rows, indent="    ") -> str:
    cells = [[format_scalar(v) for v in row] for row in rows]
    if not cells:
        return indent + "(empty)"
    width = max(len(c) for row in cells for c in row)
    return "\n".join(indent + " ".join(c.rjust(width) for c in row) for row in cells)


def det_trace_text(d, steps) -> str:
    out = []
    for s in steps:
        if s.empty_candidates:
            out.append(f"Iteration {s.iteration}: row p={s.p} (original row {s.row_label}) has no non-zero entry, d = 0")
            continue
        out.append(
            f"Iteration {s.iteration}: p={s.p}, k={s.k} (original row {s.row_label}, column {s.col_label}), "
            f"pivot {format_scalar(s.pivot)}, sign {s.sign:+d}, d = {format_scalar(s.d_accum)}"
        )
        if s.snapshot is not None and s.snapshot:
            out.append(_grid(s.snapshot))
    out.append(f"det = {format_scalar(d)}")
    return "\n".join(out)


def inv_trace_text(outcome, steps) -> str:
    out = []
    for s in steps:
        out.append(
            f"Iteration {s.iteration}: p={s.p}, k={s.k}, pivot {format_scalar(s.pivot)}, "
            f"{s.entering} enters, {s.leaving} leaves"
        )
        if s.snapshot is not None:
            cols = "  ".join(str(c) for c in s.snapshot.col_labels)
            out.append(f"    columns: {cols}")
            grid = _grid(s.snapshot.tableau, "").splitlines()
            for lab, line in zip(s.snapshot.row_labels, grid):
                out.append(f"    {str(lab):<4}{line}")
        out.append(f"    B = {{{', '.join(s.basis)}}}")
    if isinstance(outcome, Singular):
        out.append(f"singular: basic row {outcome.row} has no non-zero candidate")
    else:
        out.append("inverse:")
        out.append(_grid(outcome.rows))
    return "\n".join(out)


def cmd_det(cfg: RunConfig, out) -> int:
    if cfg.oracle:
        a = read_matrix(cfg.input, EXACT)
        print(format_scalar(laplace_det(a)), file=out)
        return EXIT_OK
    arith = cfg.arithmetic
    a = read_matrix(cfg.input, arith)
    d, _ = determinant_trace(a, cfg.new_strategy(), arith, snapshots=False)
    print(format_scalar(d), file=out)
    return EXIT_OK


def cmd_inv(cfg: RunConfig, out) -> int:
    if cfg.oracle:
        result = adjugate_inverse(read_matrix(cfg.input, EXACT))
    else:
        arith = cfg.arithmetic
        a = read_matrix(cfg.input, arith)
        result, _ = inverse_trace(a, cfg.new_strategy(), arith, snapshots=False)
    if isinstance(result, Singular):
        print("singular: matrix has no inverse", file=sys.stderr)
        return EXIT_SINGULAR
    out.write(serialize_matrix(result))
    return EXIT_OK


def cmd_trace(cfg: RunConfig, out) -> int:
    arith = cfg.arithmetic
    a = read_matrix(cfg.input, arith)
    fmt = cfg.format or "text"
    if (cfg.algorithm or "det") == "det":
        d, steps = determinant_trace(a, cfg.new_strategy(), arith)
        text = json.dumps(det_trace_json(a.n, d, steps), indent=2) if fmt == "json" else det_trace_text(d, steps)
        print(text, file=out)
        return EXIT_OK
    outcome, steps = inverse_trace(a, cfg.new_strategy(), arith)
    text = json.dumps(inv_trace_json(a.n, outcome, steps), indent=2) if fmt == "json" else inv_trace_text(outcome, steps)
    print(text, file=out)
    return EXIT_SINGULAR if isinstance(outcome, Singular) else EXIT_OK


def cmd_validate(cfg: RunConfig, out) -> int:
    a = read_matrix(cfg.input, EXACT)
    agree = True
    if cfg.algorithm in (None, "det"):
        engine, _ = determinant_trace(a, cfg.new_strategy(), EXACT, snapshots=False)
        ref = laplace_det(a)
        ok = engine == ref
        agree &= ok
        print(f"det engine: {format_scalar(engine)}", file=out)
        print(f"det oracle: {format_scalar(ref)}", file=out)
        print(f"det: {'agree' if ok else 'MISMATCH'}", file=out)
    if cfg.algorithm in (None, "inv"):
        engine, _ = inverse_trace(a, cfg.new_strategy(), EXACT, snapshots=False)
        ref = adjugate_inverse(a)

        def show(r):
            return " singular" if isinstance(r, Singular) else "\n" + _grid(r.rows)

        singular_e, singular_r = isinstance(engine, Singular), isinstance(ref, Singular)
        ok = singular_e == singular_r and (singular_e or engine == ref)
        agree &= ok
        print(f"inv engine:{show(engine)}", file=out)
        print(f"inv oracle:{show(ref)}", file=out)
        print(f"inv: {'agree' if ok else 'MISMATCH'}", file=out)
    return EXIT_OK if agree else EXIT_MISMATCH


def cmd_bench(cfg: RunConfig, out) -> int:
    if cfg.input not in benchmod.FAMILIES:
        raise UsageError(f"unknown family {cfg.input!r}; choose from {', '.join(benchmod.FAMILIES)}")
    try:
        orders = benchmod.parse_orders(cfg.orders)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    explicit = [cfg.strategy] if cfg.strategy != "all" else list(STRATEGIES)
    for name in explicit:
        if name not in STRATEGIES:
            raise UsageError(f"bench supports {', '.join(STRATEGIES)} or all, not {name!r}")
    modes = [cfg.arith] if cfg.arith != "both" else ["exact", "float"]
    rows = benchmod.run_bench(cfg.input, orders, explicit, modes, cfg.epsilon, cfg.seed)
    if cfg.format == "json":
        print(json.dumps(benchmod.to_records(rows), indent=2), file=out)
    else:
        print(benchmod.format_table(rows), file=out)
    return EXIT_OK


COMMANDS = {
    "det": cmd_det,
    "inv": cmd_inv,
    "trace": cmd_trace,
    "bench": cmd_bench,
    "validate": cmd_validate,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pivotlab",
        description="Determinant and inverse by flexible pivoting, with step traces.",
    )
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("input", help="matrix file (for bench: family name hilbert|random-int|rank-deficient)")
    parser.add_argument("--arith", choices=["exact", "float", "both"], default=None)
    parser.add_argument("--strategy", default=None,
                        help="first-nonzero, row-max, global-max, scripted:<file> (bench also takes 'all')")
    parser.add_argument("--format", choices=["text", "json"], default=None)
    parser.add_argument("--epsilon", type=float, default=None, help="float-mode zero tolerance")
    parser.add_argument("--oracle", action="store_true", help="use the slow reference path (det, inv)")
    parser.add_argument("--algorithm", choices=["det", "inv"], default=None,
                        help="which engine trace/validate exercise (trace default: det; validate default: both)")
    parser.add_argument("--orders", default="2..6", help="bench orders, e.g. 6 or 2..6")
    parser.add_argument("--seed", type=int, default=0, help="bench seed for random families")
    return parser


def config_from_args(args) -> RunConfig:
    if args.command == "bench":
        arith = args.arith or "both"
        strategy = args.strategy or "all"
    else:
        if args.arith == "both":
            raise UsageError("--arith both is only meaningful for bench")
        arith = args.arith or "exact"
        strategy = args.strategy or "first-nonzero"
    return RunConfig(
        command=args.command, input=args.input, arith=arith, strategy=strategy,
        format=args.format, epsilon=args.epsilon, oracle=args.oracle,
        algorithm=args.algorithm, orders=args.orders, seed=args.seed,
    )


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        cfg = config_from_args(args)
        return COMMANDS[cfg.command](cfg, out)
    except (UsageError, ParseError, ScriptedPivotError, OracleRefusal) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        # bad --strategy name, malformed pivot script, bad epsilon
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
