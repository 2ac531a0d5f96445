"""Command line interface.

Subcommands:

* ``compute``   metrics plus barycentric and (when embeddable) Cartesian centers
* ``feuerbach`` tangency report for the incircle and the three excircles
* ``fuzz``      run the identity suite over a randomized profile
* ``svg``       schematic drawing of the triangle and its circles

Exit codes: 0 success, 2 invalid input, 3 residual failure (float-backend
numeric breakdown), 4 I/O failure.  JSON output keeps a stable key order
and serializes rationals as "p/q" strings, so byte-identical round trips
are ``json.dumps(json.loads(text), indent=2) + "\\n" == text``.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import IO, List, Optional, Sequence, Tuple, Union

from .numeric import DEFAULT_TOLERANCE, Scalar, ToleranceProfile, is_exact
from .triangle import (
    Barycentric,
    InvalidTriangleError,
    Point2,
    SideLengths,
    canonical_vertices,
    metrics,
    sides_from_vertices,
)
from .centers import center_set
from .feuerbach import FeuerbachReport, feuerbach_report
from .harness import PROFILE_KINDS, FuzzProfile, check_identity_suite, random_triangle
from .svg import render_svg

__all__ = ["RunConfig", "main", "cmd_compute", "cmd_feuerbach", "cmd_fuzz", "cmd_svg"]

EXIT_OK = 0
EXIT_INVALID_INPUT = 2
EXIT_RESIDUAL_FAILURE = 3
EXIT_IO_FAILURE = 4


@dataclass(frozen=True)
class RunConfig:
    """Resolved invocation: triangle, backend, tolerances, output target."""

    backend: str  # "exact" | "float"
    fmt: str  # "json" | "text" | "svg"
    tol: ToleranceProfile
    out_path: Optional[str]
    sides: SideLengths
    vertices: Tuple[Point2, Point2, Point2]
    vertices_given: bool
    cartesian_ok: bool  # embedding usable without leaving the backend


def _parse_scalar(text: str, backend: str) -> Scalar:
    value = Fraction(text.strip())  # accepts "3", "3/1", "1.5"
    return value if backend == "exact" else float(value)


def _resolve_input(args: argparse.Namespace) -> RunConfig:
    backend = args.backend
    if args.vertices is not None:
        if backend is None:
            backend = "float"
        raw = [part for part in args.vertices.split(",")]
        if len(raw) != 6:
            raise ValueError(
                f"--vertices needs 6 comma-separated values ax,ay,bx,by,cx,cy, got {len(raw)}"
            )
        coords = [_parse_scalar(part, backend) for part in raw]
        vertices = (
            Point2(coords[0], coords[1]),
            Point2(coords[2], coords[3]),
            Point2(coords[4], coords[5]),
        )
        sides = sides_from_vertices(*vertices, exact=(backend == "exact"))
        cartesian_ok = True
        vertices_given = True
    else:
        if backend is None:
            backend = "exact"
        raw = args.sides.split(",")
        if len(raw) != 3:
            raise ValueError(f"--sides needs 3 comma-separated values a,b,c, got {len(raw)}")
        sides = SideLengths(*(_parse_scalar(part, backend) for part in raw))
        vertices = canonical_vertices(sides)
        cartesian_ok = backend == "float" or all(p.is_exact for p in vertices)
        vertices_given = False
    tol = ToleranceProfile(rel_eps=args.rel_eps, abs_eps=args.abs_eps)
    return RunConfig(
        backend=backend,
        fmt=getattr(args, "format", "text"),
        tol=tol,
        out_path=args.out,
        sides=sides,
        vertices=vertices,
        vertices_given=vertices_given,
        cartesian_ok=cartesian_ok,
    )


# --- serialization ---------------------------------------------------------


def _scalar_json(value: Scalar) -> Union[str, float]:
    if is_exact(value):
        value = Fraction(value)
        return f"{value.numerator}/{value.denominator}"
    return float(value)


def _scalar_text(value: Scalar) -> str:
    if is_exact(value):
        value = Fraction(value)
        return f"{value.numerator}/{value.denominator}"
    return repr(float(value))


def _bary_json(bary: Barycentric) -> List[Union[str, float]]:
    return [_scalar_json(v) for v in bary.components]


def _point_json(point: Point2) -> List[Union[str, float]]:
    return [_scalar_json(point.x), _scalar_json(point.y)]


def _metrics_dict(sides: SideLengths) -> dict:
    met = metrics(sides)
    fields = ("s", "K_sq", "R_sq", "r_sq", "rA_sq", "rB_sq", "rC_sq", "Rr", "RrA", "RrB", "RrC")
    return {name: _scalar_json(getattr(met, name)) for name in fields}


def _centers_dict(config: RunConfig) -> dict:
    if config.cartesian_ok:
        centers = center_set(config.sides, config.vertices)
        cartesian = {name: _point_json(point) for name, point in centers.cartesian_items()}
    else:
        centers = center_set(config.sides)
        cartesian = None
    barycentric = {name: _bary_json(bary) for name, bary in centers.barycentric.items()}
    return {"barycentric": barycentric, "cartesian": cartesian}


def _input_dict(config: RunConfig) -> dict:
    doc: dict = {"backend": config.backend}
    if config.vertices_given:
        doc["vertices"] = [_point_json(p) for p in config.vertices]
    else:
        doc["sides"] = [_scalar_json(v) for v in config.sides.as_tuple()]
    return doc


def _feuerbach_list(report: FeuerbachReport) -> list:
    entries = []
    for entry in report.entries:
        entries.append(
            {
                "circle": entry.circle,
                "kind": entry.report.kind.value,
                "lhs": _scalar_json(entry.report.lhs),
                "rhs": _scalar_json(entry.report.rhs),
                "residual": _scalar_json(entry.report.residual),
            }
        )
    return entries


def _emit(text: str, out_path: Optional[str]) -> int:
    if out_path is None:
        sys.stdout.write(text)
        return EXIT_OK
    try:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text)
    except OSError as exc:
        print(f"error: cannot write {out_path}: {exc}", file=sys.stderr)
        return EXIT_IO_FAILURE
    return EXIT_OK


def _dump_json(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


# --- subcommands -----------------------------------------------------------


def cmd_compute(config: RunConfig) -> int:
    if config.fmt == "svg":
        return cmd_svg(config)
    doc = {
        "input": _input_dict(config),
        "metrics": _metrics_dict(config.sides),
        "centers": _centers_dict(config),
    }
    if config.fmt == "json":
        return _emit(_dump_json(doc), config.out_path)
    lines = [f"backend: {config.backend}"]
    if config.vertices_given:
        pts = ", ".join(
            f"{n}=({_scalar_text(p.x)}, {_scalar_text(p.y)})"
            for n, p in zip("ABC", config.vertices)
        )
        lines.append(f"vertices: {pts}")
    a, b, c = config.sides.as_tuple()
    lines.append(f"sides: a={_scalar_text(a)} b={_scalar_text(b)} c={_scalar_text(c)}")
    lines.append("metrics:")
    for name, value in doc["metrics"].items():
        lines.append(f"  {name:5s} = {value}")
    lines.append("centers (barycentric):")
    for name, triple in doc["centers"]["barycentric"].items():
        lines.append(f"  {name:2s} = ({triple[0]}, {triple[1]}, {triple[2]})")
    if doc["centers"]["cartesian"] is None:
        lines.append("centers (cartesian): not exactly embeddable; use --backend float")
    else:
        lines.append("centers (cartesian):")
        for name, pair in doc["centers"]["cartesian"].items():
            lines.append(f"  {name:2s} = ({pair[0]}, {pair[1]})")
    return _emit("\n".join(lines) + "\n", config.out_path)


def cmd_feuerbach(config: RunConfig) -> int:
    if config.fmt == "svg":
        return cmd_svg(config)
    report = feuerbach_report(config.sides, config.tol)
    doc = {
        "input": _input_dict(config),
        "metrics": _metrics_dict(config.sides),
        "centers": _centers_dict(config),
        "equilateral": report.equilateral,
        "feuerbach": _feuerbach_list(report),
    }
    if config.fmt == "json":
        code = _emit(_dump_json(doc), config.out_path)
    else:
        lines = [f"backend: {config.backend}"]
        a, b, c = config.sides.as_tuple()
        lines.append(f"sides: a={_scalar_text(a)} b={_scalar_text(b)} c={_scalar_text(c)}")
        met = metrics(config.sides)
        lines.append(f"R_sq = {_scalar_text(met.R_sq)}  r_sq = {_scalar_text(met.r_sq)}")
        lines.append(f"nine-point radius squared (R_sq/4): {_scalar_text(met.R_sq / 4)}")
        if report.equilateral:
            lines.append("equilateral: incircle and nine-point circle coincide")
        for entry in report.entries:
            kind = entry.report.kind.value
            if entry.circle == "incircle" and report.equilateral:
                kind = f"{kind} (equilateral)"
            lines.append(
                f"{entry.circle:8s} {kind:18s} "
                f"d_sq = {_scalar_text(entry.report.lhs)}  "
                f"rhs = {_scalar_text(entry.report.rhs)}  "
                f"residual = {_scalar_text(entry.report.residual)}"
            )
        verdict = "all tangencies verified" if report.ok else "TANGENCY CHECK FAILED"
        if config.backend == "float" and report.ok:
            verdict += f" (max normalized residual {report.max_normalized_residual:.3e})"
        lines.append(verdict)
        code = _emit("\n".join(lines) + "\n", config.out_path)
    if code != EXIT_OK:
        return code
    return EXIT_OK if report.ok else EXIT_RESIDUAL_FAILURE


def cmd_fuzz(args: argparse.Namespace) -> int:
    backend = args.backend or "exact"
    tol = ToleranceProfile(rel_eps=args.rel_eps, abs_eps=args.abs_eps)
    profile = FuzzProfile(
        kind=args.profile,
        count=args.count,
        seed=args.seed,
        magnitude_bound=args.bound,
    )
    passes = 0
    failures: List[str] = []
    max_residual = 0.0
    all_exact = True
    for index in range(profile.count):
        sides, vertices = random_triangle(profile, index)
        if backend == "float":
            sides = sides.as_float()
            vertices = tuple(p.as_float() for p in vertices)
        suite = check_identity_suite(sides, vertices, tol)
        all_exact = all_exact and suite.exact
        max_residual = max(max_residual, suite.max_residual)
        if suite.passed:
            passes += 1
        elif len(failures) < 10:
            worst = max(suite.failures(), key=lambda check: check.residual)
            failures.append(f"index {index}: {worst.name} residual {worst.residual:.3e}")
    doc = {
        "profile": profile.kind,
        "count": profile.count,
        "seed": profile.seed,
        "bound": profile.magnitude_bound,
        "backend": backend,
        "passes": passes,
        "failures": profile.count - passes,
        "all_exact": all_exact,
        "max_normalized_residual": max_residual,
    }
    if getattr(args, "format", "text") == "json":
        code = _emit(_dump_json(doc), args.out)
    else:
        lines = [
            f"profile={profile.kind} count={profile.count} seed={profile.seed} "
            f"bound={profile.magnitude_bound} backend={backend}"
        ]
        if all_exact and passes == profile.count:
            lines.append(f"{passes}/{profile.count} exact-zero")
        else:
            lines.append(f"{passes}/{profile.count} within tolerance")
        lines.append(f"max normalized residual: {max_residual!r}")
        lines.extend(failures)
        code = _emit("\n".join(lines) + "\n", args.out)
    if code != EXIT_OK:
        return code
    return EXIT_OK if passes == profile.count else EXIT_RESIDUAL_FAILURE


def cmd_svg(config: RunConfig) -> int:
    return _emit(render_svg(config.sides, config.vertices, config.tol), config.out_path)


# --- argument parsing ------------------------------------------------------


def _add_triangle_arguments(parser: argparse.ArgumentParser, formats: Sequence[str]) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--sides", help="comma-separated side lengths a,b,c (each like 3, 3/1 or 1.5)")
    group.add_argument("--vertices", help="comma-separated coordinates ax,ay,bx,by,cx,cy")
    parser.add_argument(
        "--backend",
        choices=("exact", "float"),
        default=None,
        help="scalar backend (default: exact for --sides, float for --vertices)",
    )
    if formats:
        parser.add_argument("--format", choices=tuple(formats), default="text")
    _add_common_arguments(parser)


def _add_common_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--out", default=None, help="write output to this path instead of stdout")
    parser.add_argument("--rel-eps", type=float, default=DEFAULT_TOLERANCE.rel_eps)
    parser.add_argument("--abs-eps", type=float, default=DEFAULT_TOLERANCE.abs_eps)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ninepoint",
        description="Triangle geometry kernel with an exact nine-point tangency verifier.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="metrics and centers of one triangle")
    _add_triangle_arguments(compute, ("json", "text", "svg"))

    feuer = sub.add_parser("feuerbach", help="nine-point tangency report")
    _add_triangle_arguments(feuer, ("json", "text", "svg"))

    fuzz = sub.add_parser("fuzz", help="identity suite over a randomized profile")
    fuzz.add_argument("--profile", choices=PROFILE_KINDS, default="generic")
    fuzz.add_argument("--count", type=int, default=100)
    fuzz.add_argument("--seed", type=int, default=0)
    fuzz.add_argument("--bound", type=int, default=10, help="magnitude bound for generated values")
    fuzz.add_argument("--backend", choices=("exact", "float"), default="exact")
    fuzz.add_argument("--format", choices=("json", "text"), default="text")
    _add_common_arguments(fuzz)

    svg = sub.add_parser("svg", help="schematic SVG drawing")
    _add_triangle_arguments(svg, ())

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID_INPUT if exc.code not in (0, None) else EXIT_OK

    try:
        if args.command == "fuzz":
            return cmd_fuzz(args)
        config = _resolve_input(args)
        if args.command == "compute":
            return cmd_compute(config)
        if args.command == "feuerbach":
            return cmd_feuerbach(config)
        if args.command == "svg":
            return cmd_svg(config)
        raise AssertionError(f"unhandled command {args.command!r}")
    except (InvalidTriangleError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT


if __name__ == "__main__":
    sys.exit(main())
