"""Command-line front end.

Subcommands
-----------
agcd P.json Q.json --sigma S   run the pipeline on two polynomial files
table --seed K ...             seeded planted-gcd comparison table
serve --port N                 run the HTTP service

The CLI is a thin client: it builds the same request objects the HTTP
service accepts and either dispatches them in-process (default) or posts
them to a running service given with --server.

Exit codes: 0 success, 1 invalid flags, 2 unreadable or invalid input
file, 3 pipeline/runtime error.  Errors are structured JSON objects on
standard error; reports go to standard output.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Sequence

import pydantic

from . import __version__
from .files import PolynomialFileError, load_polynomial
from .service.handlers import run_agcd, run_roots, run_table
from .service.models import (
    AgcdReport,
    AgcdRequest,
    ErrorBody,
    ErrorDetail,
    OptionsModel,
    PolynomialModel,
    RootsReport,
    RootsRequest,
    TableReport,
    TableRequest,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FILE = 2
EXIT_PIPELINE = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad flags; we reserve 2 for file
    errors, so convert parse failures into exceptions instead."""

    def error(self, message: str) -> None:  # noqa: A003 - argparse API
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="bernstein-agcd", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_agcd = sub.add_parser("agcd", help="approximate gcd of two polynomial files")
    p_agcd.add_argument("p_file", help="first polynomial (JSON)")
    p_agcd.add_argument("q_file", help="second polynomial (JSON)")
    p_agcd.add_argument("--sigma", type=float, required=True,
                        help="clustering/matching radius (must be > 0)")
    p_agcd.add_argument("--edge-factor", type=float, default=2.0,
                        help="matching threshold is edge-factor * sigma")
    p_agcd.add_argument("--norm-r", default="2",
                        help="norm exponent r (positive integer or 'inf')")
    p_agcd.add_argument("--weights", default=None,
                        help="comma-separated positive weights (default: ones)")
    p_agcd.add_argument("--residual-tol", type=float, default=1e-8)
    p_agcd.add_argument("--raw-root-matching", action="store_true",
                        help="match raw roots instead of cluster means")
    _output_flags(p_agcd)

    p_roots = sub.add_parser("roots", help="pencil roots of one polynomial file")
    p_roots.add_argument("p_file", help="polynomial (JSON)")
    p_roots.add_argument("--residual-tol", type=float, default=1e-8)
    _output_flags(p_roots)

    p_table = sub.add_parser("table", help="seeded planted-gcd comparison table")
    p_table.add_argument("--count", type=int, default=5)
    p_table.add_argument("--max-degree", type=int, default=10)
    p_table.add_argument("--gcd-degree", type=int, default=3)
    p_table.add_argument("--noise", type=float, default=1e-6)
    p_table.add_argument("--sigma", type=float, default=1e-3)
    p_table.add_argument("--seed", type=int, default=0)
    p_table.add_argument("--edge-factor", type=float, default=2.0)
    p_table.add_argument("--box", default="-1,2",
                         help="root sampling box 'lo,hi'")
    p_table.add_argument("--min-separation", type=float, default=0.1)
    _output_flags(p_table)

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)

    return parser


def _output_flags(sub: argparse.ArgumentParser) -> None:
    fmt = sub.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="as_json", action="store_true", default=True,
                     help="JSON report on stdout (default)")
    fmt.add_argument("--text", dest="as_json", action="store_false",
                     help="plain-text report on stdout")
    sub.add_argument("--server", default=None, metavar="URL",
                     help="post the request to a running service instead of "
                          "computing in-process")


def _emit_error(code: str, message: str) -> None:
    body = ErrorBody(error=ErrorDetail(code=code, message=message))
    print(body.model_dump_json(), file=sys.stderr)


def _parse_norm_r(raw: str) -> int | str:
    if raw.strip().lower() in {"inf", "infinity"}:
        return "inf"
    try:
        value = int(raw)
    except ValueError:
        raise _UsageError(f"--norm-r must be a positive integer or 'inf', got {raw!r}")
    if value < 1:
        raise _UsageError("--norm-r must be >= 1")
    return value


def _parse_weights(raw: str | None) -> list[float] | None:
    if raw is None:
        return None
    try:
        weights = [float(part) for part in raw.split(",") if part.strip()]
    except ValueError:
        raise _UsageError(f"--weights must be comma-separated numbers, got {raw!r}")
    if not weights:
        raise _UsageError("--weights is empty")
    return weights


def _parse_box(raw: str) -> tuple[float, float]:
    parts = raw.split(",")
    if len(parts) != 2:
        raise _UsageError(f"--box must be 'lo,hi', got {raw!r}")
    try:
        lo, hi = float(parts[0]), float(parts[1])
    except ValueError:
        raise _UsageError(f"--box must be 'lo,hi', got {raw!r}")
    return lo, hi


def _options_from_args(args: argparse.Namespace) -> OptionsModel:
    if not math.isfinite(args.sigma) or args.sigma <= 0:
        raise _UsageError(f"--sigma must be > 0, got {args.sigma}")
    try:
        return OptionsModel(
            sigma=args.sigma,
            edge_factor=args.edge_factor,
            norm_r=_parse_norm_r(args.norm_r),
            weights=_parse_weights(args.weights),
            residual_tol=args.residual_tol,
            raw_root_matching=args.raw_root_matching,
        )
    except pydantic.ValidationError as exc:
        raise _UsageError(_validation_message(exc))


def _validation_message(exc: pydantic.ValidationError) -> str:
    first = exc.errors()[0]
    where = ".".join(str(piece) for piece in first["loc"])
    message = first["msg"]
    if message.startswith("Value error, "):
        message = message[len("Value error, "):]
    return f"{where}: {message}" if where else message


def _load_polynomial_model(path: str) -> PolynomialModel:
    poly = load_polynomial(path)
    return PolynomialModel.from_poly(poly)


def _post(server: str, path: str, payload: dict) -> dict:
    import httpx

    url = server.rstrip("/") + path
    try:
        response = httpx.post(url, json=payload, timeout=120.0)
    except httpx.HTTPError as exc:
        raise RuntimeError(f"request to {url} failed: {exc}")
    if response.status_code >= 400:
        try:
            detail = response.json()
        except ValueError:
            detail = {"error": {"kind": "server", "message": response.text}}
        message = detail.get("error", {}).get("message", response.text)
        raise RuntimeError(f"server returned {response.status_code}: {message}")
    return response.json()


def _fmt(value: float) -> str:
    return repr(float(value))


def _fmt_row(values: Sequence[float]) -> str:
    return ", ".join(_fmt(v) for v in values)


def _render_agcd_text(report: AgcdReport) -> str:
    lines = [f"agcd degree: {report.degree}"]
    lines.append(f"interval: [{_fmt(report.interval[0])}, {_fmt(report.interval[1])}]")
    lines.append("agcd roots (multiplicity):")
    if report.agcd_roots:
        for root in report.agcd_roots:
            z = complex(root.real, root.imag)
            lines.append(f"  {z!r}  x{root.multiplicity}")
    else:
        lines.append("  (none)")
    lines.append(f"agcd coefficients: {_fmt_row(report.agcd_coefficients)}")
    lines.append(f"p_tilde coefficients: {_fmt_row(report.p_tilde.coefficients)}")
    lines.append(f"q_tilde coefficients: {_fmt_row(report.q_tilde.coefficients)}")
    d = report.distances
    lines.append(f"coefficient distance P: {_fmt(d.coefficient_p)}")
    lines.append(f"coefficient distance Q: {_fmt(d.coefficient_q)}")
    lines.append(f"root distance P: {_fmt(d.root_p)}")
    lines.append(f"root distance Q: {_fmt(d.root_q)}")
    g = report.diagnostics
    lines.append(
        "enforcement residuals: "
        f"P {_fmt(g.enforcement_residual_p)}, Q {_fmt(g.enforcement_residual_q)}, "
        f"agcd roots {_fmt(g.agcd_root_residual)}"
    )
    lines.append(f"elapsed seconds: {_fmt(report.elapsed_seconds)}")
    return "\n".join(lines)


def _render_roots_text(report: RootsReport) -> str:
    lines = ["roots:"]
    for (re_part, im_part), ok in zip(report.roots, report.residual_ok):
        flag = "" if ok else "  [residual check failed]"
        lines.append(f"  {complex(re_part, im_part)!r}{flag}")
    lines.append(f"discarded infinite eigenvalues: {report.discarded_count}")
    return "\n".join(lines)


def _render_table_text(report: TableReport) -> str:
    header = ("max_degree  agcd_degree  coefficient_p  root_p  "
              "coefficient_q  root_q")
    lines = [header]
    for row in report.rows:
        lines.append(
            f"{row.max_degree}  {row.agcd_degree}  "
            f"{_fmt(row.coefficient_p)}  {_fmt(row.root_p)}  "
            f"{_fmt(row.coefficient_q)}  {_fmt(row.root_q)}"
        )
    return "\n".join(lines)


def _cmd_agcd(args: argparse.Namespace) -> int:
    options = _options_from_args(args)
    try:
        p_model = _load_polynomial_model(args.p_file)
        q_model = _load_polynomial_model(args.q_file)
    except (OSError, PolynomialFileError) as exc:
        _emit_error("file", str(exc))
        return EXIT_FILE
    request = AgcdRequest(p=p_model, q=q_model, options=options)
    try:
        if args.server:
            report = AgcdReport.model_validate(
                _post(args.server, "/agcd", request.model_dump())
            )
        else:
            report = run_agcd(request)
    except (ValueError, RuntimeError) as exc:
        _emit_error("pipeline", str(exc))
        return EXIT_PIPELINE
    print(report.model_dump_json() if args.as_json else _render_agcd_text(report))
    return EXIT_OK


def _cmd_roots(args: argparse.Namespace) -> int:
    try:
        p_model = _load_polynomial_model(args.p_file)
    except (OSError, PolynomialFileError) as exc:
        _emit_error("file", str(exc))
        return EXIT_FILE
    request = RootsRequest(polynomial=p_model, residual_tol=args.residual_tol)
    try:
        if args.server:
            report = RootsReport.model_validate(
                _post(args.server, "/roots", request.model_dump())
            )
        else:
            report = run_roots(request)
    except (ValueError, RuntimeError) as exc:
        _emit_error("pipeline", str(exc))
        return EXIT_PIPELINE
    print(report.model_dump_json() if args.as_json else _render_roots_text(report))
    return EXIT_OK


def _cmd_table(args: argparse.Namespace) -> int:
    try:
        request = TableRequest(
            count=args.count,
            max_degree=args.max_degree,
            gcd_degree=args.gcd_degree,
            noise=args.noise,
            sigma=args.sigma,
            seed=args.seed,
            edge_factor=args.edge_factor,
            box=_parse_box(args.box),
            min_separation=args.min_separation,
        )
    except pydantic.ValidationError as exc:
        raise _UsageError(_validation_message(exc))
    try:
        if args.server:
            report = TableReport.model_validate(
                _post(args.server, "/table", request.model_dump())
            )
        else:
            report = run_table(request)
    except (ValueError, RuntimeError) as exc:
        _emit_error("pipeline", str(exc))
        return EXIT_PIPELINE
    print(report.model_dump_json() if args.as_json else _render_table_text(report))
    return EXIT_OK


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service.app import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "agcd":
            return _cmd_agcd(args)
        if args.command == "roots":
            return _cmd_roots(args)
        if args.command == "table":
            return _cmd_table(args)
        if args.command == "serve":
            return _cmd_serve(args)
        raise _UsageError(f"unknown command {args.command!r}")
    except _UsageError as exc:
        _emit_error("usage", str(exc))
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
