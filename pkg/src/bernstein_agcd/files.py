"""On-disk polynomial format: one JSON document per polynomial.

    {"basis": "bernstein", "interval": [0.0, 1.0], "coefficients": [...]}

JSON decimal literals parse straight to binary doubles, so no precision is
lost beyond the format itself.
"""

from __future__ import annotations

import json
from pathlib import Path

from .bernstein import BernsteinPoly

__all__ = ["PolynomialFileError", "load_polynomial", "dump_polynomial"]


class PolynomialFileError(ValueError):
    """Unreadable or structurally invalid polynomial file."""


def load_polynomial(path: str | Path) -> BernsteinPoly:
    path = Path(path)
    try:
        payload = json.loads(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise PolynomialFileError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise PolynomialFileError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(payload, dict):
        raise PolynomialFileError(f"{path}: expected a JSON object")
    if payload.get("basis") != "bernstein":
        raise PolynomialFileError(f'{path}: "basis" must be "bernstein"')
    interval = payload.get("interval", [0.0, 1.0])
    coefficients = payload.get("coefficients")
    if not isinstance(coefficients, list) or not coefficients:
        raise PolynomialFileError(f'{path}: "coefficients" must be a nonempty array')
    try:
        return BernsteinPoly(
            [float(c) for c in coefficients],
            (float(interval[0]), float(interval[1])),
        )
    except (TypeError, ValueError, IndexError) as exc:
        raise PolynomialFileError(f"{path}: {exc}") from exc


def dump_polynomial(p: BernsteinPoly, path: str | Path) -> None:
    payload = {
        "basis": "bernstein",
        "interval": [p.interval[0], p.interval[1]],
        "coefficients": [float(c) for c in p.coefficients],
    }
    Path(path).write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")
