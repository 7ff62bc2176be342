"""JSON schemas for polynomials, models and arrangements."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Union

from mldegree.arrangement import Arrangement
from mldegree.errors import InputError
from mldegree.exactmath import format_rational, parse_rational
from mldegree.exactmath.multipoly import MultiPoly
from mldegree.formulas import GENERIC, DenseModelSpec, ToricModelSpec
from mldegree.polytope import LatticePolytope, convex_hull


def load_json(path: Union[str, Path]) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc


def poly_from_json(obj: dict, d: int) -> MultiPoly:
    try:
        terms = obj["terms"]
        out = {}
        for t in terms:
            exps = tuple(int(e) for e in t["exps"])
            if len(exps) != d:
                raise InputError(f"exponent vector {list(exps)} does not have length {d}")
            out[exps] = out.get(exps, 0) + parse_rational(t["coeff"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed polynomial JSON: {exc}") from exc
    return MultiPoly(d, out)


def poly_to_json(p: MultiPoly) -> dict:
    return {"terms": [{"coeff": format_rational(c), "exps": list(e)} for e, c in sorted(p.terms.items())]}


def _weights(obj) -> Union[str, tuple[int, ...]]:
    w = obj.get("weights", GENERIC)
    if w == GENERIC:
        return GENERIC
    if not isinstance(w, list) or any(not isinstance(x, int) or isinstance(x, bool) for x in w):
        raise InputError("weights must be a list of integers or \"generic\"")
    return tuple(w)


def model_from_json(obj: dict) -> Union[DenseModelSpec, ToricModelSpec]:
    """Formula-side model: dense (degrees) or toric (polytopes)."""
    try:
        d = int(obj["d"])
        mode = obj.get("mode", "toric" if "polytopes" in obj else "dense")
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed model JSON: {exc}") from exc
    if mode == "dense":
        degrees = obj.get("degrees")
        if not isinstance(degrees, list):
            raise InputError("dense model needs a 'degrees' list")
        return DenseModelSpec(d, tuple(int(b) for b in degrees))
    if mode == "toric":
        polys = obj.get("polytopes")
        if not isinstance(polys, list) or not polys:
            raise InputError("toric model needs a 'polytopes' list")
        spec = ToricModelSpec(tuple(LatticePolytope.from_json(p) for p in polys), _weights(obj))
        if spec.d != d:
            raise InputError(f"polytopes live in dimension {spec.d}, model says d = {d}")
        return spec
    raise InputError(f"unknown model mode {mode!r}")


def model_to_json(spec: Union[DenseModelSpec, ToricModelSpec]) -> dict:
    if isinstance(spec, DenseModelSpec):
        return {"d": spec.d, "mode": "dense", "degrees": list(spec.degrees)}
    return {
        "d": spec.d,
        "mode": "toric",
        "polytopes": [P.to_json() for P in spec.polytopes],
        "weights": spec.weights if spec.weights == GENERIC else list(spec.weights),
    }


@dataclass(frozen=True)
class OracleModel:
    """Concrete polynomials and weights for the critical-point counter."""

    d: int
    polynomials: tuple[MultiPoly, ...]
    weights: tuple[int, ...]
    torus: bool = False
    generic_coefficients: bool = False
    formula: Optional[str] = None  # "dense" or "toric" for cross-checks

    def newton_polytopes(self) -> tuple[LatticePolytope, ...]:
        return tuple(convex_hull(p.support()) for p in self.polynomials)

    def degrees(self) -> tuple[int, ...]:
        return tuple(p.total_degree() for p in self.polynomials)


def oracle_model_from_json(obj: dict) -> OracleModel:
    try:
        d = int(obj["d"])
        polys = tuple(poly_from_json(p, d) for p in obj["polynomials"])
        weights = obj["weights"]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed oracle model JSON: {exc}") from exc
    if not isinstance(weights, list) or any(not isinstance(x, int) or isinstance(x, bool) for x in weights):
        raise InputError("oracle models need concrete integer weights")
    formula = obj.get("formula")
    if formula not in (None, "dense", "toric"):
        raise InputError(f"unknown formula {formula!r}")
    return OracleModel(
        d, polys, tuple(weights),
        torus=bool(obj.get("torus", False)),
        generic_coefficients=bool(obj.get("generic_coefficients", False)),
        formula=formula,
    )


def oracle_model_to_json(m: OracleModel) -> dict:
    out = {
        "d": m.d,
        "polynomials": [poly_to_json(p) for p in m.polynomials],
        "weights": list(m.weights),
        "torus": m.torus,
        "generic_coefficients": m.generic_coefficients,
    }
    if m.formula:
        out["formula"] = m.formula
    return out


def arrangement_from_json(obj: dict) -> Arrangement:
    return Arrangement.from_json(obj)
