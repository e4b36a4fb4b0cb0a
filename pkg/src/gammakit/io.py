"""JSON serialization, boundary-trace export and the CSV format.

Complex numbers travel as two-element [re, im] arrays and polynomials as
ascending coefficient arrays, so every value round-trips at full binary
precision through Python's shortest round-trip float rendering.
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass

from .errors import GammaKitError, ParseError, ValidationError
from .geometry import mobius_chart
from .inner import GammaInner, eval_h, validate
from .polynomials import Poly
from .royal import NodeRegion, RoyalNode, RoyalProfile
from .spectral import TrigPoly
from .synthesis import SynthesisSpec
from .tolerances import DEFAULT_TOL, ToleranceConfig

TRACE_HEADER = "t,s_re,s_im,p_re,p_im,x,theta,edge_gap,b_residual"


# -- JSON encoding ------------------------------------------------------------


def _pair(z: complex) -> list[float]:
    return [float(z.real), float(z.imag)]


def _poly_node(p: Poly) -> list[list[float]]:
    return [_pair(c) for c in p.coeffs]


def to_jsonable(value):
    if isinstance(value, Poly):
        return _poly_node(value)
    if isinstance(value, GammaInner):
        return {"E": _poly_node(value.E), "D": _poly_node(value.D), "n": value.n}
    if isinstance(value, SynthesisSpec):
        return {
            "alphas": [_pair(a) for a in value.alphas],
            "taus": [_pair(t) for t in value.taus],
            "sigmas": [_pair(s) for s in value.sigmas],
            "t_plus": value.t_plus,
            "t": value.t,
            "omega": _pair(value.omega),
        }
    if isinstance(value, RoyalProfile):
        return {
            "nodes": [
                {
                    "location": _pair(node.location),
                    "multiplicity": node.multiplicity,
                    "region": node.region.value,
                }
                for node in value.nodes
            ],
            "n": value.n,
            "k": value.k,
        }
    if isinstance(value, TrigPoly):
        return {"n": value.n, "coeffs": [_pair(c) for c in value.coeffs]}
    raise TypeError(f"cannot serialize values of type {type(value).__name__}")


def serialize(value) -> str:
    return json.dumps(to_jsonable(value), indent=2) + "\n"


# -- JSON decoding ------------------------------------------------------------


def _load(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"line {exc.lineno}, column {exc.colno}") from exc


def _complex_at(node, where: str) -> complex:
    if (
        not isinstance(node, list)
        or len(node) != 2
        or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in node)
    ):
        raise ParseError("expected a [re, im] pair", where)
    return complex(node[0], node[1])


def _poly_at(node, where: str) -> Poly:
    if not isinstance(node, list):
        raise ParseError("expected a coefficient array", where)
    return Poly([_complex_at(c, f"{where}[{i}]") for i, c in enumerate(node)])


def _field(doc, key: str, where: str):
    if not isinstance(doc, dict):
        raise ParseError("expected an object", where)
    if key not in doc:
        raise ParseError(f"missing {key!r}", where)
    return doc[key]


def _number(node, where: str) -> float:
    if not isinstance(node, (int, float)) or isinstance(node, bool):
        raise ParseError("expected a number", where)
    return float(node)


def _integer(node, where: str) -> int:
    if not isinstance(node, int) or isinstance(node, bool):
        raise ParseError("expected an integer", where)
    return node


def parse_poly(text: str) -> Poly:
    return _poly_at(_load(text), "$")


def parse_gamma_inner(
    text: str, tol: ToleranceConfig = DEFAULT_TOL, strict: bool = True
) -> GammaInner:
    doc = _load(text)
    e = _poly_at(_field(doc, "E", "$"), "$.E")
    d = _poly_at(_field(doc, "D", "$"), "$.D")
    n = _integer(_field(doc, "n", "$"), "$.n")
    try:
        return validate(e, d, n, tol, strict=strict)
    except GammaKitError as exc:
        raise ValidationError(f"not a valid inner map: {exc}") from exc


def parse_spec(text: str, tol: ToleranceConfig = DEFAULT_TOL) -> SynthesisSpec:
    doc = _load(text)
    alphas = _field(doc, "alphas", "$")
    taus = _field(doc, "taus", "$")
    sigmas = _field(doc, "sigmas", "$")
    for name, node in (("alphas", alphas), ("taus", taus), ("sigmas", sigmas)):
        if not isinstance(node, list):
            raise ParseError("expected an array", f"$.{name}")
    try:
        return SynthesisSpec(
            alphas=tuple(_complex_at(a, f"$.alphas[{i}]") for i, a in enumerate(alphas)),
            taus=tuple(_complex_at(t, f"$.taus[{i}]") for i, t in enumerate(taus)),
            sigmas=tuple(_complex_at(s, f"$.sigmas[{i}]") for i, s in enumerate(sigmas)),
            t_plus=_number(_field(doc, "t_plus", "$"), "$.t_plus"),
            t=_number(_field(doc, "t", "$"), "$.t"),
            omega=_complex_at(_field(doc, "omega", "$"), "$.omega"),
            tol=tol,
        )
    except GammaKitError as exc:
        if isinstance(exc, ParseError):
            raise
        raise ValidationError(f"invalid synthesis spec: {exc}") from exc


def parse_royal_profile(text: str) -> RoyalProfile:
    doc = _load(text)
    nodes_doc = _field(doc, "nodes", "$")
    if not isinstance(nodes_doc, list):
        raise ParseError("expected an array", "$.nodes")
    nodes = []
    for i, entry in enumerate(nodes_doc):
        where = f"$.nodes[{i}]"
        location = _complex_at(_field(entry, "location", where), f"{where}.location")
        multiplicity = _integer(_field(entry, "multiplicity", where), f"{where}.multiplicity")
        region_name = _field(entry, "region", where)
        try:
            region = NodeRegion(region_name)
        except ValueError:
            raise ParseError("region must be 'disc' or 'circle'", f"{where}.region") from None
        if multiplicity < 1:
            raise ValidationError(f"node multiplicity must be positive at {where}")
        nodes.append(RoyalNode(location, multiplicity, region))
    n = _integer(_field(doc, "n", "$"), "$.n")
    k = _integer(_field(doc, "k", "$"), "$.k")
    if n != sum(nd.multiplicity for nd in nodes) or k != sum(
        nd.multiplicity for nd in nodes if nd.region is NodeRegion.CIRCLE
    ):
        raise ValidationError("declared (n, k) disagree with the node multiplicities")
    return RoyalProfile(nodes=tuple(nodes), n=n, k=k)


def parse_trig(text: str) -> TrigPoly:
    doc = _load(text)
    n = _integer(_field(doc, "n", "$"), "$.n")
    coeffs_doc = _field(doc, "coeffs", "$")
    if not isinstance(coeffs_doc, list):
        raise ParseError("expected an array", "$.coeffs")
    coeffs = [_complex_at(c, f"$.coeffs[{i}]") for i, c in enumerate(coeffs_doc)]
    try:
        return TrigPoly(tuple(coeffs), n)
    except ValueError as exc:
        raise ValidationError(str(exc)) from exc


# -- boundary traces -----------------------------------------------------------


@dataclass(frozen=True)
class TraceRow:
    """One sample of the boundary curve t -> h(e^{it}) in chart coordinates."""

    t: float
    s_re: float
    s_im: float
    p_re: float
    p_im: float
    x: float
    theta: float
    edge_gap: float
    b_residual: float


def trace_boundary(h: GammaInner, samples: int) -> list[TraceRow]:
    """Sample the boundary curve with a continuously unwound chart angle.

    Rows sit at t_j = 2 pi j / samples. theta chains each row's value as the
    branch reference of the next, so over one loop it increases by 2 pi times
    the degree of h. edge_gap = 2 - |s| measures contact with the band edge
    and b_residual = |s - conj(s) p| measures distinguished-boundary fidelity.
    """
    if samples < 16:
        raise ValueError("at least 16 samples are required")
    rows = []
    branch_ref = 0.0
    for j in range(samples):
        t = 2.0 * math.pi * j / samples
        s, p = eval_h(h, cmath.exp(1j * t))
        x, theta = mobius_chart(s, p, branch_ref, h.tol)
        branch_ref = theta
        rows.append(
            TraceRow(
                t=t,
                s_re=s.real,
                s_im=s.imag,
                p_re=p.real,
                p_im=p.imag,
                x=x,
                theta=theta,
                edge_gap=2.0 - abs(s),
                b_residual=abs(s - s.conjugate() * p),
            )
        )
    return rows


def trace_to_csv(rows) -> str:
    lines = [TRACE_HEADER]
    for row in rows:
        lines.append(
            ",".join(
                repr(v)
                for v in (
                    row.t,
                    row.s_re,
                    row.s_im,
                    row.p_re,
                    row.p_im,
                    row.x,
                    row.theta,
                    row.edge_gap,
                    row.b_residual,
                )
            )
        )
    return "\n".join(lines) + "\n"
