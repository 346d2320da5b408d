"""End-to-end injectivity certification for planar polynomial maps.

Given F = (f, g) with F(0, 0) = (0, 0) and nowhere-vanishing Jacobian
determinant, F is globally injective as soon as the origin of the
compactified Hamiltonian field b(X) is monodromic; the pipeline chains

    F -> det check -> X -> b(X) -> Newton diagram -> monodromy conditions

entirely in exact arithmetic and returns a Certificate recording every
stage.  The determinant hypothesis is only ever proved by two conservative
patterns (nonzero constant; positive constant plus even monomials with
positive coefficients, or the global negation).  Anything else is Unknown
unless the caller assumes it, and a found zero makes the map ineligible.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field as dataclass_field
from fractions import Fraction
from typing import Optional

from .polycore import BivarPoly
from .field import (
    PlanarField, common_real_linear_factors, hamiltonian_field, leading_forms,
    real_linear_factor_exists,
)
from .bendixson import compactify
from .diagram import NewtonDiagram, build_diagram
from .monodromy import MONODROMIC, MonodromyVerdict, check_monodromic
from .realroots import FactorWitness

SCHEMA_VERSION = 1
DEFAULT_SEED = 20260814

PROVED = "ProvedNonvanishing"
ASSUMED = "AssumedByUser"
UNKNOWN = "Unknown"
VANISHES = "VanishesAt"

INJECTIVE = "Injective"
INCONCLUSIVE = "Inconclusive"
NOT_APPLICABLE = "NotApplicable"


@dataclass(frozen=True)
class DetStatus:
    """What is known about the Jacobian determinant of the input map."""

    status: str
    method: Optional[str] = None
    witness: Optional[tuple[Fraction, Fraction]] = None
    witness_exact: bool = False
    detail: Optional[str] = None

    @property
    def holds(self) -> bool:
        return self.status in (PROVED, ASSUMED)


def jacobian_det(f: BivarPoly, g: BivarPoly) -> BivarPoly:
    """det DF = f_x * g_y - f_y * g_x."""
    return f.partial(0) * g.partial(1) - f.partial(1) * g.partial(0)


def _even_positive_method(det: BivarPoly) -> Optional[str]:
    """Match the even-monomial positivity pattern, or its global negation."""
    for sign, name in ((1, "positive"), (-1, "negative")):
        if sign * det.coeff(0, 0) <= 0:
            continue
        if all(i % 2 == 0 and j % 2 == 0 and sign * c > 0 for (i, j), c in det.terms()):
            return f"{name} constant plus even monomials of matching sign"
    return None


def _grid_points(rng: random.Random) -> list[tuple[Fraction, Fraction]]:
    half = Fraction(1, 2)
    grid = [Fraction(k) * half for k in range(-10, 11)]
    points = [(gx, gy) for gx in grid for gy in grid]
    for _ in range(100):
        points.append((
            Fraction(rng.randint(-1000, 1000), rng.randint(1, 100)),
            Fraction(rng.randint(-1000, 1000), rng.randint(1, 100)),
        ))
    return points


def _bisect_zero(det: BivarPoly, pos: tuple[Fraction, Fraction],
                 neg: tuple[Fraction, Fraction]) -> tuple[tuple[Fraction, Fraction], bool]:
    """Shrink a sign-changing segment to width 1e-6; exact hit wins."""
    tol = Fraction(1, 10**6)
    lo, hi = pos, neg
    while max(abs(hi[0] - lo[0]), abs(hi[1] - lo[1])) > tol:
        mid = ((lo[0] + hi[0]) / 2, (lo[1] + hi[1]) / 2)
        value = det.evaluate(*mid)
        if value == 0:
            return mid, True
        if value > 0:
            lo = mid
        else:
            hi = mid
    return ((lo[0] + hi[0]) / 2, (lo[1] + hi[1]) / 2), False


def det_nonvanishing_heuristic(det: BivarPoly, seed: Optional[int] = None) -> DetStatus:
    """Conservative decision procedure for the determinant hypothesis.

    Deliberately incomplete: positivity proofs beyond the two syntactic
    patterns are out of scope, so a positive-definite determinant such as
    (x^2 - y^2)^2 + 1 comes back Unknown.  Zeros, however, are hunted:
    exact evaluation on the half-integer grid over [-5, 5]^2 and 100 random
    rational points, then bisection on any sign change.
    """
    if det.is_zero:
        return DetStatus(VANISHES, witness=(Fraction(0), Fraction(0)), witness_exact=True,
                         detail="determinant is identically zero")
    if det.support() == [(0, 0)]:
        return DetStatus(PROVED, method="nonzero constant")
    method = _even_positive_method(det)
    if method is not None:
        return DetStatus(PROVED, method=method)

    rng = random.Random(DEFAULT_SEED if seed is None else seed)
    positive: Optional[tuple[Fraction, Fraction]] = None
    negative: Optional[tuple[Fraction, Fraction]] = None
    for point in _grid_points(rng):
        value = det.evaluate(*point)
        if value == 0:
            return DetStatus(VANISHES, witness=point, witness_exact=True,
                             detail="exact zero found by sampling")
        if value > 0:
            positive = positive or point
        else:
            negative = negative or point
        if positive and negative:
            witness, exact = _bisect_zero(det, positive, negative)
            return DetStatus(
                VANISHES, witness=witness, witness_exact=exact,
                detail="sign change located by bisection" if not exact
                else "exact zero found by bisection")
    return DetStatus(UNKNOWN, detail="no syntactic pattern matched and sampling saw one sign")


def cima_condition(f: BivarPoly, g: BivarPoly) -> bool:
    """Whether the leading forms of the Hamiltonian field components share
    no real linear factor.  A zero component counts as divisible by every
    linear form, so only real-factor-free partners survive it.
    """
    x_field = hamiltonian_field(f, g)
    lam_top, omg_top = leading_forms(x_field)
    if lam_top.is_zero:
        return not real_linear_factor_exists(omg_top)
    if omg_top.is_zero:
        return not real_linear_factor_exists(lam_top)
    return not common_real_linear_factors(lam_top, omg_top)


@dataclass(frozen=True)
class Certificate:
    """Full record of one certification run."""

    f: BivarPoly
    g: BivarPoly
    verdict: str
    reason: Optional[str]
    det_status: DetStatus
    cima: Optional[bool]
    hamiltonian: Optional[PlanarField]
    compactified: Optional[PlanarField]
    diagram: Optional[NewtonDiagram]
    monodromy: Optional[MonodromyVerdict]
    timings_ms: dict[str, float] = dataclass_field(default_factory=dict)
    oracle_winding: Optional[list[dict]] = None

    def to_json_dict(self) -> dict:
        return _certificate_json(self)


def certify(f: BivarPoly, g: BivarPoly, *, assume_det: bool = False,
            seed: Optional[int] = None, with_oracle: bool = False) -> Certificate:
    """Run the full pipeline on F = (f, g)."""
    timings: dict[str, float] = {}
    start_total = time.perf_counter()

    def done(stage: str, start: float) -> None:
        timings[stage] = (time.perf_counter() - start) * 1000.0

    def finish(verdict: str, reason: Optional[str], det: DetStatus,
               cima: Optional[bool] = None, ham: Optional[PlanarField] = None,
               comp: Optional[PlanarField] = None, dia: Optional[NewtonDiagram] = None,
               mono: Optional[MonodromyVerdict] = None,
               oracle: Optional[list[dict]] = None) -> Certificate:
        timings["total"] = (time.perf_counter() - start_total) * 1000.0
        return Certificate(f, g, verdict, reason, det, cima, ham, comp, dia, mono,
                           timings, oracle)

    if f.is_zero and g.is_zero:
        return finish(NOT_APPLICABLE, "zero map: the Hamiltonian field vanishes identically",
                      DetStatus(VANISHES, witness=(Fraction(0), Fraction(0)),
                                witness_exact=True, detail="determinant is identically zero"))

    f0, g0 = f.evaluate(0, 0), g.evaluate(0, 0)
    if f0 or g0:
        return finish(
            NOT_APPLICABLE,
            f"origin is not fixed: F(0,0) = ({f0}, {g0}); "
            "certify the translate (f - f(0,0), g - g(0,0)) instead",
            DetStatus(UNKNOWN))

    start = time.perf_counter()
    det = jacobian_det(f, g)
    if assume_det and not det.is_zero:
        det_status = DetStatus(ASSUMED, detail="determinant hypothesis assumed by the caller")
    else:
        det_status = det_nonvanishing_heuristic(det, seed=seed)
    done("det", start)
    if det_status.status == VANISHES:
        return finish(NOT_APPLICABLE,
                      f"Jacobian determinant vanishes ({det_status.detail})", det_status)

    start = time.perf_counter()
    x_field = hamiltonian_field(f, g)
    done("hamiltonian_field", start)
    if x_field.is_zero:
        return finish(NOT_APPLICABLE, "Hamiltonian field is identically zero", det_status)

    start = time.perf_counter()
    b_field = compactify(x_field)
    done("compactify", start)

    start = time.perf_counter()
    dia = build_diagram(b_field)
    done("diagram", start)

    start = time.perf_counter()
    mono = check_monodromic(dia)
    done("monodromy", start)

    start = time.perf_counter()
    cima = cima_condition(f, g)
    done("cima", start)

    oracle_data: Optional[list[dict]] = None
    if with_oracle:
        from . import oracle

        start = time.perf_counter()
        oracle_data = []
        for radius in (0.05, 0.1, 0.3):
            result = oracle.winding(b_field, (radius, 0.0))
            oracle_data.append({
                "start_radius": radius,
                "angle": result.angle,
                "status": result.status,
            })
        done("oracle", start)

    if mono.outcome == MONODROMIC and det_status.holds:
        verdict, reason = INJECTIVE, None
    elif mono.outcome == MONODROMIC:
        verdict = INCONCLUSIVE
        reason = "origin is monodromic but the determinant hypothesis is unproved"
    else:
        verdict = INCONCLUSIVE
        reason = f"monodromy: {mono.outcome}" + (f" ({mono.reason})" if mono.reason else "")
    return finish(verdict, reason, det_status, cima, x_field, b_field, dia, mono, oracle_data)


# -- JSON serialization --------------------------------------------------------


def _frac(x: Fraction) -> str:
    return str(x)


def _point(p: tuple[int, int]) -> list[int]:
    return [p[0], p[1]]


def _exponent_str(e: Optional[Fraction]) -> str:
    return "inf" if e is None else str(e)


def _witness_json(w: FactorWitness) -> dict:
    return {
        "lo": _frac(w.lo),
        "hi": _frac(w.hi),
        "sign": w.sign,
        "exact": None if w.exact is None else _frac(w.exact),
    }


def _diagram_json(dia: NewtonDiagram, mono: Optional[MonodromyVerdict]) -> dict:
    tests = dict(mono.edge_tests) if mono is not None else {}
    edges = []
    for idx, edge in enumerate(dia.edges):
        test = tests.get(idx)
        edges.append({
            "type": [edge.t[0], edge.t[1]],
            "exponent": _exponent_str(edge.exponent),
            "bounded": edge.bounded,
            "endpoints": [_point(v.point) for v in edge.endpoints],
            "line_value": edge.line_value,
            "r": edge.r,
            "hamiltonian": [[i, j, c] for i, j, c in edge.h.to_term_list()],
            "mu": [[i, j, c] for i, j, c in edge.mu.to_term_list()],
            "factor_test": None if test is None else {
                "has_factor": test.has_factor,
                "witnesses": [_witness_json(w) for w in test.witnesses],
            },
        })
    return {
        "vertices": [{
            "point": _point(v.point),
            "coeff": [_frac(v.coeff[0]), _frac(v.coeff[1])],
            "kind": v.kind,
            "exponent": _exponent_str(v.exponent),
        } for v in dia.vertices],
        "edges": edges,
        "betas": [{"vertex": _point(pt), "beta": _frac(beta)}
                  for pt, beta in dia.inner_betas],
        "beta_undefined": [{"vertex": _point(pt), "reason": reason}
                           for pt, reason in dia.beta_undefined],
    }


def _det_json(det: DetStatus) -> dict:
    out: dict = {"status": det.status}
    if det.method is not None:
        out["method"] = det.method
    if det.witness is not None:
        out["witness"] = {
            "x": _frac(det.witness[0]),
            "y": _frac(det.witness[1]),
            "exact": det.witness_exact,
        }
    if det.detail is not None:
        out["detail"] = det.detail
    return out


def _certificate_json(cert: Certificate) -> dict:
    mono = None
    if cert.monodromy is not None:
        mono = {
            "outcome": cert.monodromy.outcome,
            "reason": cert.monodromy.reason,
            "conditions": [{
                "condition": r.condition,
                "passed": r.passed,
                "detail": r.detail,
                "witnesses": list(r.witnesses),
            } for r in cert.monodromy.conditions],
        }
    out = {
        "schema": SCHEMA_VERSION,
        "input": {"f": cert.f.to_string(), "g": cert.g.to_string()},
        "verdict": cert.verdict,
        "reason": cert.reason,
        "det_status": _det_json(cert.det_status),
        "cima_condition": cert.cima,
        "diagram": None if cert.diagram is None
        else _diagram_json(cert.diagram, cert.monodromy),
        "monodromy": mono,
        "timings_ms": dict(cert.timings_ms),
    }
    if cert.oracle_winding is not None:
        out["oracle"] = {"winding": cert.oracle_winding}
    return out
