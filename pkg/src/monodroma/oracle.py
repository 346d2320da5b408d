"""Numeric cross-checks, kept strictly out of the exact pipeline.

Everything here exists to double-check the exact modules from a different
direction: a definition-chasing Newton diagram, a sign-change real-root
count, trajectory winding by integration, and a random collision search.
Floating point is allowed in this module only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence

import numpy as np
from scipy.integrate import solve_ivp
from scipy.optimize import minimize

from .polycore import BivarPoly
from .field import PlanarField
from .realroots import UniPoly

ORACLE_SEED = 20260814


def brute_force_diagram(points: Iterable[tuple[int, int]]) -> list[tuple[int, int]]:
    """Newton diagram vertices straight from the definition, O(n^3).

    A point is a vertex exactly when some direction with strictly positive
    coordinates exposes it as the unique minimizer over the support.  It is
    enough to test the normals of all support pairs plus two steep
    axis-like normals (M, 1) and (1, M) with M larger than any coordinate.
    """
    pts = sorted(set(points))
    if not pts:
        raise ValueError("empty support")
    m = max(max(x, y) for x, y in pts) + 1
    normals = {(m, 1), (1, m), (1, 1)}
    for idx, (x1, y1) in enumerate(pts):
        for x2, y2 in pts[idx + 1:]:
            for w in ((y1 - y2, x2 - x1), (y2 - y1, x1 - x2)):
                if w[0] > 0 and w[1] > 0:
                    normals.add(w)
    vertices = set()
    for w1, w2 in normals:
        values = [w1 * x + w2 * y for x, y in pts]
        best = min(values)
        if values.count(best) == 1:
            vertices.add(pts[values.index(best)])
    return sorted(vertices)


# -- numeric real-root count ---------------------------------------------------


def _bisect_root(coeffs: np.ndarray, a: float, b: float, tol: float) -> float:
    fa = np.polyval(coeffs, a)
    while b - a > tol:
        mid = (a + b) / 2
        fm = np.polyval(coeffs, mid)
        if fm == 0.0:
            return mid
        if (fa > 0) != (fm > 0):
            b = mid
        else:
            a, fa = mid, fm
    return (a + b) / 2


def _sign_change_roots(coeffs: np.ndarray, bound: float, tol: float) -> list[float]:
    degree = len(coeffs) - 1
    if degree <= 0:
        return []
    if degree == 1:
        root = -coeffs[1] / coeffs[0]
        return [root] if -bound < root < bound else []
    critical = _sign_change_roots(np.polyder(coeffs), bound, tol)
    cuts = [-bound] + [c for c in critical if -bound < c < bound] + [bound]
    roots: list[float] = []
    for a, b in zip(cuts, cuts[1:]):
        fa, fb = np.polyval(coeffs, a), np.polyval(coeffs, b)
        if fa == 0.0:
            fa = np.polyval(coeffs, a + (b - a) * 1e-12)
        if fb == 0.0:
            roots.append(b)
            continue
        if (fa > 0) != (fb > 0):
            roots.append(_bisect_root(coeffs, a, b, tol))
    return roots


def numeric_root_count(p: UniPoly, tol: float = 1e-9) -> int:
    """Distinct real roots of a square-free polynomial by sign changes.

    The real line is partitioned at the extrema of p (found recursively on
    the derivative); p is monotone between consecutive extrema, so each
    sign change there is exactly one root, located by bisection to ``tol``.
    """
    if p.is_zero:
        raise ValueError("root count of the zero polynomial")
    if p.degree == 0:
        return 0
    coeffs = np.array([float(c) for c in reversed(p.coeffs)])
    lead = abs(p.coeffs[-1])
    bound = 1.0 + float(max(abs(c) for c in p.coeffs[:-1]) / lead) if p.degree >= 1 else 1.0
    return len(_sign_change_roots(coeffs, bound + 1.0, tol))


# -- winding of a trajectory ---------------------------------------------------


def _compile(poly: BivarPoly) -> Callable[[float, float], float]:
    terms = [(i, j, float(c)) for (i, j), c in poly.terms()]

    def evaluate(x: float, y: float) -> float:
        return sum(c * x**i * y**j for i, j, c in terms)

    return evaluate


@dataclass(frozen=True)
class WindingResult:
    """Accumulated polar angle along one trajectory.

    status: "returned" (first return to the start ray, |angle| = 2*pi),
    "escaped" (left the safety radius), "exhausted" (arc-length budget hit),
    or "failed" (integrator gave up).
    """

    angle: float
    status: str
    arc_length: float


def winding(field: PlanarField, start: tuple[float, float], *,
            safety_radius: float = 100.0, max_arc_length: float = 200.0,
            rtol: float = 1e-10, atol: float = 1e-12) -> WindingResult:
    """Integrate the unit-speed field from ``start`` and track the angle.

    The field is reparametrized by arc length, which keeps the integration
    honest where polynomial growth would stall or blow up the raw field.
    Terminates at the first return to the start ray (accumulated angle
    reaching 2*pi in absolute value) or at the safety radius.
    """
    p_eval, q_eval = _compile(field.p), _compile(field.q)

    def rhs(_s: float, state: np.ndarray) -> list[float]:
        x, y, _theta = state
        vx, vy = p_eval(x, y), q_eval(x, y)
        norm = float(np.hypot(vx, vy))
        if norm < 1e-300:
            return [0.0, 0.0, 0.0]
        dx, dy = vx / norm, vy / norm
        rr = x * x + y * y
        return [dx, dy, (x * dy - y * dx) / rr]

    def full_turn(_s: float, state: np.ndarray) -> float:
        return abs(state[2]) - 2.0 * np.pi

    full_turn.terminal = True

    def escape(_s: float, state: np.ndarray) -> float:
        return float(np.hypot(state[0], state[1])) - safety_radius

    escape.terminal = True

    sol = solve_ivp(
        rhs, (0.0, max_arc_length), [start[0], start[1], 0.0],
        method="RK45", rtol=rtol, atol=atol, events=[full_turn, escape],
    )
    if sol.t_events[0].size:
        return WindingResult(float(sol.y_events[0][0][2]), "returned", float(sol.t_events[0][0]))
    if sol.t_events[1].size:
        return WindingResult(float(sol.y_events[1][0][2]), "escaped", float(sol.t_events[1][0]))
    status = "exhausted" if sol.status == 0 else "failed"
    return WindingResult(float(sol.y[2, -1]), status, float(sol.t[-1]))


# -- collision search ----------------------------------------------------------


def collision_search(f: BivarPoly, g: BivarPoly, *, trials: int = 60,
                     seed: Optional[int] = None) -> Optional[tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]]:
    """Search for distinct rational points with F(p) = F(q), exactly.

    Random starts plus local minimization of |F(p) - F(q)|^2 / |p - q|^2;
    a numeric near-collision only counts once both points round to
    rationals on which the equality holds exactly, so there are no false
    positives.  Returns None when nothing is found.
    """
    rng = np.random.default_rng(ORACLE_SEED if seed is None else seed)
    f_eval, g_eval = _compile(f), _compile(g)

    def objective(z: np.ndarray) -> float:
        px, py, qx, qy = z
        df = f_eval(px, py) - f_eval(qx, qy)
        dg = g_eval(px, py) - g_eval(qx, qy)
        sep = (px - qx) ** 2 + (py - qy) ** 2
        return (df * df + dg * dg) / (1e-9 + sep)

    for _ in range(trials):
        z0 = rng.uniform(-3.0, 3.0, 4)
        res = minimize(objective, z0, method="Nelder-Mead",
                       options={"xatol": 1e-13, "fatol": 1e-26, "maxiter": 5000})
        px, py, qx, qy = res.x
        if (px - qx) ** 2 + (py - qy) ** 2 < 1e-2 or res.fun > 1e-18:
            continue
        for denominator in (1, 2, 4, 8, 16, 32, 64, 128, 256, 1024):
            p = (Fraction(px).limit_denominator(denominator),
                 Fraction(py).limit_denominator(denominator))
            q = (Fraction(qx).limit_denominator(denominator),
                 Fraction(qy).limit_denominator(denominator))
            if p == q:
                continue
            if (f.evaluate(*p) == f.evaluate(*q) and g.evaluate(*p) == g.evaluate(*q)):
                return p, q
    return None
