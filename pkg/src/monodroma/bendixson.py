"""Bendixson compactification: swap infinity and the origin.

Under the inversion (x, y) = (u, v)/(u^2 + v^2) a polynomial field
X = (P, Q) of degree d pulls back, after rescaling time by (u^2 + v^2)^d,
to the polynomial field

    b(X) = ( (v^2 - u^2) P* - 2uv Q*,  (u^2 - v^2) Q* - 2uv P* )

where R* is (u^2+v^2)^d R(u/(u^2+v^2), v/(u^2+v^2)).  Working one
homogeneous component at a time keeps everything polynomial: a component
R_k contributes R_k(u, v) * (u^2 + v^2)^(d - k) exactly.

The behaviour of X in the large is then readable at the origin of b(X):
that is where the injectivity certificate looks.
"""

from __future__ import annotations

from fractions import Fraction

from .polycore import BivarPoly
from .field import PlanarField, ZERO_FIELD


class DegenerateTransformError(ValueError):
    """Compactification of a nonzero constant field is not defined."""


def _star(component: BivarPoly, d: int, circle: BivarPoly) -> BivarPoly:
    """(u^2+v^2)^d * component(u/(u^2+v^2), v/(u^2+v^2)), exactly."""
    acc = BivarPoly.zero()
    for k, part in component.homogeneous_components():
        acc = acc + part * circle ** (d - k)
    return acc


def compactify(x_field: PlanarField) -> PlanarField:
    """The compactified field b(X); the zero field maps to itself.

    A nonzero constant field is rejected: with d = 0 the time rescaling
    cannot absorb the inversion and the transform degenerates.
    """
    if x_field.is_zero:
        return ZERO_FIELD
    d = x_field.degree()
    if d == 0:
        raise DegenerateTransformError(
            "cannot compactify a nonzero constant field (degree 0)")
    u = BivarPoly.monomial(1, 0)
    v = BivarPoly.monomial(0, 1)
    circle = u * u + v * v
    p_star = _star(x_field.p, d, circle)
    q_star = _star(x_field.q, d, circle)
    vv_uu = v * v - u * u
    two_uv = u * v * 2
    return PlanarField(
        vv_uu * p_star - two_uv * q_star,
        -vv_uu * q_star - two_uv * p_star,
    )


def _pair_piece(fi: BivarPoly, fj: BivarPoly, gi: BivarPoly, gj: BivarPoly,
                power: int, circle: BivarPoly) -> PlanarField:
    """Compactified contribution of one pair of homogeneous map components."""
    s = fi * fj + gi * gj
    if s.is_zero:
        return ZERO_FIELD
    u = BivarPoly.monomial(1, 0)
    v = BivarPoly.monomial(0, 1)
    uu_vv = u * u - v * v
    two_uv = u * v * 2
    pre = circle ** power
    return PlanarField(
        pre * (uu_vv * s.partial(1) - two_uv * s.partial(0)),
        pre * (uu_vv * s.partial(0) + two_uv * s.partial(1)),
    )


def map_degree(f: BivarPoly, g: BivarPoly) -> int:
    """max(deg f, deg g) over the nonzero components; error if both zero."""
    return PlanarField(f, g).degree()


def pair_component(f: BivarPoly, g: BivarPoly, i: int, j: int) -> PlanarField:
    """Compactified piece coming from degrees (i, j) of the map.

    Summing 1/2 * piece(i, i) over i plus piece(i, j) over i < j rebuilds
    b(X) for the Hamiltonian field of ((f^2 + g^2)/2); the diagonal sum
    alone is the diagonal part.
    """
    d = map_degree(f, g)
    parts_f = dict(f.homogeneous_components())
    parts_g = dict(g.homogeneous_components())
    u = BivarPoly.monomial(1, 0)
    v = BivarPoly.monomial(0, 1)
    circle = u * u + v * v
    zero = BivarPoly.zero()
    return _pair_piece(
        parts_f.get(i, zero), parts_f.get(j, zero),
        parts_g.get(i, zero), parts_g.get(j, zero),
        2 * d - i - j, circle,
    )


def diagonal_part(f: BivarPoly, g: BivarPoly) -> PlanarField:
    """Diagonal part of b(X): 1/2 of the sum of the pure-degree pieces.

    It shares its Newton diagram vertices with the full compactified field,
    which makes it a cheap structural cross-check.
    """
    d = map_degree(f, g)
    acc_p, acc_q = BivarPoly.zero(), BivarPoly.zero()
    for i in range(1, d + 1):
        piece = pair_component(f, g, i, i)
        acc_p = acc_p + piece.p
        acc_q = acc_q + piece.q
    return PlanarField(acc_p * Fraction(1, 2), acc_q * Fraction(1, 2))
