"""Compactification: inversion identity, pair pieces, diagonal part."""

import random
from fractions import Fraction

import pytest

from monodroma import (
    BivarPoly,
    DegenerateTransformError,
    PlanarField,
    ZeroPolynomialError,
    compactify,
    diagonal_part,
    hamiltonian_field,
    map_degree,
    newton_chain,
    pair_component,
    support,
)

from genmaps import rand_any_map, rand_homogeneous, rand_poly

X = BivarPoly.monomial(1, 0)
Y = BivarPoly.monomial(0, 1)


def test_rotation_example():
    b_field = compactify(PlanarField(-Y, X))
    assert b_field.p == -(X ** 2) * Y - Y ** 3
    assert b_field.q == X ** 3 + X * Y ** 2


def test_zero_field_passes_through():
    assert compactify(PlanarField(BivarPoly.zero(), BivarPoly.zero())).is_zero


def test_constant_field_rejected():
    with pytest.raises(DegenerateTransformError):
        compactify(PlanarField(BivarPoly.const(1), BivarPoly.zero()))


def test_pointwise_inversion_identity():
    # b(X)(u, v) = (u^2+v^2)^d * [(v^2-u^2) P - 2uv Q, (u^2-v^2) Q - 2uv P]
    # evaluated at the inverted point (u, v)/(u^2+v^2); exact rationals.
    rng = random.Random(601)
    trials = 0
    while trials < 200:
        field = PlanarField(rand_poly(rng, max_degree=3, terms=4),
                            rand_poly(rng, max_degree=3, terms=4))
        if field.is_zero or field.degree() == 0:
            continue
        trials += 1
        d = field.degree()
        b_field = compactify(field)
        u0 = Fraction(rng.randint(-8, 8), rng.randint(1, 5))
        v0 = Fraction(rng.randint(-8, 8), rng.randint(1, 5))
        if u0 == 0 and v0 == 0:
            u0 = Fraction(1)
        circle = u0 * u0 + v0 * v0
        x0, y0 = u0 / circle, v0 / circle
        p_val, q_val = field.evaluate(x0, y0)
        scale = circle ** d
        assert b_field.p.evaluate(u0, v0) == scale * ((v0 * v0 - u0 * u0) * p_val - 2 * u0 * v0 * q_val)
        assert b_field.q.evaluate(u0, v0) == scale * ((u0 * u0 - v0 * v0) * q_val - 2 * u0 * v0 * p_val)


def test_degree_bound_and_origin_fixed():
    rng = random.Random(602)
    checked = 0
    while checked < 100:
        field = PlanarField(rand_poly(rng, max_degree=4), rand_poly(rng, max_degree=4))
        if field.is_zero or field.degree() == 0:
            continue
        checked += 1
        d = field.degree()
        b_field = compactify(field)
        assert not b_field.is_zero
        assert b_field.degree() <= 2 * d + 2
        assert b_field.evaluate(0, 0) == (0, 0)


def test_pair_components_assemble_the_compactified_field():
    rng = random.Random(603)
    for _ in range(60):
        f, g = rand_any_map(rng, max_degree=3)
        d = map_degree(f, g)
        if d == 0:
            continue
        b_field = compactify(hamiltonian_field(f, g))
        acc_p, acc_q = BivarPoly.zero(), BivarPoly.zero()
        for i in range(0, d + 1):
            for j in range(i, d + 1):
                piece = pair_component(f, g, i, j)
                weight = Fraction(1, 2) if i == j else Fraction(1)
                acc_p = acc_p + piece.p * weight
                acc_q = acc_q + piece.q * weight
        assert acc_p == b_field.p
        assert acc_q == b_field.q


def test_map_degree_errors_on_zero_map():
    with pytest.raises(ZeroPolynomialError):
        map_degree(BivarPoly.zero(), BivarPoly.zero())
    assert map_degree(X ** 3, Y) == 3


def test_diagonal_part_shares_diagram_vertices():
    rng = random.Random(604)
    checked = 0
    while checked < 60:
        f, g = rand_any_map(rng, max_degree=4)
        if map_degree(f, g) == 0:
            continue
        field = hamiltonian_field(f, g)
        if field.is_zero:
            continue
        checked += 1
        full = compactify(field)
        diagonal = diagonal_part(f, g)
        assert not diagonal.is_zero
        full_pts = [s.point for s in support(full)]
        diag_pts = [s.point for s in support(diagonal)]
        assert newton_chain(full_pts) == newton_chain(diag_pts)


def test_homogeneous_energy_piece_has_closed_form_vertices():
    # For homogeneous W of degree k >= 1, the field
    #   ((x^2-y^2) W_y - 2xy W_x, (x^2-y^2) W_x + 2xy W_y)
    # has the same diagram vertices as the polynomial (x^2+y^2) W, namely
    # (m+2, k-m) and (k-n, n+2) for m = deg_x W, n = deg_y W, with vector
    # coefficients ((k-m) c, (2k-m) c) and ((n-2k) c', (n-k) c').
    rng = random.Random(605)
    for _ in range(150):
        k = rng.randint(1, 6)
        w = rand_homogeneous(rng, k)
        wx, wy = w.partial(0), w.partial(1)
        disc = X ** 2 - Y ** 2
        cross = X * Y * 2
        field = PlanarField(disc * wy - cross * wx, disc * wx + cross * wy)
        assert not field.is_zero
        field_pts = {s.point: s.coeff for s in support(field)}
        chain = newton_chain(field_pts)
        poly_chain = newton_chain(((X ** 2 + Y ** 2) * w).support())
        assert chain == poly_chain

        _, m, n = w.degrees()
        v1 = (m + 2, k - m)
        v2 = (k - n, n + 2)
        assert set(chain) == {v1, v2}
        c1 = w.coeff(m, k - m)
        c2 = w.coeff(k - n, n)
        assert field_pts[v1] == ((k - m) * c1, (2 * k - m) * c1)
        assert field_pts[v2] == ((n - 2 * k) * c2, (n - k) * c2)
