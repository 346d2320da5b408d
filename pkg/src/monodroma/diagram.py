"""Newton diagrams of planar vector fields.

The diagram is the polygonal part of the boundary of the convex hull of
supp(X) + (first quadrant).  Vertices are listed along the chain starting
next to the y-axis: x strictly increases, y strictly decreases, and edge
exponents t2/t1 strictly increase.  Each edge carries the splitting
(h, mu) of the quasi-homogeneous restriction of the field to the edge's
supporting line; the h of the two edges meeting at an inner vertex define
the vertex invariant beta.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Optional

from .polycore import BivarPoly, QuasiType, quasi_type
from .field import PlanarField, SplitField, SupportPoint, quasi_field_components, split, support


def newton_chain(points: Iterable[tuple[int, int]]) -> list[tuple[int, int]]:
    """Vertices of the Newton diagram of a set of lattice points.

    Pareto-dominated points cannot be vertices and are dropped first; the
    survivors form a staircase on which a monotone-chain sweep keeps the
    strictly convex turns.  A single vertex is a valid (degenerate) chain.
    """
    pts = set(points)
    if not pts:
        raise ValueError("empty support")
    minimal = sorted(
        p for p in pts
        if not any(q != p and q[0] <= p[0] and q[1] <= p[1] for q in pts)
    )
    chain: list[tuple[int, int]] = []
    for p in minimal:
        while len(chain) >= 2:
            ax, ay = chain[-2]
            bx, by = chain[-1]
            cross = (bx - ax) * (p[1] - by) - (by - ay) * (p[0] - bx)
            if cross <= 0:
                chain.pop()
            else:
                break
        chain.append(p)
    return chain


@dataclass(frozen=True)
class Vertex:
    """Diagram vertex with its vector coefficient (a, b).

    The exponent is b/a, with None standing for infinity (a = 0).
    Vertices on a coordinate axis are exterior, all others inner.
    """

    point: tuple[int, int]
    coeff: tuple[Fraction, Fraction]
    kind: str  # "exterior" | "inner"

    @property
    def exponent(self) -> Optional[Fraction]:
        a, b = self.coeff
        return None if a == 0 else b / a


@dataclass(frozen=True)
class Edge:
    """Diagram edge with the splitting of the field along its line.

    Bounded edges join two vertices (given with decreasing y); unbounded
    edges are the vertical ray (type (1, 0), exponent 0) and the horizontal
    ray (type (0, 1), exponent None, i.e. infinity) when those rays do not
    lie on a coordinate axis.  line_value is t1*x + t2*y on the edge and
    r = line_value - t1 - t2 is the quasi-degree of the restricted field.
    """

    t: QuasiType
    bounded: bool
    endpoints: tuple[Vertex, ...]
    line_value: int
    r: int
    h: BivarPoly
    mu: BivarPoly

    @property
    def exponent(self) -> Optional[Fraction]:
        t1, t2 = self.t
        return None if t1 == 0 else Fraction(t2, t1)


@dataclass(frozen=True)
class NewtonDiagram:
    """Vertex chain, edges in exponent order, and inner-vertex betas.

    ``beta_undefined`` lists inner vertices where beta has no value, with
    the reason (adjacent unbounded edge, or a null edge Hamiltonian).
    """

    vertices: tuple[Vertex, ...]
    edges: tuple[Edge, ...]
    inner_betas: tuple[tuple[tuple[int, int], Fraction], ...]
    beta_undefined: tuple[tuple[tuple[int, int], str], ...]

    def vertex_points(self) -> list[tuple[int, int]]:
        return [v.point for v in self.vertices]

    def bounded_edges(self) -> list[Edge]:
        return [e for e in self.edges if e.bounded]

    def betas(self) -> dict[tuple[int, int], Fraction]:
        return dict(self.inner_betas)


def edge_hamiltonian(x_field: PlanarField, t: QuasiType, line_value: int) -> SplitField:
    """Split the restriction of the field to the line t1*x + t2*y = line_value.

    Errors when the line misses the support of the field.
    """
    t1, t2 = quasi_type(*t)
    k = line_value - t1 - t2
    for degree, component in quasi_field_components(x_field, (t1, t2)):
        if degree == k:
            return split(component, k, (t1, t2))
    raise ValueError(
        f"line {t1}*x + {t2}*y = {line_value} misses the support of the field")


def _edge_type(a: tuple[int, int], b: tuple[int, int]) -> QuasiType:
    dx = b[0] - a[0]
    dy = a[1] - b[1]
    g = gcd(dx, dy)
    return quasi_type(dy // g, dx // g)


def _highest_x_coeff(h: BivarPoly) -> Fraction:
    (i, j), _ = max(h.terms(), key=lambda term: term[0][0])
    return h.coeff(i, j)


def _highest_y_coeff(h: BivarPoly) -> Fraction:
    (i, j), _ = max(h.terms(), key=lambda term: term[0][1])
    return h.coeff(i, j)


def build_diagram(x_field: PlanarField) -> NewtonDiagram:
    """Newton diagram of a nonzero field, with edge splittings and betas."""
    pts = support(x_field)
    coeffs = {sp.point: sp.coeff for sp in pts}
    chain = newton_chain([sp.point for sp in pts])
    vertices = tuple(
        Vertex(p, coeffs[p], "exterior" if 0 in p else "inner") for p in chain
    )

    bounded: list[Edge] = []
    for va, vb in zip(vertices, vertices[1:]):
        t = _edge_type(va.point, vb.point)
        line_value = t[0] * va.point[0] + t[1] * va.point[1]
        piece = edge_hamiltonian(x_field, t, line_value)
        bounded.append(Edge(t, True, (va, vb), line_value, piece.k, piece.h, piece.mu))

    edges: list[Edge] = []
    first, last = vertices[0], vertices[-1]
    if first.point[0] > 0:
        line_value = first.point[0]
        piece = edge_hamiltonian(x_field, (1, 0), line_value)
        edges.append(Edge((1, 0), False, (first,), line_value, piece.k, piece.h, piece.mu))
    edges.extend(bounded)
    if last.point[1] > 0:
        line_value = last.point[1]
        piece = edge_hamiltonian(x_field, (0, 1), line_value)
        edges.append(Edge((0, 1), False, (last,), line_value, piece.k, piece.h, piece.mu))

    betas: list[tuple[tuple[int, int], Fraction]] = []
    undefined: list[tuple[tuple[int, int], str]] = []
    for idx, vertex in enumerate(vertices):
        if vertex.kind != "inner":
            continue
        if idx == 0 or idx == len(vertices) - 1:
            undefined.append((vertex.point, "adjacent edge is unbounded"))
            continue
        upper, lower = bounded[idx - 1], bounded[idx]
        if upper.h.is_zero or lower.h.is_zero:
            undefined.append((vertex.point, "adjacent edge Hamiltonian is null"))
            continue
        betas.append((vertex.point, _highest_x_coeff(upper.h) * _highest_y_coeff(lower.h)))

    return NewtonDiagram(vertices, tuple(edges), tuple(betas), tuple(undefined))


def inner_beta(diagram: NewtonDiagram, point: tuple[int, int]) -> Fraction:
    """Beta of an inner vertex: the product of the highest-x coefficient of
    the upper adjacent edge Hamiltonian and the highest-y coefficient of the
    lower one.  Errors when the vertex is missing, exterior, or beta is
    undefined there.
    """
    for pt, beta in diagram.inner_betas:
        if pt == point:
            return beta
    for pt, reason in diagram.beta_undefined:
        if pt == point:
            raise ValueError(f"beta undefined at {point}: {reason}")
    raise ValueError(f"{point} is not an inner vertex of the diagram")
