"""Planar polynomial vector fields and their quasi-homogeneous structure.

The central construction: for a polynomial map F = (f, g) the Hamiltonian
field of (f^2 + g^2)/2 is

    X = (P, Q) = (-f*f_y - g*g_y,  f*f_x + g*g_x).

Support points of a field are read off the shifted products y*P and x*Q, so
each lattice point carries a vector coefficient (a, b).  A quasi-homogeneous
field of type t and degree k splits uniquely into a Hamiltonian part and a
dissipative multiple of (t1*x, t2*y); that splitting is what edge
Hamiltonians of the Newton diagram are made of.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .polycore import BivarPoly, QuasiType, Scalar, ZeroPolynomialError, quasi_type
from .realroots import FactorWitness, UniPoly, nonzero_real_roots, poly_gcd, squarefree_part, sturm_count


@dataclass(frozen=True)
class PlanarField:
    """A polynomial vector field (p, q) on the plane."""

    p: BivarPoly
    q: BivarPoly

    @property
    def is_zero(self) -> bool:
        return self.p.is_zero and self.q.is_zero

    def evaluate(self, x: Scalar, y: Scalar) -> tuple[Fraction, Fraction]:
        return self.p.evaluate(x, y), self.q.evaluate(x, y)

    def degree(self) -> int:
        """max(deg p, deg q); error on the zero field."""
        if self.is_zero:
            raise ZeroPolynomialError("degree of the zero field")
        degs = [c.total_degree() for c in (self.p, self.q) if not c.is_zero]
        return max(degs)

    def divergence(self) -> BivarPoly:
        return self.p.partial(0) + self.q.partial(1)

    def to_string(self, variables: tuple[str, str] = ("x", "y")) -> str:
        return f"P = {self.p.to_string(variables)} ; Q = {self.q.to_string(variables)}"


ZERO_FIELD = PlanarField(BivarPoly.zero(), BivarPoly.zero())


def hamiltonian_field(f: BivarPoly, g: BivarPoly) -> PlanarField:
    """Hamiltonian vector field of (f^2 + g^2)/2."""
    return PlanarField(
        -(f * f.partial(1) + g * g.partial(1)),
        f * f.partial(0) + g * g.partial(0),
    )


@dataclass(frozen=True)
class SupportPoint:
    """Lattice point of supp(X) with its vector coefficient (a, b)."""

    point: tuple[int, int]
    coeff: tuple[Fraction, Fraction]


def support(x_field: PlanarField) -> list[SupportPoint]:
    """Support of the field: nonzero coefficient pairs of (y*p, x*q).

    Sorted lexicographically by lattice point.  Error on the zero field.
    """
    if x_field.is_zero:
        raise ZeroPolynomialError("support of the zero field")
    acc: dict[tuple[int, int], list[Fraction]] = {}
    for (i, j), c in x_field.p.terms():
        acc.setdefault((i, j + 1), [Fraction(0), Fraction(0)])[0] = c
    for (i, j), c in x_field.q.terms():
        acc.setdefault((i + 1, j), [Fraction(0), Fraction(0)])[1] = c
    return [SupportPoint(pt, (a, b)) for pt, (a, b) in sorted(acc.items())]


def quasi_field_components(x_field: PlanarField, t: QuasiType) -> list[tuple[int, PlanarField]]:
    """Quasi-homogeneous field components, ascending degree.

    The component of degree k pairs the p-part of quasi-degree k + t1 with
    the q-part of quasi-degree k + t2; k may be negative (constant terms).
    """
    t1, t2 = quasi_type(*t)
    buckets: dict[int, list[BivarPoly]] = {}
    for deg, part in x_field.p.quasi_components((t1, t2)):
        buckets.setdefault(deg - t1, [BivarPoly.zero(), BivarPoly.zero()])[0] = part
    for deg, part in x_field.q.quasi_components((t1, t2)):
        buckets.setdefault(deg - t2, [BivarPoly.zero(), BivarPoly.zero()])[1] = part
    return [(k, PlanarField(*buckets[k])) for k in sorted(buckets)]


@dataclass(frozen=True)
class SplitField:
    """Conservative-dissipative splitting of a quasi-homogeneous field.

    X = X_h + mu * (t1*x, t2*y) with X_h the Hamiltonian field of h, where
    h has quasi-degree k + t1 + t2 and mu has quasi-degree k.
    """

    k: int
    t: QuasiType
    h: BivarPoly
    mu: BivarPoly

    def reconstruct(self) -> PlanarField:
        t1, t2 = self.t
        return PlanarField(
            -self.h.partial(1) + self.mu * BivarPoly.monomial(1, 0, t1),
            self.h.partial(0) + self.mu * BivarPoly.monomial(0, 1, t2),
        )


def split(x_field: PlanarField, k: int, t: QuasiType) -> SplitField:
    """Split a field that is quasi-homogeneous of type t and degree k.

    Errors when k + t1 + t2 = 0 or when the field is not quasi-homogeneous
    of the stated type and degree.
    """
    t1, t2 = quasi_type(*t)
    weight = k + t1 + t2
    if weight == 0:
        raise ValueError("splitting is undefined when k + t1 + t2 = 0")
    for part, want in ((x_field.p, k + t1), (x_field.q, k + t2)):
        if not part.is_zero and part.quasi_degree((t1, t2)) != want:
            raise ValueError(f"field is not quasi-homogeneous of type {t} and degree {k}")
    x_mono = BivarPoly.monomial(1, 0)
    y_mono = BivarPoly.monomial(0, 1)
    h = (x_mono * x_field.q * t1 - y_mono * x_field.p * t2) * Fraction(1, weight)
    mu = x_field.divergence() * Fraction(1, weight)
    return SplitField(k, (t1, t2), h, mu)


def leading_forms(x_field: PlanarField) -> tuple[BivarPoly, BivarPoly]:
    """Top total-degree homogeneous parts of p and q, taken separately.

    A zero component yields the zero polynomial; the zero field is an error.
    """
    if x_field.is_zero:
        raise ZeroPolynomialError("leading forms of the zero field")
    return (
        x_field.p.leading_form() if not x_field.p.is_zero else BivarPoly.zero(),
        x_field.q.leading_form() if not x_field.q.is_zero else BivarPoly.zero(),
    )


# -- common real linear factors of binary forms -------------------------------


@dataclass(frozen=True)
class CommonLinearFactor:
    """A real linear form dividing two homogeneous polynomials.

    kind "x" and "y" are the axis factors; kind "slope" is y - a*x, with the
    slope given exactly when rational and by an isolating interval otherwise.
    """

    kind: str
    mult_a: int
    mult_b: int
    slope: Optional[Fraction] = None
    slope_interval: Optional[tuple[Fraction, Fraction]] = None

    def label(self) -> str:
        if self.kind in ("x", "y"):
            return self.kind
        if self.slope is not None:
            return f"y - {self.slope}*x"
        lo, hi = self.slope_interval
        return f"y - a*x, a in ({lo}, {hi})"


def _dehomogenize(form: BivarPoly) -> UniPoly:
    """Binary form with no axis factors -> univariate poly via x=1, y=lam."""
    degree = form.total_degree()
    coeffs = [Fraction(0)] * (degree + 1)
    for (i, j), c in form.terms():
        coeffs[j] = c
    return UniPoly(coeffs)


def _strip_axes(form: BivarPoly) -> tuple[int, int, BivarPoly]:
    i0, j0 = form.min_exponents()
    stripped = BivarPoly({(i - i0, j - j0): c for (i, j), c in form.terms()})
    return i0, j0, stripped


def _rational_multiplicity(p: UniPoly, root: Fraction) -> int:
    lin = UniPoly([-root, Fraction(1)])
    mult = 0
    while not p.is_zero and p(root) == 0:
        p = p.exact_div(lin)
        mult += 1
    return mult


def _interval_multiplicity(p: UniPoly, sf: UniPoly, lo: Fraction, hi: Fraction) -> int:
    """Multiplicity in p of the single root of sf inside (lo, hi)."""
    mult = 0
    deriv = p
    while not deriv.is_zero:
        common = poly_gcd(sf, deriv)
        if common.degree == 0 or sturm_count(common, lo, hi) == 0:
            break
        mult += 1
        deriv = deriv.derivative()
    return mult


def common_real_linear_factors(a: BivarPoly, b: BivarPoly) -> list[CommonLinearFactor]:
    """All real linear forms dividing both homogeneous polynomials.

    Errors when either input is zero or not homogeneous.  Factors are
    returned as x, then y, then slope factors ordered by slope.
    """
    for form in (a, b):
        if form.is_zero:
            raise ZeroPolynomialError("common factors of the zero polynomial")
        if len(form.homogeneous_components()) != 1:
            raise ValueError("common_real_linear_factors expects homogeneous inputs")
    out: list[CommonLinearFactor] = []
    ax, ay, a0 = _strip_axes(a)
    bx, by, b0 = _strip_axes(b)
    if ax and bx:
        out.append(CommonLinearFactor("x", ax, bx))
    if ay and by:
        out.append(CommonLinearFactor("y", ay, by))
    pa, pb = _dehomogenize(a0), _dehomogenize(b0)
    if pa.degree == 0 or pb.degree == 0:
        return out
    common = poly_gcd(pa, pb)
    if common.degree == 0:
        return out
    sf = squarefree_part(common)
    for witness in nonzero_real_roots(common):
        if witness.exact is not None:
            ma = _rational_multiplicity(pa, witness.exact)
            mb = _rational_multiplicity(pb, witness.exact)
        else:
            ma = _interval_multiplicity(pa, sf, witness.lo, witness.hi)
            mb = _interval_multiplicity(pb, sf, witness.lo, witness.hi)
        out.append(CommonLinearFactor(
            "slope", ma, mb,
            slope=witness.exact,
            slope_interval=None if witness.exact is not None else (witness.lo, witness.hi),
        ))
    return out


def real_linear_factor_exists(form: BivarPoly) -> bool:
    """Whether a nonzero homogeneous polynomial has any real linear factor."""
    if form.is_zero:
        raise ZeroPolynomialError("factors of the zero polynomial")
    i0, j0, stripped = _strip_axes(form)
    if i0 or j0:
        return True
    p = _dehomogenize(stripped)
    if p.degree == 0:
        return False
    return sturm_count(p) > 0
