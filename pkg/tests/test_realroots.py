"""Sturm counting, root isolation, and the quasi-homogeneous factor test."""

import random
from fractions import Fraction

import pytest

from monodroma import (
    BivarPoly,
    FactorWitness,
    UniPoly,
    cauchy_bound,
    nonzero_real_roots,
    poly_gcd,
    quasi_factor_test,
    refine_witness,
    squarefree_part,
    sturm_count,
)
from monodroma.oracle import numeric_root_count

U = BivarPoly.monomial(1, 0)
V = BivarPoly.monomial(0, 1)


def lam(*coeffs):
    """UniPoly from low-order-first coefficients."""
    return UniPoly(list(coeffs))


def from_roots(roots):
    p = lam(1)
    for r in roots:
        p = p * lam(-Fraction(r), 1)
    return p


def test_sturm_count_examples():
    assert sturm_count(lam(-2, 0, 1)) == 2          # lambda^2 - 2
    assert sturm_count(lam(1, 0, 1)) == 0           # lambda^2 + 1
    assert sturm_count(from_roots([1, 1, 1, -2])) == 2
    assert sturm_count(from_roots(range(1, 11))) == 10
    assert sturm_count(lam(0, 1)) == 1
    assert sturm_count(lam(5)) == 0


def test_sturm_count_open_interval_semantics():
    p = from_roots([1, 2, 3])
    assert sturm_count(p, Fraction(0), Fraction(5, 2)) == 2
    assert sturm_count(p, Fraction(1), Fraction(3)) == 1   # endpoints excluded
    assert sturm_count(p, Fraction(3), Fraction(10)) == 0
    assert sturm_count(p, None, Fraction(0)) == 0
    assert sturm_count(p, Fraction(0), None) == 3


def test_sturm_count_zero_poly_rejected():
    with pytest.raises(ValueError):
        sturm_count(lam())


def test_cauchy_bound_encloses_all_roots():
    rng = random.Random(301)
    for _ in range(100):
        deg = rng.randint(1, 8)
        p = lam(*[rng.randint(-50, 50) for _ in range(deg)], rng.randint(1, 50))
        bound = cauchy_bound(p)
        assert sturm_count(p, -bound, bound) == sturm_count(p)


def test_squarefree_part_and_gcd():
    p = from_roots([1, 1, 2])
    sf = squarefree_part(p)
    assert sturm_count(sf) == 2
    assert poly_gcd(sf, sf.derivative()).degree == 0
    assert sturm_count(p) == 2  # counting is multiplicity-blind


def test_nonzero_real_roots_rational_exact():
    # (2*lambda - 1)(lambda + 3)(lambda^2 + 1)
    p = lam(-1, 2) * lam(3, 1) * lam(1, 0, 1)
    roots = nonzero_real_roots(p)
    assert sorted(w.exact for w in roots) == [Fraction(-3), Fraction(1, 2)]
    for w in roots:
        assert w.lo < w.exact < w.hi
        assert w.sign == (1 if w.exact > 0 else -1)


def test_nonzero_real_roots_drops_zero_root():
    p = lam(0, 0, -4, 0, 1)  # lambda^2 (lambda^2 - 4)
    roots = nonzero_real_roots(p)
    assert sorted(w.exact for w in roots) == [-2, 2]


def test_nonzero_real_roots_irrational_witnesses():
    p = lam(-2, 0, 1)  # roots +-sqrt(2)
    roots = nonzero_real_roots(p)
    assert len(roots) == 2
    for w in roots:
        assert w.exact is None
        assert sturm_count(p, w.lo, w.hi) == 1
        # Interval contains sqrt(2) or -sqrt(2): the endpoint squares straddle 2.
        assert (w.lo * w.lo - 2) * (w.hi * w.hi - 2) < 0


def test_nonzero_real_roots_disjoint_and_signed():
    rng = random.Random(302)
    for _ in range(150):
        deg = rng.randint(1, 9)
        p = lam(*[rng.randint(-30, 30) for _ in range(deg)], rng.randint(1, 30))
        witnesses = nonzero_real_roots(p)
        assert len(witnesses) == sturm_count(squarefree_part(p)) - (
            1 if p.coeff(0) == 0 else 0)
        ordered = sorted(witnesses, key=lambda w: w.lo)
        for w in ordered:
            assert not (w.lo <= 0 <= w.hi)
            assert (w.lo > 0) == (w.sign == 1)
            assert sturm_count(p, w.lo, w.hi) == 1
        for left, right in zip(ordered, ordered[1:]):
            assert left.hi <= right.lo


def test_nonzero_real_roots_close_pair_is_separated():
    eps = Fraction(1, 10 ** 6)
    p = from_roots([1, 1 + eps])
    a, b = sorted(nonzero_real_roots(p), key=lambda w: w.lo)
    assert a.hi <= b.lo
    assert a.lo < 1 < a.hi
    assert b.lo < 1 + eps < b.hi


def test_nonzero_real_roots_large_coefficients():
    # Beyond the rational-root fast path cap; falls back to isolation.
    big = 10 ** 15
    p = lam(-big, 1) * lam(1, 1)
    witnesses = nonzero_real_roots(p)
    assert len(witnesses) == 2
    for w in witnesses:
        assert sturm_count(p, w.lo, w.hi) == 1


def test_refine_witness_narrows_and_keeps_root():
    p = lam(-2, 0, 1)
    w = [x for x in nonzero_real_roots(p) if x.sign == 1][0]
    for _ in range(5):
        prev = w.hi - w.lo
        w = refine_witness(p, w)
        assert w.hi - w.lo <= prev / 2
        assert sturm_count(p, w.lo, w.hi) == 1
    assert w.lo * w.lo < 2 < w.hi * w.hi


def test_factor_witness_validation():
    with pytest.raises(ValueError):
        FactorWitness(Fraction(2), Fraction(1), 1)
    with pytest.raises(ValueError):
        FactorWitness(Fraction(-1), Fraction(1), 1)
    with pytest.raises(ValueError):
        FactorWitness(Fraction(1), Fraction(2), 1, exact=Fraction(3))


# -- quasi-homogeneous factor test ------------------------------------------------


def test_factor_test_worked_examples():
    # (3/8)(u^2 + v^2) u^6 has no real factor v - a*u with a != 0.
    h = (U ** 2 + V ** 2) * U ** 6 * Fraction(3, 8)
    result = quasi_factor_test(h, (1, 1))
    assert not result.has_factor
    assert result.witnesses == ()

    # v^2 - 4u^2 = (v - 2u)(v + 2u).
    result = quasi_factor_test(V ** 2 - U ** 2 * 4, (1, 1))
    assert result.has_factor
    assert sorted(w.exact for w in result.witnesses) == [-2, 2]

    # v^3 - 8u with type (3, 1): factor v^3 - 8u exactly.
    result = quasi_factor_test(V ** 3 - U * 8, (3, 1))
    assert result.has_factor
    assert [w.exact for w in result.witnesses] == [8]


def test_factor_test_requires_quasi_homogeneous_input():
    with pytest.raises(ValueError):
        quasi_factor_test(U + V ** 2, (1, 1))
    with pytest.raises(ValueError):
        quasi_factor_test(BivarPoly.zero(), (1, 1))


def _poly_in_w(h: BivarPoly) -> UniPoly:
    """h(s^t1, w*s^t2) = s^K * phi(w): return phi, indexing coefficients by j."""
    coeffs: dict[int, Fraction] = {}
    for (_, j), c in h.terms():
        coeffs[j] = coeffs.get(j, Fraction(0)) + c
    top = max(coeffs)
    return UniPoly([coeffs.get(j, Fraction(0)) for j in range(top + 1)])


def _divides(h: BivarPoly, t: tuple[int, int], root: Fraction) -> bool:
    """Exact check that v^t1 - root*u^t2 divides the quasi-homogeneous h."""
    phi = _poly_in_w(h)
    divisor = UniPoly([-root] + [Fraction(0)] * (t[0] - 1) + [Fraction(1)])
    _, rem = phi.divmod(divisor)
    return rem.is_zero


def test_factor_test_rational_witnesses_divide_exactly():
    rng = random.Random(303)
    for _ in range(100):
        t1 = rng.choice([1, 1, 2, 3])
        t2 = rng.choice([1, 1, 2, 3])
        from math import gcd
        if gcd(t1, t2) != 1:
            continue
        root = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.choice([1, 2]))
        factor = V ** t1 - U ** t2 * root
        cof_points = [(t2 * i, t1 * (3 - i)) for i in range(4)]
        cofactor = BivarPoly({pt: rng.randint(-3, 3) for pt in cof_points})
        if cofactor.is_zero:
            cofactor = BivarPoly.monomial(*cof_points[0])
        h = factor * cofactor
        result = quasi_factor_test(h, (t1, t2))
        assert result.has_factor
        exact_roots = [w.exact for w in result.witnesses if w.exact is not None]
        assert root in exact_roots
        for w in result.witnesses:
            if w.exact is not None:
                assert _divides(h, (t1, t2), w.exact)


def test_factor_test_irrational_witness_residue_vanishes():
    # v^2 - 3u^2: roots +-sqrt(3); check the refined residue numerically.
    h = V ** 2 - U ** 2 * 3
    result = quasi_factor_test(h, (1, 1))
    assert result.has_factor
    for w in result.witnesses:
        assert w.exact is None
        while w.hi - w.lo > Fraction(1, 10 ** 12):
            w = refine_witness(result.lambda_poly, w)
        mid = (w.lo + w.hi) / 2
        # Divide phi(w) by (w - mid): the remainder is phi(mid).
        residue = _poly_in_w(h)(mid)
        assert abs(residue) < Fraction(1, 10 ** 6)


def test_factor_test_lambda_poly_matches_substitution():
    rng = random.Random(304)
    for _ in range(50):
        t1, t2 = rng.choice([(1, 1), (1, 2), (2, 1), (3, 1), (2, 3)])
        value = (t1 * t2) * rng.randint(2, 5)
        points = [(i, j) for i in range(value + 1) for j in range(value + 1)
                  if t1 * i + t2 * j == value]
        h = BivarPoly({pt: rng.randint(-4, 4) for pt in points})
        if h.is_zero:
            h = BivarPoly.monomial(*points[0])
        result = quasi_factor_test(h, (t1, t2))
        g = result.lambda_poly
        # g(a) = 0 exactly when v^t1 - a u^t2 divides h; cross-check three values.
        for a in (Fraction(1), Fraction(-2), Fraction(3, 2)):
            assert (g(a) == 0) == _divides(h, (t1, t2), a)
        assert g.coeff(0) != 0


def test_sturm_vs_numeric_oracle_small():
    rng = random.Random(305)
    for _ in range(100):
        deg = rng.randint(1, 10)
        p = lam(*[rng.randint(-100, 100) for _ in range(deg)], rng.randint(1, 100))
        sf = squarefree_part(p)
        assert sturm_count(sf) == numeric_root_count(sf)
