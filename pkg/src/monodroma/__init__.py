"""Exact injectivity certification for planar polynomial maps.

The pipeline: from a map F = (f, g) with nonvanishing Jacobian determinant,
build the Hamiltonian field of (f^2 + g^2) / 2, compactify it, and test a
combinatorial monodromy condition on its Newton diagram.  When the origin of
the compactified field is monodromic, F is globally injective.
"""

from .polycore import (
    BivarPoly,
    ExponentOverflowError,
    Monomial,
    Scalar,
    X,
    Y,
    ZeroPolynomialError,
    quasi_type,
)
from .parser import ParseError, parse_bindings, parse_map, parse_poly
from .field import (
    CommonLinearFactor,
    PlanarField,
    SplitField,
    SupportPoint,
    ZERO_FIELD,
    common_real_linear_factors,
    hamiltonian_field,
    leading_forms,
    quasi_field_components,
    real_linear_factor_exists,
    split,
    support,
)
from .bendixson import (
    DegenerateTransformError,
    compactify,
    diagonal_part,
    map_degree,
    pair_component,
)
from .diagram import (
    Edge,
    NewtonDiagram,
    Vertex,
    build_diagram,
    edge_hamiltonian,
    inner_beta,
    newton_chain,
)
from .realroots import (
    FactorTest,
    FactorWitness,
    UniPoly,
    cauchy_bound,
    nonzero_real_roots,
    poly_gcd,
    quasi_factor_test,
    refine_witness,
    squarefree_part,
    sturm_chain,
    sturm_count,
)
from .monodromy import (
    INCONCLUSIVE as MONODROMY_INCONCLUSIVE,
    MONODROMIC,
    NOT_MONODROMIC,
    ConditionReport,
    MonodromyVerdict,
    check_monodromic,
    sector_classification,
)
from .pipeline import (
    ASSUMED,
    Certificate,
    DEFAULT_SEED,
    DetStatus,
    INCONCLUSIVE,
    INJECTIVE,
    NOT_APPLICABLE,
    PROVED,
    SCHEMA_VERSION,
    UNKNOWN,
    VANISHES,
    certify,
    cima_condition,
    det_nonvanishing_heuristic,
    jacobian_det,
)
from .render import render_ascii, render_svg

__version__ = "0.1.0"

__all__ = [
    "ASSUMED",
    "BivarPoly",
    "Certificate",
    "CommonLinearFactor",
    "ConditionReport",
    "DEFAULT_SEED",
    "DegenerateTransformError",
    "DetStatus",
    "Edge",
    "ExponentOverflowError",
    "FactorTest",
    "FactorWitness",
    "INCONCLUSIVE",
    "INJECTIVE",
    "MONODROMIC",
    "MONODROMY_INCONCLUSIVE",
    "Monomial",
    "MonodromyVerdict",
    "NOT_APPLICABLE",
    "NOT_MONODROMIC",
    "NewtonDiagram",
    "PROVED",
    "ParseError",
    "PlanarField",
    "SCHEMA_VERSION",
    "Scalar",
    "SplitField",
    "SupportPoint",
    "UNKNOWN",
    "UniPoly",
    "VANISHES",
    "Vertex",
    "X",
    "Y",
    "ZERO_FIELD",
    "ZeroPolynomialError",
    "build_diagram",
    "cauchy_bound",
    "certify",
    "check_monodromic",
    "cima_condition",
    "common_real_linear_factors",
    "compactify",
    "det_nonvanishing_heuristic",
    "diagonal_part",
    "edge_hamiltonian",
    "hamiltonian_field",
    "inner_beta",
    "jacobian_det",
    "leading_forms",
    "map_degree",
    "newton_chain",
    "nonzero_real_roots",
    "pair_component",
    "parse_bindings",
    "parse_map",
    "parse_poly",
    "poly_gcd",
    "quasi_factor_test",
    "quasi_field_components",
    "quasi_type",
    "real_linear_factor_exists",
    "refine_witness",
    "render_ascii",
    "render_svg",
    "sector_classification",
    "split",
    "squarefree_part",
    "sturm_chain",
    "sturm_count",
    "support",
]
