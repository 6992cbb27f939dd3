"""
Exact monodromy zeta functions of germs on quotient singularities, computed
from the strata of an embedded Q-resolution.
"""
from .errors import (
    ConventionMismatch,
    EnumerationBoundError,
    NonIntegerExponent,
    NotAPolynomial,
    NotSemiInvariant,
    ParseError,
    QZetaError,
    UnsupportedGerm,
)
from .germ import Germ
from .parsing import GermExpression, germ_from_text, parse_germ, parse_space
from .qspace import (
    DiagonalGroup,
    QuotientType,
    ell,
    from_type,
    group_order,
    is_normalized,
    min_power,
    normalize_cyclic,
    normalize_dim2,
    semi_invariant_weight,
    stabilizer_order,
)
from .resolve import (
    Chart,
    PipelineResult,
    binomial_germ,
    count_branch_points,
    exceptional_multiplicity,
    pipeline_brieskorn,
    pipeline_curve,
    pipeline_two_pairs,
    pipeline_yomdin,
    weighted_blowup,
)
from .strata import InvariantReport, Stratum, StrataSet, local_monomial_zeta, report, zeta_from_strata
from .zeta import (
    CyclotomicProduct,
    IntPolynomial,
    expand,
    lefschetz,
    milnor,
    series_check,
    subst_power,
    to_delta,
    twist,
)

__version__ = "0.1.0"
