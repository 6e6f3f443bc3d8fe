"""quonalg: exact engine for a color-deformed quon algebra.

Symbolic vacuum expectation values of annihilation/creation words, Gram
blocks of the vacuum bilinear form over ZZ[q], colored permutation
combinatorics, closed-form determinants and inverses of the q-weighted
group sums, and exact rational positive-definiteness certificates.
"""

from .exact_arith import (
    Polynomial,
    Rational,
    RationalFunction,
    parse_polynomial,
    parse_rational,
    parse_rational_function,
    poly_gcd,
    poly_lcm,
)
from .colored_perm import (
    ColoredArrangement,
    ColoredPermutation,
    act,
    as_multiset,
    cinv,
    color_shift,
    compose,
    decompose,
    enumerate_arrangements,
    enumerate_group,
    insertion_cycle,
    inverse,
    parse_word,
    word_str,
)
from .group_algebra import (
    GroupAlgebraElement,
    RepMatrix,
    all_shifts_inverse,
    all_shifts_sum,
    cinv_sum,
    circulant_det_closed,
    cyclic_shift,
    det_rep,
    embed_single_position,
    ga_mul,
    product_chain,
    rep_matrix,
    restrict_single_position,
    single_shift_inverse,
)
from .quon_engine import (
    CreatorState,
    apply_annihilator,
    color_mismatch,
    cosym_expectation,
    creator_state,
    vacuum_expectation,
)
from .gram import (
    GramBlock,
    build_gram,
    gram_csv_text,
    gram_json_data,
    verify_representation,
)
from .formulas import (
    DetFactorization,
    InverseFactors,
    det_bruteforce,
    det_closed_form,
    det_factorization,
    factor_sum,
    inverse_closed_form,
    inverse_factors,
    regular_block_det,
    verify_inverse,
)
from .posdef import (
    INDEFINITE,
    POSITIVE_DEFINITE,
    SINGULAR,
    PosDefReport,
    approx_eigenvalues,
    certify,
    certify_block,
    interval_of_definiteness,
    leading_minors,
    scan,
)

__version__ = "0.1.0"

__all__ = [
    "Polynomial",
    "Rational",
    "RationalFunction",
    "parse_polynomial",
    "parse_rational",
    "parse_rational_function",
    "poly_gcd",
    "poly_lcm",
    "ColoredArrangement",
    "ColoredPermutation",
    "act",
    "as_multiset",
    "cinv",
    "color_shift",
    "compose",
    "decompose",
    "enumerate_arrangements",
    "enumerate_group",
    "insertion_cycle",
    "inverse",
    "parse_word",
    "word_str",
    "GroupAlgebraElement",
    "RepMatrix",
    "all_shifts_inverse",
    "all_shifts_sum",
    "cinv_sum",
    "circulant_det_closed",
    "cyclic_shift",
    "det_rep",
    "embed_single_position",
    "ga_mul",
    "product_chain",
    "rep_matrix",
    "restrict_single_position",
    "single_shift_inverse",
    "CreatorState",
    "apply_annihilator",
    "color_mismatch",
    "cosym_expectation",
    "creator_state",
    "vacuum_expectation",
    "GramBlock",
    "build_gram",
    "gram_csv_text",
    "gram_json_data",
    "verify_representation",
    "DetFactorization",
    "InverseFactors",
    "det_bruteforce",
    "det_closed_form",
    "det_factorization",
    "factor_sum",
    "inverse_closed_form",
    "inverse_factors",
    "regular_block_det",
    "verify_inverse",
    "INDEFINITE",
    "POSITIVE_DEFINITE",
    "SINGULAR",
    "PosDefReport",
    "approx_eigenvalues",
    "certify",
    "certify_block",
    "interval_of_definiteness",
    "leading_minors",
    "scan",
]
