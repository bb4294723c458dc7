"""lucaskit: exact Lucas analogues of binomial and Catalan-family numbers,
with the tiling models that explain them."""

from .polyring import (
    CoeffSeq,
    DivisionByZero,
    NotDivisible,
    NotWeightedHomogeneous,
    Poly1,
    Poly2,
    coeff_view,
    poly_add,
    poly_eval,
    poly_exact_div,
    poly_mul,
    real_rooted,
    specialize_q,
)
from .lucas import (
    LucasCache,
    chebyshev_U,
    d_lucasnomial,
    d_lucastorial,
    lucas,
    lucas_divides,
    lucasnomial,
    lucastorial,
    verify_chebyshev_bridge,
    verify_gcd_lemma,
    verify_lucasnomial_recursion,
    verify_symmetry_identity,
)
from .shapes_tilings import (
    Binomial,
    Catalan,
    DDivisible,
    FussCatalan,
    LatticePath,
    MalformedModel,
    MalformedPartial,
    PartialTiling,
    RectangleTiling,
    Shape,
    Tiling,
    block_partition,
    d_staircase,
    enumerate_partials,
    enumerate_tilings,
    from_rectangle_model,
    partial_from_tiling,
    partial_weight,
    path_from_tiling,
    shape_weight,
    staircase,
    tiling_weight,
    to_rectangle_model,
    verify_block_partition,
    verify_skew_numerator,
)
from .involution import (
    BrokenDomino,
    ExtendedTiling,
    Malformed,
    classify_point,
    enumerate_extended,
    iota,
    iota_trace,
    strip_concat,
    strip_first,
    strip_last,
    strip_reverse,
    verify_involution,
)
from .coxcat import (
    CoxeterType,
    Finding,
    NotCoprime,
    coxeter_catalan,
    coxeter_fuss_catalan,
    exceptional_fuss_findings,
    fuss_catalan,
    genCatD,
    lucas_catalan,
    narayana,
    narayana_findings,
    rational_catalan,
    rational_catalan_findings,
    verify_catD,
    verify_catalan_identity,
    verify_fuss_identity,
    verify_genCatD,
)
from .analysis import CoeffReport, analyze

__version__ = "0.1.0"
