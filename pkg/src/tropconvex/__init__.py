"""Exact arithmetic and convexity over signed tropical numbers.

The package implements the symmetrized semiring of signed tropical numbers
with balanced elements, the two convexity notions generated by open and by
closed signed tropical halfspaces, hemispace verification predicates, an
exact ordered field of rational Puiseux expressions with its signed
valuation, and finite matroids over the sign hyperfield.  All magnitudes
are exact rationals; there is no floating-point mode.
"""

from tropconvex.semiring import (
    POS,
    NEG,
    BAL,
    ZERO,
    SymNum,
    Interval,
    Relation,
    zero,
    pos,
    neg,
    bal,
    add,
    mul,
    unary,
    compare,
    uncomp,
    parse_symnum,
)
from tropconvex.vectors import (
    SignedVector,
    SymVector,
    Box,
    FaceComplex,
    supports,
    left_sum,
    vert,
    faces_member,
    faces_complex,
    parse_vector,
)
from tropconvex.halfspaces import (
    Halfspace,
    Kind,
    BoundaryProfile,
    eval_affine,
    member,
    hs_type,
    boundary_profile,
    parse_halfspace,
)
from tropconvex.hull import (
    PointSet,
    ScalarProfile,
    RegionDescription,
    critical_lambdas,
    to_hull_member,
    tc_interval,
    tc_hull_member,
    tc_cone_member,
    wspan_member,
    closure_check,
    separate,
    separate_to,
    affine_mw_member,
)
from tropconvex.puiseux import (
    PuiseuxNum,
    sval,
    lc,
    lift_canonical,
    lift_typed,
    parse_puiseux,
)
from tropconvex.lp import (
    FeasibilityProblem,
    LPWitness,
    LPInfeasible,
    lp_feasible,
    conv_member,
    cone_member,
)
from tropconvex.lifts import lift_witness
from tropconvex.hemispaces import (
    SelectorRecord,
    HemispaceCandidate,
    sandwich_check,
    boundary_pattern_check,
    hemispace_pair_check,
)
from tropconvex.matroids import (
    OMatroid,
    axioms_check,
    circuits,
    covectors,
    cocircuits,
    orthogonal,
    realize_sign_vectors,
    representation_check,
)

__version__ = "0.1.0"
