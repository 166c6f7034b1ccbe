"""Exact verification of Pfaffian and determinant identities built from
symmetric-group polynomial bases."""

from .exactpoly import (
    Polynomial,
    RationalFunction,
    constant,
    ratfn,
    ratfn_equal,
    specialize01,
    substitute,
    vandermonde,
    variable,
)
from .pfaffian import (
    AntisymmetricMatrix,
    determinant,
    hafnian,
    pf_formal,
    pfaffian,
    prop31_check,
    theta,
)
from .schur import (
    complete_fn,
    kronecker_check,
    make_plucker,
    plucker_check,
    schur_fn,
    symmetric_minor,
)
from .specht import (
    bottom_coefficient,
    change_of_basis,
    expand_mm,
    row_specialization,
    specht_polynomial,
    young_polynomial,
)
from .symgroup import GroupAlgebraElement, act, box, nabla
from .tableaux import (
    StandardTableau,
    axial_distance,
    bottom_tableau,
    enumerate_syt,
    extreme_tableaux,
    tableau_graph,
    top_tableau,
)

__version__ = "0.1.0"

__all__ = [
    "AntisymmetricMatrix",
    "GroupAlgebraElement",
    "Polynomial",
    "RationalFunction",
    "StandardTableau",
    "act",
    "axial_distance",
    "bottom_coefficient",
    "bottom_tableau",
    "box",
    "change_of_basis",
    "complete_fn",
    "constant",
    "determinant",
    "enumerate_syt",
    "expand_mm",
    "extreme_tableaux",
    "hafnian",
    "kronecker_check",
    "make_plucker",
    "nabla",
    "pf_formal",
    "pfaffian",
    "plucker_check",
    "prop31_check",
    "ratfn",
    "ratfn_equal",
    "row_specialization",
    "schur_fn",
    "specht_polynomial",
    "specialize01",
    "substitute",
    "symmetric_minor",
    "tableau_graph",
    "theta",
    "top_tableau",
    "vandermonde",
    "variable",
    "young_polynomial",
]
