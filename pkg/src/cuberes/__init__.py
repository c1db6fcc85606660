"""Exact resultants, norms on finite algebras, intersection numbers on
projective space, and a formal model of cube arrangements."""

from .cube import (
    CubeArrangement,
    FormalObject,
    Symbol,
    delta,
    edges,
    epsilon,
    epsilon_ij,
    face,
    glue,
    graded_swap_sign,
    permute,
    standard_cube,
    vertex_order,
)
from .intersection import ChiFunction, chi_projective, difference_operator, intersection_number, koszul_length
from .linalg import Matrix, determinant, submatrix
from .poly import (
    NOT_HOMOGENEOUS,
    ZERO_POLY,
    Polynomial,
    dehomogenize,
    homogeneous_degree,
    parse_polynomial,
    restrict_to_hyperplane,
)
from .quotient import (
    GroebnerBasis,
    QuotientAlgebra,
    buchberger,
    multiplication_matrix,
    norm,
    normal_form,
    quotient_algebra,
    quotient_basis,
)
from .resultant import (
    MacaulaySystem,
    ResultantValue,
    macaulay_matrix,
    macaulay_resultant,
    poisson_resultant,
    resultant,
    resultant_degrees,
    sylvester_resultant,
)

__version__ = "0.1.0"
