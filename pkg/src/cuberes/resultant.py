"""Multivariate resultant of n+1 homogeneous forms in n+1 variables.

Normalization: the resultant of the monomial system
``(x0^d0, x1^d1, .., xn^dn)`` is 1.  Three evaluation routes are provided:

* ``sylvester_resultant`` for two binary forms;
* ``macaulay_resultant``: det(M) / det(M') in degree 1 + sum(d_i - 1);
* ``poisson_resultant``: recursion through the hyperplane ``x_n = 0``,

      Res(f_0..f_n) = Res(f_0|H .. f_{n-1}|H)^d_n * N(f_n restricted to x_n = 1)

  where ``N`` is the norm on the quotient by the dehomogenized first n forms.
"""

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    BothPathsDegenerate,
    CrosscheckMismatch,
    DegenerateMinor,
    InvalidSystem,
    NotHomogeneous,
    NotZeroDimensional,
    PoissonPreconditionFailed,
    UnassignedMonomial,
    WrongArity,
)
from .linalg import Matrix, determinant, submatrix
from .poly import (
    NOT_HOMOGENEOUS,
    ZERO_POLY,
    Polynomial,
    dehomogenize,
    grevlex_key,
    homogeneous_degree,
    parse_polynomial,
    restrict_to_hyperplane,
)
from .quotient import buchberger, norm, quotient_algebra

__all__ = [
    "MacaulaySystem",
    "ResultantValue",
    "resultant_degrees",
    "sylvester_resultant",
    "macaulay_matrix",
    "macaulay_resultant",
    "poisson_resultant",
    "resultant",
    "monomials_of_degree",
    "MODES",
]

MODES = ("auto", "macaulay", "poisson", "crosscheck")


def resultant_degrees(degrees):
    """k_i = product of d_j over j != i: the degree of Res in the i-th form."""
    degrees = list(degrees)
    if any(d < 1 for d in degrees):
        raise ValueError("degrees must be positive")
    return [math.prod(degrees[:i] + degrees[i + 1 :]) for i in range(len(degrees))]


@dataclass(frozen=True)
class MacaulaySystem:
    """n+1 nonzero homogeneous forms in n+1 variables."""

    forms: tuple
    degrees: tuple

    def __init__(self, forms, degrees=None):
        forms = tuple(forms)
        if not forms:
            raise InvalidSystem("a system needs at least one form")
        n_vars = len(forms)
        found = []
        for k, f in enumerate(forms):
            if f.n_vars != n_vars:
                raise WrongArity(
                    f"form {k} has {f.n_vars} variables; a system of {n_vars} forms needs {n_vars}"
                )
            d = homogeneous_degree(f)
            if d is ZERO_POLY:
                raise InvalidSystem(f"form {k} is zero")
            if d is NOT_HOMOGENEOUS:
                raise NotHomogeneous(f"form {k} is not homogeneous: {f}")
            if d < 1:
                raise InvalidSystem(f"form {k} has degree 0; degrees must be positive")
            found.append(d)
        if degrees is not None and list(degrees) != found:
            raise InvalidSystem(f"declared degrees {list(degrees)} differ from actual {found}")
        object.__setattr__(self, "forms", forms)
        object.__setattr__(self, "degrees", tuple(found))

    @classmethod
    def parse(cls, forms, n_vars=None, degrees=None):
        n_vars = len(forms) if n_vars is None else n_vars
        return cls([parse_polynomial(t, n_vars) for t in forms], degrees)

    @property
    def n(self):
        return len(self.forms) - 1

    @property
    def nu(self):
        return 1 + sum(d - 1 for d in self.degrees)

    def replace(self, i, form):
        forms = list(self.forms)
        forms[i] = form
        return MacaulaySystem(forms)

    def permuted(self, perm):
        return MacaulaySystem([self.forms[k] for k in perm])


@dataclass(frozen=True)
class ResultantValue:
    value: Fraction
    method: str
    degrees_certificate: tuple

    def to_json(self):
        return {
            "value": str(self.value),
            "numerator": str(self.value.numerator),
            "denominator": str(self.value.denominator),
            "method": self.method,
            "degrees_certificate": list(self.degrees_certificate),
        }


def _value(sys, value, method):
    return ResultantValue(Fraction(value), method, tuple(resultant_degrees(sys.degrees)))


def monomials_of_degree(n_vars, degree):
    """Exponent tuples of total degree ``degree``, largest grevlex first."""
    out = []
    for cut in itertools.combinations(range(degree + n_vars - 1), n_vars - 1):
        prev = -1
        exps = []
        for c in cut:
            exps.append(c - prev - 1)
            prev = c
        exps.append(degree + n_vars - 2 - prev)
        out.append(tuple(exps))
    return sorted(out, key=grevlex_key, reverse=True)


# -- Sylvester --------------------------------------------------------------


def _binary_degree(f, name):
    if f.n_vars != 2:
        raise WrongArity(f"{name} must be a binary form, got {f.n_vars} variables")
    d = homogeneous_degree(f)
    if d is NOT_HOMOGENEOUS:
        raise NotHomogeneous(f"{name} is not homogeneous")
    if d is ZERO_POLY:
        raise InvalidSystem(f"{name} is zero")
    return d


def sylvester_matrix(f, g):
    """Sylvester matrix of two binary forms, coefficients by descending power of x0."""
    df, dg = _binary_degree(f, "f"), _binary_degree(g, "g")
    a = [f.coeff((df - k, k)) for k in range(df + 1)]
    b = [g.coeff((dg - k, k)) for k in range(dg + 1)]
    size = df + dg
    rows = []
    for r in range(dg):
        rows.append([0] * r + a + [0] * (size - r - df - 1))
    for r in range(df):
        rows.append([0] * r + b + [0] * (size - r - dg - 1))
    return Matrix(size, size, tuple(x for row in rows for x in row))


def sylvester_resultant(f, g):
    """Res(f, g) for binary forms; Res(a x0 + b x1, c x0 + d x1) = ad - bc."""
    return determinant(sylvester_matrix(f, g))


# -- Macaulay ---------------------------------------------------------------


def macaulay_matrix(sys):
    """Macaulay matrix in degree nu, plus the row/column indices of the minor M'.

    Rows and columns are indexed by the monomials of degree nu (largest
    grevlex first).  Monomial ``m`` is assigned to the smallest ``i`` with
    ``x_i^d_i | m`` and its row holds the coefficients of ``(m / x_i^d_i) f_i``.
    M' keeps the monomials divisible by at least two of the ``x_i^d_i``.
    """
    n_vars = sys.n + 1
    mons = monomials_of_degree(n_vars, sys.nu)
    index = {m: k for k, m in enumerate(mons)}
    size = len(mons)
    entries = [Fraction(0)] * (size * size)
    extraneous = []
    for r, m in enumerate(mons):
        divisible = [i for i in range(n_vars) if m[i] >= sys.degrees[i]]
        if not divisible:
            raise UnassignedMonomial(f"monomial {m} is divisible by no x_i^d_i")
        if len(divisible) >= 2:
            extraneous.append(r)
        i = divisible[0]
        shift = list(m)
        shift[i] -= sys.degrees[i]
        for exps, c in sys.forms[i].as_dict().items():
            col = index[tuple(a + b for a, b in zip(exps, shift))]
            entries[r * size + col] = c
    return Matrix(size, size, tuple(entries)), extraneous, list(extraneous)


def macaulay_resultant(sys):
    """Res as det(M)/det(M'); raises :class:`DegenerateMinor` when det(M') = 0."""
    M, rows, cols = macaulay_matrix(sys)
    minor = determinant(submatrix(M, rows, cols))
    if not minor:
        raise DegenerateMinor(
            f"extraneous minor of size {len(rows)} is singular; try mode='poisson'"
        )
    return _value(sys, determinant(M) / minor, "macaulay")


# -- Poisson ----------------------------------------------------------------


def _poisson(sys):
    n = sys.n
    if n == 0:
        return sys.forms[0].coeff((sys.degrees[0],))
    last = n
    restricted = []
    for k, f in enumerate(sys.forms[:n]):
        g = dehomogenize(restrict_to_hyperplane(f, last), last)
        if g.is_zero():
            raise PoissonPreconditionFailed(f"form {k} vanishes on the hyperplane x{last} = 0")
        restricted.append(g)
    sub = _poisson(MacaulaySystem(restricted))
    if not sub:
        raise PoissonPreconditionFailed("the restricted system has resultant 0")
    affine = [dehomogenize(f, last) for f in sys.forms[:n]]
    gb = buchberger(affine)
    try:
        alg = quotient_algebra(gb)
    except NotZeroDimensional as exc:
        raise PoissonPreconditionFailed(f"affine quotient is not zero-dimensional: {exc}") from exc
    expected = math.prod(sys.degrees[:n])
    if alg.dimension != expected:
        raise PoissonPreconditionFailed(
            f"affine quotient has dimension {alg.dimension}, expected {expected}"
        )
    return sub ** sys.degrees[n] * norm(alg, dehomogenize(sys.forms[n], last))


def poisson_resultant(sys):
    """Res by recursion on the hyperplane ``x_n = 0``.

    Raises :class:`PoissonPreconditionFailed` when a restricted resultant
    vanishes at some level of the recursion.
    """
    return _value(sys, _poisson(sys), "poisson")


# -- dispatcher -------------------------------------------------------------


def resultant(sys, mode="auto"):
    """Evaluate Res(sys) by ``mode`` in {auto, macaulay, poisson, crosscheck}.

    ``auto`` falls back to Poisson when the Macaulay minor is singular.
    ``crosscheck`` computes both and raises :class:`CrosscheckMismatch` on
    disagreement; a degenerate path re-raises its own error.
    """
    if mode == "macaulay":
        return macaulay_resultant(sys)
    if mode == "poisson":
        return poisson_resultant(sys)
    if mode == "auto":
        try:
            return macaulay_resultant(sys)
        except DegenerateMinor as first:
            try:
                return poisson_resultant(sys)
            except PoissonPreconditionFailed as second:
                raise BothPathsDegenerate(f"{first}; {second}") from second
    if mode == "crosscheck":
        errors = []
        values = []
        for path in (macaulay_resultant, poisson_resultant):
            try:
                values.append(path(sys))
            except (DegenerateMinor, PoissonPreconditionFailed) as exc:
                errors.append(exc)
        if len(errors) == 2:
            raise BothPathsDegenerate(f"{errors[0]}; {errors[1]}")
        if errors:
            raise errors[0]
        mac, poi = values
        if mac.value != poi.value:
            raise CrosscheckMismatch(mac.value, poi.value)
        return mac
    raise ValueError(f"unknown mode {mode!r}; use one of {MODES}")
