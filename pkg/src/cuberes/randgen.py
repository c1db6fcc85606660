"""Seeded generators for random exact instances.

All functions take a :class:`random.Random` so that suites are reproducible
from a single seed.
"""

from fractions import Fraction

from .cube import FormalObject, Symbol, standard_cube
from .poly import Polynomial
from .resultant import MacaulaySystem, monomials_of_degree


def rational(rng, num_max=9, den_max=3, nonzero=False):
    while True:
        num = rng.randint(-num_max, num_max)
        if num or not nonzero:
            return Fraction(num, rng.randint(1, den_max))


def nonzero_rational(rng, num_max=9, den_max=3):
    return rational(rng, num_max, den_max, nonzero=True)


def random_form(rng, n_vars, degree, num_max=9, den_max=3, dense=True):
    """Random homogeneous form; dense forms have every coefficient nonzero."""
    while True:
        terms = {
            m: rational(rng, num_max, den_max, nonzero=dense)
            for m in monomials_of_degree(n_vars, degree)
        }
        f = Polynomial(n_vars, terms)
        if not f.is_zero():
            return f


def random_system(rng, degrees, **kw):
    n_vars = len(degrees)
    return MacaulaySystem([random_form(rng, n_vars, d, **kw) for d in degrees])


def monomial_system(degrees):
    n_vars = len(degrees)
    return MacaulaySystem(
        [
            Polynomial.monomial(tuple(d if k == i else 0 for k in range(n_vars)))
            for i, d in enumerate(degrees)
        ]
    )


def vanishing_system(rng, degrees, point=None):
    """Random system whose forms all vanish at ``point`` (default (1:..:1)).

    Each form is corrected by a multiple of ``x_j^d`` for a coordinate ``j``
    where the point is nonzero.
    """
    n_vars = len(degrees)
    point = [Fraction(1)] * n_vars if point is None else [Fraction(v) for v in point]
    j = next(k for k, v in enumerate(point) if v)
    forms = []
    for d in degrees:
        while True:
            f = random_form(rng, n_vars, d)
            pure = Polynomial.monomial(tuple(d if k == j else 0 for k in range(n_vars)))
            f = f - pure.scale(f.evaluate(point) / point[j] ** d)
            if not f.is_zero():
                break
        forms.append(f)
    return MacaulaySystem(forms)


def linear_system(rng, n_vars):
    """(system, coefficient rows) for n_vars random linear forms."""
    rows = [[rational(rng) for _ in range(n_vars)] for _ in range(n_vars)]
    forms = []
    for row in rows:
        terms = {tuple(int(k == i) for k in range(n_vars)): c for i, c in enumerate(row)}
        f = Polynomial(n_vars, terms)
        if f.is_zero():
            return linear_system(rng, n_vars)
        forms.append(f)
    return MacaulaySystem(forms), rows


def random_affine(rng, n_vars, max_degree, num_max=9):
    """Dense affine polynomial of total degree exactly ``max_degree``."""
    terms = {}
    for d in range(max_degree + 1):
        for m in monomials_of_degree(n_vars, d):
            terms[m] = rational(rng, num_max, 3, nonzero=(d == max_degree))
    return Polynomial(n_vars, terms)


def degree_symbol_objects(rng, count, arity=1, bound=5, prefix="L"):
    """Formal objects that are single symbols carrying random degree vectors."""
    return [
        FormalObject.of(f"{prefix}{k}", tuple(rng.randint(-bound, bound) for _ in range(arity)))
        for k in range(count)
    ]


def random_object(rng, symbols, coeff_bound=3, grade_bound=4):
    coeffs = {s: rng.randint(-coeff_bound, coeff_bound) for s in symbols}
    return FormalObject(coeffs, rng.randint(-grade_bound, grade_bound))


def random_symbols(rng, count, arity=None, bound=4):
    if arity is None:
        return [Symbol(f"s{k}") for k in range(count)]
    return [Symbol(f"s{k}", tuple(rng.randint(-bound, bound) for _ in range(arity))) for k in range(count)]


def random_standard_cube(rng, n, symbols):
    return standard_cube(
        random_object(rng, symbols), [random_object(rng, symbols) for _ in range(n)]
    )
