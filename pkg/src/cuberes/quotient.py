"""Gröbner bases, normal forms and zero-dimensional quotient algebras over Q.

The norm of an element of a finite algebra is the determinant of
multiplication by that element on a basis; here the basis is the staircase
of a reduced Gröbner basis.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import ArityMismatch, NotZeroDimensional
from .linalg import Matrix, determinant
from .poly import Polynomial, grevlex_key, lex_key

__all__ = [
    "GroebnerBasis",
    "QuotientAlgebra",
    "buchberger",
    "normal_form",
    "quotient_basis",
    "quotient_algebra",
    "multiplication_matrix",
    "norm",
]

ORDERS = {"grevlex": grevlex_key, "lex": lex_key}


def _order_key(order):
    try:
        return ORDERS[order]
    except KeyError:
        raise ValueError(f"unknown monomial order {order!r}; use one of {sorted(ORDERS)}") from None


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _leading(terms, key):
    m = max(terms, key=key)
    return m, terms[m]


def _reduce(terms, basis, key):
    """Fully reduce ``terms`` (a dict) by ``basis`` (list of (lm, dict)), monic basis."""
    terms = dict(terms)
    remainder = {}
    while terms:
        m, c = _leading(terms, key)
        for lm, g in basis:
            if _divides(lm, m):
                shift = tuple(x - y for x, y in zip(m, lm))
                for gm, gc in g.items():
                    t = tuple(x + y for x, y in zip(gm, shift))
                    v = terms.get(t, 0) - c * gc
                    if v:
                        terms[t] = v
                    else:
                        terms.pop(t, None)
                break
        else:
            remainder[m] = c
            del terms[m]
    return remainder


def _monic(terms, key):
    _, c = _leading(terms, key)
    return {m: v / c for m, v in terms.items()}


def _spoly(f, g, key):
    (lf, _), (lg, _) = _leading(f, key), _leading(g, key)
    L = _lcm(lf, lg)
    out = {}
    for poly, lm, sign in ((f, lf, 1), (g, lg, -1)):
        shift = tuple(x - y for x, y in zip(L, lm))
        for m, c in poly.items():
            t = tuple(x + y for x, y in zip(m, shift))
            v = out.get(t, 0) + sign * c
            if v:
                out[t] = v
            else:
                out.pop(t, None)
    return out


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Gröbner basis; generators are monic and sorted by leading monomial."""

    order: str
    n_vars: int
    generators: tuple

    def leading_monomials(self):
        key = _order_key(self.order)
        return [max(g.support(), key=key) for g in self.generators]

    def _pairs(self):
        key = _order_key(self.order)
        return [(max(g.support(), key=key), g.as_dict()) for g in self.generators]


def buchberger(gens, order="grevlex"):
    """Reduced Gröbner basis of the ideal generated by ``gens``.

    Pairs are selected by lowest lcm degree (then by the order of the lcm),
    and Buchberger's coprime and chain criteria discard pairs.
    """
    key = _order_key(order)
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise ValueError("at least one nonzero generator is required")
    n = gens[0].n_vars
    if any(g.n_vars != n for g in gens):
        raise ArityMismatch("generators have different arities")

    G = []  # list of (lm, monic dict)
    pairs = set()

    def add(poly):
        poly = _monic(poly, key)
        lm = _leading(poly, key)[0]
        k = len(G)
        G.append((lm, poly))
        for i in range(k):
            pairs.add((i, k))

    for g in gens:
        r = _reduce(g.as_dict(), G, key)
        if r:
            add(r)

    def pair_key(p):
        L = _lcm(G[p[0]][0], G[p[1]][0])
        return (sum(L), key(L), p)

    while pairs:
        i, j = min(pairs, key=pair_key)
        pairs.discard((i, j))
        li, lj = G[i][0], G[j][0]
        L = _lcm(li, lj)
        if all(a == 0 or b == 0 for a, b in zip(li, lj)):
            continue
        chain = False
        for k in range(len(G)):
            if k in (i, j) or not _divides(G[k][0], L):
                continue
            if (min(i, k), max(i, k)) not in pairs and (min(j, k), max(j, k)) not in pairs:
                chain = True
                break
        if chain:
            continue
        r = _reduce(_spoly(G[i][1], G[j][1], key), G, key)
        if r:
            add(r)

    # minimalize, then interreduce
    minimal = []
    for idx, (lm, g) in enumerate(G):
        redundant = False
        for jdx, (lm2, _) in enumerate(G):
            if jdx == idx or not _divides(lm2, lm):
                continue
            if lm2 != lm or jdx < idx:
                redundant = True
                break
        if not redundant:
            minimal.append((lm, g))
    reduced = []
    for idx, (lm, g) in enumerate(minimal):
        others = [p for k, p in enumerate(minimal) if k != idx]
        head = {lm: g[lm]}
        tail = {m: c for m, c in g.items() if m != lm}
        r = _reduce(tail, others, key)
        r.update(head)
        reduced.append((lm, _monic(r, key)))
    reduced.sort(key=lambda p: key(p[0]))
    return GroebnerBasis(order, n, tuple(Polynomial(n, g) for _, g in reduced))


def normal_form(p, gb):
    """Remainder of ``p`` on division by ``gb``: no term lies in the leading ideal."""
    if p.n_vars != gb.n_vars:
        raise ArityMismatch(f"polynomial in {p.n_vars} variables, basis in {gb.n_vars}")
    key = _order_key(gb.order)
    return Polynomial(gb.n_vars, _reduce(p.as_dict(), gb._pairs(), key))


def quotient_basis(gb):
    """Staircase monomials of ``gb`` in increasing order.

    Raises :class:`NotZeroDimensional` when some variable has no pure power
    among the leading monomials.
    """
    lms = gb.leading_monomials()
    n = gb.n_vars
    if any(sum(m) == 0 for m in lms):
        return []  # unit ideal
    bounds = []
    for v in range(n):
        pure = [m[v] for m in lms if all(e == 0 for k, e in enumerate(m) if k != v) and m[v] > 0]
        if not pure:
            raise NotZeroDimensional(f"no pure power of x{v} among leading monomials")
        bounds.append(min(pure))
    key = _order_key(gb.order)
    stair = [
        m
        for m in itertools.product(*(range(b) for b in bounds))
        if not any(_divides(lm, m) for lm in lms)
    ]
    return sorted(stair, key=key)


@dataclass(frozen=True)
class QuotientAlgebra:
    """k[x]/I for a zero-dimensional I, with multiplication tables per variable."""

    gb: GroebnerBasis
    basis: tuple
    mult_tables: tuple

    @property
    def dimension(self):
        return len(self.basis)

    def coordinates(self, p):
        """Coordinates of ``normal_form(p)`` on the staircase basis."""
        nf = normal_form(p, self.gb).as_dict()
        return [nf.get(m, Fraction(0)) for m in self.basis]

    def multiplication_matrix(self, p):
        return multiplication_matrix(self, p)

    def norm(self, p):
        return norm(self, p)


def quotient_algebra(gb):
    basis = tuple(quotient_basis(gb))
    alg = QuotientAlgebra(gb, basis, ())
    tables = tuple(
        multiplication_matrix(alg, Polynomial.variable(v, gb.n_vars)) for v in range(gb.n_vars)
    )
    return QuotientAlgebra(gb, basis, tables)


def multiplication_matrix(alg, p):
    """Matrix of ``b -> normal_form(p * b)``; column ``j`` is the image of basis[j]."""
    gb = alg.gb
    if p.n_vars != gb.n_vars:
        raise ArityMismatch(f"polynomial in {p.n_vars} variables, algebra in {gb.n_vars}")
    key = _order_key(gb.order)
    pairs = gb._pairs()
    p_red = _reduce(p.as_dict(), pairs, key)
    index = {m: k for k, m in enumerate(alg.basis)}
    d = len(alg.basis)
    cols = []
    for b in alg.basis:
        shifted = {tuple(x + y for x, y in zip(m, b)): c for m, c in p_red.items()}
        img = _reduce(shifted, pairs, key)
        col = [Fraction(0)] * d
        for m, c in img.items():
            col[index[m]] = c
        cols.append(col)
    return Matrix(d, d, tuple(cols[j][i] for i in range(d) for j in range(d)))


def norm(alg, p):
    """Determinant of multiplication by ``p`` on the quotient algebra."""
    return determinant(multiplication_matrix(alg, p))
