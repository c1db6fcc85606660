"""Sparse multivariate polynomials with exact rational coefficients.

Variables are ``x0 .. x{n_vars-1}``.  Terms are stored as a map from
exponent tuples to :class:`fractions.Fraction`, and are iterated in
graded-reverse-lexicographic order (largest first) with ``x0 > x1 > ...``.
"""

import enum
import re
from fractions import Fraction
from numbers import Rational

from .errors import (
    ArityMismatch,
    IndexOutOfRange,
    PolynomialSyntaxError,
    VariableOutOfRange,
)

__all__ = [
    "Polynomial",
    "Homogeneity",
    "NOT_HOMOGENEOUS",
    "ZERO_POLY",
    "grevlex_key",
    "lex_key",
    "parse_polynomial",
    "homogeneous_degree",
    "restrict_to_hyperplane",
    "dehomogenize",
    "add",
    "mul",
    "scale",
    "pow",
]


def grevlex_key(exps):
    """Sort key realising grevlex: larger key means larger monomial."""
    return (sum(exps), tuple(-e for e in reversed(exps)))


def lex_key(exps):
    return tuple(exps)


class Homogeneity(enum.Enum):
    NOT_HOMOGENEOUS = "NotHomogeneous"
    ZERO_POLY = "ZeroPoly"


NOT_HOMOGENEOUS = Homogeneity.NOT_HOMOGENEOUS
ZERO_POLY = Homogeneity.ZERO_POLY


def _as_fraction(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, Rational):
        return Fraction(c)
    raise TypeError(f"coefficient must be rational, got {type(c).__name__}")


class Polynomial:
    """Immutable sparse polynomial in ``n_vars`` variables over Q."""

    __slots__ = ("_n", "_terms", "_hash")

    def __init__(self, n_vars, terms=None):
        if n_vars < 0:
            raise ValueError("n_vars must be non-negative")
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != n_vars:
                raise ArityMismatch(
                    f"monomial {exps} has length {len(exps)}, expected {n_vars}"
                )
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            c = _as_fraction(c)
            if c:
                clean[exps] = clean.get(exps, 0) + c
                if not clean[exps]:
                    del clean[exps]
        self._n = n_vars
        self._terms = clean
        self._hash = None

    # -- constructors -------------------------------------------------

    @classmethod
    def _raw(cls, n_vars, terms):
        # trusted path: terms already canonical
        p = object.__new__(cls)
        p._n = n_vars
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, n_vars):
        return cls._raw(n_vars, {})

    @classmethod
    def constant(cls, c, n_vars):
        c = _as_fraction(c)
        return cls._raw(n_vars, {(0,) * n_vars: c} if c else {})

    @classmethod
    def variable(cls, i, n_vars):
        if not 0 <= i < n_vars:
            raise VariableOutOfRange(f"x{i} with n_vars={n_vars}")
        exps = [0] * n_vars
        exps[i] = 1
        return cls._raw(n_vars, {tuple(exps): Fraction(1)})

    @classmethod
    def monomial(cls, exps, coeff=1):
        return cls(len(exps), {tuple(exps): coeff})

    # -- accessors ----------------------------------------------------

    @property
    def n_vars(self):
        return self._n

    def terms(self):
        """(exponents, coefficient) pairs, largest grevlex monomial first."""
        return sorted(self._terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True)

    def as_dict(self):
        return dict(self._terms)

    def coeff(self, exps):
        return self._terms.get(tuple(exps), Fraction(0))

    def support(self):
        return set(self._terms)

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def total_degree(self):
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def evaluate(self, point):
        if len(point) != self._n:
            raise ArityMismatch(f"point has length {len(point)}, expected {self._n}")
        point = [_as_fraction(v) for v in point]
        total = Fraction(0)
        for exps, c in self._terms.items():
            v = c
            for x, e in zip(point, exps):
                if e:
                    v *= x**e
            total += v
        return total

    # -- arithmetic ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other._n != self._n:
                raise ArityMismatch(f"n_vars {self._n} vs {other._n}")
            return other
        if isinstance(other, Rational):
            return Polynomial.constant(other, self._n)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for exps, c in other._terms.items():
            v = out.get(exps, 0) + c
            if v:
                out[exps] = v
            else:
                out.pop(exps, None)
        return Polynomial._raw(self._n, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self._n, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, Rational) and not isinstance(other, Polynomial):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Polynomial._raw(self._n, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def scale(self, c):
        c = _as_fraction(c)
        if not c:
            return Polynomial.zero(self._n)
        return Polynomial._raw(self._n, {e: v * c for e, v in self._terms.items()})

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.constant(1, self._n)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def mul_monomial(self, exps, c=1):
        c = _as_fraction(c)
        if not c:
            return Polynomial.zero(self._n)
        return Polynomial._raw(
            self._n,
            {tuple(a + b for a, b in zip(e, exps)): v * c for e, v in self._terms.items()},
        )

    # -- comparison / display -----------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._n == other._n and self._terms == other._terms
        if isinstance(other, Rational):
            return self == Polynomial.constant(other, self._n)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._n, frozenset(self._terms.items())))
        return self._hash

    def to_text(self):
        """Serialize in the input grammar; ``parse_polynomial`` inverts this."""
        if not self._terms:
            return "0"
        parts = []
        for k, (exps, c) in enumerate(self.terms()):
            factors = [
                f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in enumerate(exps) if e
            ]
            mag = abs(c)
            if not factors:
                body = _fmt(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([_fmt(mag)] + factors)
            if k == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"Polynomial({self._n}, {self.to_text()!r})"


def _fmt(q):
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


# -- parser --------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<var>x\d+)|(?P<op>[-+*/^]))")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = len(text) - len(text[pos:].lstrip())
            raise PolynomialSyntaxError(
                f"unexpected character {text[start]!r}", start, {"INT", "x<INDEX>", "+", "-", "*", "/", "^"}
            )
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text, n_vars):
        self.tokens = _tokenize(text)
        self.i = 0
        self.n = n_vars

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, expected):
        kind, val, pos = self.peek()
        what = "end of input" if kind == "end" else repr(val)
        raise PolynomialSyntaxError(f"unexpected {what}", pos, expected)

    def expr(self):
        sign = 1
        kind, val, _ = self.peek()
        # a leading sign on the first term is accepted
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        total = self.term().scale(sign)
        while True:
            kind, val, _ = self.peek()
            if kind == "end":
                return total
            if kind == "op" and val in "+-":
                self.take()
                t = self.term()
                total = total + t if val == "+" else total - t
            else:
                self.fail({"+", "-", "end of input"})

    def term(self):
        kind, val, _ = self.peek()
        exps = [0] * self.n
        if kind == "int":
            coeff = self.coeff()
        elif kind == "var":
            coeff = Fraction(1)
            self.factor(exps)
        else:
            self.fail({"INT", "x<INDEX>"})
        while self.peek()[0] == "op" and self.peek()[1] == "*":
            self.take()
            self.factor(exps)
        return Polynomial.monomial(exps, coeff)

    def coeff(self):
        _, num, _ = self.take()
        if self.peek()[0] == "op" and self.peek()[1] == "/":
            self.take()
            kind, den, pos = self.peek()
            if kind != "int":
                self.fail({"POSINT"})
            self.take()
            if int(den) == 0:
                raise PolynomialSyntaxError("zero denominator", pos, {"POSINT"})
            return Fraction(int(num), int(den))
        return Fraction(int(num))

    def factor(self, exps):
        kind, val, pos = self.peek()
        if kind != "var":
            self.fail({"x<INDEX>"})
        self.take()
        idx = int(val[1:])
        if idx >= self.n:
            raise VariableOutOfRange(f"x{idx} at position {pos} with n_vars={self.n}")
        power = 1
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            kind, val, ppos = self.peek()
            if kind != "int":
                self.fail({"POSINT"})
            self.take()
            power = int(val)
            if power == 0:
                raise PolynomialSyntaxError("exponent must be positive", ppos, {"POSINT"})
        exps[idx] += power


def parse_polynomial(text, n_vars):
    """Parse ``text`` into a :class:`Polynomial` in ``n_vars`` variables.

    Grammar (whitespace ignored)::

        expr   := term (('+'|'-') term)*
        term   := coeff ('*' factor)* | factor ('*' factor)*
        factor := 'x' INDEX ('^' POSINT)?
        coeff  := INT | INT '/' POSINT

    A single leading ``+`` or ``-`` before the first term is also accepted.

    >>> parse_polynomial("x0^2*x1 - 1/2", 2).terms()
    [((2, 1), Fraction(1, 1)), ((0, 0), Fraction(-1, 2))]
    """
    if n_vars < 1:
        raise ValueError("n_vars must be positive")
    return _Parser(text, n_vars).expr()


# -- functional surface ----------------------------------------------------


def add(p, q):
    return p + q


def mul(p, q):
    return p * q


def scale(p, c):
    return p.scale(c)


def pow(p, e):  # noqa: A001 - mirrors the ring operation name
    return p**e


def homogeneous_degree(p):
    """Common total degree of all terms, ``NOT_HOMOGENEOUS``, or ``ZERO_POLY``."""
    degrees = {sum(e) for e in p.support()}
    if not degrees:
        return ZERO_POLY
    if len(degrees) > 1:
        return NOT_HOMOGENEOUS
    return degrees.pop()


def _check_index(p, i):
    if not 0 <= i < p.n_vars:
        raise IndexOutOfRange(f"variable index {i} out of range for n_vars={p.n_vars}")


def restrict_to_hyperplane(p, i):
    """Substitute ``x_i = 0``; the arity is unchanged."""
    _check_index(p, i)
    return Polynomial._raw(p.n_vars, {e: c for e, c in p.as_dict().items() if e[i] == 0})


def dehomogenize(p, i):
    """Substitute ``x_i = 1`` and drop variable ``i`` (arity decreases by one)."""
    _check_index(p, i)
    out = {}
    for e, c in p.as_dict().items():
        key = e[:i] + e[i + 1 :]
        v = out.get(key, 0) + c
        if v:
            out[key] = v
        else:
            out.pop(key, None)
    return Polynomial._raw(p.n_vars - 1, out)
