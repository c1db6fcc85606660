"""Cube arrangements in a free strictly-commutative Picard category.

Objects are :class:`FormalObject` values: finite integer combinations of
:class:`Symbol` generators plus an integer grade.  Tensor product is
addition, the unit is the empty combination, and every structural
isomorphism of the strictly-commutative theory is an equality, so the cube
axioms become identities that can be checked directly.

An ``n``-arrangement assigns an object to each vertex of ``{0,1}^n``.
Directions are numbered ``1..n``.
"""

import itertools
from dataclasses import dataclass
from functools import cmp_to_key
from typing import Optional

from .errors import (
    BadPermutation,
    ChiMismatch,
    FaceMismatch,
    IndexOutOfRange,
    LengthMismatch,
)

__all__ = [
    "Symbol",
    "FormalObject",
    "CubeArrangement",
    "epsilon",
    "vertex_order",
    "vertices",
    "delta",
    "glue",
    "permute",
    "face",
    "split",
    "from_faces",
    "standard_cube",
    "edges",
    "graded_swap_sign",
    "epsilon_ij",
]


@dataclass(frozen=True)
class Symbol:
    """Opaque generator, optionally tagged with a degree vector."""

    name: str
    degree: Optional[tuple] = None

    def __post_init__(self):
        if self.degree is not None:
            object.__setattr__(self, "degree", tuple(int(d) for d in self.degree))


class FormalObject:
    """Integer combination of symbols with an attached integer grade."""

    __slots__ = ("_coeffs", "grade")

    def __init__(self, coefficients=None, grade=0):
        coeffs = {}
        for sym, c in (coefficients or {}).items():
            if not isinstance(sym, Symbol):
                sym = Symbol(sym)
            c = int(c)
            if c:
                coeffs[sym] = coeffs.get(sym, 0) + c
                if not coeffs[sym]:
                    del coeffs[sym]
        self._coeffs = tuple(sorted(coeffs.items(), key=lambda kv: (kv[0].name, kv[0].degree or ())))
        self.grade = int(grade)

    @classmethod
    def unit(cls):
        return cls()

    @classmethod
    def of(cls, name, degree=None, grade=0):
        return cls({Symbol(name, degree): 1}, grade)

    @property
    def coefficients(self):
        return dict(self._coeffs)

    def is_unit(self):
        return not self._coeffs and self.grade == 0

    def degree(self, arity):
        """Degree vector: the coefficient-weighted sum of symbol degrees."""
        out = [0] * arity
        for sym, c in self._coeffs:
            if sym.degree is None:
                raise ValueError(f"symbol {sym.name!r} carries no degree")
            if len(sym.degree) != arity:
                raise LengthMismatch(f"symbol {sym.name!r} has degree arity {len(sym.degree)}")
            for k, d in enumerate(sym.degree):
                out[k] += c * d
        return tuple(out)

    def __add__(self, other):
        if not isinstance(other, FormalObject):
            return NotImplemented
        merged = dict(self._coeffs)
        for sym, c in other._coeffs:
            merged[sym] = merged.get(sym, 0) + c
        return FormalObject(merged, self.grade + other.grade)

    def __neg__(self):
        return FormalObject({s: -c for s, c in self._coeffs}, -self.grade)

    def __sub__(self, other):
        if not isinstance(other, FormalObject):
            return NotImplemented
        return self + (-other)

    def __mul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return FormalObject({s: k * c for s, c in self._coeffs}, k * self.grade)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, FormalObject):
            return NotImplemented
        return self._coeffs == other._coeffs and self.grade == other.grade

    def __hash__(self):
        return hash((self._coeffs, self.grade))

    def __repr__(self):
        if not self._coeffs:
            body = "0"
        else:
            body = " + ".join(f"{c}*{s.name}" for s, c in self._coeffs).replace("+ -", "- ")
        return f"FormalObject({body}, grade={self.grade})"

    def to_json(self):
        return {
            "coefficients": {s.name: c for s, c in self._coeffs},
            "grade": self.grade,
        }

    @classmethod
    def from_json(cls, doc, symbols=None):
        symbols = symbols or {}
        coeffs = {symbols.get(name, Symbol(name)): c for name, c in doc.get("coefficients", {}).items()}
        return cls(coeffs, doc.get("grade", 0))


# -- vertices ---------------------------------------------------------------


def _vertex(s):
    s = tuple(int(b) for b in s)
    if any(b not in (0, 1) for b in s):
        raise ValueError(f"vertex {s} has a coordinate outside {{0, 1}}")
    return s


def epsilon(s):
    """Sign of a vertex: (-1)^(n - sum(s))."""
    s = _vertex(s)
    return -1 if (len(s) - sum(s)) % 2 else 1


def vertex_order(s, t):
    """Compare two vertices: -1 if ``s`` comes first, 0 if equal, 1 otherwise.

    Smaller coordinate sum comes first; among equal sums, the vertex with a
    1 at the first differing coordinate comes first.
    """
    s, t = _vertex(s), _vertex(t)
    if len(s) != len(t):
        raise LengthMismatch(f"vertices {s} and {t} have different lengths")
    if sum(s) != sum(t):
        return -1 if sum(s) < sum(t) else 1
    for a, b in zip(s, t):
        if a != b:
            return -1 if a > b else 1
    return 0


def vertices(n):
    """All vertices of {0,1}^n in vertex order."""
    return sorted(itertools.product((0, 1), repeat=n), key=cmp_to_key(vertex_order))


# -- arrangements -----------------------------------------------------------


class CubeArrangement:
    """Total map from the vertices of {0,1}^n to formal objects."""

    __slots__ = ("n", "_map")

    def __init__(self, n, vertex_map):
        if n < 0:
            raise ValueError("dimension must be non-negative")
        self.n = n
        if callable(vertex_map):
            mapping = {s: vertex_map(s) for s in vertices(n)}
        else:
            mapping = {_vertex(s): obj for s, obj in vertex_map.items()}
        missing = [s for s in vertices(n) if s not in mapping]
        if missing or len(mapping) != 2**n:
            raise ValueError(f"arrangement of dimension {n} must cover all {2**n} vertices")
        self._map = mapping

    def __getitem__(self, s):
        return self._map[_vertex(s)]

    def items(self):
        return [(s, self._map[s]) for s in vertices(self.n)]

    def __eq__(self, other):
        if not isinstance(other, CubeArrangement):
            return NotImplemented
        return self.n == other.n and self._map == other._map

    def __hash__(self):
        return hash((self.n, tuple(self._map[s] for s in vertices(self.n))))

    def __repr__(self):
        return f"CubeArrangement({self.n}, {dict(self.items())!r})"

    def to_json(self, with_symbols=True):
        doc = {
            "dimension": self.n,
            "vertices": [obj.to_json() for _, obj in self.items()],
        }
        if with_symbols:
            syms = {s for obj in self._map.values() for s in obj.coefficients if s.degree is not None}
            if syms:
                doc["symbols"] = {s.name: list(s.degree) for s in sorted(syms, key=lambda s: s.name)}
        return doc

    @classmethod
    def from_json(cls, doc):
        n = int(doc["dimension"])
        objs = doc["vertices"]
        if len(objs) != 2**n:
            raise LengthMismatch(f"dimension {n} needs {2**n} vertices, got {len(objs)}")
        symbols = {name: Symbol(name, tuple(deg)) for name, deg in doc.get("symbols", {}).items()}
        return cls(n, {s: FormalObject.from_json(o, symbols) for s, o in zip(vertices(n), objs)})


def delta(K):
    """Signed sum of the vertex objects, sign ``epsilon(s)`` at vertex ``s``."""
    total = FormalObject()
    for s, obj in K.items():
        total = total + obj if epsilon(s) > 0 else total - obj
    return total


def _check_direction(K, i):
    if not 1 <= i <= K.n:
        raise IndexOutOfRange(f"direction {i} out of range for a {K.n}-cube")


def _insert(t, i, b):
    return t[: i - 1] + (b,) + t[i - 1 :]


def face(K, i, side):
    """Back (``side='back'``, coordinate i = 0) or front (i = 1) face of ``K``."""
    _check_direction(K, i)
    if side not in ("back", "front"):
        raise ValueError("side must be 'back' or 'front'")
    b = 0 if side == "back" else 1
    return CubeArrangement(K.n - 1, lambda t: K[_insert(t, i, b)])


def split(K, i):
    """(back face, front face) along direction ``i``."""
    return face(K, i, "back"), face(K, i, "front")


def from_faces(back, front, i):
    """The arrangement ``(back -i- front)`` with the given i-faces."""
    if back.n != front.n:
        raise LengthMismatch("faces must have the same dimension")
    n = back.n + 1
    if not 1 <= i <= n:
        raise IndexOutOfRange(f"direction {i} out of range for a {n}-cube")
    return CubeArrangement(n, lambda s: (front if s[i - 1] else back)[s[: i - 1] + s[i:]])


def glue(A, B, i):
    """Glue ``A = (U -i- V)`` and ``B = (V -i- W)`` into ``(U -i- W)``."""
    if A.n != B.n:
        raise LengthMismatch(f"cannot glue a {A.n}-cube to a {B.n}-cube")
    _check_direction(A, i)
    shared_a = face(A, i, "front")
    shared_b = face(B, i, "back")
    for t, obj in shared_a.items():
        if shared_b[t] != obj:
            raise FaceMismatch(
                f"front face of A and back face of B differ at face vertex {t}: "
                f"{obj!r} != {shared_b[t]!r}",
                vertex=t,
            )
    return from_faces(face(A, i, "back"), face(B, i, "front"), i)


def _check_permutation(sigma, n):
    sigma = tuple(int(x) for x in sigma)
    if sorted(sigma) != list(range(1, n + 1)):
        raise BadPermutation(f"{sigma} is not a permutation of 1..{n}")
    return sigma


def permute(K, sigma):
    """Pull ``K`` back along the coordinate permutation ``sigma``.

    ``sigma`` lists the images of ``1..n``; it moves coordinate ``k`` to
    position ``sigma[k-1]``.
    """
    sigma = _check_permutation(sigma, K.n)

    def act(s):
        out = [0] * K.n
        for k, b in enumerate(s):
            out[sigma[k] - 1] = b
        return tuple(out)

    return CubeArrangement(K.n, lambda s: K[act(s)])


def standard_cube(L0, edge_objects):
    """The cube with vertex ``s`` equal to ``L0 + sum(s_i * L_i)``."""
    edge_objects = list(edge_objects)
    n = len(edge_objects)

    def vertex(s):
        obj = L0
        for b, L in zip(s, edge_objects):
            if b:
                obj = obj + L
        return obj

    return CubeArrangement(n, vertex)


def edges(K):
    """Recover ``(L0, [L1..Ln])`` from a standard cube, or ``None`` otherwise."""
    origin = (0,) * K.n
    L0 = K[origin]
    found = []
    for i in range(K.n):
        e = tuple(int(k == i) for k in range(K.n))
        found.append(K[e] - L0)
    if standard_cube(L0, found) != K:
        return None
    return L0, found


def graded_swap_sign(d, e):
    """Sign of the swap of objects of grades ``d`` and ``e``: (-1)^(d*e)."""
    return -1 if (d * e) % 2 else 1


def epsilon_ij(K, i, j, chi=None):
    """The sign discrepancy (-1)^chi(A) for a cube viewed as a square of faces.

    ``K`` is split along directions ``i`` and ``j`` into four faces ``A``
    (i=0, j=0), ``B`` (i=1, j=0), ``C`` (i=0, j=1) and ``D`` (i=1, j=1).
    The chi-value of a face is the signed sum of its vertex values, where a
    vertex value is ``chi(object.degree(chi.arity))`` or, with ``chi=None``,
    the object's grade.  All four face values must agree.
    """
    _check_direction(K, i)
    _check_direction(K, j)
    if i == j:
        raise IndexOutOfRange("directions i and j must differ")

    def value(obj):
        if chi is None:
            return obj.grade
        return chi(obj.degree(chi.arity))

    lo, hi = sorted((i, j))
    values = {}
    for bi, bj in itertools.product((0, 1), repeat=2):
        total = 0
        for t in vertices(K.n - 2):
            s = list(t)
            s.insert(lo - 1, bi if lo == i else bj)
            s.insert(hi - 1, bj if hi == j else bi)
            total += epsilon(t) * value(K[tuple(s)])
        values[(bi, bj)] = total
    if len(set(values.values())) != 1:
        raise ChiMismatch(f"face chi-values disagree in directions {i}, {j}: {values}")
    a = values[(0, 0)]
    if a != int(a):
        raise ChiMismatch(f"face chi-value {a} is not an integer")
    return -1 if int(a) % 2 else 1
