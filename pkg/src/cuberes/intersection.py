"""Euler characteristics on a degree lattice and alternating intersection sums.

A :class:`ChiFunction` is any exact functional on integer ``m``-tuples; the
line bundle ``O(d)`` on projective ``n``-space is the arity-one case
``ChiFunction.projective(n)``.  The intersection number of classes
``c_1 .. c_p`` is

    sum over subsets S of {1..p} of (-1)^(p - |S|) * chi(sum of c_i, i in S)

which is also the iterated finite difference of ``chi`` at the origin.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable

from .errors import ArityMismatch

__all__ = [
    "ChiFunction",
    "chi_projective",
    "intersection_number",
    "koszul_length",
    "difference_operator",
]


def chi_projective(n, d):
    """Euler characteristic of ``O(d)`` on P^n: prod_{k=1..n} (d+k) / n!."""
    if n < 0:
        raise ValueError("dimension must be non-negative")
    num = 1
    for k in range(1, n + 1):
        num *= d + k
    return Fraction(num, factorial(n))


@dataclass(frozen=True)
class ChiFunction:
    arity: int
    evaluate: Callable

    def __call__(self, t):
        t = tuple(t)
        if len(t) != self.arity:
            raise ArityMismatch(f"chi of arity {self.arity} evaluated at {t}")
        return Fraction(self.evaluate(t))

    @classmethod
    def projective(cls, n):
        return cls(1, lambda t: chi_projective(n, t[0]))


def _check_classes(chi, classes):
    out = []
    for c in classes:
        c = tuple(c)
        if len(c) != chi.arity:
            raise ArityMismatch(f"class {c} does not match chi arity {chi.arity}")
        out.append(c)
    return out


def intersection_number(chi, classes):
    """Alternating sum of ``chi`` over all sub-sums of ``classes``."""
    classes = _check_classes(chi, classes)
    p = len(classes)
    if p < 1:
        raise ValueError("at least one class is required")
    m = chi.arity
    total = Fraction(0)
    for mask in range(1 << p):
        point = [0] * m
        size = 0
        for i in range(p):
            if mask >> i & 1:
                size += 1
                for k, v in enumerate(classes[i]):
                    point[k] += v
        term = chi(point)
        total += term if (p - size) % 2 == 0 else -term
    return total


def koszul_length(degrees):
    """Length of k[x_1..x_n]/(x_1^d_1, .., x_n^d_n), by counting its staircase."""
    degrees = list(degrees)
    if any(d < 1 for d in degrees):
        raise ValueError("degrees must be positive")
    return sum(1 for _ in itertools.product(*(range(d) for d in degrees)))


def difference_operator(chi, direction):
    """The functional ``t -> chi(t + direction) - chi(t)``."""
    direction = tuple(direction)
    if len(direction) != chi.arity:
        raise ArityMismatch(f"direction {direction} does not match chi arity {chi.arity}")

    def delta(t):
        shifted = tuple(a + b for a, b in zip(t, direction))
        return chi(shifted) - chi(t)

    return ChiFunction(chi.arity, delta)
