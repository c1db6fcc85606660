"""Seeded property suites run by ``cuberes selftest``.

Each property draws its own generator from ``(seed, name)``, so adding or
reordering properties does not perturb the others.
"""

import itertools
import math
import random
import time
from fractions import Fraction

from . import randgen
from .cube import (
    CubeArrangement,
    FormalObject,
    delta,
    epsilon_ij,
    face,
    from_faces,
    glue,
    graded_swap_sign,
    permute,
    split,
    standard_cube,
)
from .errors import (
    BothPathsDegenerate,
    DegenerateMinor,
    NotZeroDimensional,
    PoissonPreconditionFailed,
)
from .intersection import ChiFunction, intersection_number, koszul_length
from .linalg import Matrix, determinant
from .poly import Polynomial
from .quotient import buchberger, norm, quotient_algebra, quotient_basis
from .resultant import (
    MacaulaySystem,
    macaulay_resultant,
    poisson_resultant,
    resultant,
    resultant_degrees,
    sylvester_resultant,
)


def _perm_sign(perm):
    sign = 1
    for a, b in itertools.combinations(range(len(perm)), 2):
        if perm[a] > perm[b]:
            sign = -sign
    return sign


def random_arrangement(rng, n, symbols):
    return CubeArrangement(n, lambda s: randgen.random_object(rng, symbols))


def prop_ring_axioms(rng, count):
    fails = []
    for k in range(count):
        nv = rng.randint(1, 3)
        p, q, r = (randgen.random_affine(rng, nv, rng.randint(0, 2)) for _ in range(3))
        if (p + q) * r != p * r + q * r or (p * q) * r != p * (q * r) or p * q != q * p:
            fails.append(f"instance {k}")
    return fails


def prop_determinant_multiplicative(rng, count):
    fails = []
    for k in range(count):
        n = rng.randint(1, 6)
        A = Matrix(n, n, tuple(randgen.rational(rng) for _ in range(n * n)))
        B = Matrix(n, n, tuple(randgen.rational(rng) for _ in range(n * n)))
        if determinant(A @ B) != determinant(A) * determinant(B):
            fails.append(f"instance {k}: size {n}")
    return fails


def prop_bezout(rng, count):
    fails = []
    for k in range(count):
        n = rng.randint(1, 3)
        degrees = [rng.randint(1, 4) for _ in range(n)]
        value = intersection_number(ChiFunction.projective(n), [(d,) for d in degrees])
        if not value == math.prod(degrees) == koszul_length(degrees):
            fails.append(f"degrees {degrees}: got {value}")
    return fails


def prop_vanishing(rng, count):
    fails = []
    for _ in range(count):
        n = rng.randint(1, 3)
        twists = [(rng.randint(-5, 5),) for _ in range(n + 1)]
        value = intersection_number(ChiFunction.projective(n), twists)
        if value:
            fails.append(f"n={n} twists {twists}: got {value}")
    return fails


def prop_multilinear(rng, count):
    fails = []
    for _ in range(count):
        n = rng.randint(1, 3)
        chi = ChiFunction.projective(n)
        classes = [(rng.randint(-5, 5),) for _ in range(n)]
        slot = rng.randrange(n)
        other = (rng.randint(-5, 5),)
        combined = list(classes)
        combined[slot] = (classes[slot][0] + other[0],)
        alt = list(classes)
        alt[slot] = other
        lhs = intersection_number(chi, combined)
        rhs = intersection_number(chi, classes) + intersection_number(chi, alt)
        if lhs != rhs:
            fails.append(f"classes {classes} slot {slot} other {other}")
    return fails


def prop_cube_gluing(rng, count):
    fails = []
    symbols = randgen.random_symbols(rng, 3)
    for k in range(count):
        n = rng.randint(1, 4)
        i = rng.randint(1, n)
        A = random_arrangement(rng, n, symbols)
        W = random_arrangement(rng, n - 1, symbols)
        B = from_faces(face(A, i, "front"), W, i)
        if delta(glue(A, B, i)) != delta(A) + delta(B):
            fails.append(f"instance {k}: n={n} i={i}")
    return fails


def prop_cube_permutation(rng, count):
    fails = []
    symbols = randgen.random_symbols(rng, 3)
    for k in range(count):
        n = rng.randint(1, 4)
        K = random_arrangement(rng, n, symbols)
        sigma = list(range(1, n + 1))
        rng.shuffle(sigma)
        if delta(permute(K, sigma)) != delta(K):
            fails.append(f"instance {k}: sigma {sigma}")
    return fails


def prop_cube_inclusion_exclusion(rng, count):
    fails = []
    for k in range(count):
        n = rng.randint(1, 4)
        objs = randgen.degree_symbol_objects(rng, n)
        K = standard_cube(FormalObject(), objs)
        expected = FormalObject()
        for size in range(n + 1):
            for S in itertools.combinations(range(n), size):
                obj = FormalObject()
                for s in S:
                    obj = obj + objs[s]
                expected = expected + (obj if (n - size) % 2 == 0 else -obj)
        d = delta(K)
        chi = ChiFunction.projective(n)
        chi_sum = sum(
            ((1 if (n - sum(s)) % 2 == 0 else -1) * chi(obj.degree(1)) for s, obj in K.items()),
            Fraction(0),
        )
        if d != expected or chi_sum != intersection_number(chi, [o.degree(1) for o in objs]):
            fails.append(f"instance {k}: n={n}")
    return fails


def prop_cube_face_glue(rng, count):
    fails = []
    symbols = randgen.random_symbols(rng, 3)
    for k in range(count):
        n = rng.randint(1, 4)
        K = random_arrangement(rng, n, symbols)
        for i in range(1, n + 1):
            back, front = split(K, i)
            mid = random_arrangement(rng, n - 1, symbols)
            if glue(from_faces(back, mid, i), from_faces(mid, front, i), i) != K:
                fails.append(f"instance {k}: direction {i}")
    return fails


def prop_cube_associativity(rng, count):
    fails = []
    symbols = randgen.random_symbols(rng, 3)
    for k in range(count):
        n = rng.randint(1, 4)
        i = rng.randint(1, n)
        U, V, W, X = (random_arrangement(rng, n - 1, symbols) for _ in range(4))
        A, B, C = from_faces(U, V, i), from_faces(V, W, i), from_faces(W, X, i)
        if glue(glue(A, B, i), C, i) != glue(A, glue(B, C, i), i):
            fails.append(f"instance {k}: n={n} i={i}")
    return fails


def prop_graded_sign(rng, count):
    fails = []
    for k in range(count):
        d, d2, e = (rng.randint(-50, 50) for _ in range(3))
        if graded_swap_sign(d, e) * graded_swap_sign(e, d) != 1:
            fails.append(f"symmetry ({d}, {e})")
        if graded_swap_sign(d + d2, e) != graded_swap_sign(d, e) * graded_swap_sign(d2, e):
            fails.append(f"bilinearity ({d}, {d2}, {e})")
    return fails


def prop_epsilon_ij(rng, count):
    fails = []
    for k in range(count):
        n = rng.randint(0, 2)
        chi = ChiFunction.projective(n)
        objs = randgen.degree_symbol_objects(rng, n + 3)
        K = standard_cube(objs[0], objs[1:])
        i, j = rng.sample(range(1, n + 3), 2)
        try:
            epsilon_ij(K, i, j, chi)
        except Exception as exc:  # noqa: BLE001 - any failure is a property violation
            fails.append(f"instance {k}: {type(exc).__name__}: {exc}")
    return fails


def _random_zero_dim(rng):
    while True:
        nv = rng.randint(1, 2)
        gens = [randgen.random_affine(rng, nv, rng.randint(1, 2)) for _ in range(nv)]
        gb = buchberger(gens)
        try:
            alg = quotient_algebra(gb)
        except NotZeroDimensional:
            continue
        if alg.dimension:
            return alg


def prop_norm(rng, count):
    fails = []
    for k in range(count):
        alg = _random_zero_dim(rng)
        nv = alg.gb.n_vars
        p, q = (randgen.random_affine(rng, nv, rng.randint(0, 2)) for _ in range(2))
        one = Polynomial.constant(1, nv)
        if norm(alg, one) != 1 or norm(alg, p * q) != norm(alg, p) * norm(alg, q):
            fails.append(f"instance {k}")
    for k in range(count):
        degrees = [rng.randint(1, 4) for _ in range(rng.randint(1, 3))]
        nv = len(degrees)
        gens = [
            Polynomial.monomial(tuple(d if v == i else 0 for v in range(nv)))
            for i, d in enumerate(degrees)
        ]
        if len(quotient_basis(buchberger(gens))) != koszul_length(degrees):
            fails.append(f"monomial ideal {degrees}")
    return fails


def prop_sylvester(rng, count):
    fails = []
    for k in range(count):
        degrees = [rng.randint(1, 4), rng.randint(1, 4)]
        sys = randgen.random_system(rng, degrees)
        oracle = sylvester_resultant(*sys.forms)
        try:
            values = [macaulay_resultant(sys).value, poisson_resultant(sys).value]
        except (DegenerateMinor, PoissonPreconditionFailed):
            continue
        if any(v != oracle for v in values):
            fails.append(f"instance {k}: degrees {degrees}")
    return fails


def prop_macaulay_poisson(rng, count):
    fails = []
    for k in range(count):
        degrees = [rng.randint(1, 3) for _ in range(3)]
        sys = randgen.random_system(rng, degrees)
        try:
            resultant(sys, "crosscheck")
        except (DegenerateMinor, PoissonPreconditionFailed, BothPathsDegenerate):
            continue
        except Exception as exc:  # noqa: BLE001
            fails.append(f"instance {k}: degrees {degrees}: {type(exc).__name__}")
    return fails


def _small_degrees(rng):
    n = rng.randint(1, 2)
    return [rng.randint(1, 3 if n == 1 else 2) for _ in range(n + 1)]


def prop_quasi_homogeneity(rng, count):
    fails = []
    for k in range(count):
        degrees = _small_degrees(rng)
        sys = randgen.random_system(rng, degrees)
        base = resultant(sys).value
        ks = resultant_degrees(degrees)
        for i in range(len(degrees)):
            lam = randgen.nonzero_rational(rng)
            scaled = resultant(sys.replace(i, sys.forms[i].scale(lam))).value
            if scaled != lam ** ks[i] * base:
                fails.append(f"instance {k}: slot {i}")
    return fails


def prop_multiplicativity(rng, count):
    fails = []
    for k in range(count):
        n = rng.randint(1, 2)
        nv = n + 1
        f = randgen.random_form(rng, nv, rng.randint(1, 2))
        g = randgen.random_form(rng, nv, rng.randint(1, 2))
        rest = [randgen.random_form(rng, nv, rng.randint(1, 2)) for _ in range(n)]
        lhs = resultant(MacaulaySystem([f * g] + rest)).value
        rhs = (
            resultant(MacaulaySystem([f] + rest)).value
            * resultant(MacaulaySystem([g] + rest)).value
        )
        if lhs != rhs:
            fails.append(f"instance {k}")
    return fails


def prop_symmetry(rng, count):
    fails = []
    profiles = [(1, 2), (2, 3), (3, 3), (1, 1, 2), (1, 2, 2), (1, 1, 1)]
    for degrees in profiles:
        signs = {}
        for _ in range(count):
            sys = randgen.random_system(rng, degrees)
            base = resultant(sys).value
            if not base:
                continue
            for perm in itertools.permutations(range(len(degrees))):
                ratio = resultant(sys.permuted(perm)).value / base
                if abs(ratio) != 1:
                    fails.append(f"profile {degrees} perm {perm}: |ratio| = {abs(ratio)}")
                    continue
                signs.setdefault(perm, set()).add(ratio)
        for perm, seen in signs.items():
            expected = _perm_sign(perm) ** math.prod(degrees)
            if seen != {expected}:
                fails.append(f"profile {degrees} perm {perm}: signs {sorted(seen)}")
    return fails


def prop_normalization(rng, count):
    fails = []
    for k in range(count):
        n = rng.randint(1, 2)
        degrees = [rng.randint(1, 3) for _ in range(n + 1)]
        if resultant(randgen.monomial_system(degrees)).value != 1:
            fails.append(f"monomial {degrees}")
        if resultant(randgen.vanishing_system(rng, degrees)).value != 0:
            fails.append(f"witness {degrees}")
        sys, rows = randgen.linear_system(rng, n + 1)
        if resultant(sys).value != determinant(Matrix.from_rows(rows)):
            fails.append(f"linear instance {k}")
    return fails


PROPERTIES = [
    ("poly.ring_axioms", prop_ring_axioms),
    ("linalg.det_multiplicative", prop_determinant_multiplicative),
    ("intersection.bezout", prop_bezout),
    ("intersection.vanishing", prop_vanishing),
    ("intersection.multilinear", prop_multilinear),
    ("cube.gluing_additivity", prop_cube_gluing),
    ("cube.permutation_invariance", prop_cube_permutation),
    ("cube.inclusion_exclusion", prop_cube_inclusion_exclusion),
    ("cube.face_glue_coherence", prop_cube_face_glue),
    ("cube.glue_associativity", prop_cube_associativity),
    ("cube.graded_sign", prop_graded_sign),
    ("cube.epsilon_ij", prop_epsilon_ij),
    ("quotient.norm", prop_norm),
    ("resultant.sylvester_agreement", prop_sylvester),
    ("resultant.macaulay_poisson", prop_macaulay_poisson),
    ("resultant.quasi_homogeneity", prop_quasi_homogeneity),
    ("resultant.multiplicativity", prop_multiplicativity),
    ("resultant.symmetry", prop_symmetry),
    ("resultant.normalization", prop_normalization),
]


def run_selftest(seed, instances=10):
    """Run every property; return ``(report, timing)``.

    The report depends only on ``seed`` and ``instances``; wall-clock
    timings are returned separately.
    """
    results = []
    timing = {}
    for name, prop in PROPERTIES:
        rng = random.Random(f"{seed}:{name}")
        start = time.perf_counter()
        fails = prop(rng, instances)
        timing[name] = round(time.perf_counter() - start, 6)
        results.append(
            {"name": name, "instances": instances, "passed": not fails, "failures": fails[:10]}
        )
    report = {
        "seed": seed,
        "instances": instances,
        "passed": all(r["passed"] for r in results),
        "properties": results,
    }
    return report, timing
