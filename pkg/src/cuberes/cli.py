"""Command-line front end: ``cuberes --job job.json``.

A job file is a JSON document ``{"command": ..., "payload": {...}, "seed": N}``.
The report is JSON on stdout (or ``--out``).  Exit status: 0 success,
1 computation error, 2 input error.
"""

import argparse
import json
import sys
import time
from fractions import Fraction

import jsonschema

from .cube import CubeArrangement, delta, edges, epsilon_ij, permute
from .errors import ComputationError, CuberesError, InputError
from .intersection import ChiFunction, intersection_number
from .poly import parse_polynomial
from .quotient import buchberger, norm, quotient_algebra
from .resultant import MODES, MacaulaySystem, resultant
from .selftest import run_selftest

EXIT_OK, EXIT_COMPUTATION, EXIT_INPUT = 0, 1, 2

_U64 = {"type": "integer", "minimum": 0, "maximum": 2**64 - 1}

JOB_SCHEMA = {
    "type": "object",
    "required": ["command"],
    "properties": {
        "command": {"enum": ["resultant", "intersection", "norm", "cube-verify", "selftest"]},
        "payload": {"type": "object"},
        "seed": _U64,
    },
}

_OBJECT = {
    "type": "object",
    "properties": {
        "coefficients": {"type": "object", "additionalProperties": {"type": "integer"}},
        "grade": {"type": "integer"},
    },
    "additionalProperties": False,
}

_CUBE = {
    "type": "object",
    "required": ["dimension", "vertices"],
    "properties": {
        "dimension": {"type": "integer", "minimum": 0, "maximum": 10},
        "vertices": {"type": "array", "items": _OBJECT},
        "symbols": {
            "type": "object",
            "additionalProperties": {"type": "array", "items": {"type": "integer"}},
        },
    },
}

PAYLOAD_SCHEMAS = {
    "resultant": {
        "type": "object",
        "required": ["n_vars", "forms"],
        "properties": {
            "n_vars": {"type": "integer", "minimum": 1},
            "forms": {"type": "array", "items": {"type": "string"}, "minItems": 1},
            "degrees": {"type": "array", "items": {"type": "integer", "minimum": 1}},
            "mode": {"enum": list(MODES)},
        },
    },
    "intersection": {
        "type": "object",
        "required": ["n", "degrees"],
        "properties": {
            "n": {"type": "integer", "minimum": 0},
            "degrees": {
                "type": "array",
                "minItems": 1,
                "items": {
                    "oneOf": [
                        {"type": "integer"},
                        {"type": "array", "items": {"type": "integer"}, "minItems": 1, "maxItems": 1},
                    ]
                },
            },
        },
    },
    "norm": {
        "type": "object",
        "required": ["n_vars", "ideal", "element"],
        "properties": {
            "n_vars": {"type": "integer", "minimum": 1},
            "ideal": {"type": "array", "items": {"type": "string"}, "minItems": 1},
            "element": {"type": "string"},
            "order": {"enum": ["grevlex", "lex"]},
        },
    },
    "cube-verify": {
        "type": "object",
        "required": ["cube"],
        "properties": {
            "cube": _CUBE,
            "chi_dimension": {"type": "integer", "minimum": 0},
        },
    },
    "selftest": {
        "type": "object",
        "properties": {"instances": {"type": "integer", "minimum": 1, "maximum": 1000}},
    },
}


def exact(q):
    q = Fraction(q)
    return {"value": str(q), "numerator": str(q.numerator), "denominator": str(q.denominator)}


def _run_resultant(payload, seed, mode):
    mode = mode or payload.get("mode", "auto")
    system = MacaulaySystem.parse(payload["forms"], payload["n_vars"], payload.get("degrees"))
    if len(system.forms) != payload["n_vars"]:
        raise InputError(f"{len(system.forms)} forms given for n_vars={payload['n_vars']}")
    value = resultant(system, mode)
    result = value.to_json()
    result["mode"] = mode
    result["degrees"] = list(system.degrees)
    return result, True


def _run_intersection(payload, seed, mode):
    n = payload["n"]
    classes = [(d,) if isinstance(d, int) else tuple(d) for d in payload["degrees"]]
    value = intersection_number(ChiFunction.projective(n), classes)
    return exact(value), True


def _run_norm(payload, seed, mode):
    nv = payload["n_vars"]
    ideal = [parse_polynomial(t, nv) for t in payload["ideal"]]
    element = parse_polynomial(payload["element"], nv)
    gb = buchberger(ideal, payload.get("order", "grevlex"))
    alg = quotient_algebra(gb)
    result = exact(norm(alg, element))
    result["dimension"] = alg.dimension
    result["groebner_basis"] = [g.to_text() for g in gb.generators]
    return result, True


def _run_cube_verify(payload, seed, mode):
    K = CubeArrangement.from_json(payload["cube"])
    found = edges(K)
    result = {
        "dimension": K.n,
        "delta": delta(K).to_json(),
        "standard": found is not None,
    }
    if found is not None:
        L0, found_edges = found
        result["edges"] = {"base": L0.to_json(), "edges": [e.to_json() for e in found_edges]}
    invariant = True
    for i in range(1, K.n):
        sigma = list(range(1, K.n + 1))
        sigma[i - 1], sigma[i] = sigma[i], sigma[i - 1]
        invariant &= delta(permute(K, sigma)) == delta(K)
    result["delta_permutation_invariant"] = invariant
    if "chi_dimension" in payload and K.n >= 2:
        chi = ChiFunction.projective(payload["chi_dimension"])
        result["epsilon_ij"] = {
            f"{i},{j}": epsilon_ij(K, i, j, chi)
            for i in range(1, K.n + 1)
            for j in range(i + 1, K.n + 1)
        }
    return result, True


def _run_selftest(payload, seed, mode):
    report, timing = run_selftest(seed, payload.get("instances", 10))
    return {"report": report, "_timing": timing}, report["passed"]


COMMANDS = {
    "resultant": _run_resultant,
    "intersection": _run_intersection,
    "norm": _run_norm,
    "cube-verify": _run_cube_verify,
    "selftest": _run_selftest,
}


def run(job, mode=None, seed=None):
    """Execute a job document; return ``(report, exit_code)``."""
    start = time.perf_counter()
    report = {"command": job.get("command") if isinstance(job, dict) else None}
    try:
        jsonschema.validate(job, JOB_SCHEMA)
        command = job["command"]
        payload = job.get("payload", {})
        jsonschema.validate(payload, PAYLOAD_SCHEMAS[command])
        if mode is not None and mode not in MODES:
            raise InputError(f"unknown mode {mode!r}")
        seed = job.get("seed", 0) if seed is None else seed
        report.update({"seed": seed, "input": payload})
        result, ok = COMMANDS[command](payload, seed, mode)
        timing = result.pop("_timing", None)
        report["result"] = result
        report["status"] = "ok" if ok else "failed"
        code = EXIT_OK if ok else EXIT_COMPUTATION
    except jsonschema.ValidationError as exc:
        report["status"] = "error"
        report["error"] = {"type": "SchemaError", "message": exc.message}
        code, timing = EXIT_INPUT, None
    except (InputError, ValueError) as exc:
        report["status"] = "error"
        report["error"] = {"type": type(exc).__name__, "message": str(exc)}
        code, timing = EXIT_INPUT, None
    except (ComputationError, CuberesError, ArithmeticError) as exc:
        report["status"] = "error"
        report["error"] = {"type": type(exc).__name__, "message": str(exc)}
        code, timing = EXIT_COMPUTATION, None
    except Exception as exc:  # noqa: BLE001 - every failure is reported, never a crash
        report["status"] = "error"
        report["error"] = {"type": type(exc).__name__, "message": str(exc)}
        code, timing = EXIT_COMPUTATION, None
    report["timing"] = {"total_seconds": round(time.perf_counter() - start, 6)}
    if timing:
        report["timing"]["properties"] = timing
    return report, code


def dumps(report):
    return json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="cuberes", description="Exact resultants, norms, intersection numbers and cube checks."
    )
    parser.add_argument("--job", required=True, help="path to a JSON job file ('-' for stdin)")
    parser.add_argument("--mode", choices=MODES, help="resultant evaluation route")
    parser.add_argument("--seed", type=int, help="seed for randomized suites (u64)")
    parser.add_argument("--out", help="write the report here instead of stdout")
    args = parser.parse_args(argv)

    if args.seed is not None and not 0 <= args.seed < 2**64:
        parser.error("--seed must be an unsigned 64-bit integer")
    try:
        if args.job == "-":
            job = json.load(sys.stdin)
        else:
            with open(args.job, encoding="utf-8") as fh:
                job = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        report = {
            "command": None,
            "status": "error",
            "error": {"type": type(exc).__name__, "message": str(exc)},
        }
        code = EXIT_INPUT
    else:
        report, code = run(job, mode=args.mode, seed=args.seed)

    text = dumps(report)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
