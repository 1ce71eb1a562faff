"""JSON encoding of polynomials, weight sequences and reports.

Matrices are flattened row-major and every complex entry is written as a
``[re, im]`` pair.  Bare numbers are accepted on input as real entries.

    polynomial: {"dim": N, "coeffs": [[[re, im], ... N*N], ... d+1]}
    weights:    {"kind": "unilateral" | "bilateral", "dim": N,
                 "first_index": j0, "weights": [[[re, im], ...], ...]}
    prefix:     {"dim": N, "prefix": [[[re, im], ...], ... m]}
"""
import json

import numpy as np

from .oppoly import MatrixPolynomial
from .shiftcore import WeightSequence


def encode_matrix(M):
    A = np.asarray(M)
    return [[float(z.real), float(z.imag) + 0.0] for z in A.reshape(-1).astype(complex)]


def _entry(x):
    if isinstance(x, (int, float)) and not isinstance(x, bool):
        return complex(x, 0.0)
    if isinstance(x, (list, tuple)) and len(x) == 2:
        return complex(float(x[0]), float(x[1]))
    raise ValueError(f"matrix entry must be a number or a [re, im] pair, got {x!r}")


def decode_matrix(flat, dim):
    if not isinstance(flat, list) or len(flat) != dim * dim:
        raise ValueError(f"expected {dim * dim} entries for a {dim}x{dim} matrix")
    A = np.array([_entry(x) for x in flat]).reshape(dim, dim)
    if np.all(A.imag == 0):
        return A.real.copy()
    return A


def _dim(d):
    dim = d.get("dim")
    if not isinstance(dim, int) or dim < 1:
        raise ValueError("'dim' must be a positive integer")
    return dim


def polynomial_to_json(p):
    return {"dim": p.dim, "coeffs": [encode_matrix(A) for A in p.coeffs]}


def polynomial_from_json(d):
    dim = _dim(d)
    coeffs = d.get("coeffs")
    if not isinstance(coeffs, list) or not coeffs:
        raise ValueError("'coeffs' must be a non-empty list")
    return MatrixPolynomial(np.stack([decode_matrix(c, dim) for c in coeffs]))


def weights_to_json(w):
    return {"kind": w.kind, "dim": w.dim, "first_index": w.first_index,
            "weights": [encode_matrix(S) for S in w.weights]}


def weights_from_json(d):
    dim = _dim(d)
    kind = d.get("kind", "unilateral")
    first = d.get("first_index", 1)
    ws = d.get("weights")
    if not isinstance(ws, list) or not ws:
        raise ValueError("'weights' must be a non-empty list")
    return WeightSequence(kind, np.stack([decode_matrix(c, dim) for c in ws]), first)


def prefix_to_json(A):
    dim = np.asarray(A[0]).shape[0]
    return {"dim": dim, "prefix": [encode_matrix(M) for M in A]}


def prefix_from_json(d):
    """Prescribed weights from a prefix document or a unilateral weights document."""
    dim = _dim(d)
    mats = d.get("prefix", d.get("weights"))
    if not isinstance(mats, list) or not mats:
        raise ValueError("'prefix' must be a non-empty list")
    return [decode_matrix(c, dim) for c in mats]


def isometry_report_to_json(r):
    lo, hi = r.checked_range
    return {
        "m": r.m,
        "verdict": r.verdict,
        "checked_blocks": [lo, hi],
        "max_residual": r.max_residual,
        "relative_residual": r.relative_residual,
        "tolerance": r.tolerance,
        "norm_lower_bound": r.norm_estimate,
        "block_residuals": [float(x) for x in r.block_residuals],
    }


def preconditions_to_json(pre):
    return {
        "side": pre.side,
        "status": pre.status,
        "p0_defect": pre.p0_defect,
        "min_eigenvalue": pre.min_eigenvalue,
        "min_eigenvalue_node": pre.min_eigenvalue_node,
        "capacity_estimate": pre.capacity,
        "capacity_node": pre.capacity_node,
        "divergence_suspected": pre.divergence_suspected,
    }


def construction_to_json(res):
    return {
        "polynomial": polynomial_to_json(res.polynomial),
        "weights": weights_to_json(res.weights),
        "capacity_estimate": res.capacity_estimate,
        "preconditions": preconditions_to_json(res.preconditions),
        "report": isometry_report_to_json(res.report),
    }


def completion_to_json(res):
    return {
        "q": polynomial_to_json(res.q),
        "alpha": res.alpha,
        "sup_bound": res.sup_bound,
        "weights": weights_to_json(res.weights),
        "report": isometry_report_to_json(res.report),
    }


def dumps(obj):
    return json.dumps(obj, indent=2) + "\n"


def load(path):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)
