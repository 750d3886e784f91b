"""Information-distance estimates between bit strings.

All three measures substitute deterministic code lengths for the
uncomputable algorithmic information content:

  info_dist(a, b) = max(L(b|a), L(a|b))                   (bits, unnormalized)
  nid(a, b)       = info_dist(a, b) / max(L(a), L(b))
  ncd(a, b)       = (Ljoint(a, b) - min(L(a), L(b))) / max(L(a), L(b))

where L(x|y) = L(y||x) - L(y) and Ljoint is the canonically ordered joint,
which makes ncd exactly symmetric.  With approximations the metric axioms
are not guaranteed: self-distances are positive and values may slightly
exceed 1, so triangle-inequality and Kraft checks are offered as
diagnostics only.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from . import bits as bitutil
from .codelength import cond_code_len, joint_code_len_canonical

MEASURES = ("nid", "ncd", "info")


class UndefinedDistanceError(Exception):
    """Both operands have zero code length; the quotient is undefined."""


def _check(a: str, b: str):
    if len(a) < 1 or len(b) < 1:
        raise ValueError("distance operands must have length >= 1")


def info_dist(backend, a: str, b: str) -> float:
    """Unnormalized information distance max(L(b|a), L(a|b)) in bits."""
    _check(a, b)
    return max(cond_code_len(backend, b, a), cond_code_len(backend, a, b))


def nid_estimate(backend, a: str, b: str) -> float:
    """Normalized information distance with code lengths in place of H."""
    _check(a, b)
    denom = max(backend.code_len(a), backend.code_len(b))
    if denom <= 0.0:
        raise UndefinedDistanceError("both code lengths are zero")
    return info_dist(backend, a, b) / denom


def ncd(backend, a: str, b: str) -> float:
    """Normalized compression distance; exactly symmetric by canonical joint."""
    _check(a, b)
    la, lb = backend.code_len(a), backend.code_len(b)
    denom = max(la, lb)
    if denom <= 0.0:
        raise UndefinedDistanceError("both code lengths are zero")
    return (joint_code_len_canonical(backend, a, b) - min(la, lb)) / denom


_MEASURE_FN = {"nid": nid_estimate, "ncd": ncd, "info": info_dist}


@dataclass
class DistanceMatrix:
    labels: list
    values: np.ndarray  # square, exactly symmetric
    measure: str

    def __post_init__(self):
        if self.values.shape != (len(self.labels), len(self.labels)):
            raise ValueError("matrix shape does not match label count")


def distance_matrix(backend, items, measure: str = "ncd",
                    labels=None) -> DistanceMatrix:
    """Pairwise distances; each unordered pair is computed once and mirrored."""
    items = list(items)
    if len(items) < 2:
        raise ValueError("need at least 2 items")
    if measure not in MEASURES:
        raise ValueError(f"measure must be one of {MEASURES}")
    if labels is None:
        labels = [f"item{i}" for i in range(len(items))]
    fn = _MEASURE_FN[measure]
    n = len(items)
    values = np.zeros((n, n))
    for i in range(n):
        try:
            values[i, i] = fn(backend, items[i], items[i])
        except (UndefinedDistanceError, ValueError) as exc:
            raise type(exc)(f"pair ({i}, {i}): {exc}") from exc
    for i, j in combinations(range(n), 2):
        try:
            d = fn(backend, items[i], items[j])
        except (UndefinedDistanceError, ValueError) as exc:
            raise type(exc)(f"pair ({i}, {j}): {exc}") from exc
        values[i, j] = values[j, i] = d
    return DistanceMatrix(list(labels), values, measure)


def triangle_violation_rate(matrix: DistanceMatrix) -> float:
    """Fraction of ordered triples (a, b, c) with d(a,c) > d(a,b) + d(b,c).

    Diagnostic only: the triangle inequality holds for true algorithmic
    information, not necessarily for code-length approximations.
    """
    d = matrix.values
    n = d.shape[0]
    triples = violations = 0
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if len({a, b, c}) < 3:
                    continue
                triples += 1
                if d[a, c] > d[a, b] + d[b, c] + 1e-12:
                    violations += 1
    return violations / triples if triples else 0.0


def kraft_diagnostic(backend, x: str, neighborhood_len: int,
                     measure: str = "nid") -> float:
    """Sum of 2**(-d(x, y)) over all y != x of a given length.

    A normalized metric would keep this at most 1; approximations need not.
    Exponential in neighborhood_len, so keep it small.
    """
    fn = _MEASURE_FN[measure]
    total = 0.0
    for y in bitutil.all_of_length(neighborhood_len):
        if y != x:
            total += 2.0 ** (-fn(backend, x, y))
    return total
