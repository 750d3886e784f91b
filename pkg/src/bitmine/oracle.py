"""Brute-force ground truth for the frequent pattern set.

Enumerates every bit string up to a length cap and computes its support
definitionally, with no pruning.  Only meant for desk-scale verification of
the level-wise miner.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import bits as bitutil
from .occurrence import OccurrenceParams, TransactionSet, _joint_from_cache, _occurs_len


class IncompleteEnumerationError(Exception):
    """max_len provably does not cover the point where all patterns die out."""


@dataclass(frozen=True)
class OracleConfig:
    max_len: int = 12
    must_cover_termination: bool = False

    def __post_init__(self):
        if self.max_len < 1:
            raise ValueError("max_len must be >= 1")


def enumerate_frequent(backend, params: OccurrenceParams, T: TransactionSet,
                       epsilon: int, config: OracleConfig) -> dict:
    """All patterns of length 1..max_len with support >= epsilon, by exhaustion.

    Returns {pattern: count}.  With must_cover_termination the enumeration
    must reach a length class whose cheapest member already fails entropy
    reduction against every transaction (so no longer pattern can occur
    anywhere); otherwise the possibly-incomplete set is refused.  The
    minimum code length per length class is found by exhaustive scan.
    """
    if len(T) < 1:
        raise ValueError("transaction set must be non-empty")
    cache = T.cached(backend)
    max_len_y = T.max_code_len(backend)
    if params.variant == "scale-free":
        occur_bound = params.c1 * max_len_y
    else:
        occur_bound = max_len_y - params.c3

    result = {}
    sig_counts: dict = {}
    termination_covered = False
    for length in range(max(1, params.min_pattern_len), config.max_len + 1):
        min_code_len = None
        for x in bitutil.all_of_length(length):
            len_x = backend.code_len(x)
            if min_code_len is None or len_x < min_code_len:
                min_code_len = len_x
            if len_x > occur_bound:
                continue  # occurs in no transaction; support is 0
            sig = backend.signature(x)
            key = sig if sig is not None else ("raw", x)
            count = sig_counts.get(key)
            if count is None:
                count = 0
                for y, (len_y, state_y) in zip(T.items, cache):
                    extra = _joint_from_cache(backend, state_y, y, x, len_y)
                    if _occurs_len(params, len_x, len_y, extra):
                        count += 1
                sig_counts[key] = count
            if count >= epsilon:
                result[x] = count
        sig_counts.clear()  # signatures are only shared within a length class
        if min_code_len is not None and min_code_len > occur_bound:
            termination_covered = True
            break

    if config.must_cover_termination and not termination_covered:
        raise IncompleteEnumerationError(
            f"no length <= {config.max_len} has min code length above the "
            f"entropy-reduction bound {occur_bound:.3f}; enumeration may be "
            "incomplete")
    return result
