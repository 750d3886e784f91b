"""The pattern-occurrence predicate and the frequency function.

A pattern x occurs in a datum y when it is both substantially simpler than y
(entropy reduction) and carries only bounded information not already in y
(noise exclusion).  Two threshold variants are supported:

  scale-free:  L(x) <= c1 * L(y)   and   L(y||x) <= (1 + c2) * L(y)
  additive:    L(x) <= L(y) - c3   and   L(y||x) - L(y) <= c4

with 0 < c1 < 1, 0 < c2 < 1 for the scale-free form and c3, c4 > 0 for the
additive form.  All inequalities are non-strict.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .codelength import EstimationError

VARIANTS = ("scale-free", "additive")


class PredicateError(Exception):
    """Occurrence could not be decided (as opposed to being false)."""


@dataclass(frozen=True)
class OccurrenceParams:
    variant: str = "scale-free"
    c1: float = 0.5
    c2: float = 0.25
    c3: float = 1.0
    c4: float = 1.0
    min_pattern_len: int = 1

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError(f"variant must be one of {VARIANTS}")
        if self.variant == "scale-free":
            if not (0.0 < self.c1 < 1.0 and 0.0 < self.c2 < 1.0):
                raise ValueError("scale-free thresholds need 0 < c1 < 1 and 0 < c2 < 1")
        else:
            if not (self.c3 > 0.0 and self.c4 > 0.0):
                raise ValueError("additive thresholds need c3 > 0 and c4 > 0")
        if self.min_pattern_len < 1:
            raise ValueError("min_pattern_len must be >= 1")


@dataclass
class TransactionSet:
    """Multiset of bit-string observations (ordered list, repetition allowed).

    Per-backend code lengths and coder states of each transaction are cached
    so repeated predicate evaluations pay O(|pattern|) instead of
    O(|transaction| + |pattern|).
    """

    items: list
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        for i, y in enumerate(self.items):
            if len(y) < 1:
                raise ValueError(f"transaction {i} is empty; length >= 1 required")

    def __len__(self):
        return len(self.items)

    def __iter__(self):
        return iter(self.items)

    def cached(self, backend):
        """List of (L(y), coder state after y or None) per transaction."""
        key = id(backend)
        entry = self._cache.get(key)
        if entry is None:
            entry = []
            incremental = hasattr(backend, "initial_state")
            for y in self.items:
                if incremental:
                    state, cost = backend.extend(backend.initial_state(), y)
                    entry.append((cost, state))
                else:
                    entry.append((backend.code_len(y), None))
            self._cache[key] = entry
        return entry

    def max_code_len(self, backend) -> float:
        return max(length for length, _ in self.cached(backend))


def _joint_from_cache(backend, state_y, y, x, len_y=None):
    if state_y is not None:
        return backend.extend_cost(state_y, x)  # cost beyond L(y)
    if len_y is None:
        len_y = backend.code_len(y)
    return backend.code_len(y + x) - len_y


def _occurs_len(params: OccurrenceParams, len_x: float, len_y: float,
                extra: float) -> bool:
    """Decide occurrence from L(x), L(y) and L(y||x) - L(y)."""
    if params.variant == "scale-free":
        return len_x <= params.c1 * len_y and extra <= params.c2 * len_y
    return len_x <= len_y - params.c3 and extra <= params.c4


def occurs(backend, params: OccurrenceParams, x: str, y: str) -> bool:
    """Does pattern x occur in datum y under the given thresholds?"""
    if len(x) < params.min_pattern_len:
        raise ValueError(
            f"pattern length {len(x)} below min_pattern_len {params.min_pattern_len}")
    if len(y) < 1:
        raise ValueError("datum must have length >= 1")
    len_y = backend.code_len(y)
    if len_y <= 0.0:
        raise PredicateError(
            f"backend reports code length {len_y} for a non-empty datum")
    len_x = backend.code_len(x)
    extra = backend.code_len(y + x) - len_y
    return _occurs_len(params, len_x, len_y, extra)


def frequency(backend, params: OccurrenceParams, T: TransactionSet, x: str) -> int:
    """Number of transactions (with multiplicity) in which x occurs."""
    if len(x) < params.min_pattern_len:
        raise ValueError(
            f"pattern length {len(x)} below min_pattern_len {params.min_pattern_len}")
    len_x = backend.code_len(x)
    count = 0
    for i, (y, (len_y, state_y)) in enumerate(zip(T.items, T.cached(backend))):
        try:
            if len_y <= 0.0:
                raise PredicateError(
                    f"backend reports code length {len_y} for a non-empty datum")
            extra = _joint_from_cache(backend, state_y, y, x, len_y)
        except (PredicateError, EstimationError) as exc:
            raise type(exc)(f"transaction {i}: {exc}") from exc
        if _occurs_len(params, len_x, len_y, extra):
            count += 1
    return count
