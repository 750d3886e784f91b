"""Deterministic code-length estimators for bit strings.

A backend assigns every bit string a real-valued code length in bits.  The
two built-in backends (adaptive KT and LZ78-style parse cost) are pure
functions of the input and are monotone: appending bits never decreases the
code length.  Joint code lengths are computed over the plain concatenation of
the two strings with the adaptive model carried across the boundary, so
``joint(c, x) >= code_len(c)`` holds for the built-ins and conditional code
lengths are never negative.

An external adapter scores a string as 8 times the byte length of the output
of a user-supplied compression command.  It is *not* monotone and is only
admissible in heuristic workflows.
"""

from __future__ import annotations

import math
import shlex
import subprocess
from dataclasses import dataclass
from functools import lru_cache

from . import bits as bitutil


class EstimationError(Exception):
    """A backend failed to produce a code length (never silently zero)."""


@lru_cache(maxsize=None)
def _kt_step_cost(c: int, n: int) -> float:
    # -log2 of the add-1/2 probability (c + 1/2) / (n + 1)
    return math.log2(2 * n + 2) - math.log2(2 * c + 1)


@dataclass(frozen=True)
class KTState:
    """Adaptive estimator state: recent context plus per-context bit counts."""
    context: str
    counts: dict  # context str -> (zeros, ones)

    def __hash__(self):  # pragma: no cover - states are not used as keys
        return hash((self.context, tuple(sorted(self.counts.items()))))


class KTBackend:
    """Add-1/2 sequential probability estimator with a k-bit context.

    Order 0 codes bit i at -log2((count of that bit so far + 1/2) / i).
    Order k keeps separate counts per context of the previous k bits; at the
    start of a string (or after a short context) the available shorter
    history is used as its own context.
    """

    kind = "kt"
    monotone = True

    def __init__(self, order: int = 0):
        if order < 0:
            raise ValueError("order must be >= 0")
        self.order = order

    def __repr__(self):
        return f"KTBackend(order={self.order})"

    def initial_state(self) -> KTState:
        return KTState("", {})

    def extend(self, state: KTState, bits: str) -> tuple[KTState, float]:
        """Code ``bits`` after ``state`` without mutating it; return (state', cost)."""
        order = self.order
        ctx = state.context
        counts = dict(state.counts)
        cost = 0.0
        for ch in bits:
            b = ch == "1"
            c0, c1 = counts.get(ctx, (0, 0))
            cost += _kt_step_cost(c1 if b else c0, c0 + c1)
            counts[ctx] = (c0, c1 + 1) if b else (c0 + 1, c1)
            if order:
                ctx = ctx[1 - order:] + ch if order > 1 else ch
        return KTState(ctx, counts), cost

    def extend_cost(self, state: KTState, bits: str) -> float:
        """Cost of coding ``bits`` after ``state`` (state is not kept)."""
        order = self.order
        ctx = state.context
        counts = dict(state.counts)
        cost = 0.0
        for ch in bits:
            b = ch == "1"
            c0, c1 = counts.get(ctx, (0, 0))
            cost += _kt_step_cost(c1 if b else c0, c0 + c1)
            counts[ctx] = (c0, c1 + 1) if b else (c0 + 1, c1)
            if order:
                ctx = ctx[1 - order:] + ch if order > 1 else ch
        return cost

    def code_len(self, x: str) -> float:
        return self.extend_cost(self.initial_state(), x)

    def signature(self, x: str):
        """Hashable key with the property that two strings with equal
        signatures cost the same after *any* fixed coder state.

        The cost of a string after a state splits per context into
        exchangeable add-1/2 products, so it depends only on the first
        ``order`` bits (whose contexts straddle the boundary) and on the
        multiset of (context, bit) pairs in the remainder.
        """
        k = self.order
        head = x[:k]
        pairs: dict = {}
        for i in range(k, len(x)):
            key = (x[i - k:i] if k else "", x[i])
            pairs[key] = pairs.get(key, 0) + 1
        return (head, tuple(sorted(pairs.items())))


@dataclass(frozen=True)
class LZState:
    """Incremental parse state: phrase trie, current node, phrase counts."""
    trie: dict  # (node, bit) -> node
    next_node: int
    node: int
    complete: int

    @property
    def phrases(self) -> int:
        # a partially matched phrase counts as a phrase
        return self.complete + (1 if self.node != 0 else 0)


@lru_cache(maxsize=None)
def _lz_cum_cost(t: int) -> float:
    # sum over phrases i=1..t of (ceil(log2 i) + 1) bits
    if t == 0:
        return 0.0
    return _lz_cum_cost(t - 1) + (math.ceil(math.log2(t)) if t > 1 else 0) + 1


class LZBackend:
    """LZ78-style incremental parse; cost is sum of ceil(log2 i) + 1 over phrases."""

    kind = "lz"
    monotone = True
    order = None

    def __repr__(self):
        return "LZBackend()"

    def initial_state(self) -> LZState:
        return LZState({}, 1, 0, 0)

    def extend(self, state: LZState, bits: str) -> tuple[LZState, float]:
        trie = dict(state.trie)
        nxt, node, complete = state.next_node, state.node, state.complete
        before = state.phrases
        for ch in bits:
            child = trie.get((node, ch))
            if child is not None:
                node = child
            else:
                trie[(node, ch)] = nxt
                nxt += 1
                complete += 1
                node = 0
        new = LZState(trie, nxt, node, complete)
        return new, _lz_cum_cost(new.phrases) - _lz_cum_cost(before)

    def extend_cost(self, state: LZState, bits: str) -> float:
        return self.extend(state, bits)[1]

    def code_len(self, x: str) -> float:
        return self.extend_cost(self.initial_state(), x)

    def signature(self, x: str):
        return None  # parse cost after a state depends on the whole string


class ExternalBackend:
    """Adapter scoring a string as 8 x compressed size under a shell command.

    The command reads raw bytes on stdin (bits packed MSB-first, final
    partial byte zero-padded, no length prefix) and writes compressed bytes
    on stdout.  Byte granularity makes the score non-monotone, so this
    backend is only allowed in heuristic mining mode.
    """

    kind = "external"
    monotone = False
    order = None

    def __init__(self, command: str, timeout: float = 10.0):
        if not command.strip():
            raise ValueError("external backend needs a non-empty command")
        self.command = command
        self.timeout = timeout

    def __repr__(self):
        return f"ExternalBackend({self.command!r})"

    def code_len(self, x: str) -> float:
        if x == "":
            return 0.0
        payload = bitutil.to_bytes(x)
        try:
            proc = subprocess.run(
                shlex.split(self.command),
                input=payload,
                stdout=subprocess.PIPE,
                stderr=subprocess.PIPE,
                timeout=self.timeout,
            )
        except (OSError, subprocess.TimeoutExpired) as exc:
            raise EstimationError(f"external compressor failed: {exc}") from exc
        if proc.returncode != 0:
            msg = proc.stderr.decode(errors="replace").strip()
            raise EstimationError(
                f"external compressor exited {proc.returncode}: {msg}")
        if not proc.stdout:
            raise EstimationError("external compressor produced no output")
        return 8.0 * len(proc.stdout)

    def signature(self, x: str):
        return None


def code_len(backend, x: str) -> float:
    """Code length L(x) in bits; L of the empty string is 0."""
    return backend.code_len(x)


def joint_code_len(backend, context: str, x: str) -> float:
    """L(context || x): plain concatenation, adaptive model carried across."""
    return backend.code_len(context + x)


def cond_code_len(backend, x: str, given: str) -> float:
    """L(x | given) = L(given || x) - L(given)."""
    return backend.code_len(given + x) - backend.code_len(given)


def joint_code_len_canonical(backend, a: str, b: str) -> float:
    """Symmetric joint: concatenate in canonical order (shorter first,
    ties broken lexicographically) so the result is exactly symmetric."""
    if (len(a), a) > (len(b), b):
        a, b = b, a
    return backend.code_len(a + b)


def make_backend(name: str, order: int = 0, timeout: float = 10.0):
    """Build a backend from a CLI-style spec: 'kt', 'lz' or 'external:<cmd>'."""
    if name == "kt":
        return KTBackend(order=order)
    if name == "lz":
        return LZBackend()
    if name.startswith("external:"):
        return ExternalBackend(name[len("external:"):], timeout=timeout)
    raise ValueError(f"unknown backend {name!r}")
