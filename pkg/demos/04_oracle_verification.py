"""Verifying the miner against brute-force enumeration.

The level-wise miner prunes aggressively; the oracle enumerates every
pattern up to a length cap and computes support definitionally.  On any
desk-scale instance the two must agree exactly, and one empty length class
above the longest mined pattern certifies that nothing longer was missed.
"""

from bitmine import (KTBackend, MiningConfig, OccurrenceParams, OracleConfig,
                     enumerate_frequent, gen_random, mine)

T = gen_random(12, (24, 32), 42)
backend = KTBackend(order=0)
params = OccurrenceParams(c1=0.6, c2=0.3)

result = mine(backend, params, T, MiningConfig(epsilon=4, step_bits=2))
maxlen = max(len(p.pattern) for p in result)
print(f"miner: {len(result)} patterns, longest {maxlen} bits, "
      f"{result.levels} levels")

oracle = enumerate_frequent(backend, params, T, 4,
                            OracleConfig(max_len=maxlen + 1))
print(f"oracle: {len(oracle)} patterns up to length {maxlen + 1}")

assert result.as_dict() == oracle
assert not any(len(p) > maxlen for p in oracle)
print("miner output equals brute-force enumeration (patterns and counts)")

per_level = {}
for p in result:
    per_level[p.level] = per_level.get(p.level, 0) + 1
print("patterns per level:", dict(sorted(per_level.items())))
