"""Mining a noisy planted motif out of random padding.

Generates 50 transactions, 80% of which hide a noisy copy of the motif
00000001111111 between random pads, then mines frequent abstract patterns
and checks how close the long survivors are to the motif.
"""

from bitmine import (KTBackend, MiningConfig, OccurrenceParams, PlantSpec,
                     gen_planted, mine)

MOTIF = "00000001111111"

spec = PlantSpec(motif=MOTIF, transaction_count=50, planted_fraction=0.8,
                 flip_prob=0.05, pad_len_range=(4, 10), rng_seed=7)
T, manifest = gen_planted(spec)
print(f"{len(T)} transactions, {sum(e.planted for e in manifest)} planted")
print("first three:", *T.items[:3], sep="\n  ")

backend = KTBackend(order=0)
params = OccurrenceParams(c1=0.6, c2=0.3)
result = mine(backend, params, T, MiningConfig(epsilon=20, step_bits=2))
print(f"\nmined {len(result)} frequent patterns over {result.levels} levels")


def motif_distance(pattern):
    """Best Hamming distance to any same-length window of the motif."""
    if len(pattern) > len(MOTIF):
        return None
    return min(sum(a != b for a, b in zip(pattern, MOTIF[o:o + len(pattern)]))
               for o in range(len(MOTIF) - len(pattern) + 1))


long_patterns = sorted((p for p in result if len(p.pattern) >= 10),
                       key=lambda p: (motif_distance(p.pattern) or 99, -p.count))
print(f"{len(long_patterns)} patterns of length >= 10; closest to the motif:")
for p in long_patterns[:8]:
    print(f"  {p.pattern:14s} count={p.count:2d} "
          f"hamming-to-window={motif_distance(p.pattern)}")
