"""Code-length backends: what they charge and why it matters.

Walks through the two built-in estimators (adaptive add-1/2 counting and
the LZ78-style parse cost) on strings of increasing structure, and shows
the monotonicity property the miner's pruning relies on.
"""

from bitmine import KTBackend, LZBackend, code_len, cond_code_len, joint_code_len

kt = KTBackend(order=0)
kt1 = KTBackend(order=1)
lz = LZBackend()

samples = {
    "all zeros": "0" * 32,
    "alternating": "01" * 16,
    "block pattern": "00000001111111" + "00000001111111",
    "random-looking": "01101001100101101001011001101001"[:32],
}

print("string class        kt0      kt1      lz")
for name, s in samples.items():
    print(f"{name:18s} {code_len(kt, s):7.2f} {code_len(kt1, s):8.2f}"
          f" {code_len(lz, s):7.2f}")

# The order-1 model sees the alternation; the order-0 model only sees the
# 50/50 symbol counts.
alt = "01" * 16
print(f"\nalternating, kt order 0: {code_len(kt, alt):.2f} bits")
print(f"alternating, kt order 1: {code_len(kt1, alt):.2f} bits")

# Conditioning helps: zeros are cheap after a run of zeros.
print(f"\nL('0000')            = {code_len(kt, '0000'):.3f}")
print(f"L('0000' | 8 zeros)  = {cond_code_len(kt, '0000', '0' * 8):.3f}")

# Monotonicity: appending bits never makes a string cheaper.  This is the
# property that makes level-wise pruning sound.
base = "0110"
for ext in ["0", "01", "0110011"]:
    assert joint_code_len(kt, "", base + ext) >= code_len(kt, base)
    assert code_len(lz, base + ext) >= code_len(lz, base)
print("\nmonotonicity spot-checks passed")
