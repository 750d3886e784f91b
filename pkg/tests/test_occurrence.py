import random

import pytest

from bitmine import (KTBackend, LZBackend, OccurrenceParams, TransactionSet,
                     code_len, frequency, occurs)

SCALE = OccurrenceParams(variant="scale-free", c1=0.6, c2=0.3)
ADDITIVE = OccurrenceParams(variant="additive", c3=2.0, c4=3.0)


def random_bits(rng, lo, hi):
    return "".join(rng.choice("01") for _ in range(rng.randint(lo, hi)))


class TestParams:
    def test_scale_free_threshold_bounds(self):
        with pytest.raises(ValueError):
            OccurrenceParams(variant="scale-free", c1=1.0, c2=0.3)
        with pytest.raises(ValueError):
            OccurrenceParams(variant="scale-free", c1=0.5, c2=0.0)

    def test_additive_threshold_bounds(self):
        with pytest.raises(ValueError):
            OccurrenceParams(variant="additive", c3=0.0, c4=1.0)
        with pytest.raises(ValueError):
            OccurrenceParams(variant="additive", c3=1.0, c4=-1.0)

    def test_unknown_variant(self):
        with pytest.raises(ValueError):
            OccurrenceParams(variant="multiplicative")

    def test_min_pattern_len_floor(self):
        with pytest.raises(ValueError):
            OccurrenceParams(min_pattern_len=0)


class TestOccurs:
    def test_pattern_never_occurs_in_itself_scale_free(self, kt0):
        # L(x) = L(y) > c1 * L(y) whenever L(y) > 0
        for x in ["0", "0110", "0010111010001101"]:
            for c1 in (0.2, 0.5, 0.9):
                params = OccurrenceParams(c1=c1, c2=0.5)
                assert occurs(kt0, params, x, x) is False

    def test_simple_pattern_in_complex_datum(self, kt0):
        assert occurs(kt0, SCALE, "0000", "0010111010001101") is True

    def test_entropy_reduction_gate(self, kt0):
        # the datum is itself too simple: c1 * L(y) < L(x)
        assert occurs(kt0, SCALE, "0000", "0" * 16) is False

    def test_additive_variant(self, kt0):
        y = "0010111010001101"
        # L(x) ~ 1.87 <= L(y) - 2 and small conditional cost
        assert occurs(kt0, OccurrenceParams(variant="additive", c3=2.0, c4=4.0),
                      "0000", y) is True
        assert occurs(kt0, OccurrenceParams(variant="additive", c3=2.0, c4=0.5),
                      "0000", y) is False

    def test_empty_pattern_rejected(self, kt0):
        with pytest.raises(ValueError):
            occurs(kt0, SCALE, "", "0101")

    def test_empty_datum_rejected(self, kt0):
        with pytest.raises(ValueError):
            occurs(kt0, SCALE, "0", "")

    def test_inequalities_are_non_strict(self, kt0):
        # pick c1 exactly at L(x)/L(y): condition 1 holds with equality
        x, y = "0000", "0010111010001101"
        c1 = code_len(kt0, x) / code_len(kt0, y)
        params = OccurrenceParams(c1=c1, c2=0.9)
        assert occurs(kt0, params, x, y) is True


class TestFrequency:
    def test_empty_transaction_set(self, kt0):
        T = TransactionSet([])
        assert frequency(kt0, SCALE, T, "0000") == 0

    def test_multiset_counts_repetitions(self, kt0):
        y = "0010111010001101"
        assert occurs(kt0, SCALE, "0000", y)
        T = TransactionSet([y, y])
        assert frequency(kt0, SCALE, T, "0000") == 2

    def test_matches_per_transaction_loop(self, kt0, fixture_transactions):
        T = fixture_transactions
        for x in ["0000", "01", "111", "010101"]:
            expected = sum(occurs(kt0, SCALE, x, y) for y in T.items)
            assert frequency(kt0, SCALE, T, x) == expected

    def test_cached_path_matches_uncached(self, kt1, lz, fixture_transactions):
        T = fixture_transactions
        for backend in (kt1, lz):
            for x in ["00", "0110", "000000"]:
                expected = sum(occurs(backend, SCALE, x, y) for y in T.items)
                assert frequency(backend, SCALE, T, x) == expected

    def test_rejects_empty_transaction(self):
        with pytest.raises(ValueError):
            TransactionSet(["010", ""])


class TestAntiMonotonicity:
    """Extensions of a non-occurring pattern do not occur (both variants)."""

    def _run(self, backend, params, cases, rng):
        for _ in range(cases):
            x = random_bits(rng, 1, 8)
            e = random_bits(rng, 1, 6)
            z = random_bits(rng, 8, 32)
            if not occurs(backend, params, x, z):
                assert not occurs(backend, params, x + e, z), (x, e, z)

    def test_scale_free_kt(self, kt0):
        self._run(kt0, SCALE, 2000, random.Random(101))

    def test_scale_free_kt_order1(self, kt1):
        self._run(kt1, SCALE, 1000, random.Random(102))

    def test_scale_free_lz(self, lz):
        self._run(lz, SCALE, 1000, random.Random(103))

    def test_additive_kt(self, kt0):
        self._run(kt0, ADDITIVE, 2000, random.Random(104))

    def test_additive_lz(self, lz):
        self._run(lz, ADDITIVE, 1000, random.Random(105))

    def test_frequency_non_increasing_under_extension(self, kt0, fixture_transactions):
        T = fixture_transactions
        rng = random.Random(106)
        for _ in range(200):
            x = random_bits(rng, 1, 6)
            e = random_bits(rng, 1, 4)
            assert frequency(kt0, SCALE, T, x + e) <= frequency(kt0, SCALE, T, x)
