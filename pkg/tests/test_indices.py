import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bibliofit import PaperRecord, ResearcherProfile, ValidationError, h_index, hm_index, index_set
from tests.test_backends import brute_force_h, brute_force_hm


class TestHIndex:
    def test_empty(self):
        assert h_index([]) == 0

    def test_known_values(self):
        assert h_index([10, 8, 5, 4, 3]) == 4
        assert h_index([1, 1, 1, 1]) == 1
        assert h_index([0]) == 0

    def test_matches_brute_force_oracle(self):
        rng = np.random.default_rng(2024)
        for _ in range(500):
            cits = rng.integers(0, 1000, size=int(rng.integers(0, 100))).tolist()
            assert h_index(cits) == brute_force_h(cits)

    @given(st.lists(st.integers(min_value=0, max_value=500), max_size=60))
    @settings(max_examples=150, deadline=None)
    def test_permutation_invariant(self, cits):
        shuffled = list(reversed(sorted(cits)))
        assert h_index(cits) == h_index(shuffled) == brute_force_h(cits)


class TestHmIndex:
    def test_single_author_reduces_to_h(self):
        cits = [10, 8, 5, 4, 3]
        assert hm_index([(c, 1) for c in cits]) == h_index(cits)

    def test_uniform_two_author_papers(self):
        assert hm_index([(6, 2)] * 4) == pytest.approx(2.0)

    def test_fractional_value(self):
        assert hm_index([(3, 3), (2, 1)]) == pytest.approx(4 / 3)

    def test_rejects_bad_author_count(self):
        with pytest.raises(ValidationError):
            hm_index([(3, 0)])

    def test_empty(self):
        assert hm_index([]) == 0.0

    def test_matches_brute_force_oracle(self):
        rng = np.random.default_rng(77)
        for _ in range(400):
            n = int(rng.integers(1, 50))
            pairs = list(zip(rng.integers(0, 200, n).tolist(),
                             rng.integers(1, 12, n).tolist()))
            assert hm_index(pairs) == pytest.approx(brute_force_hm(pairs), abs=1e-9)

    @given(st.lists(st.tuples(st.integers(0, 300), st.integers(1, 10)), max_size=40))
    @settings(max_examples=150, deadline=None)
    def test_never_exceeds_h(self, pairs):
        h = h_index([c for c, _ in pairs])
        hm = hm_index(pairs)
        assert hm <= h + 1e-12

    @given(st.lists(st.integers(0, 300), min_size=1, max_size=40))
    @settings(max_examples=100, deadline=None)
    def test_all_single_author_equality(self, cits):
        assert hm_index([(c, 1) for c in cits]) == pytest.approx(h_index(cits))


def make_profile(citas, authors=None):
    authors = authors or [1] * len(citas)
    papers = tuple(PaperRecord(f"p{i}", 2000, c, a)
                   for i, (c, a) in enumerate(zip(citas, authors)))
    return ResearcherProfile("r1", None, papers)


class TestIndexSet:
    def test_direct_computation(self):
        idx = index_set(make_profile([10, 8, 5, 4, 3]))
        assert (idx.P, idx.C, idx.h) == (5, 30, 4)
        assert idx.h_m == pytest.approx(4.0)
        assert idx.h_n == pytest.approx(0.8)
        assert idx.mean_citations == pytest.approx(6.0)

    def test_zero_citation_profile(self):
        idx = index_set(make_profile([0]))
        assert idx.h == 0 and idx.h_m == 0.0

    def test_empty_profile_signals(self):
        with pytest.raises(ValidationError, match="empty profile"):
            index_set(ResearcherProfile("r1", None, ()))

    def test_invariants_on_random_profiles(self):
        rng = np.random.default_rng(31337)
        for _ in range(400):
            n = int(rng.integers(1, 60))
            citas = rng.integers(0, 1000, n).tolist()
            authors = rng.integers(1, 8, n).tolist()
            idx = index_set(make_profile(citas, authors))
            assert 0 <= idx.h <= idx.P
            assert idx.h ** 2 <= idx.C
            assert 0.0 <= idx.h_m <= idx.h + 1e-12
            assert 0.0 <= idx.h_n <= 1.0

    def test_hm_core_contains_at_least_h_papers(self):
        # the index of the last qualifying paper under fractional ranks is
        # >= h, because fractional ranks grow no faster than integer ranks
        rng = np.random.default_rng(909)
        for _ in range(200):
            n = int(rng.integers(1, 50))
            pairs = [(int(c), int(a)) for c, a in
                     zip(rng.integers(0, 300, n), rng.integers(1, 9, n))]
            h = h_index([c for c, _ in pairs])
            ordered = sorted(pairs, key=lambda ca: (-ca[0], -ca[1]))
            rank = 0.0
            core_size = 0
            for i, (c, a) in enumerate(ordered):
                rank += 1.0 / a
                if c >= rank:
                    core_size = i + 1
            assert core_size >= h
