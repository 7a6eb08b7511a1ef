"""Classical operators: Bel, Pl, conflict, Dempster's rule, anomaly check."""

import pytest

import belfusion as bf
from conftest import (
    oracle_bel,
    oracle_dempster,
    oracle_pl,
    random_mass_functions,
    to_label_masses,
)


class TestBeliefPlausibility:
    def test_bel_maradona(self, maradona):
        frame, _, m2 = maradona
        assert bf.belief(m2, frame.encode("head")) == pytest.approx(0.6, abs=1e-15)

    def test_pl_maradona(self, maradona):
        frame, _, m2 = maradona
        assert bf.plausibility(m2, frame.encode("head")) == pytest.approx(0.7, abs=1e-15)

    def test_bel_full_frame_is_one(self, maradona):
        frame, m1, m2 = maradona
        assert bf.belief(m1, frame.full) == pytest.approx(1.0, abs=1e-12)
        assert bf.belief(m2, frame.full) == pytest.approx(1.0, abs=1e-12)

    def test_bel_empty_is_zero(self, maradona):
        _, m1, _ = maradona
        assert bf.belief(m1, 0) == 0.0
        assert bf.plausibility(m1, 0) == 0.0

    def test_pl_full_frame_is_one(self, maradona):
        frame, _, m2 = maradona
        assert bf.plausibility(m2, frame.full) == pytest.approx(1.0, abs=1e-12)

    def test_frame_mismatch(self, maradona):
        _, m1, _ = maradona
        with pytest.raises(bf.FrameMismatch):
            bf.belief(m1, 0b100)

    def test_against_oracle_random(self):
        frame, batch = random_mass_functions(4, 50, seed=101)
        for m in batch:
            labels = to_label_masses(m)
            for subset in frame.subsets(include_empty=True):
                target = frozenset(frame.decode(subset))
                assert bf.belief(m, subset) == pytest.approx(
                    oracle_bel(labels, target), abs=1e-12)
                assert bf.plausibility(m, subset) == pytest.approx(
                    oracle_pl(labels, target), abs=1e-12)

    def test_bel_le_pl_and_duality(self):
        frame, batch = random_mass_functions(5, 200, seed=102)
        for m in batch:
            for subset in frame.subsets():
                b = bf.belief(m, subset)
                p = bf.plausibility(m, subset)
                assert b <= p + 1e-15
                assert p == pytest.approx(
                    1.0 - bf.belief(m, frame.complement(subset)), abs=1e-12)


class TestBeliefTable:
    def test_maradona_m1(self, maradona):
        frame, m1, _ = maradona
        table = bf.belief_table(m1)
        assert table[frame.encode("head")] == pytest.approx(0.9, abs=1e-15)
        assert table[frame.full] == pytest.approx(1.0, abs=1e-15)
        assert table[0] == 0.0

    def test_vacuous_n3(self):
        frame = bf.make_frame(["A", "B", "C"])
        table = bf.belief_table(bf.vacuous_bba(frame))
        for subset in frame.subsets(include_empty=True):
            expected = 1.0 if subset == frame.full else 0.0
            assert table[subset] == expected

    def test_matches_pointwise_belief(self):
        frame, batch = random_mass_functions(6, 50, seed=103)
        for m in batch:
            table = bf.belief_table(m)
            for subset in frame.subsets(include_empty=True):
                assert table[subset] == pytest.approx(
                    bf.belief(m, subset), abs=1e-12)

    def test_frame_guard(self):
        frame = bf.make_frame([f"h{i}" for i in range(25)])
        with pytest.raises(bf.FrameTooLargeForDenseTable):
            bf.belief_table(bf.vacuous_bba(frame))


class TestConflict:
    def test_maradona(self, maradona):
        _, m1, m2 = maradona
        assert bf.conflict(m1, m2) == pytest.approx(0.27, abs=1e-12)

    def test_two_doctors_formula(self, two_doctors_default):
        params, m1, m2 = two_doctors_default
        assert bf.conflict(m1, m2) == pytest.approx(
            1.0 - params.b1 - params.b2, abs=1e-12)

    def test_vacuous_partner(self, maradona):
        frame, m1, _ = maradona
        assert bf.conflict(m1, bf.vacuous_bba(frame)) == 0.0

    def test_exactly_commutative(self):
        _, batch = random_mass_functions(4, 100, seed=104)
        for m1, m2 in zip(batch[::2], batch[1::2]):
            assert bf.conflict(m1, m2) == bf.conflict(m2, m1)


class TestDempsterCombine:
    def test_maradona_values(self, maradona):
        frame, m1, m2 = maradona
        combined, conflict_value = bf.dempster_combine(m1, m2)
        assert conflict_value == pytest.approx(0.27, abs=1e-12)
        # 0.69/0.73, 0.03/0.73, 0.01/0.73
        assert combined.mass(frame.encode("head")) == pytest.approx(
            0.9452054794520548, abs=1e-15)
        assert combined.mass(frame.encode("hand")) == pytest.approx(
            0.041095890410958895, abs=1e-15)
        assert combined.mass(frame.full) == pytest.approx(
            0.013698630136986302, abs=1e-15)

    def test_matches_oracle_random(self):
        frame, batch = random_mass_functions(4, 100, seed=105)
        labels = frame.labels
        for m1, m2 in zip(batch[::2], batch[1::2]):
            try:
                combined, conflict_value = bf.dempster_combine(m1, m2)
            except bf.TotalConflict:
                continue
            expected, expected_conflict = oracle_dempster(
                labels, to_label_masses(m1), to_label_masses(m2))
            assert conflict_value == pytest.approx(expected_conflict, abs=1e-12)
            got = to_label_masses(combined)
            assert set(got) == set(expected)
            for s, v in expected.items():
                assert got[s] == pytest.approx(v, abs=1e-12)

    def test_vacuous_is_neutral(self):
        frame, batch = random_mass_functions(4, 40, seed=106)
        vac = bf.vacuous_bba(frame)
        for m in batch:
            combined, conflict_value = bf.dempster_combine(m, vac)
            assert combined == m
            assert conflict_value == 0.0

    def test_total_conflict(self):
        frame = bf.make_frame(["A", "B"])
        m1 = bf.make_bba(frame, [(0b01, 1.0)])
        m2 = bf.make_bba(frame, [(0b10, 1.0)])
        with pytest.raises(bf.TotalConflict):
            bf.dempster_combine(m1, m2)

    def test_exactly_commutative(self):
        _, batch = random_mass_functions(5, 100, seed=107)
        for m1, m2 in zip(batch[::2], batch[1::2]):
            try:
                c12, k12 = bf.dempster_combine(m1, m2)
                c21, k21 = bf.dempster_combine(m2, m1)
            except bf.TotalConflict:
                continue
            assert c12 == c21
            assert k12 == k21

    def test_associative_within_tolerance(self):
        frame, batch = random_mass_functions(5, 99, seed=108)
        triples = list(zip(batch[::3], batch[1::3], batch[2::3]))
        for m1, m2, m3 in triples:
            if bf.conflict(m1, m2) > 0.95 or bf.conflict(m2, m3) > 0.95:
                continue
            left = bf.dempster_combine(bf.dempster_combine(m1, m2)[0], m3)[0]
            right = bf.dempster_combine(m1, bf.dempster_combine(m2, m3)[0])[0]
            keys = set(left.focal()) | set(right.focal())
            for s in keys:
                assert left.mass(s) == pytest.approx(right.mass(s), abs=1e-9)

    def test_output_is_valid_bba(self):
        frame, batch = random_mass_functions(5, 100, seed=109)
        for m1, m2 in zip(batch[::2], batch[1::2]):
            try:
                combined, _ = bf.dempster_combine(m1, m2)
            except bf.TotalConflict:
                continue
            # re-validation through the constructor must succeed
            bf.make_bba(frame, list(combined.items()))


class TestDetectAnomaly:
    def test_two_doctors_replication(self, two_doctors_default):
        _, m1, m2 = two_doctors_default
        combined, _ = bf.dempster_combine(m1, m2)
        verdict = bf.detect_anomaly(m1, m2, combined, 1e-9)
        assert verdict.anomalous
        assert verdict.matched_source == "source1"
        assert not verdict.vacuous_input

    def test_maradona_not_anomalous(self, maradona):
        _, m1, m2 = maradona
        combined, _ = bf.dempster_combine(m1, m2)
        verdict = bf.detect_anomaly(m1, m2, combined, 1e-9)
        assert not verdict.anomalous
        assert verdict.matched_source is None
        assert verdict.max_deviation > 1e-9

    def test_vacuous_neutrality_flagged(self, maradona):
        frame, m1, _ = maradona
        vac = bf.vacuous_bba(frame)
        combined, _ = bf.dempster_combine(m1, vac)
        verdict = bf.detect_anomaly(m1, vac, combined, 1e-9)
        assert verdict.matched_source == "source1"
        assert verdict.vacuous_input

    def test_identical_inputs_not_anomalous(self, maradona):
        _, m1, _ = maradona
        combined, _ = bf.dempster_combine(m1, m1)
        verdict = bf.detect_anomaly(m1, m1, combined, 1e-9)
        assert not verdict.anomalous
