"""Frames, subset encoding, and mass-function validation."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

import belfusion as bf


class TestMakeFrame:
    def test_two_labels(self):
        frame = bf.make_frame(["head", "hand"])
        assert frame.n == 2
        assert frame.labels == ("head", "hand")

    def test_three_labels(self):
        assert bf.make_frame(["A", "B", "C"]).n == 3

    def test_duplicate_label(self):
        with pytest.raises(bf.DuplicateLabel):
            bf.make_frame(["A", "A"])

    def test_empty_frame(self):
        with pytest.raises(bf.EmptyFrame):
            bf.make_frame([])

    def test_empty_label(self):
        with pytest.raises(bf.EmptyFrame):
            bf.make_frame(["A", ""])

    def test_too_large(self):
        with pytest.raises(bf.FrameTooLarge):
            bf.make_frame([f"h{i}" for i in range(64)])

    def test_at_capacity(self):
        frame = bf.make_frame([f"h{i}" for i in range(63)])
        assert frame.full == (1 << 63) - 1


class TestSubsetEncoding:
    def test_encode_order_independent(self):
        frame = bf.make_frame(["A", "B", "C"])
        assert frame.encode(["A", "C"]) == frame.encode(["C", "A"]) == 0b101

    def test_single_string_is_one_label(self):
        frame = bf.make_frame(["ab", "ba"])
        assert frame.encode("ab") == 0b01

    def test_unknown_label(self):
        frame = bf.make_frame(["A"])
        with pytest.raises(bf.FrameMismatch):
            frame.encode(["X"])

    def test_decode_out_of_range(self):
        frame = bf.make_frame(["A", "B"])
        with pytest.raises(bf.FrameMismatch):
            frame.decode(0b100)

    def test_complement(self):
        frame = bf.make_frame(["A", "B", "C"])
        assert frame.complement(0b001) == 0b110

    @given(st.data())
    def test_roundtrip(self, data):
        labels = tuple(f"h{i}" for i in range(data.draw(st.integers(1, 10))))
        frame = bf.make_frame(labels)
        chosen = data.draw(st.sets(st.sampled_from(labels)))
        ordered = tuple(l for l in labels if l in chosen)
        assert frame.decode(frame.encode(ordered)) == ordered


class TestMakeBba:
    def test_maradona_m1_valid(self, maradona):
        frame, m1, _ = maradona
        assert m1.mass(frame.encode("head")) == 0.9
        assert m1.mass(frame.full) == 0.1
        assert m1.mass(frame.encode("hand")) == 0.0

    def test_maradona_m2_valid(self, maradona):
        frame, _, m2 = maradona
        assert len(m2) == 3

    def test_sum_not_one(self):
        frame = bf.make_frame(["A", "B"])
        with pytest.raises(bf.SumNotOne):
            bf.make_bba(frame, [(0b01, 0.5)])

    def test_mass_on_empty_set(self):
        frame = bf.make_frame(["A", "B"])
        with pytest.raises(bf.MassOnEmptySet):
            bf.make_bba(frame, [(0, 0.2), (0b01, 0.8)])

    def test_negative_mass(self):
        frame = bf.make_frame(["A", "B"])
        with pytest.raises(bf.NegativeMass):
            bf.make_bba(frame, [(0b01, -0.1), (0b11, 1.1)])

    def test_duplicate_focal_element(self):
        frame = bf.make_frame(["A", "B"])
        with pytest.raises(bf.DuplicateFocalElement):
            bf.make_bba(frame, [(0b01, 0.5), (0b01, 0.5)])

    def test_zero_entries_dropped(self):
        frame = bf.make_frame(["A", "B"])
        with_zero = bf.make_bba(frame, [(0b01, 0.4), (0b10, 0.0), (0b11, 0.6)])
        without = bf.make_bba(frame, [(0b01, 0.4), (0b11, 0.6)])
        assert with_zero == without
        assert 0b10 not in with_zero

    def test_explicit_zero_on_empty_set_is_dropped(self):
        frame = bf.make_frame(["A"])
        m = bf.make_bba(frame, [(0, 0.0), (0b1, 1.0)])
        assert m.focal() == {0b1}

    def test_normalize_flag(self):
        frame = bf.make_frame(["A", "B"])
        m = bf.make_bba(frame, [(0b01, 0.5), (0b10, 0.5), (0b11, 1.0)], normalize=True)
        assert m.mass(0b11) == pytest.approx(0.5)
        assert sum(v for _, v in m.items()) == pytest.approx(1.0, abs=1e-12)

    def test_tolerance_boundary(self):
        frame = bf.make_frame(["A"])
        bf.make_bba(frame, [(0b1, 1.0 + 9e-10)])
        with pytest.raises(bf.SumNotOne):
            bf.make_bba(frame, [(0b1, 1.0 + 2e-9)])

    def test_foreign_subset_rejected(self):
        frame = bf.make_frame(["A"])
        with pytest.raises(bf.FrameMismatch):
            bf.make_bba(frame, [(0b10, 1.0)])


class TestVacuous:
    def test_n2(self):
        frame = bf.make_frame(["A", "B"])
        m = bf.vacuous_bba(frame)
        assert dict(m.items()) == {0b11: 1.0}

    def test_n3(self):
        frame = bf.make_frame(["A", "B", "C"])
        assert bf.vacuous_bba(frame).focal() == {0b111}

    def test_no_mass_on_empty(self):
        frame = bf.make_frame(["A", "B"])
        assert bf.vacuous_bba(frame).mass(0) == 0.0

    def test_predicates(self):
        frame = bf.make_frame(["A", "B"])
        vac = bf.vacuous_bba(frame)
        assert bf.is_vacuous(vac) and bf.is_categorical(vac)
        assert not bf.is_bayesian(vac)
        point = bf.make_bba(frame, [(0b01, 1.0)])
        assert bf.is_bayesian(point) and bf.is_categorical(point)
        assert not bf.is_vacuous(point)


class TestDifferingSubsets:
    def test_identical(self, maradona):
        _, m1, _ = maradona
        assert bf.differing_subsets(m1, m1, 1e-9) == set()

    def test_maradona_pair(self, maradona):
        frame, m1, m2 = maradona
        assert bf.differing_subsets(m1, m2, 1e-9) == {
            frame.encode("head"), frame.encode("hand"),
        }

    def test_frame_mismatch(self, maradona):
        _, m1, _ = maradona
        other = bf.vacuous_bba(bf.make_frame(["A", "B"]))
        with pytest.raises(bf.FrameMismatch):
            bf.differing_subsets(m1, other, 1e-9)

    @given(st.data())
    def test_never_exactly_one(self, data):
        # two normalized assignments cannot differ at a single subset
        n = data.draw(st.integers(1, 4))
        frame = bf.make_frame("ABCD"[:n])
        masses = []
        for _ in range(2):
            k = data.draw(st.integers(1, frame.full))
            focals = data.draw(st.sets(
                st.integers(1, frame.full), min_size=1, max_size=k,
            ))
            raw = [data.draw(st.floats(0.01, 1.0)) for _ in focals]
            total = sum(raw)
            masses.append(bf.make_bba(
                frame, [(s, v / total) for s, v in zip(sorted(focals), raw)],
                normalize=True,
            ))
        diff = bf.differing_subsets(masses[0], masses[1], 1e-9)
        assert len(diff) != 1
