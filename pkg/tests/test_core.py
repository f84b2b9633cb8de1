"""Tests for the gate algebra: words, construction, composition, inversion."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from revlogic.core import (
    Gate,
    NotBijective,
    WidthMismatch,
    Word,
    WrongLength,
    compose,
    identity_gate,
    make_gate,
)
from revlogic.library import build


def permutation_gates(max_width=6):
    return st.integers(1, max_width).flatmap(
        lambda w: st.permutations(range(1 << w)).map(
            lambda perm: make_gate(w, [Word.from_index(w, i) for i in perm])
        )
    )


class TestWord:
    def test_msb_first_encoding(self):
        # x1 is the most significant bit, matching left-to-right table columns
        assert Word((0, 1, 1)).index == 3
        assert Word((1, 0, 0)).index == 4
        assert Word.from_index(3, 6) == Word((1, 1, 0))

    def test_round_trip_exhaustive_small_widths(self):
        for width in range(1, 6):
            for i in range(1 << width):
                assert Word.from_index(width, i).index == i

    @given(st.integers(1, 16).flatmap(
        lambda w: st.tuples(st.just(w), st.integers(0, (1 << w) - 1))))
    def test_round_trip_random(self, pair):
        width, i = pair
        word = Word.from_index(width, i)
        assert word.index == i
        assert Word.from_string(str(word)) == word

    def test_validation(self):
        with pytest.raises(WrongLength):
            Word(())
        with pytest.raises(WrongLength):
            Word((0,) * 17)
        with pytest.raises(ValueError):
            Word((0, 2))


class TestMakeGate:
    def test_one_bit_swap_is_not_gate(self):
        gate = make_gate(1, ["1", "0"])
        assert gate.apply(Word((0,))) == Word((1,))
        assert gate.apply(Word((1,))) == Word((0,))

    def test_cl_gate_from_table_rows(self):
        rows = ["000", "001", "011", "010", "101", "100", "111", "110"]
        gate = make_gate(3, rows, name="cl")
        assert gate == build("cl")

    def test_duplicate_output_rejected(self):
        with pytest.raises(NotBijective):
            make_gate(2, ["00", "00", "11", "10"])

    def test_wrong_row_count_rejected(self):
        with pytest.raises(WrongLength):
            make_gate(2, ["00", "01", "10"])

    def test_row_width_mismatch_rejected(self):
        with pytest.raises(WidthMismatch):
            make_gate(2, ["00", "01", "10", "111"])


class TestApply:
    def test_cl_rows(self):
        cl = build("cl")
        assert cl.apply(Word.from_string("010")) == Word.from_string("011")
        assert cl.apply(Word.from_string("000")) == Word.from_string("000")

    def test_toffoli_last_row(self):
        assert build("toffoli").apply(Word.from_string("111")) == Word.from_string("110")

    def test_width_mismatch(self):
        with pytest.raises(WidthMismatch):
            build("cl").apply(Word((0, 1)))


class TestCompose:
    def test_cl_self_composition_is_identity(self):
        cl = build("cl")
        assert compose(cl, cl).is_identity()

    def test_identity_law(self):
        toffoli = build("toffoli")
        assert compose(identity_gate(3), toffoli) == toffoli
        assert compose(toffoli, identity_gate(3)) == toffoli

    def test_x_self_composition_is_identity(self):
        # frozen by exhaustive check of all 8 words against the X table
        x = build("x")
        composed = compose(x, x)
        for word in x.words():
            assert composed.apply(word) == word
        assert composed.is_identity()

    def test_width_mismatch(self):
        with pytest.raises(WidthMismatch):
            compose(build("cl"), build("cnot"))

    @given(st.tuples(st.permutations(range(8)), st.permutations(range(8)),
                     st.permutations(range(8))))
    def test_associative_on_width_3(self, perms):
        f, g, h = (make_gate(3, [Word.from_index(3, i) for i in p]) for p in perms)
        assert compose(compose(f, g), h) == compose(f, compose(g, h))


class TestInverse:
    def test_cl_is_its_own_inverse(self):
        cl = build("cl")
        assert cl.inverse().table == cl.table

    def test_identity(self):
        assert identity_gate(3).inverse().is_identity()

    def test_hand_inverted_permutation(self):
        gate = make_gate(2, ["01", "10", "00", "11"])
        assert [str(w) for w in gate.inverse().table] == ["10", "00", "01", "11"]

    @settings(max_examples=40)
    @given(permutation_gates())
    def test_inverse_round_trip(self, gate):
        inv = gate.inverse()
        for word in gate.words():
            assert inv.apply(gate.apply(word)) == word
        assert compose(gate, inv).is_identity()

    def test_round_trip_width_10(self):
        import random

        rnd = random.Random(42)
        perm = list(range(1 << 10))
        rnd.shuffle(perm)
        gate = make_gate(10, [Word.from_index(10, i) for i in perm])
        inv = gate.inverse()
        for word in gate.words():
            assert inv.apply(gate.apply(word)) == word


class TestFlags:
    def test_cl_self_reversible_not_conservative(self):
        flags = build("cl").flags()
        assert flags.self_reversible and not flags.conservative

    def test_toffoli_self_reversible_not_conservative(self):
        flags = build("toffoli").flags()
        assert flags.self_reversible and not flags.conservative

    def test_identity_both(self):
        flags = identity_gate(3).flags()
        assert flags.self_reversible and flags.conservative

    @settings(max_examples=40)
    @given(permutation_gates(max_width=4))
    def test_self_reversible_iff_self_composition_identity(self, gate):
        assert gate.flags().self_reversible == compose(gate, gate).is_identity()

    def test_conservative_implies_self_composition_conservative(self):
        # permute within each Hamming-weight class to get conservative gates
        import random

        rnd = random.Random(7)
        for _ in range(10):
            width = 3
            table = [None] * (1 << width)
            for weight in range(width + 1):
                idxs = [i for i in range(1 << width) if bin(i).count("1") == weight]
                shuffled = idxs[:]
                rnd.shuffle(shuffled)
                for src, dst in zip(idxs, shuffled):
                    table[src] = Word.from_index(width, dst)
            gate = Gate(width, tuple(table))
            assert gate.flags().conservative
            assert compose(gate, gate).flags().conservative


class TestJson:
    def test_documented_shape(self):
        data = build("cl").to_json()
        assert data == {
            "name": "cl",
            "width": 3,
            "table": ["000", "001", "011", "010", "101", "100", "111", "110"],
        }

    @settings(max_examples=40)
    @given(permutation_gates())
    def test_round_trip_bit_exact(self, gate):
        again = Gate.loads(gate.dumps())
        assert again.table == gate.table
        assert again.width == gate.width

    def test_bijectivity_enforced_on_load(self):
        with pytest.raises(NotBijective):
            Gate.from_json({"name": "bad", "width": 1, "table": ["0", "0"]})


@settings(max_examples=40)
@given(permutation_gates())
def test_table_is_permutation_of_all_words(gate):
    assert {w.bits for w in gate.table} == {w.bits for w in gate.words()}
