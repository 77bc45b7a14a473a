"""Input handling, bit/position conversions, cursor recomputation, deltas."""

import io
import itertools
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from topk_subsets.core import (
    Delta,
    InputError,
    InputSet,
    NegativeValueError,
    OverflowRiskError,
    RankedSubset,
    bits_from_positions,
    cursors_from_bits,
    expand_deltas,
    load_input,
    mask_from_positions,
    positions_from_bits,
    sum_of,
    validate_positions,
)


class TestInputSet:
    def test_from_values_sorts(self):
        r = InputSet.from_values([5, 1, 3])
        assert r.values == (1, 3, 5)
        assert r.n == 3
        assert r.mode == "int"

    def test_constructor_requires_sorted(self):
        with pytest.raises(InputError):
            InputSet((3, 1, 5))

    def test_duplicates_and_zero_are_fine(self):
        r = InputSet.from_values([0, 0, 2, 2])
        assert r.values == (0, 0, 2, 2)

    def test_empty_rejected(self):
        with pytest.raises(InputError):
            InputSet.from_values([])

    def test_unknown_mode_rejected(self):
        with pytest.raises(InputError):
            InputSet((1, 2), mode="dec")

    def test_int_mode_rejects_floats(self):
        with pytest.raises(InputError):
            InputSet.from_values([1, 2.5])

    def test_float_mode_accepts_mixed(self):
        r = InputSet.from_values([2, 0.5], mode="float")
        assert r.values == (0.5, 2)

    def test_negative_rejected(self):
        with pytest.raises(NegativeValueError):
            InputSet.from_values([3, -1])
        with pytest.raises(NegativeValueError):
            InputSet.from_values([-0.5, 3.0], mode="float")

    def test_negative_error_is_input_error(self):
        assert issubclass(NegativeValueError, InputError)
        assert issubclass(InputError, ValueError)

    def test_non_finite_rejected(self):
        for bad in (math.nan, math.inf):
            with pytest.raises(InputError):
                InputSet.from_values([1.0, bad], mode="float")

    def test_overflow_guard(self):
        # n * max must stay within signed 64-bit range.
        InputSet.from_values([2**63 - 1])  # exactly at the line
        with pytest.raises(OverflowRiskError):
            InputSet.from_values([2**62, 2**62, 2**62])


class TestLoadInput:
    def test_tokens_whitespace_and_comments(self):
        text = "# header comment\n3 1\t4 # trailing\n\n2\n"
        r = load_input(text)
        assert r.values == (1, 2, 3, 4)

    def test_file_object(self):
        r = load_input(io.StringIO("7 5"))
        assert r.values == (5, 7)

    def test_float_mode(self):
        r = load_input("0.25 1e2 3", mode="float")
        assert r.values == (0.25, 3.0, 100.0)
        assert r.mode == "float"

    def test_bad_token(self):
        with pytest.raises(InputError, match="abc"):
            load_input("1 abc 2")

    def test_int_mode_rejects_decimal_token(self):
        with pytest.raises(InputError):
            load_input("1 2.5")

    def test_empty_source(self):
        with pytest.raises(InputError):
            load_input("# nothing but comments\n")


class TestValidatePositions:
    def test_ok(self):
        validate_positions((1, 3), 3)

    @pytest.mark.parametrize(
        "positions", [(), (0, 1), (1, 4), (2, 2), (3, 1)], ids=repr
    )
    def test_bad(self, positions):
        with pytest.raises(InputError):
            validate_positions(positions, 3)


class TestSumOf:
    def test_int_exact(self):
        r = InputSet.from_values([1, 2, 3, 4])
        assert sum_of((1, 4), r) == 5
        assert sum_of((1, 2, 3, 4), r) == 10

    def test_float_uses_compensated_sum(self):
        r = InputSet.from_values((0.1,) * 10, mode="float")
        # naive left-to-right accumulation gives 0.9999999999999999 here
        assert sum_of(tuple(range(1, 11)), r) == 1.0


class TestBitsAndPositions:
    def test_positions_from_bits_forms(self):
        # bytes, 0/1 string, and int sequence all decode the same
        assert positions_from_bits(b"\x00\x01\x00\x01") == (2, 4)
        assert positions_from_bits("0101") == (2, 4)
        assert positions_from_bits([0, 1, 0, 1]) == (2, 4)

    def test_bits_from_positions(self):
        assert bits_from_positions((2, 4), 4) == b"\x00\x01\x00\x01"
        assert bits_from_positions((1,), 1) == b"\x01"

    def test_mask_low_bit_is_position_one(self):
        assert mask_from_positions((1,)) == 1
        assert mask_from_positions((1, 3)) == 0b101
        assert mask_from_positions((2, 4)) == 0b1010

    @given(st.sets(st.integers(1, 60), min_size=1), st.randoms())
    def test_round_trip(self, posset, rng):
        positions = tuple(sorted(posset))
        n = positions[-1] + rng.randrange(3)
        bits = bits_from_positions(positions, n)
        assert len(bits) == n
        assert positions_from_bits(bits) == positions


def _reference_cursors(bits: bytes) -> tuple[int, int, int, int]:
    """Cursor recomputation written a second way, via run-length groups."""
    runs = [(v, len(list(g))) for v, g in itertools.groupby(bits)]
    pos, fag, pe = 1, 0, 0
    if runs[0][0] == 1:
        pe = runs[0][1]
    seen_zero = False
    for v, length in runs:
        if v == 0:
            seen_zero = True
        elif seen_zero:
            fag = pos
            break
        pos += length
    last = max(i for i, b in enumerate(bits, 1) if b)
    sag = 0
    if fag:
        later = [i for i, b in enumerate(bits, 1) if b and i > fag]
        sag = later[0] if later else 0
    return fag, pe, last, sag


class TestCursors:
    @pytest.mark.parametrize(
        "pattern,expected",
        [
            ("1000", (0, 1, 1, 0)),
            ("1", (0, 1, 1, 0)),
            ("1010", (3, 1, 3, 0)),
            ("0110", (2, 0, 3, 3)),
            ("0101", (2, 0, 4, 4)),
            ("1101", (4, 2, 4, 0)),
            ("1111", (0, 4, 4, 0)),
            ("0001", (4, 0, 4, 0)),
        ],
    )
    def test_known_patterns(self, pattern, expected):
        assert cursors_from_bits(pattern) == expected

    def test_input_forms_agree(self):
        want = cursors_from_bits("1101")
        assert cursors_from_bits(b"\x01\x01\x00\x01") == want
        assert cursors_from_bits([1, 1, 0, 1]) == want

    def test_all_zero_rejected(self):
        with pytest.raises(InputError):
            cursors_from_bits("000")

    def test_first_after_gap_never_one(self):
        # position 1 can never follow a zero run
        for n in range(1, 9):
            for mask in range(1, 1 << n):
                bits = bytes((mask >> i) & 1 for i in range(n))
                assert cursors_from_bits(bits)[0] != 1

    @given(st.integers(1, 14), st.integers(1, 2**14 - 1))
    def test_matches_group_based_reference(self, n, mask):
        mask &= (1 << n) - 1
        if mask == 0:
            mask = 1
        bits = bytes((mask >> i) & 1 for i in range(n))
        assert cursors_from_bits(bits) == _reference_cursors(bits)


def _ranked(rank, total, parent, removed, added):
    return RankedSubset(rank, total, None, Delta(parent, removed, added))


class TestExpandDeltas:
    def test_replay(self):
        stream = [
            _ranked(1, 1, None, None, 1),
            _ranked(2, 2, 1, 1, 2),
            _ranked(3, 3, 2, 2, 3),
            _ranked(4, 3, 2, None, 1),
            _ranked(5, 4, 3, 3, 4),
        ]
        got = [(it.rank, it.total, it.positions) for it in expand_deltas(stream)]
        assert got == [
            (1, 1, (1,)),
            (2, 2, (2,)),
            (3, 3, (3,)),
            (4, 3, (1, 2)),
            (5, 4, (4,)),
        ]

    def test_missing_delta(self):
        with pytest.raises(ValueError, match="no delta"):
            list(expand_deltas([RankedSubset(1, 1, (1,), None)]))

    def test_malformed_root(self):
        with pytest.raises(ValueError, match="root"):
            list(expand_deltas([_ranked(1, 1, None, 1, 1)]))

    def test_unknown_parent(self):
        stream = [_ranked(1, 1, None, None, 1), _ranked(2, 2, 7, 1, 2)]
        with pytest.raises(ValueError, match="unknown rank 7"):
            list(expand_deltas(stream))

    def test_removed_absent(self):
        stream = [_ranked(1, 1, None, None, 1), _ranked(2, 2, 1, 2, 3)]
        with pytest.raises(ValueError, match="absent"):
            list(expand_deltas(stream))

    def test_added_already_present(self):
        stream = [_ranked(1, 1, None, None, 1), _ranked(2, 2, 1, None, 1)]
        with pytest.raises(ValueError, match="already present"):
            list(expand_deltas(stream))

    def test_lazy(self):
        def feed():
            yield _ranked(1, 1, None, None, 1)
            raise RuntimeError("must not be pulled")

        it = expand_deltas(feed())
        assert next(it).positions == (1,)
