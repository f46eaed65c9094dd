import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import poly_values
from polymin.benchmarks import (
    gen_benchmark,
    majority_table,
    multiplier_table,
    parity_table,
    parse_side,
    sortingnet_table,
)
from polymin.kmap import gray_codes, kmap_layout, render_kmap
from polymin.polyfunc import ArityError, PolyFunction, PolyValue
from polymin.ppla import PplaDocument, PplaError, parse_ppla, serialize_ppla

# Hand-transcribed 16-cell map of 4-parity (mode 1) / 4-majority (mode 2),
# keyed by assignment bits x1x2x3x4.
PARITY4_MAJORITY4 = {
    "0000": "0/0", "0001": "1/0", "0010": "1/0", "0011": "0/0",
    "0100": "1/0", "0101": "0/0", "0110": "0/0", "0111": "1/1",
    "1000": "1/0", "1001": "0/0", "1010": "0/0", "1011": "1/1",
    "1100": "0/0", "1101": "1/1", "1110": "1/1", "1111": "0/1",
}


class TestPpla:
    def test_parse_minimal(self):
        doc = parse_ppla(".i 2\n.m 2\n01 1/0\n.e\n")
        assert doc.n == 2
        assert doc.rows == (("01", PolyValue(1, 0)),)

    def test_unlisted_rows_default_to_zero(self):
        f = parse_ppla(".i 2\n.m 2\n01 1/0\n.e\n").to_function()
        assert f.value_at(0b00) == PolyValue(0, 0)
        assert f.value_at(0b01) == PolyValue(1, 0)

    def test_comments_and_blank_lines(self):
        text = "# header\n.i 1\n\n.m 2  # two modes\n1 1/1\n.e\n"
        assert parse_ppla(text).n == 1

    def test_mode_names(self):
        doc = parse_ppla(".i 1\n.m 2\n.ob parity majority\n.e\n")
        assert doc.mode_names == ("parity", "majority")

    def test_duplicate_row_rejected(self):
        with pytest.raises(PplaError, match="duplicate"):
            parse_ppla(".i 2\n.m 2\n01 1/0\n01 1/1\n.e\n")

    def test_wrong_mode_count_rejected(self):
        with pytest.raises(PplaError, match=".m must be 2"):
            parse_ppla(".i 2\n.m 3\n.e\n")

    def test_missing_terminator(self):
        with pytest.raises(PplaError, match=".e"):
            parse_ppla(".i 2\n.m 2\n01 1/0\n")

    def test_bad_bits_width(self):
        with pytest.raises(PplaError):
            parse_ppla(".i 3\n.m 2\n01 1/0\n.e\n")

    def test_round_trip_of_benchmark(self):
        f = gen_benchmark("parity4/majority4")
        doc = PplaDocument.from_function(f, ("parity4", "majority4"))
        again = parse_ppla(serialize_ppla(doc))
        assert again == doc.canonicalized()
        assert again.to_function() == f

    @settings(max_examples=100)
    @given(
        st.integers(1, 5).flatmap(
            lambda n: st.lists(
                st.tuples(
                    st.integers(0, (1 << n) - 1).map(lambda k: format(k, f"0{n}b")),
                    poly_values(),
                ),
                unique_by=lambda row: row[0],
                max_size=1 << n,
            ).map(lambda rows: PplaDocument(n, tuple(rows)))
        )
    )
    def test_round_trip_random_documents(self, doc):
        assert parse_ppla(serialize_ppla(doc)) == doc.canonicalized()


class TestBenchmarks:
    def test_parity_majority_cells_match_transcription(self):
        f = gen_benchmark("parity4/majority4")
        for bits, expected in PARITY4_MAJORITY4.items():
            assert str(f.value_at(int(bits, 2))) == expected, bits

    def test_parity_and_majority_agree_with_definitions(self):
        p = parity_table(4)
        m = majority_table(4)
        for k in range(16):
            assert ((p >> k) & 1) == bin(k).count("1") % 2
            assert ((m >> k) & 1) == (1 if bin(k).count("1") >= 3 else 0)

    def test_fig_cells_from_spec_examples(self):
        f = gen_benchmark("parity4/majority4")
        assert str(f.value_at(0b0111)) == "1/1"
        assert str(f.value_at(0b0011)) == "0/0"

    def test_multiplier_against_integer_oracle(self):
        # a = x1x2, b = x3x4x5, all 5-bit inputs checked for every output bit
        for out in range(5):
            t = multiplier_table(2, 3, out)
            for k in range(32):
                a = k >> 3
                b = k & 0b111
                assert ((t >> k) & 1) == ((a * b) >> out) & 1

    def test_multiplier_example(self):
        # 3 * 7 = 21 = 10101b, bit 2 is 1
        t = multiplier_table(2, 3, 2)
        k = (0b11 << 3) | 0b111
        assert (t >> k) & 1 == 1

    def test_sortingnet_threshold(self):
        t = sortingnet_table(5, 2)
        for k in range(32):
            assert ((t >> k) & 1) == (1 if bin(k).count("1") >= 3 else 0)

    def test_out_index_defaults_to_two(self):
        assert parse_side("sortingnet5") == parse_side("sortingnet5(2)")
        assert parse_side("multiplier2x3") == parse_side("multiplier2x3(2)")

    def test_arity_mismatch_between_sides(self):
        with pytest.raises(ArityError):
            gen_benchmark("parity4/majority5")

    def test_unknown_name(self):
        with pytest.raises(ValueError, match="unknown benchmark"):
            gen_benchmark("frobnicate4/majority4")

    def test_bad_out_index(self):
        with pytest.raises(ValueError):
            parse_side("sortingnet5(9)")


class TestKmap:
    def test_gray_order(self):
        assert gray_codes(2) == ["00", "01", "11", "10"]
        assert gray_codes(3) == ["000", "001", "011", "010", "110", "111", "101", "100"]

    def test_parity_majority_row_11(self):
        f = gen_benchmark("parity4/majority4")
        text = render_kmap(f)
        row11 = next(line for line in text.splitlines() if line.strip().startswith("11 "))
        assert "0/0 1/1 0/1 1/1" in row11

    def test_full_grid_matches_table(self):
        f = gen_benchmark("parity4/majority4")
        layout = kmap_layout(4)
        lines = render_kmap(f).splitlines()[2:]
        for r, line in enumerate(lines):
            cells = line.split()[-4:]
            for c, cell in enumerate(cells):
                assert cell == str(f.value_at(layout.cell_index(r, c)))

    def test_constant_two_by_two(self):
        f = PolyFunction.from_masks(2, 0, 0)
        text = render_kmap(f)
        assert text.count("0/0") == 4

    def test_five_variable_grid_is_4_by_8(self):
        f = PolyFunction.from_masks(5, 0, 0)
        layout = kmap_layout(5)
        assert layout.row_vars == (1, 2)
        assert layout.col_vars == (3, 4, 5)
        lines = render_kmap(f).splitlines()
        assert len(lines) == 2 + 4
        assert len(lines[-1].split()) >= 8

    def test_arity_bounds(self):
        with pytest.raises(ArityError):
            render_kmap(PolyFunction.from_masks(1, 0, 0))
        with pytest.raises(ArityError):
            render_kmap(PolyFunction.from_masks(7, 0, 0))

    def test_deterministic(self):
        f = gen_benchmark("parity4/majority4")
        assert render_kmap(f) == render_kmap(f)
