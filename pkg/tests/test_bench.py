"""Deterministic instance generation and the benchmark matrix plumbing."""

import io

import pytest

from topk_subsets.bench import (
    CSV_HEADER,
    BenchConfig,
    BenchRow,
    UniformInteger,
    emit_csv,
    gen_instance,
    median_cells,
    run_matrix,
    splitmix64_stream,
)
from topk_subsets.enumerators import Variant


class TestSplitmix64:
    def test_published_vector_for_seed_zero(self):
        s = splitmix64_stream(0)
        assert [next(s) for _ in range(3)] == [
            0xE220A8397B1DCDAF,
            0x6E789E6AA1B965F4,
            0x06C45D188009454F,
        ]

    def test_deterministic_per_seed(self):
        a = splitmix64_stream(12345)
        b = splitmix64_stream(12345)
        assert [next(a) for _ in range(10)] == [next(b) for _ in range(10)]

    def test_seeds_diverge(self):
        assert next(splitmix64_stream(1)) != next(splitmix64_stream(2))

    def test_outputs_are_64_bit(self):
        s = splitmix64_stream(987654321)
        assert all(0 <= next(s) < 2**64 for _ in range(100))


class TestUniformInteger:
    def test_validation(self):
        with pytest.raises(ValueError):
            UniformInteger(5, 4)
        with pytest.raises(ValueError):
            UniformInteger(-1, 4)

    def test_degenerate_span(self):
        r = gen_instance(6, 3, UniformInteger(9, 9))
        assert r.values == (9,) * 6


class TestGenInstance:
    def test_frozen_small_instance(self):
        r = gen_instance(5, 0, UniformInteger(1, 10))
        assert r.values == (1, 5, 6, 8, 10)
        assert r.mode == "int"

    def test_sorted_and_in_range(self):
        dist = UniformInteger(1, 10**6)
        r = gen_instance(100, 5, dist)
        assert r.values == tuple(sorted(r.values))
        assert all(1 <= v <= 10**6 for v in r.values)

    def test_seed_controls_content(self):
        dist = UniformInteger(1, 10**6)
        assert gen_instance(8, 1, dist) == gen_instance(8, 1, dist)
        assert gen_instance(8, 1, dist) != gen_instance(8, 2, dist)

    def test_float_mode(self):
        r = gen_instance(3, 0, UniformInteger(1, 10), mode="float")
        assert r.mode == "float"
        assert all(isinstance(v, float) for v in r.values)


class TestBenchConfig:
    def test_validation(self):
        ok = BenchConfig((4,), (3,), (Variant.BASELINE,), seed=0)
        assert ok.repetitions == 1
        with pytest.raises(ValueError):
            BenchConfig((), (3,), (Variant.BASELINE,), seed=0)
        with pytest.raises(ValueError):
            BenchConfig((4,), (0,), (Variant.BASELINE,), seed=0)
        with pytest.raises(ValueError):
            BenchConfig((4,), (3,), (), seed=0)
        with pytest.raises(ValueError):
            BenchConfig((4,), (3,), (Variant.BASELINE,), seed=0, repetitions=0)


class TestRunMatrix:
    def test_grid_shape_and_counts(self):
        cfg = BenchConfig(
            n_list=(4, 6),
            k_list=(3, 100),
            variants=(Variant.BASELINE, Variant.ONDEMAND_COMPACT),
            seed=1,
            repetitions=2,
        )
        rows = run_matrix(cfg)
        assert len(rows) == 2 * 2 * 2 * 2
        for row in rows:
            assert row.seed == 1
            assert row.reported_count == min(row.k, 2**row.n - 1)
            assert row.elapsed_ns > 0

    def test_counters_stable_across_repetitions(self):
        cfg = BenchConfig(
            n_list=(6,),
            k_list=(20,),
            variants=(Variant.BASELINE,),
            seed=7,
            repetitions=3,
        )
        rows = run_matrix(cfg)
        assert len({(r.total_insertions, r.peak_size) for r in rows}) == 1


class TestCsv:
    ROWS = [
        BenchRow(6, 20, "compact", 7, 1500, 30, 12, 20),
        BenchRow(4, 3, "baseline", 7, 900, 7, 4, 3),
        BenchRow(4, 3, "baseline", 7, 1100, 7, 4, 3),
    ]

    def test_header_and_ordering(self):
        buf = io.StringIO()
        emit_csv(self.ROWS, buf)
        lines = buf.getvalue().splitlines()
        assert lines[0] == CSV_HEADER
        assert lines[1].startswith("4,3,baseline,7,")
        assert lines[3].startswith("6,20,compact,7,")
        assert len(lines) == 4

    def test_emission_is_stable(self):
        a, b = io.StringIO(), io.StringIO()
        emit_csv(self.ROWS, a)
        emit_csv(list(reversed(self.ROWS)), b)
        assert a.getvalue() == b.getvalue()

    def test_path_target(self, tmp_path):
        out = tmp_path / "rows.csv"
        emit_csv(self.ROWS, str(out))
        buf = io.StringIO()
        emit_csv(self.ROWS, buf)
        assert out.read_text() == buf.getvalue()


class TestMedianCells:
    def test_odd_and_even(self):
        rows = [
            BenchRow(4, 3, "baseline", 1, 30, 7, 4, 3),
            BenchRow(4, 3, "baseline", 1, 10, 7, 4, 3),
            BenchRow(4, 3, "baseline", 1, 20, 7, 4, 3),
        ]
        assert median_cells(rows) == [(4, 3, "baseline", 20, 3)]
        assert median_cells(rows[:2]) == [(4, 3, "baseline", 20, 2)]

    def test_cells_sorted(self):
        rows = [
            BenchRow(6, 3, "compact", 1, 5, 6, 4, 3),
            BenchRow(4, 3, "baseline", 1, 5, 7, 4, 3),
            BenchRow(4, 3, "compact", 1, 5, 6, 4, 3),
        ]
        cells = [(n, k, v) for n, k, v, *_ in median_cells(rows)]
        assert cells == [(4, 3, "baseline"), (4, 3, "compact"), (6, 3, "compact")]
