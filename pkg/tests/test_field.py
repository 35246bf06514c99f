import numpy as np
import pytest

from bernconv import (DensityField, DomainError, FieldColumnError, HornWord,
                      ParseError, RenderSpec, compute_field, curve_of,
                      export_raw, from_rational, import_raw, render,
                      transfer_measure)


@pytest.fixture(scope="module")
def small_field():
    return compute_field(0.5, 0.76, 30, 400)


class TestComputeField:
    def test_first_column_uniform(self):
        f = compute_field(0.5, 0.52, 2, 200)
        assert np.abs(f.matrix[0] - 1 / 200).max() < 1e-15

    def test_grid_and_normalization(self, small_field):
        f = small_field
        assert f.cols == 30 and f.y_bins == 400
        assert np.all(np.diff(f.t_grid) > 0)
        assert np.allclose(f.matrix.sum(axis=1), 1.0, atol=1e-12)

    def test_column_independence(self, small_field):
        f = small_field
        i = 17
        redo = transfer_measure(float(f.t_grid[i]), f.y_bins)
        assert np.array_equal(redo.weights, f.matrix[i])

    def test_column_symmetry(self, small_field):
        for row in small_field.matrix:
            assert np.abs(row - row[::-1]).sum() < 0.01

    def test_worker_count_invisible(self, small_field):
        f4 = compute_field(0.5, 0.76, 30, 400, workers=4)
        assert export_raw(f4) == export_raw(small_field)

    def test_range_validation(self):
        with pytest.raises(DomainError):
            compute_field(0.6, 0.55, 10, 100)
        with pytest.raises(DomainError):
            compute_field(0.5, 1.0, 10, 100)
        with pytest.raises(DomainError):
            compute_field(0.5, 0.7, 1, 100)

    def test_column_failure_diagnosed(self):
        with pytest.raises(FieldColumnError) as ei:
            compute_field(0.5, 0.76, 8, 100, params={"max_iter": 1})
        # the t = 1/2 column converges instantly; a later column fails
        assert ei.value.column > 0
        assert 0.5 < ei.value.t < 0.76

    def test_column_failure_diagnosed_parallel(self):
        with pytest.raises(FieldColumnError) as ei:
            compute_field(0.5, 0.76, 8, 100, params={"max_iter": 1}, workers=2)
        assert ei.value.column > 0
        assert "ConvergenceError" in str(ei.value)

    def test_chaos_field_deterministic(self):
        p = {"samples": 20000, "seed": 11, "burn_in": 100}
        a = compute_field(0.55, 0.7, 6, 100, method="chaos", params=p)
        b = compute_field(0.55, 0.7, 6, 100, method="chaos", params=p, workers=3)
        assert export_raw(a) == export_raw(b)


class TestRawFormat:
    def test_round_trip_bits(self, small_field):
        blob = export_raw(small_field)
        back = import_raw(blob)
        assert np.array_equal(back.matrix, small_field.matrix)
        assert np.array_equal(back.t_grid, small_field.t_grid)
        assert back.provenance == small_field.provenance
        assert export_raw(back) == blob

    def test_documented_size(self, small_field):
        import json
        blob = export_raw(small_field)
        prov_len = len(json.dumps(small_field.provenance, sort_keys=True)
                       .encode("utf-8"))
        assert len(blob) == 26 + prov_len + 8 * 30 * (1 + 400)

    def test_version_mismatch_rejected(self, small_field):
        blob = bytearray(export_raw(small_field))
        blob[4:5] = b"2"
        with pytest.raises(ParseError):
            import_raw(bytes(blob))

    def test_truncation_rejected(self, small_field):
        blob = export_raw(small_field)
        with pytest.raises(ParseError):
            import_raw(blob[:-5])
        with pytest.raises(ParseError):
            import_raw(b"BATL1")


class TestRender:
    def test_uniform_field_constant_image(self):
        matrix = np.full((8, 50), 1 / 50)
        f = DensityField(np.linspace(0.5, 0.6, 8), matrix, {"method": "transfer"})
        img = render(f, RenderSpec(colormap="gray", clip_percentile=100.0,
                                   gamma=1.0))
        head, _, rest = img.partition(b"\n")
        assert head == b"P5"
        pixels = rest.split(b"\n", 2)[2]
        assert len(set(pixels)) == 1

    def test_headers_and_sizes(self, small_field):
        gray = render(small_field, RenderSpec(colormap="gray"))
        color = render(small_field, RenderSpec())
        assert gray.startswith(b"P5\n30 400\n255\n")
        assert color.startswith(b"P6\n30 400\n255\n")
        assert len(gray) == len(b"P5\n30 400\n255\n") + 30 * 400
        assert len(color) == len(b"P6\n30 400\n255\n") + 3 * 30 * 400

    def test_deterministic_bytes(self, small_field):
        spec = RenderSpec(overlays=(from_rational(1, 3), HornWord("0")))
        assert render(small_field, spec) == render(small_field, spec)

    def test_row_aggregation(self, small_field):
        img = render(small_field, RenderSpec(colormap="gray", height=100))
        assert img.startswith(b"P5\n30 100\n255\n")
        with pytest.raises(DomainError):
            render(small_field, RenderSpec(height=5000))

    def test_spec_validation(self):
        with pytest.raises(DomainError):
            RenderSpec(clip_percentile=80.0)
        with pytest.raises(DomainError):
            RenderSpec(gamma=0.0)

    def test_overlay_changes_pixels(self, small_field):
        plain = render(small_field, RenderSpec())
        marked = render(small_field, RenderSpec(overlays=(from_rational(1, 3),)))
        assert plain != marked

    def test_dark_curve_statistic(self):
        # the period-two curve reads darker than its column for t below golden
        f = compute_field(0.5, 0.63, 80, 2000)
        curve = curve_of(from_rational(1, 3))
        wins = total = 0
        for i, t in enumerate(f.t_grid):
            if t >= 0.615:
                continue
            j = int(curve.eval(float(t)) * f.y_bins)
            mass = f.matrix[i, max(0, j - 1):j + 2].mean()
            total += 1
            wins += mass < np.median(f.matrix[i])
        assert wins / total > 0.8


class TestColumnCsv:
    def test_matches_histogram_csv(self, small_field):
        i = 3
        direct = transfer_measure(float(small_field.t_grid[i]),
                                  small_field.y_bins).to_csv()
        assert small_field.column_csv(i) == direct
