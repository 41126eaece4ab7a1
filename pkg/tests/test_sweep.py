import math

import numpy as np
import pytest

from src.cli import SvgStyle, render_svg
from src.covering import bracket_sweep, flux_sweep, uniform_grid
from src.models import ModelSpec, flux_family
from src.spectra.intervals import contains
from src.utils.errors import CostGuardError, DiagramError, GraphValidationError


def _inside(union, lo, hi, tol):
    return any(a - tol <= lo and hi <= b + tol for a, b in union)


def test_armchair_bands_inside_bracketing():
    family = flux_family(ModelSpec(name="agnr", width=3))
    bands = flux_sweep(family, 256, 256)
    brackets = bracket_sweep(family, 256)
    assert len(bands.rows) == len(brackets.rows) == 256
    for band_row, bracket_row in zip(bands.rows, brackets.rows):
        assert band_row.s == bracket_row.s
        for lo, hi in band_row.band_intervals:
            assert _inside(bracket_row.band_intervals, lo, hi, 1e-9)

    first = render_svg(bands)
    assert first == render_svg(bands)
    assert first.startswith("<?xml")
    assert first.count("<rect") > 256


def test_flux_diagram_symmetric_under_reversal():
    diagram = flux_sweep(flux_family(ModelSpec(name="polyacetylene")), 16, 32)
    rows = diagram.rows
    for k in range(1, 16):
        assert np.allclose(rows[k].band_intervals, rows[16 - k].band_intervals, atol=1e-9)


def test_rows_follow_grid_order_with_workers(small_settings):
    family = flux_family(ModelSpec(name="zgnr", width=2))
    sequential = flux_sweep(family, 8, 16)
    small_settings(max_workers=4)
    threaded = flux_sweep(family, 8, 16)
    assert threaded.s_grid == sequential.s_grid == tuple(uniform_grid(8))
    for a, b in zip(sequential.rows, threaded.rows):
        assert np.allclose(a.band_intervals, b.band_intervals, atol=1e-12)


def test_kappa_rows_shrink_bracketing():
    family = flux_family(ModelSpec(name="polyacetylene"))
    plain = bracket_sweep(family, 8)
    refined = bracket_sweep(family, 8, kappa=True)
    assert refined.mode == "bracket"
    for a, b in zip(plain.rows, refined.rows):
        for lo, hi in b.band_intervals:
            assert _inside(a.band_intervals, lo, hi, 1e-9)


def test_explicit_flux_values():
    family = flux_family(ModelSpec(name="polyacetylene"))
    diagram = flux_sweep(family, [0.0, math.pi], 64)
    assert diagram.s_grid == (0.0, math.pi)
    # half flux: the bands are flat, so every band interval is a point
    assert all(hi - lo <= 1e-9 for lo, hi in diagram.rows[1].band_intervals)
    assert contains(diagram.rows[0].band_intervals, 0.0, 1e-9)


def test_sweep_guards(small_settings):
    family = flux_family(ModelSpec(name="agnr", width=3))
    with pytest.raises(GraphValidationError):
        flux_sweep(family, 0, 16)
    small_settings(cost_cap=1e4)
    with pytest.raises(CostGuardError):
        flux_sweep(family, 64, 64)


def test_render_rejects_bad_input():
    diagram = flux_sweep(flux_family(ModelSpec(name="z_lattice")), 2, 8)
    with pytest.raises(DiagramError):
        render_svg(diagram, lambda_max=0.0)
    with pytest.raises(DiagramError):
        render_svg(diagram, style=SvgStyle(width=60, height=60, margin=40))
    assert 'width="320"' in render_svg(diagram, style=SvgStyle(width=320, height=200, margin=20))
