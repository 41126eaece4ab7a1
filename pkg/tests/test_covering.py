import logging
import math

import numpy as np
import pytest

from src.covering import (
    FluxCycle,
    PeriodicGraph,
    band_structure,
    connecting_arc_classes,
    covering_bracketing,
    fiber_potential,
    fiber_spectrum,
    has_lifting_property,
    integer_left_inverse,
    unfold_truncation,
)
from src.graph import Arc, MwGraph, Vertex, betti
from src.models import ModelSpec, build, z_lattice_quotient
from src.spectra import assemble_dml, eigenvalues
from src.spectra.intervals import contains
from src.utils.errors import CostGuardError, DisconnectedGraphError, GraphValidationError, NeighborhoodError


def test_z_lattice_band_is_the_whole_interval():
    p = z_lattice_quotient()
    assert fiber_spectrum(p, [0.0]).values == pytest.approx([0.0])
    assert fiber_spectrum(p, [math.pi]).values == pytest.approx([4.0])
    bands = band_structure(p, grid=16)
    assert bands.union == ((pytest.approx(0.0, abs=1e-12), pytest.approx(4.0)),)
    assert bands.gaps == ()


def test_fiber_potential_adds_theta_on_connecting_arcs(polyacetylene):
    fiber = fiber_potential(polyacetylene, [0.5])
    assert fiber.arc("e1").alpha == pytest.approx(0.5)
    assert fiber.arc("e2").alpha == pytest.approx(math.pi / 2)
    assert fiber.arc("p1").alpha == 0.0
    with pytest.raises(GraphValidationError):
        fiber_potential(polyacetylene, [0.1, 0.2])


def test_lifting_property_recovers_theta(polyacetylene):
    theta = has_lifting_property(polyacetylene, {a.id: a.alpha for a in fiber_potential(polyacetylene, [1.3]).arcs})
    assert theta == (pytest.approx(1.3),)
    tampered = {a.id: a.alpha for a in polyacetylene.quotient.arcs}
    tampered["p1"] = 0.4
    assert has_lifting_property(polyacetylene, tampered) is None


def test_integer_left_inverse():
    u = integer_left_inverse([[0, 0], [2, 1], [1, 1]], 2)
    assert u is not None
    assert np.array_equal(u @ np.array([[0, 0], [2, 1], [1, 1]]), np.eye(2, dtype=int))
    assert integer_left_inverse([[2], [0]], 1) is None
    assert integer_left_inverse([[0], [0]], 1) is None


def test_periodic_graph_validation():
    g = MwGraph((Vertex("v"),), (Arc("e", "v", "v"),))
    with pytest.raises(GraphValidationError):
        PeriodicGraph(g, {"e": (2,)})
    with pytest.raises(GraphValidationError):
        PeriodicGraph(g, {"e": (1, 0)})
    disconnected = MwGraph((Vertex("a"), Vertex("b")), (Arc("e", "a", "a"),))
    with pytest.raises(DisconnectedGraphError):
        PeriodicGraph(disconnected, {"e": (1,)})
    digon = MwGraph((Vertex("a"), Vertex("b")), (Arc("e", "a", "b"), Arc("f", "a", "b")))
    with pytest.raises(GraphValidationError):
        PeriodicGraph(digon, {"e": (1,)}, 1, (FluxCycle((("e", 1), ("f", -1))),))


def test_flat_bands_at_half_flux():
    p = build(ModelSpec(name="polyacetylene", flux=math.pi))
    bands = band_structure(p, grid=512)
    assert bands.bands.shape == (512, 4)
    assert np.all(bands.widths <= 1e-9)


def test_zigzag_ribbon_has_no_gaps():
    p = build(ModelSpec(name="zgnr", width=2))
    bands = band_structure(p, grid=1024)
    assert bands.union[0][0] == pytest.approx(0.0, abs=1e-9)
    assert bands.union[-1][1] == pytest.approx(2.0, abs=1e-9)
    assert all(hi - lo <= 2 * bands.resolution for lo, hi in bands.gaps)


RIBBON_SPECS = [
    ModelSpec(name="polyacetylene", flux=s) for s in (0.0, 1.3, math.pi)
] + [
    ModelSpec(name="agnr", width=w, flux=s) for w in (2, 3, 4, 5) for s in (0.0, 1.3, math.pi)
] + [
    ModelSpec(name="zgnr", width=w, flux=s) for w in (1, 2, 3) for s in (0.0, 1.3, math.pi)
]


@pytest.mark.parametrize("spec", RIBBON_SPECS, ids=lambda s: f"{s.name}-{s.width}-{s.flux:.2f}")
def test_fibers_lie_in_bracketing(spec):
    p = build(spec)
    b = covering_bracketing(p)
    bands = band_structure(p, grid=128).bands
    lower = np.array([lo for lo, _ in b.intervals])
    upper = np.array([hi for _, hi in b.intervals])
    assert bands.shape == (128, p.quotient.n_vertices)
    assert np.all(bands >= lower - 1e-9)
    assert np.all(bands <= upper + 1e-9)


@pytest.mark.parametrize(
    "spec",
    [
        ModelSpec(name="polyacetylene", flux=0.4),
        ModelSpec(name="agnr", width=3, flux=2.2),
        ModelSpec(name="zgnr", width=2, flux=1.0),
        ModelSpec(name="zgnr", width=3, weights="combinatorial", flux=4.0),
        ModelSpec(name="z_lattice"),
    ],
    ids=lambda s: s.name,
)
def test_neighbouring_samples_within_resolution(spec):
    p = build(spec)
    bands = band_structure(p, grid=64)
    # adjacent samples are 2π/grid apart, the wraparound pair included
    step = np.abs(bands.bands - np.roll(bands.bands, -1, axis=0))
    assert bands.resolution > 0
    assert step.max() <= 2 * bands.resolution + 1e-9


def test_covering_bracketing_needs_connecting_arcs(polyacetylene):
    with pytest.raises(NeighborhoodError):
        covering_bracketing(polyacetylene, {"v1"}, {"e2"})
    assert connecting_arc_classes(polyacetylene) == {"e1"}


def test_truncation_shape(polyacetylene):
    t = unfold_truncation(polyacetylene, 2)
    assert t.n_vertices == 20
    assert t.n_arcs == 24
    assert t.arc("e1@0").tail == "v2@0"
    assert t.arc("e1@0").head == "v1@1"
    assert betti(t) == 5
    assert unfold_truncation(polyacetylene, 50).n_vertices == 404


def test_truncation_spectrum_follows_floquet_bands():
    for s in np.linspace(0, 2 * math.pi, 8, endpoint=False):
        p = build(ModelSpec(name="polyacetylene", flux=float(s)))
        union = band_structure(p, grid=1024).union
        values = eigenvalues(assemble_dml(unfold_truncation(p, 50))).values
        inside = sum(contains(union, lam, 1e-6) for lam in values)
        assert inside >= 0.95 * len(values)


def test_band_structure_refinement_warns_on_drift(caplog):
    p = build(ModelSpec(name="polyacetylene", flux=1.0))
    with caplog.at_level(logging.WARNING, logger="src.covering.bands"):
        refined = band_structure(p, grid=3, refine=True)
    assert refined.theta_grid.shape == (6, 1)
    assert any("moved" in r.message for r in caplog.records)


def test_band_structure_cost_guard(small_settings):
    small_settings(cost_cap=100.0)
    with pytest.raises(CostGuardError):
        band_structure(build(ModelSpec(name="polyacetylene")), grid=64)
    with pytest.raises(GraphValidationError):
        band_structure(build(ModelSpec(name="polyacetylene")), grid=1)


def test_choice_of_flux_arc_does_not_change_bands(polyacetylene):
    moved = polyacetylene.with_quotient(polyacetylene.quotient.with_potential({"e2": 0.0, "e3": -math.pi / 2}))
    original = band_structure(polyacetylene, grid=64)
    other = band_structure(moved, grid=64)
    assert np.allclose(original.band_intervals, other.band_intervals, atol=1e-9)
