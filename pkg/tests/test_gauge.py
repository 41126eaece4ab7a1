import math

import numpy as np
import pytest
from hypothesis import given, settings as hypothesis_settings

from src.graph import (
    MwGraph,
    angle_distance,
    cycle_fluxes,
    gauge_reduce,
    gauge_transform,
    walk_flux,
)
from src.spectra import assemble_dml, eigenvalues
from src.utils.errors import GraphValidationError

from tests.conftest import mw_graphs, random_mw_graph


def test_gauge_reduce_zeroes_tree_and_keeps_chord_flux():
    g = MwGraph.from_edges([("a", "b", 0.4), ("b", "c", 1.1), ("c", "a", 0.2)])
    result = gauge_reduce(g)
    assert result.support == {"e3"}
    assert result.reduced_alpha["e1"] == 0.0
    assert result.reduced_alpha["e2"] == 0.0
    assert result.reduced_alpha["e3"] == pytest.approx(1.7)
    assert cycle_fluxes(g) == {"e3": pytest.approx(1.7)}


def test_tree_potential_gauges_away_completely():
    g = MwGraph.from_edges([("a", "b", 2.0), ("b", "c", 0.3)], weights="standard")
    reduced = gauge_reduce(g).apply(g)
    assert np.all(reduced.alphas() == 0.0)
    assert eigenvalues(assemble_dml(g)).allclose(eigenvalues(assemble_dml(reduced)))


def test_walk_flux_checks_closure_and_signs():
    g = MwGraph.from_edges([("a", "b", 0.5), ("a", "b", 0.2)])
    assert walk_flux(g, [("e1", 1), ("e2", -1)]) == pytest.approx(0.3)
    with pytest.raises(GraphValidationError):
        walk_flux(g, [("e1", 1)])
    with pytest.raises(GraphValidationError):
        walk_flux(g, [("e1", 1), ("e2", 1)])
    with pytest.raises(GraphValidationError):
        walk_flux(g, [("e1", 2), ("e2", -1)])


def test_gauge_invariance_on_random_graphs(rng):
    for _ in range(200):
        g = random_mw_graph(rng)
        phi = {vid: float(rng.uniform(0, 2 * math.pi)) for vid in g.vertex_ids}
        before = eigenvalues(assemble_dml(g))
        after = eigenvalues(assemble_dml(gauge_transform(g, phi)))
        assert before.allclose(after, atol=1e-9)


@hypothesis_settings(max_examples=60, deadline=None, derandomize=True)
@given(mw_graphs())
def test_reduction_preserves_fluxes_and_spectrum(g):
    result = gauge_reduce(g)
    reduced = result.apply(g)
    for aid, flux in cycle_fluxes(g).items():
        assert angle_distance(flux, cycle_fluxes(reduced)[aid]) < 1e-9
    assert eigenvalues(assemble_dml(g)).allclose(eigenvalues(assemble_dml(reduced)), atol=1e-9)
