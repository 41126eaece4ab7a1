import math

import numpy as np
import pytest
from hypothesis import given, settings as hypothesis_settings

from src.graph import MwGraph, with_standard_weights
from src.models import cycle_graph
from src.spectra import (
    DmlAssembler,
    Spectrum,
    assemble_dml,
    assemble_twisted_derivative,
    batch_eigenvalues,
    eigenvalues,
    embed_real,
    factorized_dml,
    residual_check,
    spectrally_leq,
)
from src.spectra.intervals import (
    complement,
    contains,
    intersect_unions,
    merge_intervals,
    reflect,
    split_isolated,
    total_length,
)
from src.utils.errors import CriterionError, NonHermitianError
from src.utils.metrics import solve_metrics

from tests.conftest import mw_graphs, random_bipartite_graph, random_mw_graph


@pytest.mark.parametrize("n", range(3, 13))
@pytest.mark.parametrize("s", [0.0, math.pi / 3, math.pi])
def test_cycle_closed_form(n, s):
    spectrum = eigenvalues(assemble_dml(cycle_graph(n, s)))
    expected = np.sort(2 - 2 * np.cos((2 * math.pi * np.arange(n) + s) / n))
    assert np.allclose(spectrum.values, expected, atol=1e-9)


def test_symmetrized_entries():
    g = MwGraph.from_edges([("a", "b", 0.7)], weights="combinatorial").with_potential({"e1": 0.7})
    s = assemble_dml(g).entries
    assert s[0, 0] == pytest.approx(1.0)
    assert s[0, 1] == pytest.approx(-np.exp(0.7j))
    assert s[1, 0] == pytest.approx(-np.exp(-0.7j))


def test_loop_contributes_cosine_to_diagonal():
    g = MwGraph.from_edges([("a", "a", 1.0)], weights="combinatorial")
    s = assemble_dml(g).entries
    assert s[0, 0].real == pytest.approx(2.0 - 2.0 * math.cos(1.0))


def test_twisted_derivative_rows():
    g = MwGraph.from_edges([("a", "b", 0.6)])
    d = assemble_twisted_derivative(g).matrix
    assert d[0, 1] == pytest.approx(np.exp(0.3j))
    assert d[0, 0] == pytest.approx(-np.exp(-0.3j))


@hypothesis_settings(max_examples=60, deadline=None, derandomize=True)
@given(mw_graphs())
def test_factorization_matches_assembled_laplacian(g):
    assert np.allclose(factorized_dml(g), assemble_dml(g).unsymmetrized(), atol=1e-10)


def test_spectrum_sorted_in_ambient_and_counts(rng):
    for _ in range(50):
        g = random_mw_graph(rng)
        spectrum = eigenvalues(assemble_dml(g))
        assert len(spectrum) == g.n_vertices
        assert np.all(np.diff(spectrum.values) >= 0)
        assert spectrum.values[0] >= -1e-9
        assert spectrum.values[-1] <= spectrum.ambient[1] + 1e-9


def test_trace_equals_sum_of_relative_weights_without_loops(rng):
    for _ in range(20):
        g = random_mw_graph(rng, loops=False)
        h = assemble_dml(g)
        assert eigenvalues(h).values.sum() == pytest.approx(h.trace(), abs=1e-9)


def test_backends_agree(rng, small_settings):
    g = random_mw_graph(rng, n_vertices=8, n_arcs=14)
    tridiagonal = eigenvalues(assemble_dml(g))
    small_settings(eigensolver_backend="lapack")
    lapack = eigenvalues(assemble_dml(g))
    assert tridiagonal.allclose(lapack, atol=1e-10)


def test_embed_real_doubles_spectrum():
    h = np.array([[2.0, 1j], [-1j, 2.0]])
    doubled = np.linalg.eigvalsh(embed_real(h))
    assert np.allclose(doubled, [1, 1, 3, 3])


def test_batch_matches_single(rng):
    g = random_mw_graph(rng, n_vertices=5, n_arcs=9)
    assembler = DmlAssembler(g)
    alphas = rng.uniform(0, 2 * math.pi, size=(7, g.n_arcs))
    batch = batch_eigenvalues(assembler.stack(alphas))
    for row, alpha in zip(batch, alphas):
        single = eigenvalues(assembler.matrix(alpha))
        assert np.allclose(row, single.values, atol=1e-10)


def test_non_hermitian_rejected():
    with pytest.raises(NonHermitianError):
        eigenvalues(np.array([[1.0, 2.0], [0.0, 1.0]]))
    with pytest.raises(NonHermitianError):
        eigenvalues(np.ones((2, 3)))


def test_residual_check_is_small(rng):
    h = assemble_dml(random_mw_graph(rng, n_vertices=6))
    assert residual_check(h, eigenvalues(h)) < 1e-10


def test_solves_are_recorded():
    eigenvalues(assemble_dml(cycle_graph(4)))
    summary = solve_metrics.session_summary()
    assert summary["solver_calls"] == 1
    assert summary["largest_dimension"] == 4
    assert solve_metrics.last_solve()["dimension"] == 4


def test_spectral_order():
    a = Spectrum([0.0, 1.0, 1.5], (0.0, 2.0))
    b = Spectrum([0.5, 1.2], (0.0, 2.0))
    assert spectrally_leq(a, b, 2.0)
    assert not spectrally_leq(Spectrum([0.0, 2.0, 2.0], (0.0, 2.0)), b, 1.9)
    with pytest.raises(CriterionError):
        spectrally_leq(b, a, 2.0)


def test_interval_arithmetic():
    union = merge_intervals([(0.0, 0.4), (0.3, 0.5), (0.8, 1.0)], 1e-9)
    assert union == [(0.0, 0.5), (0.8, 1.0)]
    assert reflect(union, 1.0) == [pytest.approx((1.0, 1.2)), pytest.approx((1.5, 2.0))]
    assert complement(union, (0.0, 2.0), 1e-9) == [(0.5, 0.8), (1.0, 2.0)]
    assert total_length(union) == pytest.approx(0.7)
    assert contains(union, 0.9, 0.0)
    assert not contains(union, 0.6, 0.0)


def test_touching_intervals_intersect_in_a_point():
    pieces = intersect_unions([(0.0, 1.0)], [(1.0, 2.0)], 1e-9)
    proper, points = split_isolated(pieces, 1e-9)
    assert proper == []
    assert points == [pytest.approx(1.0)]


def test_merge_rejects_reversed_interval():
    with pytest.raises(ValueError):
        merge_intervals([(1.0, 0.0)], 1e-9)


def test_bipartite_spectrum_is_symmetric_about_one(rng):
    for _ in range(30):
        g = with_standard_weights(
            random_bipartite_graph(rng, int(rng.integers(2, 6)), int(rng.integers(2, 6)), int(rng.integers(0, 6)))
        )
        values = eigenvalues(assemble_dml(g)).values
        assert np.allclose(values + values[::-1], 2.0, atol=1e-9)
