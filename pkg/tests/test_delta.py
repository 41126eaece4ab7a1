import math

import pytest

from src.covering import band_structure, covering_bracketing
from src.graph import MwGraph
from src.models import ModelSpec, build
from src.spectra import certify, delta_criterion, trace_identity_check, trace_weight_check
from src.utils.errors import CriterionError

from tests.conftest import random_mw_graph


def test_polyacetylene_certificate():
    p = build(ModelSpec(name="polyacetylene", weights="combinatorial"))
    cert = certify(p.quotient, "v1", {"e1"}, "combinatorial")
    assert cert.value == pytest.approx(2.0 - cert.lambda_1)
    assert cert.value > 0
    assert cert.verdict == "gap certified"
    assert abs(trace_identity_check(p.quotient, "v1", {"e1"})) <= 1e-9


def test_armchair_certificate():
    p = build(ModelSpec(name="agnr", width=3, weights="combinatorial"))
    cert = certify(p.quotient, "v1", {"e1"}, "combinatorial")
    assert cert.value == pytest.approx(1.0 - cert.lambda_1)
    assert cert.certified
    assert abs(trace_identity_check(p.quotient, "v1", {"e1"})) <= 1e-9


def test_variants_agree_on_matching_weights():
    p = build(ModelSpec(name="agnr", width=3, weights="standard", flux=0.8))
    general = delta_criterion(p.quotient, "v1", {"e1"}, "general")
    standard = delta_criterion(p.quotient, "v1", {"e1"}, "standard")
    assert general == pytest.approx(standard, abs=1e-12)


def test_trace_identity_on_random_graphs(rng):
    for _ in range(100):
        g = random_mw_graph(rng, loops=False)
        v0 = g.vertex_ids[0]
        arcs = [a.id for a in g.incident_arcs(v0)][:2]
        assert abs(trace_identity_check(g, v0, arcs)) <= 1e-9


def test_no_certificate_when_delta_is_negative():
    g = MwGraph.from_edges([("a", "b"), ("b", "c"), ("c", "a")], weights="combinatorial")
    cert = certify(g, "a", {"e1", "e3"}, "combinatorial")
    assert cert.value < 0
    assert cert.verdict == "no certificate"


def test_star_preconditions():
    g = MwGraph.from_edges([("a", "b"), ("b", "c"), ("a", "a", 0.5)], weights="combinatorial")
    with pytest.raises(CriterionError):
        certify(g, "a", {"e2"})
    with pytest.raises(CriterionError):
        certify(g, "a", {"e3"})
    with pytest.raises(CriterionError):
        trace_identity_check(g, "a", {"e1"})
    with pytest.raises(CriterionError):
        certify(g, "a", {"e1"}, "bogus")


def test_empty_star_still_returns_a_value():
    g = MwGraph.from_edges([("a", "b"), ("b", "c")], weights="standard")
    cert = certify(g, "b", set(), "standard")
    assert cert.arcs == ()
    assert math.isfinite(cert.value)


def test_trace_weight_check_accounts_for_loops(rng):
    g = MwGraph.from_edges([("a", "b", 0.3), ("b", "b", 1.2)], weights="standard")
    assert abs(trace_weight_check(g)) < 1e-12
    for _ in range(20):
        assert abs(trace_weight_check(random_mw_graph(rng))) < 1e-8


@pytest.mark.parametrize(
    "spec",
    [ModelSpec(name="polyacetylene", weights="combinatorial", flux=s) for s in (0.0, 0.9, math.pi, 4.5)]
    + [ModelSpec(name="agnr", width=3, weights="combinatorial", flux=s) for s in (0.0, 0.3, 5.9)],
    ids=lambda s: f"{s.name}-{s.flux:.2f}",
)
def test_certified_gap_lies_in_band_gaps(spec):
    p = build(spec)
    cert = certify(p.quotient, "v1", {"e1"}, "combinatorial")
    if spec.flux == 0.0:
        assert cert.certified
    if not cert.certified:
        return
    b = covering_bracketing(p, {"v1"}, {"e1"})
    assert b.gaps
    band_gaps = band_structure(p, grid=256).gaps
    assert band_gaps
    for lo, hi in b.gaps:
        assert any(a - 1e-9 <= lo and hi <= c + 1e-9 for a, c in band_gaps)
