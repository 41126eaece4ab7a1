import json
import math

import pytest

from src.covering import FluxDiagram, FluxRow, PeriodicGraph, band_structure
from src.formats import (
    ErrorDocument,
    band_structure_csv,
    dump_graph,
    flux_diagram_csv,
    load_graph,
    parse_flux_diagram,
    parse_graph,
    result_json,
)
from src.graph import MwGraph
from src.models import ModelSpec, build
from src.utils.errors import DiagramError, GraphValidationError

from tests.conftest import random_mw_graph

MODEL_SPECS = [
    ModelSpec(name="polyacetylene", flux=0.7),
    ModelSpec(name="agnr", width=4, weights="combinatorial", flux=2.0),
    ModelSpec(name="zgnr", width=2, flux=5.1),
    ModelSpec(name="z_lattice"),
    ModelSpec(name="cycle", n=6, flux=1.0),
]


@pytest.mark.parametrize("spec", MODEL_SPECS, ids=lambda s: s.name)
def test_models_survive_json(spec):
    original = build(spec)
    restored = parse_graph(dump_graph(original))
    assert type(restored) is type(original)
    assert restored == original


def test_random_graph_survives_json(rng):
    g = random_mw_graph(rng)
    assert parse_graph(dump_graph(g)) == g


def test_weight_shorthand():
    text = json.dumps(
        {
            "vertices": [{"id": "a"}, {"id": "b"}, {"id": "c"}],
            "arcs": [
                {"id": "x", "tail": "a", "head": "b", "alpha": 0.5},
                {"id": "y", "tail": "b", "head": "c"},
            ],
            "weights": "standard",
        }
    )
    g = parse_graph(text)
    assert isinstance(g, MwGraph)
    assert g.vertex("b").weight == 2.0
    assert g.arc("x").alpha == pytest.approx(0.5)


def test_periodic_document():
    text = json.dumps(
        {
            "vertices": [{"id": "v"}],
            "arcs": [{"id": "e", "tail": "v", "head": "v", "index": [1]}],
            "weights": "combinatorial",
        }
    )
    p = parse_graph(text)
    assert isinstance(p, PeriodicGraph)
    assert p.index == {"e": (1,)}


@pytest.mark.parametrize(
    "doc",
    [
        {"vertices": [], "arcs": []},
        {"vertices": [{"id": "a"}], "arcs": []},
        {"vertices": [{"id": "a", "weight": 1.0}], "arcs": [], "weights": "standard"},
        {"vertices": [{"id": "a", "weight": -1.0}], "arcs": []},
        {"vertices": [{"id": "a", "weight": 1.0}], "arcs": [], "colour": "red"},
        {
            "vertices": [{"id": "a", "weight": 1.0}],
            "arcs": [{"id": "e", "tail": "a", "head": "z", "weight": 1.0}],
        },
        {
            "vertices": [{"id": "a"}],
            "arcs": [{"id": "e", "tail": "a", "head": "a", "index": [1]}, {"id": "f", "tail": "a", "head": "a", "index": [0, 1]}],
            "weights": "combinatorial",
        },
    ],
)
def test_invalid_documents(doc):
    with pytest.raises(GraphValidationError):
        parse_graph(json.dumps(doc))


def test_malformed_json_and_missing_file(tmp_path):
    with pytest.raises(GraphValidationError):
        parse_graph("{not json")
    with pytest.raises(GraphValidationError):
        load_graph(tmp_path / "missing.json")


def test_result_json_rounds_reals():
    line = result_json({"values": [1 / 3, 2.0], "label": "x"})
    assert "\n" not in line
    assert json.loads(line) == {"values": [0.333333333333, 2.0], "label": "x"}


def test_error_document_is_one_line():
    doc = ErrorDocument(error="invalid_graph", message="bad\n  input")
    assert doc.message == "bad input"


def test_band_structure_csv():
    bands = band_structure(build(ModelSpec(name="z_lattice")), grid=4)
    lines = band_structure_csv(bands).splitlines()
    assert lines[0] == "theta_1,lambda_1"
    assert len(lines) == 5
    assert lines[1] == "0,0"


def test_flux_diagram_csv_pads_short_rows():
    diagram = FluxDiagram(
        rows=(
            FluxRow(0.0, ((0.0, 1.0), (1.5, 2.0)), ((1.0, 1.5),)),
            FluxRow(math.pi, ((0.0, 2.0),), ()),
        ),
        ambient=(0.0, 2.0),
    )
    text = flux_diagram_csv(diagram)
    lines = text.splitlines()
    assert lines[0] == "s,band_lo_1,band_hi_1,band_lo_2,band_hi_2"
    assert lines[1] == "0,0,1,1.5,2"
    assert lines[2].endswith(",0,2,,")
    restored = parse_flux_diagram(text)
    assert restored.ambient == (0.0, 2.0)
    assert restored.rows[0].gaps == ((1.0, 1.5),)
    assert restored.rows[1].gaps == ()
    with pytest.raises(DiagramError):
        flux_diagram_csv(FluxDiagram((), (0.0, 2.0)))


@pytest.mark.parametrize(
    "text",
    ["", "x,band_lo_1,band_hi_1\n", "s,band_lo_1\n0,1\n", "s,band_lo_1,band_hi_1\n0,2,1\n", "s,band_lo_1,band_hi_1\n"],
)
def test_bad_flux_diagrams(text):
    with pytest.raises(DiagramError):
        parse_flux_diagram(text)
