import json

import numpy as np
import pytest

from agc.errors import CentralElement
from agc.graph import CommutingGraph
from agc.constructions import abelian, cyclic, dihedral, quaternion, symmetric

from oracles import brute_centralizer


def test_abelian_group_has_empty_graph():
    g = CommutingGraph(cyclic(6))
    assert g.n_vertices == 0
    result = g.diameter()
    assert result.status == "empty-vertex-set"
    assert result.diameter is None
    assert g.diameter_via_reduction().status == "empty-vertex-set"


def test_s3_graph_is_disconnected():
    g = CommutingGraph(symmetric(3))
    assert g.n_vertices == 5
    assert g.n_components() == 4
    result = g.diameter()
    assert result.status == "disconnected" and result.components == 4


def test_adjacency_matches_centralizers():
    G = dihedral(6)
    g = CommutingGraph(G)
    for v in g.vertices:
        expected = set(brute_centralizer(G, int(v))) & set(g.vertices.tolist())
        expected.discard(int(v))
        assert set(g.neighbors(int(v)).tolist()) == expected


def test_distance_and_central_element_error():
    G = dihedral(6)
    g = CommutingGraph(G)
    x = int(g.vertices[0])
    assert g.distance(x, x) == 0
    with pytest.raises(CentralElement):
        g.distance(0, x)  # identity is central, not a vertex


def test_diameter_of_witness(witness60):
    g = CommutingGraph(witness60)
    result = g.diameter()
    assert result.status == "connected"
    assert result.diameter == 4
    assert max(g.eccentricities()) == 4


def test_q8_twin_reduction():
    g = CommutingGraph(quaternion())
    reduced = g.twin_reduce()
    assert reduced.n_vertices == 3  # <i>, <j>, <k> classes
    assert reduced.edge_list() == []
    assert g.diameter_via_reduction().status == "disconnected"


def test_s3_twin_reduction():
    g = CommutingGraph(symmetric(3))
    reduced = g.twin_reduce()
    assert reduced.n_vertices == 4  # three transpositions, one rotation class
    assert reduced.edge_list() == []


def test_twin_reduction_matches_full_diameter_on_corpus(corpus_groups):
    for name, G in corpus_groups.items():
        g = CommutingGraph(G)
        full = g.diameter()
        reduced = g.diameter_via_reduction()
        assert (full.status, full.diameter, full.components) == \
               (reduced.status, reduced.diameter, reduced.components), name


def test_edge_list_is_sorted_and_consistent():
    g = CommutingGraph(dihedral(6))
    edges = g.edge_list()
    assert all(a < b for a, b in edges)
    assert len(edges) == len(set(edges))
    # each edge really is a commuting pair
    G = g.group
    for a, b in edges:
        assert G.mult(a, b) == G.mult(b, a)


def test_dot_export_shape():
    g = CommutingGraph(symmetric(3))
    text = g.to_dot()
    assert text.startswith("graph")
    assert text.rstrip().endswith("}")
    for v in g.vertices:
        assert f"  {int(v)};" in text


def test_json_export_round_trips():
    g = CommutingGraph(dihedral(6))
    payload = json.loads(g.to_json())
    assert payload["order"] == 12
    assert sorted(payload["vertices"]) == sorted(int(v) for v in g.vertices)
    assert [tuple(e) for e in payload["edges"]] == g.edge_list()
