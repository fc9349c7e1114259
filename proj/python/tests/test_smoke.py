import copy

import pytest

import bramblekit as bk


def test_graph_roundtrip():
    g = bk.Graph(4, [(0, 1), (1, 2), (2, 3), (1, 0)])
    assert g.n == 4
    assert g.m == 3
    assert g.edges == [(0, 1), (1, 2), (2, 3)]


def test_bad_edge_raises():
    with pytest.raises(ValueError):
        bk.Graph(3, [(0, 5)])


def test_exact_treewidth_of_grid():
    g = bk.grid(4)
    doc = bk.treewidth(g)
    assert doc["payload"]["width"] == 4
    assert bk.verify(g, doc) is None


def test_mutated_witness_is_rejected():
    g = bk.grid(3)
    doc = bk.treewidth(g)
    bad = copy.deepcopy(doc)
    bad["payload"]["bags"][0] = []
    assert bk.verify(g, bad) is not None
    assert bk.verify(bk.grid(4), doc) is not None


def test_find_bramble_verifies():
    g = bk.grid(6)
    doc = bk.find_bramble(g, seed=1)
    assert doc["kind"] == "bramble"
    assert doc["provenance"]["validation"] == "ok"
    assert bk.verify(g, doc) is None


def test_web_or_decomposition():
    g = bk.grid(8)
    doc = bk.web(g, 2, 2)
    assert doc["kind"] in ("kweb", "tree-decomposition")
    assert bk.verify(g, doc) is None


def test_perfect_bramble_on_clique():
    g = bk.complete(60)
    doc = bk.perfect(g, 2)
    assert doc["kind"] == "perfect-bramble"
    assert bk.verify(g, doc) is None


def test_fpt_vertex_cover_matches_brute_force():
    g = bk.path_graph(12)
    doc = bk.fpt_solve(g, "vc", 3)
    assert doc["payload"]["verdict"] == "greater"
    assert doc["payload"]["value"] == bk.brute_force_vertex_cover(g)
    assert bk.verify(g, doc) is None


def test_fpt_longest_path_at_most():
    g = bk.grid(3)
    doc = bk.fpt_solve(g, "longest-path", 8)
    assert doc["payload"]["verdict"] == "at-most"
    assert doc["payload"]["value"] == bk.brute_force_longest_path(g) == 8


def test_config_overrides_and_unknown_keys():
    cfg = bk.default_constants()
    assert cfg["beta0"] == "1/54"
    cfg["exact_treewidth_cap"] = 10
    doc = bk.treewidth(bk.grid(3), config=cfg)
    assert doc["provenance"]["constants"]["exact_treewidth_cap"] == 10
    with pytest.raises(ValueError):
        bk.treewidth(bk.grid(3), config={"no_such_key": 1})
