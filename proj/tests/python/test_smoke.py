import json

import pytest

import dist3


def cycle(n):
    return dist3.Graph(n, [(i, (i + 1) % n) for i in range(n)])


def test_graph_basics():
    g = dist3.Graph(3, [(0, 1), (1, 2), (1, 0)])
    assert (g.n, g.m) == (3, 2)
    assert g.edges == [(0, 1), (1, 2)]
    assert g.neighbors(1) == [0, 2]
    assert dist3.distances_from(dist3.Graph(2), 0) == [0, None]
    assert dist3.diameter(cycle(5)) == 2
    with pytest.raises(ValueError):
        dist3.Graph(4, [(0, 0)])
    with pytest.raises(IndexError):
        dist3.Graph(4, [(0, 4)])


def test_distance_graph():
    d = dist3.distance_graph(cycle(7), 3)
    assert d.edges == sorted(tuple(sorted((i, (i + 3) % 7))) for i in range(7))
    assert dist3.distance_graph(cycle(5)).m == 0
    assert dist3.n3_set(cycle(7), 0) == [3, 4]
    assert dist3.power_graph(cycle(6), 2).m == 12


def test_shape_and_templates():
    kind, cyc = dist3.detect_shape(cycle(6))
    assert kind == "unicyclic" and len(cyc) == 6
    h4 = dist3.build_template("H(4)")
    assert dist3.detect_shape(h4)[0] == "tree"
    assert len(dist3.inner_nodes(h4)) == 2
    tid, vmap = dist3.find_h_embedding(h4)
    assert tid == "H(4)" and len(vmap) == h4.n
    assert dist3.find_h_embedding(cycle(6)) is None


def test_classify_and_certificate():
    v = dist3.classify(cycle(7))
    assert v["connected"] and v["case_tag"] == "T2.8"
    assert dist3.verify_certificate(cycle(7), v["certificate"])
    v = dist3.classify(cycle(6))
    assert not v["connected"] and v["case_tag"] == "T2.9"
    assert v["certificate"]["blocks"] == [[0, 3], [1, 4], [2, 5]]
    assert dist3.classify(cycle(5))["case_tag"] == "T2.13:C5"
    assert dist3.classify(dist3.build_template("G1"))["case_tag"] == "T2.15:G1"
    with pytest.raises(ValueError):
        dist3.classify(dist3.Graph(3, [(0, 1)]))


def test_oracle_agrees_on_random_graphs():
    for seed in range(200):
        g = dist3.random_unicyclic(8 + seed % 20, 3 + seed % 6, seed)
        assert dist3.classify(g)["connected"] == dist3.oracle_d3_connected(g)[0]
        t = dist3.random_tree(2 + seed % 30, seed)
        assert dist3.classify(t)["connected"] == dist3.oracle_d3_connected(t)[0]


def test_fixtures():
    fx = dist3.fixtures()
    assert len(fx) >= 13
    for f in fx:
        assert f["expected_d3_connected"] == dist3.oracle_d3_connected(f["graph"])[0]


def test_io_round_trip():
    g = dist3.random_tree(20, 1)
    text = dist3.to_edge_list(g)
    assert dist3.to_edge_list(dist3.parse_edge_list(text)) == text
    assert dist3.to_dot(dist3.Graph(2, [(0, 1)])) == "graph G {\n  0;\n  1;\n  0 -- 1;\n}\n"
    assert json.loads(dist3.to_json(g))["m"] == 19
    with pytest.raises(dist3.ParseError):
        dist3.parse_edge_list("3 1\n0 9\n")


def test_corpus_and_corollary():
    summary, records = dist3.run_corpus("tree", n=6)
    assert summary["disagreements"] == 0
    assert summary["instances"] == 1 + 1 + 3 + 16 + 125 + 1296
    assert json.loads(records.splitlines()[-1])["type"] == "summary"
    one = dist3.run_corpus("unicyclic", count=300, seed=5, jobs=1)[1]
    two = dist3.run_corpus("unicyclic", count=300, seed=5, jobs=2)[1]
    assert one == two
    holds, rows = dist3.verify_corollary(5)
    assert holds and all(r["witnesses"] == 0 for r in rows)
