import json

import pytest

import kconpath as kc


def test_graph_round_trip():
    g = kc.complete_bipartite(2, 2)
    assert kc.write_graph6(g) == "C]"
    assert kc.read_graph6("C]") == g
    assert g.order() == 4 and g.edge_count() == 4
    assert g.is_bipartite()


def test_connectivity():
    assert kc.vertex_connectivity(kc.complete_bipartite(3, 3))[0] == 3
    c6 = kc.Graph.from_edges(6, [(i, (i + 1) % 6) if i < 5 else (0, 5) for i in range(6)])
    kappa, cut = kc.vertex_connectivity(c6)
    assert kappa == 2 and len(cut) == 2
    cuts, complete = kc.minimum_cuts(c6)
    assert complete and len(cuts) == 9
    assert kc.exhaustive_connectivity(c6) == 2


def test_find_and_verify():
    g = kc.complete_bipartite(4, 4)
    cert = kc.find_removable_path(g, 2, 2)
    assert len(cert.path) == 2
    assert cert.residual_kappa >= 2
    assert kc.verify_certificate(g, 2, cert) == (True, "")
    doc = json.loads(kc.certificate_to_json(cert, g))
    assert doc["schema"] == "kconpath/1"
    back = kc.certificate_from_json(json.dumps(doc))
    assert back.path == cert.path
    _, witnesses = kc.brute_force_paths(g, 2, 2)
    p = cert.path if cert.path[0] < cert.path[-1] else cert.path[::-1]
    assert p in witnesses


def test_anchored():
    pair = kc.extremal_completion(2, 2)
    assert kc.classify_pair(pair)[0] == "member_strong"
    for p0 in set(pair.graph.vertices) - set(pair.clique):
        cert = kc.find_anchored_path(pair, p0)
        assert cert.path[0] == p0


def test_errors():
    c4 = kc.complete_bipartite(2, 2)
    with pytest.raises(kc.HypothesisError):
        kc.find_removable_path(c4, 2, 1)
    with pytest.raises(ValueError):
        kc.read_graph6("!!!")


def test_generators_and_trees():
    g = kc.random_k_connected_bipartite(6, 6, 2, 4, 1)
    assert g is not None and g.min_degree() >= 4
    assert g == kc.random_k_connected_bipartite(6, 6, 2, 4, 1)
    tree, t = kc.random_tree(5, 3)
    assert tree.edge_count() == 4 and t >= 3
    p2 = kc.Graph.from_edges(2, [(0, 1)])
    assert not kc.tree_removal_exists(kc.sharpness_instance(2, 1), 2, p2)
