import json
import random

import pytest

from edgepow import (
    GraphError,
    cycle,
    delete_vertex,
    forked_path,
    from_spec,
    graph_from_edges,
    independence_number,
    induced_subgraph,
    is_triangle_free,
    load_graph,
    parse_graph_json,
    path,
    star,
    star_whisker,
    structure_probe,
    template,
)
from helpers import random_connected_graph


def test_rejects_loops_duplicates_isolated():
    with pytest.raises(GraphError, match=r"edges\[1\]: loop"):
        graph_from_edges(3, [(1, 2), (3, 3)])
    with pytest.raises(GraphError, match=r"edges\[2\]: duplicate"):
        graph_from_edges(3, [(1, 2), (2, 3), (2, 1)])
    with pytest.raises(GraphError, match="isolated"):
        graph_from_edges(4, [(1, 2), (2, 3)])
    with pytest.raises(GraphError, match="out of range"):
        graph_from_edges(3, [(1, 2), (2, 4)])


def test_cycle_smallest():
    g = cycle(3)
    assert g.edges == frozenset({(1, 2), (2, 3), (1, 3)})
    with pytest.raises(GraphError):
        cycle(2)


@pytest.mark.parametrize("n", range(3, 12))
def test_cycle_edges_and_degrees(n):
    g = cycle(n)
    assert len(g.edges) == n
    assert all(d == 2 for d in g.degrees)


@pytest.mark.parametrize("n", range(2, 12))
def test_path_is_tree(n):
    probe = structure_probe(path(n))
    assert probe.is_tree and not probe.is_unicyclic


def test_star_whisker_layout():
    g = star_whisker(3, 2)
    assert g.n == 6
    center = 6
    assert g.neighbors(center) == frozenset({1, 2, 3})
    assert (1, 4) in g.edges and (2, 5) in g.edges


def test_template_c3pathpend_edge_list():
    g = template("c3pathpend")
    assert g.n == 7
    assert g.edges == frozenset(
        {(1, 2), (1, 3), (2, 3), (1, 4), (4, 5), (5, 6), (2, 7)}
    )


def test_from_spec_roundtrip():
    assert from_spec("cycle:5").edges == cycle(5).edges
    assert from_spec("template:c5star").n == 8
    assert from_spec("star:4").n == 5
    with pytest.raises(GraphError):
        from_spec("blob:7")
    with pytest.raises(GraphError):
        from_spec("cycle:x")


def test_independence_number_known():
    assert independence_number(cycle(5)) == 2
    assert independence_number(path(2)) == 1
    assert independence_number(template("c3fork")) == 3


def _independence_brute(g):
    from itertools import combinations

    best = 1
    verts = range(1, g.n + 1)
    for k in range(2, g.n + 1):
        for sub in combinations(verts, k):
            if all(not g.has_edge(u, v) for u, v in combinations(sub, 2)):
                best = k
                break
        else:
            break
    return best


def test_independence_number_vs_subset_enumeration():
    rng = random.Random(7)
    for _ in range(40):
        g = random_connected_graph(rng, n_max=9)
        assert independence_number(g) == _independence_brute(g)
    # larger spot checks, still within the subset-enumeration oracle's reach
    g = random_connected_graph(random.Random(11), n_min=12, n_max=12, extra_max=8)
    assert independence_number(g) == _independence_brute(g)
    g = random_connected_graph(random.Random(13), n_min=14, n_max=14, extra_max=24)
    assert independence_number(g) == _independence_brute(g)


def test_independence_number_size_limit():
    edges = [(i, i + 1) for i in range(1, 40)]
    g = graph_from_edges(40, edges)
    with pytest.raises(GraphError, match="limited"):
        independence_number(g)


def test_triangle_free():
    assert is_triangle_free(cycle(4))
    assert not is_triangle_free(cycle(3))
    assert not is_triangle_free(template("c3fork"))


def test_structure_probe_unicyclic():
    g = graph_from_edges(8, list(cycle(7).edges) + [(1, 8)])
    probe = structure_probe(g)
    assert probe.is_unicyclic and probe.cycle_length == 7
    assert probe.cycle == (1, 2, 3, 4, 5, 6, 7)
    assert probe.leaves == (8,)


def test_structure_probe_disconnected():
    g = graph_from_edges(4, [(1, 2), (3, 4)])
    probe = structure_probe(g)
    assert not probe.connected and not probe.is_tree
    assert probe.components == ((1, 2), (3, 4))


def test_delete_leaf_of_template():
    g = template("c3pathpend")
    h, mapping = delete_vertex(g, 7)
    assert h.n == 6
    assert mapping == {v: v for v in range(1, 7)}
    assert h.edges == template("c3path3").edges


def test_delete_path_endpoint():
    h, _ = delete_vertex(path(5), 5)
    assert h.edges == path(4).edges


def test_delete_renumbers_with_mapping():
    h, mapping = delete_vertex(path(3), 1)
    assert mapping == {2: 1, 3: 2}
    assert h.edges == frozenset({(1, 2)})


def test_from_spec_multipartite():
    g = from_spec("multipartite:2,2")
    assert len(g.edges) == 4
    g = from_spec("multipartite:2,2;1-3,2-4")
    assert len(g.edges) == 2


def test_delete_interior_creates_isolated():
    with pytest.raises(GraphError, match="isolated"):
        delete_vertex(path(4), 2)


def test_delete_leaf_from_tree_keeps_tree():
    rng = random.Random(3)
    for _ in range(20):
        g = random_connected_graph(rng, n_min=3, extra_max=0)
        leaf = structure_probe(g).leaves[0]
        h, _ = delete_vertex(g, leaf)
        assert structure_probe(h).is_tree


def test_induced_subgraph_mapping():
    g = template("c5star")
    h, mapping = induced_subgraph(g, [1, 2, 3, 4, 5])
    assert h.edges == cycle(5).edges
    assert mapping == {1: 1, 2: 2, 3: 3, 4: 4, 5: 5}


def test_forked_path_shape():
    g = forked_path(2)
    assert g.n == 6
    assert g.edges == frozenset({(1, 2), (1, 3), (1, 4), (2, 5), (2, 6)})


def test_json_roundtrip(tmp_path):
    g = template("c4star")
    p = tmp_path / "g.json"
    p.write_text(json.dumps(g.to_json()))
    assert load_graph(str(p)).edges == g.edges


def test_json_errors():
    with pytest.raises(GraphError, match="keys 'n' and 'edges'"):
        parse_graph_json({"n": 3})
    with pytest.raises(GraphError, match=r"edges\[0\]"):
        parse_graph_json({"n": 3, "edges": [[1, 1], [1, 2]]})
    with pytest.raises(GraphError, match="must be an integer"):
        parse_graph_json({"n": "3", "edges": []})


def test_star_center_labeling():
    g = star(4)
    assert g.neighbors(5) == frozenset({1, 2, 3, 4})
    assert all(g.degree(i) == 1 for i in range(1, 5))
