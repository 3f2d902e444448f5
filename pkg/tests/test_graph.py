import pytest
from hypothesis import given, settings, strategies as st

from parkideal.errors import InputError
from parkideal.graph import (
    Graph,
    connected_graphs,
    d_sigma,
    degree,
    load_graph,
    parse_graph,
    reduced_laplacian,
    reduced_signless_laplacian,
    spanning_tree_count,
    spanning_trees_brute,
    tu_weighted_count,
)
from parkideal.linalg import det_exact


def test_complete_graph_degrees():
    g = Graph.complete(5)
    assert g.n == 4
    assert all(degree(g, v) == 4 for v in range(5))


def test_d_sigma_counts_sink_as_outside():
    g = Graph.complete(4)
    assert d_sigma(g, {1}, 1) == 3
    assert d_sigma(g, {1, 2}, 1) == 2
    assert d_sigma(g, {1, 2, 3}, 2) == 1


def test_parse_graph_text(tmp_path):
    text = "# triangle with a tail\n0 1\n1 2\n\n0 2  # closing edge\n2 3\n"
    g = parse_graph(text)
    assert g.n_vertices == 4
    assert g.edge_key() == "0-1,0-2,1-2,2-3"
    path = tmp_path / "g.txt"
    path.write_text(g.to_text())
    assert load_graph(str(path)) == g


@pytest.mark.parametrize("text", ["0 0\n", "0 1\n1 0\n", "0 x\n", "0 1 2\n", "", "-1 2\n"])
def test_parse_graph_rejects(text):
    with pytest.raises(InputError):
        parse_graph(text)


@pytest.mark.parametrize("src", ["complete:1", "complete:x", "/no/such/file"])
def test_load_graph_rejects(src):
    with pytest.raises(InputError):
        load_graph(src)


def test_reduced_signless_k4():
    assert [list(r) for r in reduced_signless_laplacian(Graph.complete(4))] == [
        [3, 1, 1], [1, 3, 1], [1, 1, 3]
    ]


@pytest.mark.parametrize("nv", [2, 3, 4, 5])
def test_matrix_tree_against_brute_force(nv):
    for g in connected_graphs(nv):
        assert spanning_tree_count(g) == spanning_trees_brute(g)


def test_connected_graph_counts():
    # labelled connected graphs: OEIS A001187
    assert [sum(1 for _ in connected_graphs(n)) for n in range(2, 6)] == [1, 4, 38, 728]


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(list(connected_graphs(5))), st.integers(0, 4))
def test_laplacian_det_independent_of_sink(g, sink):
    assert det_exact(reduced_laplacian(g, sink)) == det_exact(reduced_laplacian(g, 0))


def test_tu_count_examples():
    assert tu_weighted_count(Graph.complete(4)) == 20
    assert tu_weighted_count(Graph.complete(5).without_edges((3, 4))) == 99
    assert tu_weighted_count(Graph.complete(5).without_edges((0, 1))) == 135


def test_tu_count_tree_is_one():
    path = parse_graph("0 1\n1 2\n2 3\n")
    assert tu_weighted_count(path) == 1
