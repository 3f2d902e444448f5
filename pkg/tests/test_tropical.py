import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from parkideal import tropical
from parkideal.betti import betti_table
from parkideal.errors import DomainError, InputError
from parkideal.graph import Graph, parse_graph
from parkideal.monomials import skeleton_ideal


@pytest.fixture(scope="module")
def arr3():
    return tropical.Arrangement.from_apexes([0, 0], [1, 2])


@pytest.mark.parametrize(
    "x, ta, tb",
    [((2, 0), (1,), (2, 3)), ((2, -1), (1,), (3,)), ((1, Fraction(1, 2)), (1, 3), (2,))],
)
def test_type_of_point_examples(x, ta, tb):
    arr = tropical.Arrangement.from_apexes([1, 1], [3, 0])
    assert tropical.type_of_point(arr, x) == (ta, tb)


def test_type_of_point_wrong_length(arr3):
    with pytest.raises(InputError):
        tropical.type_of_point(arr3, (1, 2, 3))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_maximal_cells_one_per_pair(n):
    cx = tropical.enumerate_cells(tropical.Arrangement.from_apexes([0] * (n - 1), tropical.generic_apex(n)))
    unions = sorted(tuple(sorted(set(cx.cells[k].type.ta) | set(cx.cells[k].type.tb)))
                    for k in cx.maximal_cells())
    expect = sorted(tuple(sorted({i, j})) for i in range(1, n + 1) for j in range(i, n + 1))
    assert unions == expect


@pytest.mark.parametrize("n", [2, 3, 4])
def test_witnesses_realise_types_and_dimensions(n):
    arr = tropical.Arrangement.from_apexes([0] * (n - 1), tropical.generic_apex(n))
    for cell in tropical.enumerate_cells(arr).cells:
        assert tropical.type_of_point(arr, cell.witness) == cell.type
        assert tropical.equality_rank_dimension(cell, arr) == cell.dim


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=2, max_size=2))
def test_any_apex_in_plane_matches_dimension_rank(b):
    arr = tropical.Arrangement.from_apexes([0, 0], b)
    cx = tropical.enumerate_cells(arr)
    for cell in cx.cells:
        assert tropical.equality_rank_dimension(cell, arr) == cell.dim
    assert tropical.euler_characteristic(cx) == 1


def test_segment_endpoints():
    x, y = (Fraction(1), Fraction(3)), (Fraction(-2), Fraction(0))
    assert tropical.tropical_segment_point(x, y, 0, -100) == x
    assert tropical.tropical_segment_point(x, y, -100, 0) == y


def test_segment_random_pairs_contain_intersection():
    arr = tropical.Arrangement.from_apexes([0, 0, 0], [1, 2, 3])
    rng = random.Random(7)
    for _ in range(200):
        x = tuple(Fraction(rng.randint(-5, 5)) for _ in range(3))
        y = tuple(Fraction(rng.randint(-5, 5)) for _ in range(3))
        z = tropical.tropical_segment_point(x, y, rng.randint(-4, 4), rng.randint(-4, 4))
        for a, b, c in zip(*(tropical.type_of_point(arr, p) for p in (x, y, z))):
            assert set(a) & set(b) <= set(c) <= set(a) | set(b)


def test_generic_apex_and_complete_graph():
    assert tropical.generic_apex(4) == (1, 2, 3)
    assert tropical.clique_cone_apex(Graph.complete(5)) == (1, 2, 3)


def test_clique_cone_apex_examples():
    g1 = Graph.complete(5).without_edges((1, 2), (3, 4))
    assert tropical.clique_cone_apex(g1) == (1, 1, 0)
    assert tropical.clique_blocks(g1) == [(1, 2), (3, 4)]


def test_clique_cone_rejects_non_cone():
    with pytest.raises(DomainError):
        tropical.clique_blocks(Graph.complete(5).without_edges((0, 1)))
    path_complement = Graph.complete(5).without_edges((1, 2), (2, 3))
    with pytest.raises(DomainError):
        tropical.clique_blocks(path_complement)


@pytest.mark.parametrize(
    "removed",
    [[(1, 2)], [(2, 3)], [(1, 2), (3, 4)], [(1, 3), (2, 4)], [(1, 2), (1, 3), (2, 3)],
     [(2, 3), (2, 4), (3, 4)], [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]],
)
def test_recipe_apex_resolves_clique_cones(removed):
    g = Graph.complete(5).without_edges(*removed)
    table, cx = tropical.tropical_betti(g)
    assert table.fine == betti_table(skeleton_ideal(g, 1)).fine
    assert tropical.verify_minimality(cx)


def test_complex_json_schema():
    g = Graph.complete(4)
    cx = tropical.enumerate_cells(tropical.arrangement_for_graph(g), g)
    doc = json.loads(cx.to_json())
    cell = doc["cells"][0]
    assert set(cell) == {"Ta", "Tb", "dim", "label", "witness"}
    assert all(isinstance(w, str) for w in cell["witness"])
    assert all(len(p) == 2 for p in doc["faces"])


def test_svg_only_in_plane():
    svg = tropical.arrangement_svg(tropical.Arrangement.from_apexes([0, 0], [1, 2]))
    assert svg.startswith("<svg") and svg.rstrip().endswith("</svg>")
    with pytest.raises(InputError):
        tropical.arrangement_svg(tropical.Arrangement.from_apexes([0], [1]))


def test_apex_length_checked():
    with pytest.raises(InputError):
        tropical.arrangement_for_graph(Graph.complete(4), (1,))
