import random

import pytest
from hypothesis import given, settings, strategies as st

from parkideal.chipfire import FiringModel, fire_set, format_trace, is_stable, stabilize
from parkideal.errors import DomainError, InputError, ResourceError
from parkideal.graph import Graph, connected_graphs, degree, parse_graph

K4 = Graph.complete(4)
SINGLE = FiringModel.singletons()
CLUSTER = FiringModel.cluster()


def test_fire_single_vertex():
    assert fire_set(K4, (3, 0, 0), {1}) == (0, 1, 1)


def test_fire_pair():
    assert fire_set(K4, (2, 2, 0), {1, 2}) == (0, 0, 2)


def test_fire_deficient_vertex_named():
    with pytest.raises(InputError, match="vertex 1"):
        fire_set(K4, (2, 0, 0), {1})


def test_zero_and_parking_configs_stable():
    for model in (SINGLE, CLUSTER):
        assert is_stable(K4, (0, 0, 0), model)
    assert is_stable(K4, (1, 0, 2), CLUSTER)


def test_singleton_stabilization_box():
    final = stabilize(K4, (3, 3, 3), SINGLE)
    assert all(c <= 2 for c in final)
    assert is_stable(K4, final, SINGLE)


def test_trace_format():
    trace = []
    stabilize(K4, (3, 3, 3), SINGLE, trace=trace)
    lines = format_trace(trace).splitlines()
    assert lines[0] == "step 1: fire {1} -> (0,4,4)"
    assert len(lines) == len(trace)


def test_family_model():
    model = FiringModel.from_family([[2, 1], [3]])
    assert model.sets(3) == [(1, 2), (3,)]
    assert stabilize(K4, (2, 2, 0), model) == (0, 0, 2)
    with pytest.raises(InputError):
        FiringModel.from_family([[]])
    with pytest.raises(InputError):
        FiringModel.from_family([[4]]).sets(3)


def test_disconnected_rejected():
    g = Graph.from_edges([(0, 1), (2, 3)])
    with pytest.raises(DomainError):
        stabilize(g, (0, 0, 0), CLUSTER)


def test_step_limit():
    with pytest.raises(ResourceError):
        stabilize(K4, (30, 30, 30), SINGLE, max_steps=3)


def test_bad_configuration():
    with pytest.raises(InputError):
        stabilize(K4, (1, 2), CLUSTER)
    with pytest.raises(InputError):
        stabilize(K4, (1, -1, 0), CLUSTER)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(list(connected_graphs(5))), st.integers(0, 10 ** 6), st.booleans())
def test_random_policy_is_confluent(g, seed, cluster):
    rng = random.Random(seed)
    model = CLUSTER if cluster else SINGLE
    c = tuple(rng.randrange(3 * degree(g, i)) for i in range(1, g.n + 1))
    assert stabilize(g, c, model, rng=rng) == stabilize(g, c, model)


@pytest.mark.parametrize("nv", [3, 4])
def test_singleton_stable_means_below_degree(nv):
    for g in connected_graphs(nv):
        final = stabilize(g, tuple(2 * degree(g, i) for i in range(1, g.n + 1)), SINGLE)
        assert all(c <= degree(g, i) - 1 for i, c in enumerate(final, 1))


def test_chip_loss_equals_sink_edges():
    g = parse_graph("0 1\n1 2\n0 2\n2 3\n")
    before = (2, 3, 0)
    after = fire_set(g, before, {1, 2})
    sink_edges = sum(1 for v in (1, 2) if g.adjacent(0, v))
    assert sum(before) - sum(after) == sink_edges
