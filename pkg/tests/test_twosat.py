import random
import time

import pytest
from hypothesis import given, strategies as st

from mucnf.cnf import CnfFormula, evaluate, neg, pos
from mucnf.constructions import gen_f0_3sat, gen_f2
from mucnf.errors import NotTwoSat
from mucnf.random_formulas import random_2sat
from mucnf.solvers import brute_force_sat
from mucnf.twosat import (
    build_implication_graph,
    literal_node,
    node_literal,
    tarjan_scc,
    twosat_solve,
)


def reachability(adjacency):
    size = len(adjacency)
    reach = [[u == v for v in range(size)] for u in range(size)]
    for u, out in enumerate(adjacency):
        for v in out:
            reach[u][v] = True
    for k in range(size):
        for i in range(size):
            if reach[i][k]:
                row_k = reach[k]
                row_i = reach[i]
                for j in range(size):
                    if row_k[j]:
                        row_i[j] = True
    return reach


@st.composite
def digraphs(draw, max_nodes=9):
    size = draw(st.integers(1, max_nodes))
    node = st.integers(0, size - 1)
    edges = draw(st.lists(st.tuples(node, node), max_size=3 * size))
    adjacency = [[] for _ in range(size)]
    for u, v in edges:
        adjacency[u].append(v)
    return adjacency


def test_node_numbering():
    assert literal_node(pos(1)) == 0
    assert literal_node(neg(1)) == 1
    assert node_literal(literal_node(neg(7))) == neg(7)


def test_single_clause_edges():
    g = build_implication_graph(CnfFormula.from_ints(2, [[1, 2]]))
    assert sorted(g.edges()) == sorted(
        [(literal_node(neg(1)), literal_node(pos(2))), (literal_node(neg(2)), literal_node(pos(1)))]
    )
    assert g.has_edge(neg(1), pos(2)) and g.has_edge(neg(2), pos(1))
    assert g.num_nodes == 4


@pytest.mark.parametrize("l", [1, 2, 3, 7])
def test_f2_edge_count(l):
    g = build_implication_graph(gen_f2(l))
    assert g.num_edges == 8 * l
    assert g.is_skew_symmetric()


def test_not_two_sat():
    with pytest.raises(NotTwoSat):
        build_implication_graph(gen_f0_3sat(1))
    with pytest.raises(NotTwoSat):
        twosat_solve(CnfFormula.from_ints(1, [[1]]))


def test_tarjan_examples():
    assert tarjan_scc([[], [], [], []]).count == 4
    assert tarjan_scc([[1], [2], [0]]).count == 1


def test_f2_has_contradictory_component():
    scc = tarjan_scc(build_implication_graph(gen_f2(2)))
    assert any(scc.component[2 * v] == scc.component[2 * v + 1] for v in range(4))


@given(digraphs())
def test_tarjan_matches_reachability(adjacency):
    scc = tarjan_scc(adjacency)
    reach = reachability(adjacency)
    size = len(adjacency)
    for u in range(size):
        for v in range(size):
            same = scc.component[u] == scc.component[v]
            assert same == (reach[u][v] and reach[v][u])
    # ids follow reverse topological order: edges never point to a later component
    for u, out in enumerate(adjacency):
        for v in out:
            assert scc.component[u] >= scc.component[v]
    assert sorted(x for comp in scc.components for x in comp) == list(range(size))


def test_tarjan_deep_path_is_iterative():
    size = 50_000
    adjacency = [[i + 1] for i in range(size - 1)] + [[0]]
    assert tarjan_scc(adjacency).count == 1


def test_twosat_examples():
    assert twosat_solve(CnfFormula.from_ints(2, [[1, 2]])).satisfiable
    for l in (1, 2, 3):
        result = twosat_solve(gen_f2(l))
        assert not result.satisfiable
        assert result.conflict_variable is not None
        assert not brute_force_sat(gen_f2(l)).satisfiable


def test_twosat_random_against_brute_force():
    rng = random.Random(11)
    for _ in range(300):
        n = rng.randint(2, 10)
        f = random_2sat(rng, n, rng.randint(1, 4 * n))
        result = twosat_solve(f)
        assert result.satisfiable == brute_force_sat(f).satisfiable
        if result.satisfiable:
            assert evaluate(f, result.witness)
        else:
            v = result.conflict_variable
            scc = tarjan_scc(build_implication_graph(f))
            assert scc.component[2 * (v - 1)] == scc.component[2 * (v - 1) + 1]


@given(st.integers(1, 300))
def test_implication_graph_skew_symmetric(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 12)
    g = build_implication_graph(random_2sat(rng, n, rng.randint(0, 30)))
    assert g.is_skew_symmetric()


def test_linear_runtime():
    def best_time(f):
        times = []
        for _ in range(3):
            t0 = time.perf_counter()
            twosat_solve(f)
            times.append(time.perf_counter() - t0)
        return min(times)

    small, large = gen_f2(5000), gen_f2(10000)
    best_time(small)
    assert best_time(large) <= 4 * best_time(small)
