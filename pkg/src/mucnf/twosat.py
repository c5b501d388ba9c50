"""Implication graphs, strongly connected components and linear-time 2-SAT.

Literal nodes are numbered ``2*(v-1)`` for x_v and ``2*(v-1)+1`` for ~x_v,
so the complement of node ``u`` is ``u ^ 1``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cnf import Assignment, CnfFormula, Literal
from .errors import NotTwoSat
from .solvers import SatResult


def literal_node(lit: Literal) -> int:
    return 2 * (lit.variable - 1) + int(lit.negated)


def node_literal(node: int) -> Literal:
    return Literal(node // 2 + 1, bool(node & 1))


@dataclass(frozen=True)
class ImplicationGraph:
    num_vars: int
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def num_nodes(self) -> int:
        return 2 * self.num_vars

    @property
    def num_edges(self) -> int:
        return sum(len(out) for out in self.adjacency)

    def edges(self):
        for u, out in enumerate(self.adjacency):
            for v in out:
                yield u, v

    def has_edge(self, u: Literal, v: Literal) -> bool:
        return literal_node(v) in self.adjacency[literal_node(u)]

    def is_skew_symmetric(self) -> bool:
        edges = sorted(self.edges())
        mirrored = sorted((v ^ 1, u ^ 1) for u, v in edges)
        return edges == mirrored


def _require_two_sat(f: CnfFormula) -> None:
    for i, clause in enumerate(f.clauses):
        if clause.width != 2:
            raise NotTwoSat(f"clause {i} {clause} has width {clause.width}, expected 2")


def build_implication_graph(f: CnfFormula) -> ImplicationGraph:
    """One pair of edges ~a -> b and ~b -> a for every clause (a | b)."""
    _require_two_sat(f)
    adjacency: list[list[int]] = [[] for _ in range(2 * f.num_vars)]
    for clause in f.clauses:
        a, b = (literal_node(lit) for lit in clause.literals)
        adjacency[a ^ 1].append(b)
        adjacency[b ^ 1].append(a)
    return ImplicationGraph(f.num_vars, tuple(tuple(out) for out in adjacency))


@dataclass(frozen=True)
class SccDecomposition:
    # component[u] is the id of u's component; id 0 is emitted first by
    # Tarjan's algorithm, so ids increase in reverse topological order
    component: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]

    @property
    def count(self) -> int:
        return len(self.components)


def tarjan_scc(g: ImplicationGraph | list | tuple) -> SccDecomposition:
    """Iterative Tarjan; accepts an ImplicationGraph or a plain adjacency list."""
    adjacency = g.adjacency if isinstance(g, ImplicationGraph) else g
    size = len(adjacency)
    index = [-1] * size
    low = [0] * size
    on_stack = [False] * size
    stack: list[int] = []
    component = [-1] * size
    components: list[tuple[int, ...]] = []
    counter = 0

    for root in range(size):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            u, pos = work[-1]
            out = adjacency[u]
            if pos < len(out):
                work[-1] = (u, pos + 1)
                v = out[pos]
                if index[v] == -1:
                    index[v] = low[v] = counter
                    counter += 1
                    stack.append(v)
                    on_stack[v] = True
                    work.append((v, 0))
                elif on_stack[v] and index[v] < low[u]:
                    low[u] = index[v]
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                if low[u] < low[parent]:
                    low[parent] = low[u]
            if low[u] == index[u]:
                members = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    component[w] = len(components)
                    members.append(w)
                    if w == u:
                        break
                components.append(tuple(sorted(members)))
    return SccDecomposition(tuple(component), tuple(components))


def twosat_solve(f: CnfFormula) -> SatResult:
    """Decide a 2-SAT formula in time linear in its size.

    Unsatisfiable results name the lowest variable whose two literals are
    strongly connected. Otherwise x_v is set true exactly when its component
    is emitted before the component of ~x_v, i.e. x_v lies topologically after
    ~x_v.
    """
    g = build_implication_graph(f)
    scc = tarjan_scc(g)
    comp = scc.component
    values = []
    for v in range(f.num_vars):
        p, q = comp[2 * v], comp[2 * v + 1]
        if p == q:
            return SatResult.unsat(conflict_variable=v + 1)
        values.append(p < q)
    return SatResult.sat(Assignment(tuple(values)))
