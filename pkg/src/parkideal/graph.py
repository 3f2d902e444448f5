"""Simple undirected graphs with sink 0, Laplacians and tree counts."""

from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path

import numpy as np

from . import _kernels
from .errors import InputError, check_guard
from .linalg import det_exact

TU_GUARD = 1 << 24


@dataclass(frozen=True)
class Graph:
    """Graph on vertices ``0..n_vertices-1``; vertex 0 is the sink.

    ``edges`` holds pairs ``(i, j)`` with ``i < j``.  Build with
    :meth:`from_edges`, which validates input.
    """

    n_vertices: int
    edges: frozenset
    adj: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        nbrs = [set() for _ in range(self.n_vertices)]
        for i, j in self.edges:
            nbrs[i].add(j)
            nbrs[j].add(i)
        object.__setattr__(self, "adj", tuple(frozenset(s) for s in nbrs))

    @classmethod
    def from_edges(cls, edges, n_vertices=None):
        seen = set()
        top = -1
        for e in edges:
            i, j = (int(v) for v in e)
            if i == j:
                raise InputError(f"loop at vertex {i}")
            if i < 0 or j < 0:
                raise InputError(f"negative vertex label in edge {e}")
            key = (min(i, j), max(i, j))
            if key in seen:
                raise InputError(f"duplicate edge {key}")
            seen.add(key)
            top = max(top, i, j)
        if n_vertices is None:
            n_vertices = top + 1
        if n_vertices < 1:
            raise InputError("graph needs at least one vertex")
        if top >= n_vertices:
            raise InputError(f"edge endpoint {top} out of range for {n_vertices} vertices")
        return cls(n_vertices, frozenset(seen))

    @classmethod
    def complete(cls, n_vertices):
        return cls.from_edges(combinations(range(n_vertices), 2), n_vertices)

    @property
    def n(self):
        """Number of non-sink vertices (= number of polynomial variables)."""
        return self.n_vertices - 1

    def sorted_edges(self):
        return sorted(self.edges)

    def adjacent(self, i, j):
        return j in self.adj[i]

    def without_edges(self, *edges):
        drop = {(min(i, j), max(i, j)) for i, j in edges}
        missing = drop - self.edges
        if missing:
            raise InputError(f"edges not present: {sorted(missing)}")
        return Graph(self.n_vertices, self.edges - drop)

    def relabel(self, perm):
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        return Graph.from_edges(((perm[i], perm[j]) for i, j in self.edges), self.n_vertices)

    def is_connected(self):
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w in self.adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n_vertices

    def edge_key(self):
        return ",".join(f"{i}-{j}" for i, j in self.sorted_edges())

    def to_text(self):
        return "".join(f"{i} {j}\n" for i, j in self.sorted_edges())


def parse_graph(text):
    """Parse the edge-list text format: one ``i j`` pair per line, ``#`` comments."""
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InputError(f"line {lineno}: expected two vertex labels, got {raw!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise InputError(f"line {lineno}: non-integer vertex label in {raw!r}") from None
    if not edges:
        raise InputError("graph text has no edges")
    return Graph.from_edges(edges)


def load_graph(source):
    """A named family (``complete:N``) or a path to an edge-list file."""
    if source.startswith("complete:"):
        try:
            size = int(source.split(":", 1)[1])
        except ValueError:
            raise InputError(f"bad family spec {source!r}") from None
        if size < 2:
            raise InputError("complete:N needs N >= 2")
        return Graph.complete(size)
    path = Path(source)
    if not path.is_file():
        raise InputError(f"no such graph file or family: {source!r}")
    return parse_graph(path.read_text())


def _check_vertex(g, v):
    if not 0 <= v < g.n_vertices:
        raise InputError(f"vertex {v} out of range 0..{g.n_vertices - 1}")


def degree(g, v):
    _check_vertex(g, v)
    return len(g.adj[v])


def d_sigma(g, sigma, i):
    """Neighbours of ``i`` outside ``sigma``; the sink counts as outside."""
    sigma = frozenset(sigma)
    if i not in sigma:
        raise InputError(f"vertex {i} is not in sigma={sorted(sigma)}")
    _check_vertex(g, i)
    return sum(1 for j in g.adj[i] if j not in sigma)


def _reduced(g, sign, sink):
    _check_vertex(g, sink)
    keep = [v for v in range(g.n_vertices) if v != sink]
    return [
        [len(g.adj[u]) if u == v else (sign if g.adjacent(u, v) else 0) for v in keep]
        for u in keep
    ]


def reduced_laplacian(g, sink=0):
    return _reduced(g, -1, sink)


def reduced_signless_laplacian(g, sink=0):
    return _reduced(g, 1, sink)


def spanning_tree_count(g):
    return det_exact(reduced_laplacian(g))


def spanning_trees_brute(g):
    """Count spanning trees by testing every (n_vertices-1)-edge subset."""
    nv = g.n_vertices
    count = 0
    for subset in combinations(g.sorted_edges(), nv - 1):
        parent = list(range(nv))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        ok = True
        for i, j in subset:
            ri, rj = find(i), find(j)
            if ri == rj:
                ok = False
                break
            parent[ri] = rj
        count += ok
    return count


def tu_weighted_count(g):
    """Sum of 4^c(H) over spanning TU-subgraphs H with a single tree component holding 0."""
    check_guard("TU-subgraph sweep", 1 << len(g.edges), TU_GUARD)
    edges = np.array(g.sorted_edges(), dtype=np.int64).reshape(-1, 2)
    return _kernels.tu_weighted_sum(g.n_vertices, edges)


def connected_graphs(n_vertices):
    """All connected labelled graphs on ``0..n_vertices-1`` (edge-mask order)."""
    pairs = list(combinations(range(n_vertices), 2))
    for mask in range(1 << len(pairs)):
        g = Graph(n_vertices, frozenset(p for b, p in enumerate(pairs) if mask >> b & 1))
        if g.is_connected():
            yield g
