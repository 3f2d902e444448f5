"""Arrangements of two tropical hyperplanes and their labelled cell complexes.

Conventions
-----------
Points live in R^(n-1).  A point ``x`` is homogenised as ``x* = (x, 0)`` and
likewise each apex, so cone labels run over 1..n and the type of ``x`` is

    T_a(x) = argmax_i (x*_i - a*_i),   T_b(x) = argmax_i (x*_i - b*_i).

A cell is the set of points with a fixed type.  A type pair is realisable
iff a system of difference constraints (equalities inside each argmax set,
strict inequalities against everything outside it) is feasible; this is
decided exactly with Bellman-Ford over weights ``w - s*eps`` compared
lexicographically, and a rational witness is recovered by choosing ``eps``
small enough.

The closure of a cell consists of the cells whose type contains its type
componentwise.  The cell of type ``(T_a, T_b)`` has dimension
``(#components of the tie graph) - 1``, where the tie graph joins two
coordinates lying together in ``T_a`` or together in ``T_b``.
"""

import json
from dataclasses import dataclass, replace
from fractions import Fraction
from itertools import combinations, product
from typing import NamedTuple

from .betti import BettiTable
from .errors import DomainError, InputError, check_guard
from .graph import degree
from .linalg import det_rational
from .monomials import lcm

CELL_GUARD = 4 ** 10


class TypePair(NamedTuple):
    ta: tuple
    tb: tuple

    def union(self, other):
        return TypePair(
            tuple(sorted(set(self.ta) | set(other.ta))),
            tuple(sorted(set(self.tb) | set(other.tb))),
        )

    def contains(self, other):
        return set(other.ta) <= set(self.ta) and set(other.tb) <= set(self.tb)

    def __str__(self):
        fmt = lambda s: "{" + ",".join(map(str, s)) + "}"  # noqa: E731
        return f"({fmt(self.ta)},{fmt(self.tb)})"


def _frac_vector(values):
    return tuple(Fraction(v) for v in values)


@dataclass(frozen=True)
class Arrangement:
    """Two tropical hyperplanes in R^(n-1), apexes stored homogeneously (last entry 0)."""

    apex_a: tuple
    apex_b: tuple

    @classmethod
    def from_apexes(cls, a, b):
        """Build from affine apexes of length n-1."""
        a, b = _frac_vector(a), _frac_vector(b)
        if len(a) != len(b):
            raise InputError("apexes must have the same length")
        return cls(a + (Fraction(0),), b + (Fraction(0),))

    @classmethod
    def from_homogeneous(cls, a_star, b_star):
        """Build from length-n homogeneous apexes (shifted so the last entry is 0)."""
        a_star, b_star = _frac_vector(a_star), _frac_vector(b_star)
        if len(a_star) != len(b_star) or not a_star:
            raise InputError("homogeneous apexes must have the same nonzero length")
        return cls(
            tuple(v - a_star[-1] for v in a_star),
            tuple(v - b_star[-1] for v in b_star),
        )

    @property
    def n(self):
        return len(self.apex_a)

    @property
    def is_generic(self):
        diffs = [b - a for a, b in zip(self.apex_a, self.apex_b)]
        return len(set(diffs)) == len(diffs)


def type_of_point(arr, x):
    x = _frac_vector(x)
    if len(x) != arr.n - 1:
        raise InputError(f"point must have {arr.n - 1} coordinates")
    xs = x + (Fraction(0),)

    def argmax(apex):
        vals = [xi - ai for xi, ai in zip(xs, apex)]
        top = max(vals)
        return tuple(i + 1 for i, v in enumerate(vals) if v == top)

    return TypePair(argmax(arr.apex_a), argmax(arr.apex_b))


def tie_components(tp, n):
    """Connected components (sorted by smallest element) of the tie graph on 1..n."""
    parent = list(range(n + 1))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for block in (tp.ta, tp.tb):
        for v in block[1:]:
            parent[find(v)] = find(block[0])
    comps = {}
    for v in range(1, n + 1):
        comps.setdefault(find(v), []).append(v)
    return sorted((tuple(c) for c in comps.values()), key=lambda c: c[0])


def _constraint_edges(arr, tp):
    # Edge (u, v, w, strict) encodes y_v - y_u <= w  (or < w when strict),
    # on 0-based coordinates of the homogeneous point y.
    n = arr.n
    edges = []
    for apex, block in ((arr.apex_a, tp.ta), (arr.apex_b, tp.tb)):
        idx = [i - 1 for i in block]
        r = idx[0]
        for i in idx[1:]:
            edges.append((r, i, apex[i] - apex[r], 0))
            edges.append((i, r, apex[r] - apex[i], 0))
        inside = set(idx)
        for k in range(n):
            if k not in inside:
                edges.append((r, k, apex[k] - apex[r], 1))
    return edges


def realize(arr, tp):
    """Rational point of type ``tp``, or ``None`` when the type is not realised."""
    n = arr.n
    edges = _constraint_edges(arr, tp)
    # distance = (W, K) standing for W + K*eps; start from a virtual source
    dist = [(Fraction(0), 0)] * n

    def relax():
        changed = False
        for u, v, w, s in edges:
            cand = (dist[u][0] + w, dist[u][1] - s)
            if cand < dist[v]:
                dist[v] = cand
                changed = True
        return changed

    for _ in range(n):
        if not relax():
            break
    if relax():
        return None
    eps = Fraction(1)
    for u, v, w, s in edges:
        # slack y_u + w - y_v = gap + coeff*eps; gap == 0 already forces coeff >= s
        gap = dist[u][0] + w - dist[v][0]
        coeff = dist[u][1] - dist[v][1]
        if gap > 0 and coeff < 0:
            eps = min(eps, gap / (2 * -coeff))
    y = [W + K * eps for W, K in dist]
    point = tuple(yi - y[-1] for yi in y[:-1])
    got = type_of_point(arr, point)
    if got != tp:
        raise AssertionError(f"witness {point} has type {got}, expected {tp}")
    return point


@dataclass(frozen=True)
class Cell:
    type: TypePair
    dim: int
    witness: tuple
    label: tuple = None


@dataclass(frozen=True)
class CellComplex:
    """Cells in lex order of type; ``faces`` holds index pairs (lower, higher)
    meaning the lower cell lies in the closure of the higher one."""

    arrangement: Arrangement
    cells: tuple
    faces: frozenset

    @property
    def n(self):
        return self.arrangement.n

    def codim(self, cell):
        return self.n - 1 - cell.dim

    def maximal_cells(self):
        return [k for k, c in enumerate(self.cells) if c.dim == self.n - 1]

    def covering_pairs(self):
        """(lower, higher) face pairs whose dimensions differ by one."""
        return sorted(
            (lo, hi) for lo, hi in self.faces if self.cells[hi].dim - self.cells[lo].dim == 1
        )

    def cofaces(self, k):
        return sorted(hi for lo, hi in self.faces if lo == k)

    def f_vector_by_codim(self):
        counts = [0] * self.n
        for c in self.cells:
            counts[self.codim(c)] += 1
        return tuple(counts)

    def labeled(self, g):
        if g.n != self.n:
            raise InputError(f"graph has {g.n} non-sink vertices, complex needs {self.n}")
        cells = tuple(replace(c, label=monomial_label(c, g)) for c in self.cells)
        return replace(self, cells=cells)

    def to_dict(self):
        return {
            "n": self.n,
            "apex_a": [str(v) for v in self.arrangement.apex_a[:-1]],
            "apex_b": [str(v) for v in self.arrangement.apex_b[:-1]],
            "cells": [
                {
                    "Ta": list(c.type.ta),
                    "Tb": list(c.type.tb),
                    "dim": c.dim,
                    "label": None if c.label is None else list(c.label),
                    "witness": [str(v) for v in c.witness],
                }
                for c in self.cells
            ],
            "faces": [list(p) for p in sorted(self.faces)],
        }

    def to_json(self):
        return json.dumps(self.to_dict())


def _nonempty_subsets(n):
    return [c for r in range(1, n + 1) for c in combinations(range(1, n + 1), r)]


def enumerate_cells(arr, g=None):
    """All realisable types with witnesses, dimensions and the face relation.

    With a graph ``g`` the cells also carry monomial labels.
    """
    n = arr.n
    check_guard("tropical cell enumeration", 4 ** n, CELL_GUARD)
    subsets = _nonempty_subsets(n)
    cells = []
    for ta, tb in product(subsets, subsets):
        tp = TypePair(ta, tb)
        point = realize(arr, tp)
        if point is not None:
            cells.append(Cell(tp, len(tie_components(tp, n)) - 1, point))
    cells.sort(key=lambda c: c.type)
    faces = set()
    for lo, c_lo in enumerate(cells):
        for hi, c_hi in enumerate(cells):
            if lo != hi and c_lo.type.contains(c_hi.type):
                if c_lo.dim >= c_hi.dim:
                    raise AssertionError(f"face {c_lo.type} of {c_hi.type} is not lower-dimensional")
                faces.add((lo, hi))
    cx = CellComplex(arr, tuple(cells), frozenset(faces))
    return cx.labeled(g) if g is not None else cx


def monomial_label(cell, g):
    """prod x_i^{d_i}: d_i = deg(i) in both parts of the type, deg(i)-1 in one, else 0."""
    tp = cell.type if isinstance(cell, Cell) else cell
    ta, tb = set(tp.ta), set(tp.tb)
    out = []
    for i in range(1, g.n + 1):
        hits = (i in ta) + (i in tb)
        out.append(0 if hits == 0 else degree(g, i) - (2 - hits))
    return tuple(out)


def betti_from_complex(cx):
    """beta_{i,b} = number of cells of codimension i-1 labelled b."""
    counts = {}
    for c in cx.cells:
        if c.label is None:
            raise InputError("complex is not labelled")
        key = (cx.codim(c) + 1, c.label)
        counts[key] = counts.get(key, 0) + 1
    return BettiTable.from_counts(counts)


def verify_minimality(cx):
    """True iff labels differ across every proper face containment."""
    return all(cx.cells[lo].label != cx.cells[hi].label for lo, hi in cx.faces)


def label_lcm_coherent(cx):
    """Every non-maximal label equals the lcm of the maximal cells above it."""
    top = cx.n - 1
    for k, c in enumerate(cx.cells):
        if c.dim == top:
            continue
        above = [cx.cells[h].label for h in cx.cofaces(k) if cx.cells[h].dim == top]
        acc = tuple([0] * cx.n)
        for lab in above:
            acc = lcm(acc, lab)
        if not above or acc != c.label:
            return False
    return True


def union_property_holds(cx):
    """Type of each non-maximal cell is the componentwise union over its cofaces."""
    for k, c in enumerate(cx.cells):
        if c.dim == cx.n - 1:
            continue
        up = cx.cofaces(k)
        if not up:
            return False
        acc = cx.cells[up[0]].type
        for h in up[1:]:
            acc = acc.union(cx.cells[h].type)
        if acc != c.type:
            return False
    return True


def _coords(cell, n, vector):
    # coordinates of a direction vector in the component basis of ``cell``
    return [vector[comp[0] - 1] for comp in tie_components(cell.type, n) if n not in comp]


def incidence(cx, hi, lo):
    """Incidence number [hi : lo] (+1/-1) for a facet ``lo`` of ``hi``.

    Each cell is oriented by its tie components not containing n, ordered by
    smallest element.  The sign compares (inward vector, basis of lo) with the
    basis of hi.
    """
    n = cx.n
    F, G = cx.cells[hi], cx.cells[lo]
    comps_f = [c for c in tie_components(F.type, n) if n not in c]
    comps_g = [c for c in tie_components(G.type, n) if n not in c]
    inward = [wf - wg for wf, wg in zip(F.witness, G.witness)]
    rows = [_coords(F, n, inward)]
    for cg in comps_g:
        rows.append([1 if set(cf) <= set(cg) else 0 for cf in comps_f])
    det = det_rational(rows)
    if det == 0:
        raise AssertionError(f"degenerate incidence between {F.type} and {G.type}")
    return 1 if det > 0 else -1


def coboundary_matrices(cx):
    """Integer matrices D_d : C^d -> C^(d+1) (rows: (d+1)-cells, cols: d-cells)."""
    by_dim = {}
    for k, c in enumerate(cx.cells):
        by_dim.setdefault(c.dim, []).append(k)
    pos = {k: i for ks in by_dim.values() for i, k in enumerate(ks)}
    mats = {}
    for d in range(cx.n - 1):
        rows, cols = by_dim.get(d + 1, []), by_dim.get(d, [])
        mats[d] = [[0] * len(cols) for _ in rows]
    for lo, hi in cx.covering_pairs():
        d = cx.cells[lo].dim
        mats[d][pos[hi]][pos[lo]] = incidence(cx, hi, lo)
    return mats


def coboundary_squares_vanish(cx):
    mats = coboundary_matrices(cx)
    for d in range(cx.n - 2):
        a, b = mats[d], mats[d + 1]
        for row in b:
            for j in range(len(a[0]) if a else 0):
                if sum(row[t] * a[t][j] for t in range(len(row))):
                    return False
    return True


def euler_characteristic(cx):
    """sum over cells of (-1)^codim; equals 1 for a subdivision of R^(n-1)."""
    return sum((-1) ** cx.codim(c) for c in cx.cells)


def equality_rank_dimension(cell, arr):
    """Dimension of the affine hull from the rank of the equality constraints."""
    from .linalg import rank_exact

    n = arr.n
    rows = []
    for block in (cell.type.ta, cell.type.tb):
        for v in block[1:]:
            row = [0] * n
            row[block[0] - 1] += 1
            row[v - 1] -= 1
            rows.append(row)
    rows.append([0] * (n - 1) + [1])
    return n - rank_exact(rows)


def tropical_segment_point(x, y, lam, mu):
    """Point max(lam + x*, mu + y*) of the max-tropical segment, back in R^(n-1)."""
    xs = _frac_vector(x) + (Fraction(0),)
    ys = _frac_vector(y) + (Fraction(0),)
    z = [max(Fraction(lam) + a, Fraction(mu) + b) for a, b in zip(xs, ys)]
    return tuple(v - z[-1] for v in z[:-1])


# ---------------------------------------------------------------------------
# apexes


def generic_apex(n):
    """b = (1, 2, ..., n-1) against a = 0: all differences b*_i - a*_i distinct."""
    return tuple(Fraction(i) for i in range(1, n))


def clique_blocks(g):
    """Removed cliques of a cone graph, or raise DomainError.

    ``g`` must have the sink adjacent to every vertex, and the complement of
    ``g`` on 1..n must be a disjoint union of cliques.  Returns the cliques of
    size >= 2 sorted by smallest vertex.
    """
    n = g.n
    if n < 1:
        raise DomainError("graph has no non-sink vertices")
    if len(g.adj[0]) != n:
        raise DomainError("sink must be adjacent to every vertex (cone graph)")
    missing = {v: {w for w in range(1, n + 1) if w != v and not g.adjacent(v, w)} for v in range(1, n + 1)}
    blocks, seen = [], set()
    for v in range(1, n + 1):
        if v in seen or not missing[v]:
            continue
        block = {v} | missing[v]
        for w in block:
            if missing[w] | {w} != block:
                raise DomainError("complement of the graph on 1..n is not a disjoint union of cliques")
        seen |= block
        blocks.append(tuple(sorted(block)))
    return blocks


def clique_cone_apex_homogeneous(g):
    """Homogeneous apex b* (length n, original labels) from the clique-removal recipe.

    Vertices are relabelled so the cliques occupy the first contiguous blocks,
    then the recipe is applied: clique t gets value t; with leftover vertices
    they get d+1, d+2, ...; when the cliques cover everything, the last clique
    gets 0 (its final member being the homogenising coordinate).
    """
    n = g.n
    blocks = clique_blocks(g)
    rest = [v for v in range(1, n + 1) if not any(v in b for b in blocks)]
    order = [v for b in blocks for v in b] + rest
    d = len(blocks)
    values = []
    if rest:
        for t, b in enumerate(blocks, 1):
            values += [t] * len(b)
        values += list(range(d + 1, d + 1 + len(rest)))
    else:
        for t, b in enumerate(blocks[:-1], 1):
            values += [t] * len(b)
        values += [0] * len(blocks[-1])
    b_star = [Fraction(0)] * n
    for v, val in zip(order, values):
        b_star[v - 1] = Fraction(val)
    return tuple(b_star)


def clique_cone_apex(g):
    """Affine apex b (length n-1) against a = 0 for a clique-removal cone graph.

    The complete graph (nothing removed) gets the generic apex (1, ..., n-1).
    """
    if not clique_blocks(g):
        return generic_apex(g.n)
    b_star = clique_cone_apex_homogeneous(g)
    return tuple(v - b_star[-1] for v in b_star[:-1])


def arrangement_for_graph(g, apex=None):
    """Arrangement with a = 0 and b = ``apex`` (default: :func:`clique_cone_apex`)."""
    b = clique_cone_apex(g) if apex is None else _frac_vector(apex)
    if len(b) != g.n - 1:
        raise InputError(f"apex needs {g.n - 1} coordinates")
    return Arrangement.from_apexes([0] * (g.n - 1), b)


def tropical_betti(g, apex=None):
    cx = enumerate_cells(arrangement_for_graph(g, apex), g)
    return betti_from_complex(cx), cx


# ---------------------------------------------------------------------------
# SVG drawing for n = 3


def arrangement_svg(arr, size=400, span=None):
    """Line drawing of a planar (n = 3) arrangement."""
    if arr.n != 3:
        raise InputError("SVG output needs n = 3 (a planar arrangement)")
    apexes = [arr.apex_a[:2], arr.apex_b[:2]]
    coords = [float(v) for p in apexes for v in p]
    lo, hi = min(coords), max(coords)
    pad = span if span is not None else max(2.0, (hi - lo))
    lo, hi = lo - pad, hi + pad
    scale = size / (hi - lo)

    def sx(v):
        return (v - lo) * scale

    def sy(v):
        return size - (v - lo) * scale

    reach = hi - lo
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}">']
    for colour, (ax, ay) in zip(("#1f77b4", "#d62728"), apexes):
        ax, ay = float(ax), float(ay)
        for dx, dy in ((1, 1), (0, -1), (-1, 0)):
            out.append(
                f'<line x1="{sx(ax):.2f}" y1="{sy(ay):.2f}" '
                f'x2="{sx(ax + dx * reach):.2f}" y2="{sy(ay + dy * reach):.2f}" '
                f'stroke="{colour}" stroke-width="2"/>'
            )
        out.append(f'<circle cx="{sx(ax):.2f}" cy="{sy(ay):.2f}" r="4" fill="{colour}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
