"""Minimal graded Betti numbers of monomial ideals via upper Koszul complexes.

For an ideal I and a degree b, the simplicial complex

    K^b(I) = { squarefree tau <= b : x^(b - tau) in I }

has reduced homology computing the Betti numbers.  With the indexing used
throughout this package (beta_1 counts minimal generators),

    beta_{i,b}(I) = dim H~_{i-2}(K^b(I)),

and only degrees b in the lcm-lattice of the minimal generators can carry a
nonzero value.
"""

import json
from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import check_guard
from .graph import degree
from .linalg import rank
from .monomials import lcm

LCM_GUARD = 200_000


@dataclass(frozen=True)
class BettiTable:
    """Fine-graded Betti numbers ``{(i, degree): mult}`` with zero entries dropped."""

    fine: dict

    @classmethod
    def from_counts(cls, counts):
        return cls({k: v for k, v in sorted(counts.items()) if v})

    @property
    def coarse(self):
        out = defaultdict(int)
        for (i, b), mult in self.fine.items():
            out[(i, sum(b))] += mult
        return dict(sorted(out.items()))

    def totals(self):
        out = defaultdict(int)
        for (i, _), mult in self.fine.items():
            out[i] += mult
        top = max(out, default=0)
        return tuple(out[i] for i in range(1, top + 1))

    def to_dict(self):
        return {
            "fine": [{"i": i, "degree": list(b), "mult": m} for (i, b), m in self.fine.items()],
            "coarse": [{"i": i, "totaldeg": d, "mult": m} for (i, d), m in self.coarse.items()],
        }

    def to_json(self):
        return json.dumps(self.to_dict())

    def __str__(self):
        lines = []
        for i, total in enumerate(self.totals(), 1):
            shifts = " + ".join(
                f"S(-{d})^{m}" for (j, d), m in self.coarse.items() if j == i
            )
            lines.append(f"beta_{i} = {total}: {shifts}")
        return "\n".join(lines)


def lcm_lattice(gens):
    """Closure of ``gens`` under pairwise lcm (excluding the empty lcm)."""
    gens = [tuple(g) for g in gens]
    found = set(gens)
    frontier = list(found)
    while frontier:
        fresh = []
        for m in frontier:
            for g in gens:
                l = lcm(m, g)
                if l not in found:
                    found.add(l)
                    fresh.append(l)
        check_guard("lcm-lattice closure", len(found), LCM_GUARD)
        frontier = fresh
    return sorted(found)


def upper_koszul_faces(ideal, b):
    """Faces of K^b(I) as sorted tuples of 0-based variable indices."""
    support = [i for i, e in enumerate(b) if e]
    faces = []
    for size in range(len(support) + 1):
        for tau in combinations(support, size):
            m = list(b)
            for i in tau:
                m[i] -= 1
            if tuple(m) in ideal:
                faces.append(tau)
    return faces


def reduced_homology(faces, field=0):
    """Dimensions of reduced homology H~_q for q = -1, 0, 1, ... of a complex.

    ``faces`` must be closed under taking subsets and include ``()`` when
    nonempty.  Returns a dict ``{q: dim}`` with zero entries dropped.
    """
    by_dim = defaultdict(list)
    for f in faces:
        by_dim[len(f) - 1].append(tuple(f))
    if not by_dim:
        return {}
    top = max(by_dim)
    index = {q: {f: k for k, f in enumerate(sorted(fs))} for q, fs in by_dim.items()}
    ranks = {}
    for q in range(0, top + 1):
        rows = []
        lower = index.get(q - 1, {})
        for f in sorted(by_dim.get(q, [])):
            row = [0] * len(lower)
            for pos in range(len(f)):
                row[lower[f[:pos] + f[pos + 1:]]] = -1 if pos % 2 else 1
            rows.append(row)
        ranks[q] = rank(rows, field) if rows and lower else 0
    out = {}
    for q in range(-1, top + 1):
        h = len(by_dim.get(q, [])) - ranks.get(q, 0) - ranks.get(q + 1, 0)
        if h:
            out[q] = h
    return out


def betti_table(ideal, field=0):
    """Fine-graded minimal Betti numbers of ``ideal`` (beta_1 = generators)."""
    counts = {}
    for b in lcm_lattice(ideal.gens):
        for q, h in reduced_homology(upper_koszul_faces(ideal, b), field).items():
            counts[(q + 2, b)] = h
    return BettiTable.from_counts(counts)


def total_betti_formula(n, i):
    """sum_{j=1}^n j * C(j-1, i-1): total Betti numbers of M_{K_{n+1}}^(1)."""
    if not 1 <= i <= n:
        raise ValueError(f"need 1 <= i <= n, got i={i}, n={n}")
    return sum(j * comb(j - 1, i - 1) for j in range(1, n + 1))


def first_betti_graph_formula(g):
    """n + |E| - deg(0): number of minimal generators of M_G^(1)."""
    return g.n + len(g.edges) - degree(g, 0)


def k_polynomial(table, n):
    """Numerator of the fine Hilbert series of S/I: 1 + sum (-1)^i beta_{i,b} x^b."""
    poly = defaultdict(int)
    poly[(0,) * n] += 1
    for (i, b), mult in table.fine.items():
        poly[b] += (-1) ** i * mult
    return {m: c for m, c in poly.items() if c}


def k_polynomial_from_standard(std, n):
    """(sum of standard monomials) * prod (1 - x_j), expanded."""
    poly = defaultdict(int)
    for m in std:
        for signs in range(1 << n):
            shifted = tuple(e + (signs >> j & 1) for j, e in enumerate(m))
            poly[shifted] += (-1) ** bin(signs).count("1")
    return {m: c for m, c in poly.items() if c}

