"""Standard monomials, parking-function counts and generating functions."""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

import numpy as np

from . import _kernels
from .errors import DomainError, InputError, check_guard
from .graph import d_sigma, reduced_signless_laplacian
from .linalg import det_exact
from .monomials import parking_ideal, skeleton_ideal

FOREST_GUARD = 9 ** 8
BOX_GUARD = 50_000_000


@dataclass(frozen=True)
class QPolynomial:
    """Integer polynomial in q; ``coeffs[d]`` is the coefficient of q^d."""

    coeffs: tuple

    def __post_init__(self):
        c = [int(x) for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __call__(self, q):
        total = 0
        for c in reversed(self.coeffs):
            total = total * q + c
        return total

    def __add__(self, other):
        size = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (size - len(self.coeffs))
        b = other.coeffs + (0,) * (size - len(other.coeffs))
        return QPolynomial(tuple(x + y for x, y in zip(a, b)))

    def __mul__(self, other):
        if not self.coeffs or not other.coeffs:
            return QPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            for j, y in enumerate(other.coeffs):
                out[i + j] += x * y
        return QPolynomial(tuple(out))

    def reciprocal(self, shift):
        """q^shift * p(1/q); requires shift >= degree."""
        if shift < self.degree:
            raise ValueError("shift smaller than degree leaves negative powers")
        c = list(self.coeffs) + [0] * (shift + 1 - len(self.coeffs))
        return QPolynomial(tuple(reversed(c)))

    def __str__(self):
        terms = []
        for d in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[d]
            if c == 0:
                continue
            mag = abs(c)
            if d == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + ("q" if d == 1 else f"q^{d}")
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            return "0"
        out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            out += sign + body
        return out


def _box(ideal):
    powers = ideal.pure_powers()
    if any(p is None for p in powers):
        missing = [i + 1 for i, p in enumerate(powers) if p is None]
        raise DomainError(f"ideal is not artinian (no pure power of x{missing})")
    return np.array(powers, dtype=np.int64)


def standard_points(ideal):
    """Standard exponent vectors as an int64 array, rows in lex order."""
    box = _box(ideal)
    check_guard("standard-monomial box", int(np.prod(box)), BOX_GUARD)
    gens = np.array(ideal.gens, dtype=np.int64).reshape(-1, ideal.n)
    # cheap rejections first
    gens = gens[np.argsort(gens.sum(axis=1), kind="stable")]
    mask = _kernels.standard_mask(gens, box)
    return _kernels.box_points(box, mask)


def standard_monomials(ideal):
    return [tuple(int(e) for e in row) for row in standard_points(ideal)]


def count_standard(ideal):
    return int(standard_points(ideal).shape[0])


def count_formula_one_skeleton(n):
    if n < 1:
        raise InputError("n must be >= 1")
    return (2 * n - 1) * (n - 1) ** (n - 1)


def is_g_parking(g, b):
    """Standard-monomial test of ``x^b`` against the full parking ideal M_G."""
    b = tuple(b)
    if len(b) != g.n or any(e < 0 for e in b):
        raise InputError(f"need {g.n} non-negative entries, got {b}")
    return b not in parking_ideal(g)


def is_g_parking_direct(g, b):
    """Subset-by-subset definition: each nonempty sigma has some b_i < d_sigma(i)."""
    verts = range(1, g.n + 1)
    for size in range(1, g.n + 1):
        for sigma in combinations(verts, size):
            if all(b[i - 1] >= d_sigma(g, sigma, i) for i in sigma):
                return False
    return True


def degree_generating_function(ideal):
    pts = standard_points(ideal)
    counts = np.bincount(pts.sum(axis=1)) if pts.shape[0] else np.zeros(0, dtype=np.int64)
    return QPolynomial(tuple(int(c) for c in counts))


def u_vector(n, k):
    """(n-k, 0 x (n-k-1), 1 x k): the u-vector matching M_n^(k)."""
    if not 0 <= k <= n - 1:
        raise InputError(f"k must satisfy 0 <= k <= {n - 1}")
    return (n - k,) + (0,) * (n - k - 1) + (1,) * k


def u_parking_count(u):
    u = tuple(int(x) for x in u)
    if any(x < 0 for x in u):
        raise InputError("u entries must be non-negative")
    top = sum(u)
    check_guard("u-parking enumeration", top ** len(u), BOX_GUARD)
    return _kernels.u_parking_enumerate(np.array(u, dtype=np.int64))


def yan_formula(n, k):
    """sum_j C(n,j)(k+1-j)(k+1)^(j-1)(n-k)^(n-j), evaluated over Q."""
    if not 0 <= k <= n - 1:
        raise InputError(f"k must satisfy 0 <= k <= {n - 1}")
    total = sum(
        comb(n, j) * (k + 1 - j) * Fraction(k + 1) ** (j - 1) * (n - k) ** (n - j)
        for j in range(k + 1)
    )
    if total.denominator != 1:
        raise ArithmeticError(f"non-integral value {total}")
    return int(total)


def inversion_polynomial(n):
    """I_n(q): rooted forests on [n] counted by inversions (brute force)."""
    if n < 0:
        raise InputError("n must be >= 0")
    if n == 0:
        return QPolynomial((1,))
    check_guard("rooted-forest enumeration", (n + 1) ** n, FOREST_GUARD)
    return QPolynomial(tuple(int(c) for c in _kernels.forest_inversion_counts(n)))


def parking_polynomial(n):
    """P_n(q) from the standard monomials of M_{K_{n+1}}."""
    from .graph import Graph

    return degree_generating_function(parking_ideal(Graph.complete(n + 1)))


def survey_row(g):
    """(dim S/M_G^(1), det reduced signless Laplacian, difference)."""
    # one non-sink vertex: the 1-skeleton is the whole ideal
    dim = count_standard(skeleton_ideal(g, min(1, g.n - 1)))
    det = det_exact(reduced_signless_laplacian(g))
    return dim, det, dim - det


def _rooted_graphs(max_vertices):
    import networkx as nx

    from .graph import Graph

    seen = set()
    for h in nx.graph_atlas_g():
        nv = h.number_of_nodes()
        if nv < 2 or nv > max_vertices or not nx.is_connected(h):
            continue
        for sink in range(nv):
            order = [sink] + [v for v in range(nv) if v != sink]
            perm = {v: i for i, v in enumerate(order)}
            g = Graph.from_edges(((perm[u], perm[v]) for u, v in h.edges()), nv)
            key = (nv, g.edge_key())
            if key not in seen:
                seen.add(key)
                yield g


def inequality_survey(max_vertices=5, jobs=1):
    """Rows (graph, dim, det, dim - det) for connected graphs with a chosen sink.

    Graphs come from the networkx atlas (one per isomorphism class) with every
    vertex tried as the sink.  Nothing is asserted.
    """
    if not 2 <= max_vertices <= 7:
        raise InputError("max_vertices must be between 2 and 7")
    graphs = sorted(_rooted_graphs(max_vertices), key=lambda g: (g.n_vertices, g.edge_key()))
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(jobs) as pool:
            rows = list(pool.map(survey_row, graphs, chunksize=16))
    else:
        rows = [survey_row(g) for g in graphs]
    return [(g, *row) for g, row in zip(graphs, rows)]
