"""Skeleton power ideals J_G^(k) and graded Hilbert functions by exact rank."""

from dataclasses import dataclass
from itertools import combinations
from math import comb, factorial

from .errors import InputError, check_guard
from .graph import degree, d_sigma
from .linalg import rank
from .monomials import divides, monomial_str

HILBERT_GUARD = 50_000


@dataclass(frozen=True)
class HomogeneousPoly:
    """Homogeneous polynomial as sorted ``((exponents, coeff), ...)``, no zero terms."""

    terms: tuple

    @classmethod
    def from_dict(cls, d):
        items = sorted((tuple(m), int(c)) for m, c in d.items() if c)
        degs = {sum(m) for m, _ in items}
        if len(degs) > 1:
            raise InputError("terms of different total degree")
        return cls(tuple(items))

    @classmethod
    def monomial(cls, m):
        return cls(((tuple(m), 1),))

    @property
    def degree(self):
        return sum(self.terms[0][0]) if self.terms else 0

    @property
    def n(self):
        return len(self.terms[0][0])

    def is_monomial(self):
        return len(self.terms) == 1

    def as_dict(self):
        return dict(self.terms)

    def __str__(self):
        return " + ".join(
            (f"{c}*" if c != 1 else "") + monomial_str(m) for m, c in reversed(self.terms)
        )


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def linear_form_power(n, sigma, power):
    """(sum_{i in sigma} x_i)^power, expanded with multinomial coefficients."""
    sigma = sorted(sigma)
    terms = {}
    for parts in _compositions(power, len(sigma)):
        coeff = factorial(power)
        for p in parts:
            coeff //= factorial(p)
        m = [0] * n
        for i, p in zip(sigma, parts):
            m[i - 1] = p
        terms[tuple(m)] = coeff
    return HomogeneousPoly.from_dict(terms)


def power_ideal_gens(g, k):
    """p_sigma = (sum_{i in sigma} x_i)^{D_sigma} for 1 <= |sigma| <= k+1."""
    n = g.n
    if not 0 <= k <= n - 1:
        raise InputError(f"k must satisfy 0 <= k <= {n - 1}, got {k}")
    gens = []
    for size in range(1, k + 2):
        for sigma in combinations(range(1, n + 1), size):
            power = sum(d_sigma(g, sigma, i) for i in sigma)
            gens.append(linear_form_power(n, sigma, power))
    return gens


def monomial_gens(ideal):
    return [HomogeneousPoly.monomial(m) for m in ideal.gens]


def _monomials_of_degree(n, d):
    return list(_compositions(d, n))


def hilbert_dim(gens, d, n=None):
    """dim_K (S/<gens>)_d by exact rank over Q.

    Monomial generators are quotiented out directly; the remaining generators
    contribute rows ``x^alpha * p`` reduced modulo the monomial part.
    """
    if d < 0:
        raise InputError("degree must be non-negative")
    if n is None:
        if not gens:
            raise InputError("cannot infer the number of variables from no generators")
        n = gens[0].n
    check_guard("Hilbert function degree piece", comb(n + d - 1, d), HILBERT_GUARD)
    mono = [p.terms[0][0] for p in gens if p.is_monomial()]
    others = [p for p in gens if not p.is_monomial()]

    def in_mono(m):
        return any(divides(g, m) for g in mono)

    cols = [m for m in _monomials_of_degree(n, d) if not in_mono(m)]
    if not cols or not others:
        return len(cols)
    col_index = {m: k for k, m in enumerate(cols)}
    rows = []
    for p in others:
        e = p.degree
        if e > d:
            continue
        for alpha in _monomials_of_degree(n, d - e):
            if in_mono(alpha):
                continue
            row = [0] * len(cols)
            for beta, c in p.terms:
                m = tuple(a + b for a, b in zip(alpha, beta))
                k = col_index.get(m)
                if k is not None:
                    row[k] += c
            if any(row):
                rows.append(row)
    return len(cols) - rank(rows)


def pure_power_bound(gens):
    """1 + sum (p_i - 1) from monomial pure powers x_i^p_i; None if one is missing."""
    n = gens[0].n
    best = [None] * n
    for p in gens:
        if not p.is_monomial():
            continue
        m = p.terms[0][0]
        support = [i for i, e in enumerate(m) if e]
        if len(support) == 1:
            i = support[0]
            best[i] = m[i] if best[i] is None else min(best[i], m[i])
    if any(b is None for b in best):
        return None
    return 1 + sum(b - 1 for b in best)


def socle_bound(g):
    """1 + sum_i (deg(i) - 1) + n: safe bound past the top degree of S/M_G^(k), S/J_G^(k)."""
    return 1 + sum(degree(g, i) - 1 for i in range(1, g.n + 1)) + g.n


def hilbert_rows(gens_a, gens_b, max_d):
    """Rows (d, dim A_d, dim B_d, dim (A+B)_d) for d = 0..max_d of the quotients."""
    n = gens_a[0].n
    out = []
    for d in range(max_d + 1):
        out.append(
            (d, hilbert_dim(gens_a, d, n), hilbert_dim(gens_b, d, n), hilbert_dim(gens_a + gens_b, d, n))
        )
    return out


def graded_ideal_equal(gens_a, gens_b, max_d=None):
    """Ideal equality of two artinian homogeneous ideals, degree by degree.

    ``A == B`` iff ``dim A_d == dim B_d == dim (A+B)_d`` for all d; past
    ``max_d`` both quotients must vanish.
    """
    if max_d is None:
        bounds = [pure_power_bound(gens_a), pure_power_bound(gens_b)]
        if None in bounds:
            raise InputError("max_d is required unless both ideals contain pure powers")
        max_d = max(bounds)
    n = gens_a[0].n
    for d in range(max_d + 1):
        ha = hilbert_dim(gens_a, d, n)
        hb = hilbert_dim(gens_b, d, n)
        if ha != hb or hilbert_dim(gens_a + gens_b, d, n) != ha:
            return False
    return True


def hilbert_tsv(rows):
    return "".join(f"{d}\t{a}\t{b}\t{str(a == b == ab).lower()}\n" for d, a, b, ab in rows)
