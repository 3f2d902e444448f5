"""Monomials as exponent tuples, and the skeleton ideals M_G^(k)."""

import json
from dataclasses import dataclass
from itertools import combinations

from .errors import InputError
from .graph import d_sigma

# A monomial in x_1..x_n is a tuple of n non-negative ints.


def _same_length(a, b):
    if len(a) != len(b):
        raise InputError(f"monomials in different rings: {a} vs {b}")


def divides(a, b):
    _same_length(a, b)
    return all(x <= y for x, y in zip(a, b))


def lcm(a, b):
    _same_length(a, b)
    return tuple(max(x, y) for x, y in zip(a, b))


def total_degree(m):
    return sum(m)


def monomial_str(m):
    parts = [f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in enumerate(m, 1) if e]
    return "*".join(parts) if parts else "1"


def monomial_csv(m):
    return ",".join(str(e) for e in m)


def parse_monomial_csv(text):
    try:
        m = tuple(int(t) for t in text.split(","))
    except ValueError:
        raise InputError(f"bad exponent vector {text!r}") from None
    if any(e < 0 for e in m):
        raise InputError(f"negative exponent in {text!r}")
    return m


def minimalize(gens):
    """Minimal generators of the ideal spanned by ``gens``, lex-sorted."""
    uniq = sorted(set(map(tuple, gens)), key=lambda m: (sum(m), m))
    kept = []
    for m in uniq:
        if not any(divides(k, m) for k in kept):
            kept.append(m)
    return sorted(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal in ``n`` variables held by its minimal generators."""

    n: int
    gens: tuple

    @classmethod
    def from_generators(cls, n, gens):
        gens = [tuple(int(e) for e in g) for g in gens]
        for g in gens:
            if len(g) != n:
                raise InputError(f"generator {g} has length {len(g)}, expected {n}")
            if any(e < 0 for e in g):
                raise InputError(f"negative exponent in generator {g}")
        return cls(n, tuple(minimalize(gens)))

    def __contains__(self, m):
        return any(divides(g, m) for g in self.gens)

    def __len__(self):
        return len(self.gens)

    def pure_powers(self):
        """Smallest ``p_i`` with ``x_i^p_i`` in the ideal, ``None`` where absent."""
        best = [None] * self.n
        for g in self.gens:
            support = [i for i, e in enumerate(g) if e]
            if len(support) == 1:
                i = support[0]
                best[i] = g[i] if best[i] is None else min(best[i], g[i])
            elif not support:
                best = [0] * self.n
                break
        return best

    def is_artinian(self):
        return all(p is not None for p in self.pure_powers())

    def __add__(self, other):
        if self.n != other.n:
            raise InputError("ideals live in different rings")
        return MonomialIdeal.from_generators(self.n, self.gens + other.gens)

    def to_json(self):
        return json.dumps({"n": self.n, "generators": [list(g) for g in self.gens]})

    @classmethod
    def from_json(cls, text):
        data = json.loads(text)
        return cls.from_generators(data["n"], data["generators"])

    def __str__(self):
        return "<" + ", ".join(monomial_str(g) for g in self.gens) + ">"


def _check_sigma(g, sigma):
    sigma = frozenset(sigma)
    if not sigma:
        raise InputError("sigma must be nonempty")
    bad = [v for v in sigma if not 1 <= v <= g.n]
    if bad:
        raise InputError(f"sigma must lie in 1..{g.n}, got {sorted(bad)}")
    return sigma


def m_sigma(g, sigma):
    """prod_{i in sigma} x_i^{d_sigma(i)}; d_sigma counts the sink as outside."""
    sigma = _check_sigma(g, sigma)
    return tuple(d_sigma(g, sigma, i) if i in sigma else 0 for i in range(1, g.n + 1))


def skeleton_generators(g, k):
    """All m_sigma with 1 <= |sigma| <= k+1 (redundant list, subset order)."""
    n = g.n
    if n < 1:
        raise InputError("graph needs at least one non-sink vertex")
    if not 0 <= k <= n - 1:
        raise InputError(f"k must satisfy 0 <= k <= {n - 1}, got {k}")
    return [
        m_sigma(g, sigma)
        for size in range(1, k + 2)
        for sigma in combinations(range(1, n + 1), size)
    ]


def skeleton_ideal(g, k):
    return MonomialIdeal.from_generators(g.n, skeleton_generators(g, k))


def parking_ideal(g):
    """The full G-parking function ideal M_G."""
    return skeleton_ideal(g, g.n - 1)
