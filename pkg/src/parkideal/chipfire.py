"""Set-firing chip dynamics on a graph with sink 0.

A configuration is a tuple of chip counts on vertices 1..n.  Firing a set
sigma moves one chip along every edge leaving sigma: vertex i in sigma loses
d_sigma(i) chips, a non-sink vertex outside sigma gains one chip per
neighbour in sigma, and chips sent to the sink disappear.
"""

from dataclasses import dataclass
from itertools import combinations

from .errors import DomainError, InputError, ResourceError
from .graph import d_sigma

MAX_STEPS = 1_000_000


@dataclass(frozen=True)
class FiringModel:
    """Which vertex sets may fire: ``"singletons"``, ``"cluster"`` or ``"family"``."""

    kind: str
    family: tuple = ()

    @classmethod
    def singletons(cls):
        return cls("singletons")

    @classmethod
    def cluster(cls):
        return cls("cluster")

    @classmethod
    def from_family(cls, sets):
        fam = []
        for s in sets:
            s = tuple(sorted(set(int(v) for v in s)))
            if not s:
                raise InputError("firing sets must be nonempty")
            fam.append(s)
        return cls("family", tuple(sorted(set(fam))))

    def sets(self, n):
        if self.kind == "singletons":
            return [(i,) for i in range(1, n + 1)]
        if self.kind == "cluster":
            return sorted(
                c for r in range(1, n + 1) for c in combinations(range(1, n + 1), r)
            )
        if self.kind == "family":
            for s in self.family:
                if not all(1 <= v <= n for v in s):
                    raise InputError(f"firing set {s} is not inside 1..{n}")
            return list(self.family)
        raise InputError(f"unknown firing model {self.kind!r}")


def _check_config(g, c):
    c = tuple(int(x) for x in c)
    if len(c) != g.n:
        raise InputError(f"configuration needs {g.n} entries, got {len(c)}")
    if any(x < 0 for x in c):
        raise InputError("chip counts must be non-negative")
    return c


def can_fire(g, c, sigma):
    return all(c[i - 1] >= d_sigma(g, sigma, i) for i in sigma)


def fire_set(g, c, sigma):
    c = list(_check_config(g, c))
    sigma = frozenset(sigma)
    if not sigma or not all(1 <= v <= g.n for v in sigma):
        raise InputError(f"sigma must be a nonempty subset of 1..{g.n}")
    for i in sorted(sigma):
        need = d_sigma(g, sigma, i)
        if c[i - 1] < need:
            raise InputError(f"vertex {i} holds {c[i - 1]} chips but must send {need}")
    for i in sigma:
        c[i - 1] -= d_sigma(g, sigma, i)
        for j in g.adj[i]:
            if j != 0 and j not in sigma:
                c[j - 1] += 1
    return tuple(c)


def valid_sets(g, c, model):
    return [s for s in model.sets(g.n) if can_fire(g, c, s)]


def is_stable(g, c, model):
    c = _check_config(g, c)
    return not any(can_fire(g, c, s) for s in model.sets(g.n))


def _firing_table(g, sets):
    """Per set: (required chips per member, net change vector)."""
    table = []
    for s in sets:
        need = [(i, d_sigma(g, s, i)) for i in s]
        delta = [0] * g.n
        for i, d in need:
            delta[i - 1] -= d
            for j in g.adj[i]:
                if j != 0 and j not in s:
                    delta[j - 1] += 1
        table.append((s, need, delta))
    return table


def stabilize(g, c, model, rng=None, trace=None, max_steps=MAX_STEPS):
    """Fire until stable.

    The default policy fires the lexicographically least valid set; with an
    ``rng`` (``random.Random``) a uniformly random valid set is fired instead.
    ``trace`` collects ``(sigma, configuration)`` after each firing.
    """
    if not g.is_connected():
        raise DomainError("stabilization needs a connected graph")
    c = _check_config(g, c)
    table = _firing_table(g, model.sets(g.n))
    for _ in range(max_steps):
        ready = [t for t in table if all(c[i - 1] >= d for i, d in t[1])]
        if not ready:
            return c
        sigma, _, delta = rng.choice(ready) if rng is not None else ready[0]
        c = tuple(x + y for x, y in zip(c, delta))
        if trace is not None:
            trace.append((sigma, c))
    raise ResourceError(f"no stable configuration after {max_steps} firings")


def format_trace(trace):
    return "".join(
        f"step {k}: fire {{{','.join(map(str, s))}}} -> ({','.join(map(str, c))})\n"
        for k, (s, c) in enumerate(trace, 1)
    )
