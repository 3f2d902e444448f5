"""Hot enumeration kernels.

Every kernel has two implementations with identical results:

* a loop version compiled with ``numba.njit``;
* a vectorised numpy version (chunked so memory stays bounded).

The numba path is used when numba imports cleanly and the environment
variable ``PARKIDEAL_NO_NUMBA`` is unset or ``0``.  ``set_backend`` switches
at runtime (tests and the benchmark use it to compare both paths).

All kernels work on small non-negative int64 data; big-integer arithmetic
stays in pure Python elsewhere in the package.
"""

import logging
import os
from itertools import combinations

import numpy as np

try:
    import numba

    logging.getLogger("numba").setLevel(logging.WARNING)
    HAVE_NUMBA = True
    _jit = numba.njit(cache=True)
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

    def _jit(func):
        return func


NO_NUMBA_ENV = "PARKIDEAL_NO_NUMBA"

_CHUNK = 1 << 16


def _default_backend():
    if not HAVE_NUMBA:
        return "numpy"
    if os.environ.get(NO_NUMBA_ENV, "") not in ("", "0"):
        return "numpy"
    return "numba"


_backend = _default_backend()


def get_backend():
    return _backend


def set_backend(name):
    """Select ``"numba"`` or ``"numpy"``; returns the previous backend."""
    global _backend
    if name not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "numba" and not HAVE_NUMBA:
        raise RuntimeError("numba is not available")
    previous, _backend = _backend, name
    return previous


# ---------------------------------------------------------------------------
# standard monomials in a box


@_jit
def _standard_mask_nb(gens, box):
    n = box.shape[0]
    total = 1
    for i in range(n):
        total *= box[i]
    out = np.ones(total, dtype=np.bool_)
    pt = np.zeros(n, dtype=np.int64)
    g = gens.shape[0]
    for idx in range(total):
        for r in range(g):
            div = True
            for i in range(n):
                if gens[r, i] > pt[i]:
                    div = False
                    break
            if div:
                out[idx] = False
                break
        i = n - 1
        while i >= 0:
            pt[i] += 1
            if pt[i] < box[i]:
                break
            pt[i] = 0
            i -= 1
    return out


def _standard_mask_np(gens, box):
    total = int(np.prod(box))
    out = np.empty(total, dtype=bool)
    shape = tuple(int(b) for b in box)
    for start in range(0, total, _CHUNK):
        stop = min(total, start + _CHUNK)
        pts = np.stack(np.unravel_index(np.arange(start, stop), shape), axis=1)
        divisible = (pts[:, None, :] >= gens[None, :, :]).all(axis=2).any(axis=1)
        out[start:stop] = ~divisible
    return out


def standard_mask(gens, box):
    """Boolean mask over the box ``prod [0, box_i)`` in C (lex) order.

    ``True`` marks exponent vectors divisible by none of the rows of ``gens``.
    """
    gens = np.ascontiguousarray(gens, dtype=np.int64).reshape(-1, len(box))
    box = np.ascontiguousarray(box, dtype=np.int64)
    if _backend == "numba":
        return _standard_mask_nb(gens, box)
    return _standard_mask_np(gens, box)


def box_points(box, mask):
    """Exponent vectors (rows) of the box positions selected by ``mask``."""
    idx = np.flatnonzero(mask)
    if len(box) == 0:
        return np.zeros((len(idx), 0), dtype=np.int64)
    return np.stack(np.unravel_index(idx, tuple(int(b) for b in box)), axis=1)


# ---------------------------------------------------------------------------
# TU-subgraph weighted count
#
# A spanning subgraph qualifies when the component of vertex 0 is a tree and
# every other component is unicyclic with an odd cycle.  Edge count of such a
# subgraph is always n_vertices - 1, so only subsets of that size are visited.


@_jit
def _tu_weighted_sum_nb(nv, edges):
    m = edges.shape[0]
    k = nv - 1
    if k > m:
        return 0
    idx = np.arange(k)
    parent = np.empty(nv, dtype=np.int64)
    parity = np.empty(nv, dtype=np.int64)
    verts = np.empty(nv, dtype=np.int64)
    ecount = np.empty(nv, dtype=np.int64)
    odd = np.empty(nv, dtype=np.bool_)
    total = 0
    while True:
        for v in range(nv):
            parent[v] = v
            parity[v] = 0
            verts[v] = 1
            ecount[v] = 0
            odd[v] = False
        for t in range(k):
            u = edges[idx[t], 0]
            v = edges[idx[t], 1]
            ru = u
            pu = 0
            while parent[ru] != ru:
                pu ^= parity[ru]
                ru = parent[ru]
            rv = v
            pv = 0
            while parent[rv] != rv:
                pv ^= parity[rv]
                rv = parent[rv]
            if ru == rv:
                ecount[ru] += 1
                if pu == pv:
                    odd[ru] = True
            else:
                parent[rv] = ru
                parity[rv] = pu ^ pv ^ 1
                verts[ru] += verts[rv]
                ecount[ru] += ecount[rv] + 1
                odd[ru] = odd[ru] or odd[rv]
        r0 = 0
        while parent[r0] != r0:
            r0 = parent[r0]
        ok = ecount[r0] == verts[r0] - 1
        c = 0
        if ok:
            for v in range(nv):
                if parent[v] == v and v != r0:
                    if ecount[v] == verts[v] and odd[v]:
                        c += 1
                    else:
                        ok = False
                        break
        if ok:
            total += 4**c
        i = k - 1
        while i >= 0 and idx[i] == m - k + i:
            i -= 1
        if i < 0:
            break
        idx[i] += 1
        for j in range(i + 1, k):
            idx[j] = idx[j - 1] + 1
    return total


def _tu_weighted_sum_np(nv, edges):
    m = edges.shape[0]
    k = nv - 1
    if k > m:
        return 0
    combos = list(combinations(range(m), k))
    total = 0
    for start in range(0, len(combos), _CHUNK):
        block = np.array(combos[start:start + _CHUNK], dtype=np.int64).reshape(-1, k)
        s = block.shape[0]
        rows = np.arange(s)
        parent = np.tile(np.arange(nv), (s, 1))
        parity = np.zeros((s, nv), dtype=np.int64)
        verts = np.ones((s, nv), dtype=np.int64)
        ecount = np.zeros((s, nv), dtype=np.int64)
        odd = np.zeros((s, nv), dtype=bool)

        def find(x):
            p = np.zeros(s, dtype=np.int64)
            for _ in range(nv):
                p ^= parity[rows, x]
                x = parent[rows, x]
            return x, p

        for t in range(k):
            u = edges[block[:, t], 0]
            v = edges[block[:, t], 1]
            ru, pu = find(u)
            rv, pv = find(v)
            same = ru == rv
            sr = rows[same]
            ecount[sr, ru[same]] += 1
            odd[sr, ru[same]] |= pu[same] == pv[same]
            dr = rows[~same]
            a, b = ru[~same], rv[~same]
            parent[dr, b] = a
            parity[dr, b] = pu[~same] ^ pv[~same] ^ 1
            verts[dr, a] += verts[dr, b]
            ecount[dr, a] += ecount[dr, b] + 1
            odd[dr, a] |= odd[dr, b]
        r0, _ = find(np.zeros(s, dtype=np.int64))
        is_root = parent == np.arange(nv)[None, :]
        other = is_root.copy()
        other[rows, r0] = False
        good_other = (ecount == verts) & odd
        ok = (ecount[rows, r0] == verts[rows, r0] - 1) & np.all(~other | good_other, axis=1)
        c = other.sum(axis=1)
        total += int(np.sum(np.where(ok, 4 ** c, 0)))
    return total


def tu_weighted_sum(nv, edges):
    edges = np.ascontiguousarray(edges, dtype=np.int64).reshape(-1, 2)
    if _backend == "numba":
        return int(_tu_weighted_sum_nb(nv, edges))
    return _tu_weighted_sum_np(nv, edges)


# ---------------------------------------------------------------------------
# rooted forests on [n] by inversions
#
# A forest is a map parent: {1..n} -> {0..n} (0 = "is a root") without cycles.
# inv counts pairs i < j with j a proper ancestor of i.


@_jit
def _forest_inversions_nb(n):
    counts = np.zeros(n * (n - 1) // 2 + 1, dtype=np.int64)
    par = np.zeros(n + 1, dtype=np.int64)
    base = n + 1
    total = 1
    for _ in range(n):
        total *= base
    for _ in range(total):
        inv = 0
        ok = True
        for i in range(1, n + 1):
            cur = par[i]
            steps = 0
            while cur != 0:
                if cur > i:
                    inv += 1
                cur = par[cur]
                steps += 1
                if steps > n:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            counts[inv] += 1
        i = 1
        while i <= n:
            par[i] += 1
            if par[i] < base:
                break
            par[i] = 0
            i += 1
    return counts


def _forest_inversions_np(n):
    counts = np.zeros(n * (n - 1) // 2 + 1, dtype=np.int64)
    base = n + 1
    total = base ** n
    for start in range(0, total, _CHUNK):
        code = np.arange(start, min(total, start + _CHUNK), dtype=np.int64)
        s = code.shape[0]
        rows = np.arange(s)
        par = np.zeros((s, n + 1), dtype=np.int64)
        for i in range(1, n + 1):
            par[:, i] = code % base
            code = code // base
        inv = np.zeros(s, dtype=np.int64)
        acyclic = np.ones(s, dtype=bool)
        for i in range(1, n + 1):
            cur = par[:, i]
            for _ in range(n):
                inv += cur > i
                cur = par[rows, cur]
            acyclic &= cur == 0
        counts += np.bincount(inv[acyclic], minlength=counts.shape[0])[: counts.shape[0]]
    return counts


def forest_inversion_counts(n):
    """Array ``c`` with ``c[t]`` = number of rooted forests on [n] with t inversions."""
    if _backend == "numba":
        return _forest_inversions_nb(n)
    return _forest_inversions_np(n)


# ---------------------------------------------------------------------------
# u-parking functions


@_jit
def _u_parking_nb(u):
    n = u.shape[0]
    prefix = np.cumsum(u)
    top = prefix[n - 1]
    if top <= 0:
        return 0
    total = 1
    for _ in range(n):
        total *= top
    pt = np.zeros(n, dtype=np.int64)
    count = 0
    for _ in range(total):
        srt = np.sort(pt)
        ok = True
        for j in range(n):
            if srt[j] >= prefix[j]:
                ok = False
                break
        if ok:
            count += 1
        i = n - 1
        while i >= 0:
            pt[i] += 1
            if pt[i] < top:
                break
            pt[i] = 0
            i -= 1
    return count


def _u_parking_np(u):
    n = u.shape[0]
    prefix = np.cumsum(u)
    top = int(prefix[-1])
    if top <= 0:
        return 0
    total = top ** n
    count = 0
    for start in range(0, total, _CHUNK):
        pts = np.stack(
            np.unravel_index(np.arange(start, min(total, start + _CHUNK)), (top,) * n), axis=1
        )
        count += int(np.all(np.sort(pts, axis=1) < prefix[None, :], axis=1).sum())
    return count


def u_parking_enumerate(u):
    """Count sequences in ``[0, sum(u))^n`` whose sorted form obeys ``c_j < u_1+...+u_j``."""
    u = np.ascontiguousarray(u, dtype=np.int64)
    if u.shape[0] == 0:
        return 1
    if _backend == "numba":
        return int(_u_parking_nb(u))
    return _u_parking_np(u)


# ---------------------------------------------------------------------------
# rank over GF(p)


@_jit
def _inv_mod(a, p):
    t, new_t = 0, 1
    r, new_r = p, a % p
    while new_r != 0:
        q = r // new_r
        t, new_t = new_t, t - q * new_t
        r, new_r = new_r, r - q * new_r
    return t % p


@_jit
def _rank_mod_p_nb(a, p):
    rows, cols = a.shape
    a = a % p
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = -1
        for i in range(r, rows):
            if a[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(cols):
                tmp = a[r, j]
                a[r, j] = a[piv, j]
                a[piv, j] = tmp
        inv = _inv_mod(a[r, c], p)
        for i in range(r + 1, rows):
            f = a[i, c] * inv % p
            if f != 0:
                for j in range(c, cols):
                    a[i, j] = (a[i, j] - f * a[r, j]) % p
        r += 1
    return r


def _rank_mod_p_np(a, p):
    a = a % p
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        f = (a[r + 1:, c] * inv) % p
        a[r + 1:, c:] = (a[r + 1:, c:] - f[:, None] * a[r, c:][None, :]) % p
        r += 1
    return r


def rank_mod_p(matrix, p):
    a = np.array(matrix, dtype=np.int64)
    if a.ndim != 2 or a.size == 0:
        return 0
    if _backend == "numba":
        return int(_rank_mod_p_nb(a, p))
    return _rank_mod_p_np(a, p)
