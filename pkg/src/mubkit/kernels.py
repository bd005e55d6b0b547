"""Hot numeric kernels, each with a numba loop version and a numpy version.

The public functions dispatch on :data:`mubkit._accel.USE_NUMBA`. Both
implementations stay importable (``*_numba`` / ``*_numpy``) so tests and the
benchmark can compare them directly.
"""
import numpy as np

from mubkit._accel import USE_NUMBA, njit

__all__ = [
    "quadratic_phase_sum",
    "overlap_extremes",
    "coprime_adjacency",
    "max_cliques_through_zero",
    "backend",
]


def backend():
    return "numba" if USE_NUMBA else "numpy"


# ---------------------------------------------------------------------------
# sum_{n<count} exp(2 pi i (a n^2 + b n) / M), exponents reduced exactly mod M
# ---------------------------------------------------------------------------

@njit
def quadratic_phase_sum_numba(a, b, count, modulus):
    a %= modulus
    b %= modulus
    re = 0.0
    im = 0.0
    c_re = 0.0
    c_im = 0.0
    two_pi = 2.0 * np.pi
    for n in range(count):
        nm = n % modulus
        e = (a * ((nm * nm) % modulus) + b * nm) % modulus
        theta = two_pi * e / modulus
        # Neumaier compensated accumulation, real and imaginary parts separately
        x = np.cos(theta)
        t = re + x
        if abs(re) >= abs(x):
            c_re += (re - t) + x
        else:
            c_re += (x - t) + re
        re = t
        y = np.sin(theta)
        t = im + y
        if abs(im) >= abs(y):
            c_im += (im - t) + y
        else:
            c_im += (y - t) + im
        im = t
    return complex(re + c_re, im + c_im)


def quadratic_phase_sum_numpy(a, b, count, modulus):
    n = np.arange(count, dtype=np.int64) % modulus
    e = ((a % modulus) * (n * n % modulus) + (b % modulus) * n) % modulus
    theta = 2.0 * np.pi * e / modulus
    # np.sum uses pairwise summation
    return complex(np.sum(np.cos(theta)), np.sum(np.sin(theta)))


def quadratic_phase_sum(a, b, count, modulus):
    """Sum of ``exp(2*pi*i*(a*n**2 + b*n)/modulus)`` for ``0 <= n < count``."""
    if modulus <= 0:
        raise ValueError("modulus must be positive")
    if count < 0:
        raise ValueError("count must be non-negative")
    if USE_NUMBA:
        return quadratic_phase_sum_numba(int(a), int(b), int(count), int(modulus))
    return quadratic_phase_sum_numpy(int(a), int(b), int(count), int(modulus))


# ---------------------------------------------------------------------------
# brute-force column overlaps across bases (identity basis included)
# ---------------------------------------------------------------------------

@njit
def overlap_extremes_numba(stack):
    nb, d, _ = stack.shape
    hi = -1.0
    lo = np.inf
    # identity columns against every stored column: overlap is |entry|
    for s in range(nb):
        for r in range(d):
            for c in range(d):
                v = abs(stack[s, r, c])
                if v > hi:
                    hi = v
                if v < lo:
                    lo = v
    for s in range(nb):
        for t in range(s + 1, nb):
            for c1 in range(d):
                for c2 in range(d):
                    acc = 0j
                    for r in range(d):
                        acc += stack[s, r, c1].conjugate() * stack[t, r, c2]
                    v = abs(acc)
                    if v > hi:
                        hi = v
                    if v < lo:
                        lo = v
    return hi, lo


def overlap_extremes_numpy(stack):
    nb = stack.shape[0]
    mags = np.abs(stack)
    hi = float(mags.max())
    lo = float(mags.min())
    for s in range(nb):
        left = stack[s].conj()
        for t in range(s + 1, nb):
            # elementwise products summed over rows; no matmul on this path
            ov = np.abs((left[:, :, None] * stack[t][:, None, :]).sum(axis=0))
            hi = max(hi, float(ov.max()))
            lo = min(lo, float(ov.min()))
    return hi, lo


def overlap_extremes(stack):
    """Largest and smallest ``|<b, b'>|`` over column pairs from distinct bases.

    ``stack`` has shape ``(n, d, d)``; the identity basis is implicit. Returns
    ``None`` when there are no pairs to compare (``n == 0``).
    """
    stack = np.ascontiguousarray(stack, dtype=np.complex128)
    if stack.ndim != 3 or stack.shape[1] != stack.shape[2]:
        raise ValueError("expected a stack of square matrices")
    if stack.shape[0] == 0:
        return None
    if USE_NUMBA:
        hi, lo = overlap_extremes_numba(stack)
    else:
        hi, lo = overlap_extremes_numpy(stack)
    return float(hi), float(lo)


# ---------------------------------------------------------------------------
# maximum cliques of the coprime-difference graph on Z/d
# ---------------------------------------------------------------------------

def coprime_adjacency(d):
    """Boolean matrix with ``adj[i, j]`` true iff ``gcd(i - j, d) == 1`` and ``i != j``."""
    idx = np.arange(d)
    diff = np.abs(idx[:, None] - idx[None, :])
    adj = np.gcd(diff, d) == 1
    np.fill_diagonal(adj, False)
    return adj


@njit
def _max_cliques_numba(adj, collect_all, limit):
    d = adj.shape[0]
    cand = np.empty((d + 1, d), dtype=np.int64)
    ncand = np.zeros(d + 1, dtype=np.int64)
    pos = np.zeros(d + 1, dtype=np.int64)
    clique = np.zeros(d + 1, dtype=np.int64)
    out = np.empty((0, 0), dtype=np.int64)
    nout = 0
    best = 0

    clique[0] = 0
    m = 0
    for w in range(1, d):
        if adj[0, w]:
            cand[0, m] = w
            m += 1
    ncand[0] = m
    pos[0] = 0
    depth = 0
    entered = True
    while depth >= 0:
        size = depth + 1
        if entered:
            entered = False
            if size > best:
                best = size
                out = np.empty((max(limit, 1), best), dtype=np.int64)
                nout = 0
                out[0, :] = clique[:size]
                nout = 1
            elif size == best and collect_all:
                if nout == out.shape[0]:
                    grown = np.empty((2 * out.shape[0], best), dtype=np.int64)
                    grown[:nout] = out[:nout]
                    out = grown
                out[nout, :] = clique[:size]
                nout += 1
        rem = ncand[depth] - pos[depth]
        bound = size + rem
        if rem == 0 or bound < best or (bound == best and not collect_all):
            depth -= 1
            continue
        v = cand[depth, pos[depth]]
        pos[depth] += 1
        m = 0
        for i in range(pos[depth], ncand[depth]):
            w = cand[depth, i]
            if adj[v, w]:
                cand[depth + 1, m] = w
                m += 1
        depth += 1
        clique[depth] = v
        ncand[depth] = m
        pos[depth] = 0
        entered = True
    return out[:nout]


def _max_cliques_numpy(adj, collect_all):
    d = adj.shape[0]
    found = []
    best = [0]

    def extend(members, cand):
        size = len(members)
        if size > best[0]:
            best[0] = size
            found.clear()
            found.append(tuple(members))
        elif size == best[0] and collect_all:
            found.append(tuple(members))
        for i in range(cand.size):
            bound = size + cand.size - i
            if bound < best[0] or (bound == best[0] and not collect_all):
                return
            v = cand[i]
            rest = cand[i + 1:]
            extend(members + [int(v)], rest[adj[v, rest]])

    start = np.arange(1, d)
    extend([0], start[adj[0, start]])
    return np.array(found, dtype=np.int64).reshape(len(found), best[0])


def max_cliques_through_zero(adj, collect_all=False):
    """Maximum cliques containing vertex 0, in lexicographic order.

    Exhaustive branch-and-bound over vertices in increasing order. With
    ``collect_all=False`` only the lexicographically smallest maximum clique
    is returned. Returns an int array of shape ``(count, size)``.
    """
    adj = np.ascontiguousarray(adj, dtype=np.bool_)
    if adj.ndim != 2 or adj.shape[0] != adj.shape[1] or adj.shape[0] == 0:
        raise ValueError("adjacency must be a non-empty square matrix")
    if USE_NUMBA:
        return _max_cliques_numba(adj, bool(collect_all), 64)
    return _max_cliques_numpy(adj, bool(collect_all))


max_cliques_numba = _max_cliques_numba
max_cliques_numpy = _max_cliques_numpy
