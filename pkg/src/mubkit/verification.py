"""Unbiasedness checks and MUB set verification.

Two independent paths are provided. :func:`verify_mum` works with matrix
products ``A* B``; :func:`brute_force_inner_products` iterates over column
pairs in :mod:`mubkit.kernels` and never calls a matrix product.
"""
import math
from dataclasses import dataclass

import numpy as np

from mubkit.generators import build_U, build_V, build_Vk
from mubkit.matrix import (
    PhaseMatrix,
    adjoint,
    eval_dense,
    mat_mul,
    max_deviation_from_unitary,
    phase_pow,
)
from mubkit import kernels
from mubkit.report import PairResult, VerificationReport

DEFAULT_TOL = 1e-9


def _as_dense(m):
    return eval_dense(m) if isinstance(m, PhaseMatrix) else np.asarray(m, dtype=np.complex128)


def unbiased_deviation(a):
    """``(max | |A_jk| - d**-0.5 |, (j, k))`` for a square matrix."""
    a = _as_dense(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    dev = np.abs(np.abs(a) - a.shape[0] ** -0.5)
    loc = np.unravel_index(int(np.argmax(dev)), dev.shape)
    return float(dev[loc]), (int(loc[0]), int(loc[1]))


def is_unbiased(a, tol=DEFAULT_TOL):
    dev, _ = unbiased_deviation(a)
    return dev < tol, dev


def is_mutually_unbiased(a, b, tol=DEFAULT_TOL):
    a, b = _as_dense(a), _as_dense(b)
    return is_unbiased(mat_mul(adjoint(a), b), tol)


def verify_mum(mubs, tol=DEFAULT_TOL):
    """Check unitarity, unbiasedness and pairwise mutual unbiasedness.

    Pair indices count the implicit identity as basis 0, so pair ``(0, j)``
    is the unbiasedness of stored basis ``j - 1``.
    """
    report = VerificationReport(dim=mubs.dim, tolerance=tol)
    dense = [eval_dense(b) for b in mubs.bases]
    for i, a in enumerate(dense):
        res = max_deviation_from_unitary(a)
        report.unitarity.append(res)
        if not res < tol:
            report.failures.append(f"basis {i + 1} not unitary: residual {res:.3e}")
    for j, b in enumerate(dense, start=1):
        dev, loc = unbiased_deviation(b)
        report.pairs.append(PairResult(0, j, dev, loc))
    for i in range(len(dense)):
        for j in range(i + 1, len(dense)):
            dev, loc = unbiased_deviation(mat_mul(adjoint(dense[i]), dense[j]))
            report.pairs.append(PairResult(i + 1, j + 1, dev, loc))
    for p in report.pairs:
        if not p.max_dev < tol:
            report.failures.append(
                f"pair ({p.i}, {p.j}) biased: deviation {p.max_dev:.3e} at entry {p.location}"
            )
    return report


@dataclass(frozen=True)
class OverlapRange:
    """Extremes of ``|<b, b'>|`` over columns of distinct bases; empty when vacuous."""

    maximum: float | None
    minimum: float | None
    dim: int

    @property
    def vacuous(self):
        return self.maximum is None

    def deviation(self):
        """Largest distance of either extreme from ``d**-0.5`` (0 when vacuous)."""
        if self.vacuous:
            return 0.0
        t = self.dim ** -0.5
        return max(abs(self.maximum - t), abs(self.minimum - t))


def brute_force_inner_products(mubs):
    ext = kernels.overlap_extremes(mubs.dense())
    if ext is None:
        return OverlapRange(None, None, mubs.dim)
    return OverlapRange(ext[0], ext[1], mubs.dim)


def oracle_passes(mubs, tol=DEFAULT_TOL):
    return brute_force_inner_products(mubs).deviation() < tol


def check_eigenrelation(d, k, p):
    """Max deviation of ``P* V_k P`` from ``U`` (odd ``d``) or ``omega U`` (even ``d``, ``k=1``).

    ``k = 0`` compares against ``U`` for any ``d``.
    """
    p = _as_dense(p)
    if p.shape != (d, d):
        raise ValueError(f"expected a {d}x{d} matrix")
    U = eval_dense(build_U(d))
    if k == 0 or d % 2:
        target = U
    elif k == 1:
        target = np.exp(1j * math.pi / d) * U
    else:
        raise ValueError("even d supports k = 0 or k = 1 only")
    lhs = mat_mul(mat_mul(adjoint(p), eval_dense(build_Vk(d, k))), p)
    return float(np.max(np.abs(lhs - target)))


def eigenrelation_deviation(d, k, p, scalar):
    """``max |P* V_k P - scalar * U|`` for an arbitrary diagonal phase ``scalar``."""
    p = _as_dense(p)
    U = eval_dense(build_U(d))
    lhs = mat_mul(mat_mul(adjoint(p), eval_dense(build_Vk(d, k))), p)
    return float(np.max(np.abs(lhs - scalar * U)))


def permutation_of(m):
    """Row-to-column map of an exact permutation-like (monomial) matrix."""
    if not m.is_monomial() or not m.nonzero.sum(axis=1).all():
        raise ValueError("not a permutation pattern")
    return np.argmax(m.nonzero, axis=1)


def cycle_lengths(perm):
    perm = np.asarray(perm)
    seen = np.zeros(perm.size, dtype=bool)
    out = []
    for start in range(perm.size):
        if seen[start]:
            continue
        n = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = int(perm[i])
            n += 1
        out.append(n)
    return sorted(out)


def shift_power_cycles(d, k):
    """Cycle lengths of ``(V*)**k`` computed from its exact form."""
    return cycle_lengths(permutation_of(phase_pow(adjoint(build_V(d)), k)))


def same_basis(a, b, tol=1e-9):
    """True iff ``b = a @ (permutation * diagonal phases)``."""
    a, b = _as_dense(a), _as_dense(b)
    if a.shape != b.shape:
        return False
    m = np.abs(mat_mul(adjoint(a), b))
    ones = np.abs(m - 1.0) < tol
    zeros = m < tol
    if not np.all(ones | zeros):
        return False
    return bool(np.all(ones.sum(axis=0) == 1) and np.all(ones.sum(axis=1) == 1))


def same_mub(bases_a, bases_b, tol=1e-9):
    """Whether two lists of bases define the same set of bases up to ordering."""
    if len(bases_a) != len(bases_b):
        return False
    unused = list(range(len(bases_b)))
    for a in bases_a:
        hit = next((j for j in unused if same_basis(a, bases_b[j], tol)), None)
        if hit is None:
            return False
        unused.remove(hit)
    return True
