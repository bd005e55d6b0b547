"""Schwinger clock/shift matrices, their Fourier diagonalization and friends.

All builders return exact :class:`~mubkit.matrix.PhaseMatrix` objects over
``default_modulus(d)`` unless a modulus is given.
"""
import numpy as np

from mubkit.matrix import (
    ZERO,
    PhaseMatrix,
    adjoint,
    default_modulus,
    diagonal,
    eval_dense,
    identity,
    mat_mul,
    phase_mul,
    phase_pow,
)
from mubkit.report import VerificationReport

DEFAULT_TOL = 1e-9


def _check_dim(d):
    if int(d) != d or d < 1:
        raise ValueError(f"dimension must be a positive integer, got {d!r}")
    return int(d)


def _modulus(d, modulus):
    n = modulus or default_modulus(d)
    if n % d:
        raise ValueError(f"modulus {n} is not a multiple of d={d}")
    return n


def build_U(d, modulus=None):
    """Clock matrix ``diag(1, q, ..., q**(d-1))`` with ``q = exp(2*pi*i/d)``."""
    d = _check_dim(d)
    n = _modulus(d, modulus)
    return diagonal(np.arange(d) * (n // d), n)


def build_V(d, modulus=None):
    """Cyclic shift: ones on the superdiagonal and in the bottom-left corner."""
    d = _check_dim(d)
    exps = np.full((d, d), ZERO, dtype=np.int64)
    exps[np.arange(d), (np.arange(d) + 1) % d] = 0
    return PhaseMatrix(exps, _modulus(d, modulus))


def build_Vk(d, k, modulus=None):
    """``V @ U**k``: row ``j < d-1`` has ``q**(k*(j+1))`` at column ``j+1``."""
    d = _check_dim(d)
    if not 0 <= k < d:
        raise ValueError(f"k must lie in [0, {d}), got {k}")
    n = _modulus(d, modulus)
    exps = np.full((d, d), ZERO, dtype=np.int64)
    cols = (np.arange(d) + 1) % d
    exps[np.arange(d), cols] = (k * cols % d) * (n // d)
    return PhaseMatrix(exps, n)


def build_fourier(d, modulus=None):
    """``P0[j, k] = q**(j*k) / sqrt(d)``; column ``j`` is the ``q**j`` eigenvector of V."""
    d = _check_dim(d)
    n = _modulus(d, modulus)
    j = np.arange(d)
    return PhaseMatrix((np.outer(j, j) % d) * (n // d), n, scale_m=d)


def build_W_perm(d, modulus=None):
    """Reflection ``j -> -j mod d``; equals the square of the Fourier matrix."""
    d = _check_dim(d)
    exps = np.full((d, d), ZERO, dtype=np.int64)
    exps[np.arange(d), (-np.arange(d)) % d] = 0
    return PhaseMatrix(exps, _modulus(d, modulus))


def build_D_odd(d, modulus=None):
    """Quadratic phase ``diag(q**(j*(j+1)/2))`` for odd ``d``."""
    d = _check_dim(d)
    if d % 2 == 0:
        raise ValueError(f"D is defined for odd d only, got d={d}")
    n = _modulus(d, modulus)
    j = np.arange(d)
    return diagonal((j * (j + 1) // 2 % d) * (n // d), n)


def build_Dprime_even(d, modulus=None):
    """``diag(omega**(-k**2))`` with ``omega = exp(i*pi/d)``, even ``d``."""
    d = _check_dim(d)
    if d % 2:
        raise ValueError(f"D' is defined for even d only, got d={d}")
    n = modulus or default_modulus(d)
    if n % (2 * d):
        raise ValueError(f"modulus {n} cannot hold exp(i*pi/{d})")
    k = np.arange(d)
    return diagonal((-(k * k) % (2 * d)) * (n // (2 * d)), n)


def q_power(d, e):
    """Dense scalar ``q**e``."""
    return np.exp(2j * np.pi * (e % d) / d)


def _dev(a, b):
    return float(np.max(np.abs(a - b))) if a.size else 0.0


def identity_deviations(d):
    """Max entrywise deviation of each structural identity for dimension ``d``.

    Keys: ``VU=qUV``, ``V=P0 U P0*``, ``P0^2=W``, ``U^k P0=P0 (V*)^k`` (worst
    over k) and, for odd ``d``, ``D^k V=V_-k D^k`` (worst over k).
    """
    d = _check_dim(d)
    u, v = build_U(d), build_V(d)
    U, V = eval_dense(u), eval_dense(v)
    P0 = eval_dense(build_fourier(d))
    W = eval_dense(build_W_perm(d))
    out = {
        "VU=qUV": _dev(mat_mul(V, U), q_power(d, 1) * mat_mul(U, V)),
        "V=P0 U P0*": _dev(V, mat_mul(mat_mul(P0, U), adjoint(P0))),
        "P0^2=W": _dev(mat_mul(P0, P0), W),
    }
    vstar = adjoint(v)
    uk, vk = identity(d), identity(d)
    worst = 0.0
    for k in range(d):
        lhs = mat_mul(eval_dense(uk), P0)
        rhs = mat_mul(P0, eval_dense(vk))
        worst = max(worst, _dev(lhs, rhs))
        uk, vk = phase_mul(uk, u), phase_mul(vk, vstar)
    out["U^k P0=P0 (V*)^k"] = worst
    if d % 2:
        dm = build_D_odd(d)
        dk = identity(d)
        worst = 0.0
        for k in range(d):
            Dk = eval_dense(dk)
            lhs = mat_mul(Dk, V)
            rhs = mat_mul(eval_dense(build_Vk(d, (-k) % d)), Dk)
            worst = max(worst, _dev(lhs, rhs))
            dk = phase_mul(dk, dm)
        out["D^k V=V_-k D^k"] = worst
    return out


def check_identities(d, tol=DEFAULT_TOL):
    report = VerificationReport(dim=d, tolerance=tol, identities=identity_deviations(d))
    report.failures.extend(f"{name}: {dev:.3e}" for name, dev in report.identities.items() if not dev < tol)
    return report


def exact_periods(d):
    """True iff ``V**d`` and ``U**d`` are the identity in exact form."""
    ident = identity(d)
    return phase_pow(build_V(d), d) == ident and phase_pow(build_U(d), d) == ident


def vk_from_product(d, k):
    """``V @ U**k`` computed as an exact product, for cross-checking :func:`build_Vk`."""
    return phase_mul(build_V(d), phase_pow(build_U(d), k))
