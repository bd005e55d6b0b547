"""Exact root-of-unity matrices and the dense complex operations built on them.

A :class:`PhaseMatrix` stores every entry as either zero or ``exp(2*pi*i*n/N)``
with the integer exponent ``n`` reduced mod ``N``, and a global factor
``1/sqrt(scale_m)``. Dense matrices are plain ``numpy`` complex arrays.
"""
from dataclasses import dataclass
from math import gcd

import numpy as np

ZERO = -1  # exponent sentinel for a zero entry

__all__ = [
    "ZERO",
    "PhaseMatrix",
    "default_modulus",
    "identity",
    "diagonal",
    "eval_dense",
    "mat_mul",
    "phase_mul_diag",
    "phase_mul",
    "phase_pow",
    "adjoint",
    "tensor",
    "max_deviation_from_unitary",
    "dense_to_json",
    "dense_from_json",
    "snap_to_phase",
]


def _lcm(a, b):
    return a * b // gcd(a, b)


def default_modulus(d):
    """``lcm(2d, 4)``: holds q, omega = exp(i*pi/d) and the fourth roots."""
    return _lcm(2 * d, 4)


@dataclass(frozen=True, eq=False)
class PhaseMatrix:
    exponents: np.ndarray
    modulus: int
    scale_m: int = 1

    def __post_init__(self):
        exps = np.array(self.exponents, dtype=np.int64, copy=True)
        if exps.ndim != 2 or exps.shape[0] != exps.shape[1] or exps.shape[0] == 0:
            raise ValueError(f"exponent grid must be square and non-empty, got {exps.shape}")
        if int(self.modulus) <= 0 or int(self.scale_m) <= 0:
            raise ValueError("modulus and scale_m must be positive")
        zero = exps == ZERO
        # negative exponents other than the sentinel are reduced like any other
        exps = np.where(zero, ZERO, np.mod(exps, int(self.modulus)))
        exps.setflags(write=False)
        object.__setattr__(self, "exponents", exps)
        object.__setattr__(self, "modulus", int(self.modulus))
        object.__setattr__(self, "scale_m", int(self.scale_m))

    @property
    def dim(self):
        return self.exponents.shape[0]

    @property
    def nonzero(self):
        return self.exponents != ZERO

    @classmethod
    def from_entries(cls, entries, modulus, scale_m=1):
        """Build from a nested list where ``None`` is a zero entry."""
        grid = [[ZERO if e is None else int(e) % modulus for e in row] for row in entries]
        return cls(np.array(grid, dtype=np.int64), modulus, scale_m)

    def entries(self):
        return [[None if e == ZERO else int(e) for e in row] for row in self.exponents]

    def lift(self, modulus):
        """Same matrix expressed over a multiple of the current modulus."""
        if modulus % self.modulus:
            raise ValueError(f"{modulus} is not a multiple of {self.modulus}")
        f = modulus // self.modulus
        exps = np.where(self.nonzero, self.exponents * f, ZERO)
        return PhaseMatrix(exps, modulus, self.scale_m)

    def reduced(self):
        """Same matrix over the smallest modulus that represents it."""
        nz = self.exponents[self.nonzero]
        g = self.modulus
        for e in np.unique(nz):
            g = gcd(g, int(e))
        if g in (0, 1):
            return self
        exps = np.where(self.nonzero, self.exponents // g, ZERO)
        return PhaseMatrix(exps, self.modulus // g, self.scale_m)

    def is_diagonal(self):
        off = self.nonzero.copy()
        np.fill_diagonal(off, False)
        return not off.any()

    def is_monomial(self):
        """At most one nonzero per row and per column."""
        nz = self.nonzero
        return bool((nz.sum(axis=0) <= 1).all() and (nz.sum(axis=1) <= 1).all())

    def __eq__(self, other):
        if not isinstance(other, PhaseMatrix):
            return NotImplemented
        if self.dim != other.dim or self.scale_m != other.scale_m:
            return False
        n = _lcm(self.modulus, other.modulus)
        return bool(np.array_equal(self.lift(n).exponents, other.lift(n).exponents))

    __hash__ = None

    def __repr__(self):
        return f"PhaseMatrix(dim={self.dim}, modulus={self.modulus}, scale_m={self.scale_m})"

    def to_json(self):
        return {
            "dim": self.dim,
            "modulus": self.modulus,
            "scale_m": self.scale_m,
            "entries": self.entries(),
        }

    @classmethod
    def from_json(cls, obj):
        try:
            dim = int(obj["dim"])
            modulus = int(obj["modulus"])
            scale_m = int(obj["scale_m"])
            entries = obj["entries"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed phase matrix: {exc}") from exc
        if len(entries) != dim or any(len(row) != dim for row in entries):
            raise ValueError("entries do not match dim")
        for row in entries:
            for e in row:
                if e is not None and (isinstance(e, bool) or not isinstance(e, int) or not 0 <= e < modulus):
                    raise ValueError(f"bad exponent {e!r} for modulus {modulus}")
        return cls.from_entries(entries, modulus, scale_m)


def identity(d, modulus=None):
    exps = np.full((d, d), ZERO, dtype=np.int64)
    np.fill_diagonal(exps, 0)
    return PhaseMatrix(exps, modulus or default_modulus(d))


def diagonal(exponents, modulus):
    exponents = np.asarray(exponents, dtype=np.int64)
    d = exponents.size
    exps = np.full((d, d), ZERO, dtype=np.int64)
    exps[np.arange(d), np.arange(d)] = exponents
    return PhaseMatrix(exps, modulus)


def eval_dense(m):
    """Evaluate a :class:`PhaseMatrix` to a complex128 array."""
    theta = 2.0 * np.pi * m.exponents / m.modulus
    out = np.where(m.nonzero, np.exp(1j * theta), 0.0).astype(np.complex128)
    if m.scale_m != 1:
        out /= np.sqrt(m.scale_m)
    return out


def _check_dense(a):
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    return a


def mat_mul(a, b):
    a = _check_dense(a)
    b = _check_dense(b)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return a @ b


def _common(a, b):
    n = _lcm(a.modulus, b.modulus)
    return a.lift(n), b.lift(n), n


def phase_mul_diag(dg, m):
    """Exact ``dg @ m`` for a diagonal ``dg``: row ``j`` of ``m`` times ``dg[j, j]``."""
    if not dg.is_diagonal():
        raise ValueError("left factor is not diagonal")
    if dg.dim != m.dim:
        raise ValueError(f"dimension mismatch: {dg.dim} vs {m.dim}")
    dg, m, n = _common(dg, m)
    diag = np.diagonal(dg.exponents)[:, None]
    exps = np.where((diag != ZERO) & m.nonzero, (diag + m.exponents) % n, ZERO)
    return PhaseMatrix(exps, n, dg.scale_m * m.scale_m)


def phase_mul(a, b):
    """Exact product when at least one factor is monomial."""
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")
    if not a.is_monomial():
        if not b.is_monomial():
            raise ValueError("exact product needs a monomial factor")
        return adjoint(phase_mul(adjoint(b), adjoint(a)))
    a, b, n = _common(a, b)
    d = a.dim
    exps = np.full((d, d), ZERO, dtype=np.int64)
    rows, cols = np.nonzero(a.nonzero)
    src = b.exponents[cols]
    shift = a.exponents[rows, cols][:, None]
    exps[rows] = np.where(src != ZERO, (src + shift) % n, ZERO)
    return PhaseMatrix(exps, n, a.scale_m * b.scale_m)


def phase_pow(m, k):
    """``m**k`` for a monomial ``m``; negative ``k`` requires ``scale_m == 1``."""
    if not m.is_monomial():
        raise ValueError("exact powers need a monomial matrix")
    if k < 0:
        if m.scale_m != 1:
            raise ValueError("negative power of a scaled matrix")
        return phase_pow(adjoint(m), -k)
    out = identity(m.dim, m.modulus)
    base = m
    while k:
        if k & 1:
            out = phase_mul(out, base)
        base = phase_mul(base, base)
        k >>= 1
    return out


def adjoint(m):
    """Conjugate transpose of a :class:`PhaseMatrix` or a dense array."""
    if isinstance(m, PhaseMatrix):
        exps = m.exponents.T
        exps = np.where(exps != ZERO, (-exps) % m.modulus, ZERO)
        return PhaseMatrix(exps, m.modulus, m.scale_m)
    return _check_dense(m).conj().T


def tensor(a, b):
    """Kronecker product; entry ``[a*dB + b, c*dB + e] = A[a, c] * B[b, e]``."""
    a, b, n = _common(a, b)
    ea = a.exponents[:, None, :, None]
    eb = b.exponents[None, :, None, :]
    exps = np.where((ea != ZERO) & (eb != ZERO), (ea + eb) % n, ZERO)
    d = a.dim * b.dim
    return PhaseMatrix(exps.reshape(d, d), n, a.scale_m * b.scale_m)


def max_deviation_from_unitary(a):
    a = _check_dense(a)
    gram = a.conj().T @ a
    return float(np.max(np.abs(gram - np.eye(a.shape[0]))))


def dense_to_json(a):
    a = _check_dense(a)
    return {
        "dim": a.shape[0],
        "entries": [[[float(z.real), float(z.imag)] for z in row] for row in a],
    }


def dense_from_json(obj):
    try:
        dim = int(obj["dim"])
        arr = np.array(obj["entries"], dtype=np.float64)
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed dense matrix: {exc}") from exc
    if arr.shape != (dim, dim, 2):
        raise ValueError(f"entries do not match dim {dim}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("non-finite entries")
    return arr[..., 0] + 1j * arr[..., 1]


def snap_to_phase(a, modulus, scale_m=1, tol=1e-9):
    """Exact :class:`PhaseMatrix` equal to dense ``a`` within ``tol``, or ``ValueError``."""
    a = _check_dense(a) * np.sqrt(scale_m)
    mags = np.abs(a)
    zero = mags < tol
    if np.any(~zero & (np.abs(mags - 1.0) >= tol)):
        raise ValueError("entries are neither zero nor unimodular")
    exps = np.rint(np.angle(a) * modulus / (2 * np.pi)).astype(np.int64) % modulus
    out = PhaseMatrix(np.where(zero, ZERO, exps), modulus, scale_m)
    if np.max(np.abs(eval_dense(out) * np.sqrt(scale_m) - a)) >= tol:
        raise ValueError(f"entries are not {modulus}-th roots of unity")
    return out
