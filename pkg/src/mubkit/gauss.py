"""Quadratic Gauss sums and the trace identities tied to unbiasedness.

Every sum is a direct O(d) summation with exponents reduced exactly in
integers before the complex exponential is taken.
"""
import cmath
import math
from dataclasses import dataclass
from math import gcd

import numpy as np

from mubkit import kernels
from mubkit.constructions import build_Pk_odd
from mubkit.generators import build_fourier
from mubkit.matrix import eval_dense

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class GaussSumResult:
    value: complex
    params: tuple

    @property
    def modulus(self):
        return abs(self.value)


def trace_Dk(d, k):
    """``Tr D**k = sum_j q**(k*j*(j+1)/2)`` for odd ``d``."""
    if d % 2 == 0 or d < 1:
        raise ValueError(f"trace of D**k needs odd d, got {d}")
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    # q**(k j (j+1)/2) = exp(2 pi i * k (j^2 + j) / (2d))
    value = kernels.quadratic_phase_sum(k, k, d, 2 * d)
    return GaussSumResult(value, (d, k))


def _check_S(a, b, d):
    if a * d == 0:
        raise ValueError("need a*d != 0")
    if (a * d + b) % 2:
        raise ValueError("need a*d + b even")


def gauss_S(a, b, d):
    """``S(a, b, d) = sum_{n < |d|} exp(i*pi*(a n^2 + b n)/d)``."""
    _check_S(a, b, d)
    s = 1 if d > 0 else -1
    value = kernels.quadratic_phase_sum(s * a, s * b, abs(d), 2 * abs(d))
    return GaussSumResult(value, (a, b, d))


def reciprocity_rhs(a, b, d, printed_prefactor=False):
    """Right side of the reciprocity law, ``sqrt|d/a| e^{i pi (sgn(ad) - b^2/(ad))/4} S(-d, -b, a)``.

    ``printed_prefactor=True`` uses ``|d/a|`` without the square root.
    """
    _check_S(a, b, d)
    ad = a * d
    sgn = 1 if ad > 0 else -1
    pref = abs(d / a) if printed_prefactor else math.sqrt(abs(d / a))
    phase = cmath.exp(1j * math.pi / 4 * (sgn - b * b / ad))
    return pref * phase * gauss_S(-d, -b, a).value


def reciprocity_check(a, b, d, printed_prefactor=False):
    """``(lhs, rhs, |lhs - rhs|)`` for the quadratic reciprocity law."""
    lhs = gauss_S(a, b, d).value
    rhs = reciprocity_rhs(a, b, d, printed_prefactor)
    return lhs, rhs, abs(lhs - rhs)


def valid_reciprocity_params(max_abs=12):
    """All ``(a, b, d)`` with ``|a|, |b| <= max_abs``, ``1 <= d <= max_abs``, ``ad + b`` even."""
    out = []
    for a in range(-max_abs, max_abs + 1):
        if a == 0:
            continue
        for b in range(-max_abs, max_abs + 1):
            for d in range(1, max_abs + 1):
                if (a * d + b) % 2 == 0:
                    out.append((a, b, d))
    return out


def S11_closed_form(d):
    """``sqrt(d) exp(i pi (1 - 1/d) / 4)`` for odd ``d``."""
    return math.sqrt(d) * cmath.exp(1j * math.pi / 4 * (1 - 1 / d))


def even_quadratic_sum(d):
    """``sum_{k<d} exp(i*pi*k^2/d)`` for even ``d``; equals ``sqrt(d) e^{i pi/4}``."""
    if d % 2 or d < 2:
        raise ValueError(f"need even d, got {d}")
    return GaussSumResult(kernels.quadratic_phase_sum(1, 0, d, 2 * d), (d,))


def even_closed_form(d):
    return math.sqrt(d) * cmath.exp(1j * math.pi / 4)


def unbiasedness_implies_gauss(d, k, tol=DEFAULT_TOL):
    """Check that the eigenvalue-1 columns of ``P0`` and ``P_k`` overlap by ``Tr(D**k)/d``.

    The overlap is ``sum_j (v0)_j * conj((vk)_j)``. Also requires the overlap
    modulus to be ``d**-0.5``.
    """
    if d % 2 == 0 or gcd(k, d) != 1:
        raise ValueError(f"need odd d and gcd(k, d) == 1, got d={d}, k={k}")
    v0 = eval_dense(build_fourier(d))[:, 0]
    vk = eval_dense(build_Pk_odd(d, k % d))[:, 0]
    overlap = np.vdot(vk, v0)
    expected = trace_Dk(d, k).value / d
    return bool(abs(overlap - expected) < tol and abs(abs(overlap) - d ** -0.5) < tol)


# ---------------------------------------------------------------------------
# tabulation for the command line
# ---------------------------------------------------------------------------

TABLE_COLUMNS = (
    "mode", "a", "b", "d", "k", "value_re", "value_im", "modulus",
    "expected_re", "expected_im", "deviation", "ok",
)


def _row(mode, value, expected, deviation, tol, a="", b="", d="", k=""):
    exp_re = expected.real if isinstance(expected, complex) else expected
    exp_im = expected.imag if isinstance(expected, complex) else ""
    return {
        "mode": mode, "a": a, "b": b, "d": d, "k": k,
        "value_re": value.real, "value_im": value.imag, "modulus": abs(value),
        "expected_re": exp_re, "expected_im": exp_im,
        "deviation": deviation, "ok": deviation < tol,
    }


def trace_rows(d, tol=DEFAULT_TOL):
    """One row per ``k`` coprime to ``d``; the expected value is the modulus ``sqrt(d)``."""
    rows = []
    for k in range(1, d):
        if gcd(k, d) != 1:
            continue
        r = trace_Dk(d, k)
        rows.append(_row("trace", r.value, math.sqrt(d), abs(r.modulus - math.sqrt(d)), tol, d=d, k=k))
    return rows


def even_rows(dims, tol=DEFAULT_TOL):
    rows = []
    for d in dims:
        r = even_quadratic_sum(d)
        want = even_closed_form(d)
        rows.append(_row("even", r.value, want, abs(r.value - want), tol, d=d))
    return rows


def S_rows(a, b, d, tol=DEFAULT_TOL):
    lhs, rhs, dev = reciprocity_check(a, b, d)
    return [_row("S", lhs, rhs, dev, tol, a=a, b=b, d=d)]


def reciprocity_rows(params, tol=DEFAULT_TOL):
    rows = []
    for a, b, d in params:
        lhs, rhs, dev = reciprocity_check(a, b, d)
        rows.append(_row("reciprocity", lhs, rhs, dev, tol, a=a, b=b, d=d))
    return rows
