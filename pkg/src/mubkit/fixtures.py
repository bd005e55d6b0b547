"""Compare the printed d = 2, 3, 4, 6, 12, 20 matrices with generated ones.

Each check is either a ``verify`` (a MUB property that must hold: status
``pass``/``fail``) or a ``compare`` between a printed and a generated object
(status ``exact``, ``equivalent`` up to column phases and order, or
``discrepancy``). Discrepancies are reported, not treated as failures.
"""
import cmath
import math
from dataclasses import dataclass

import numpy as np

from mubkit import printed
from mubkit.constructions import (
    Method,
    MubSet,
    build_d4_complete,
    build_P1_even,
    build_Pk_odd,
    construct_mubs,
    tensor_combine,
)
from mubkit.generators import build_fourier, build_Vk, build_U, build_Dprime_even
from mubkit.matrix import (
    PhaseMatrix,
    adjoint,
    eval_dense,
    mat_mul,
    phase_mul_diag,
    snap_to_phase,
    tensor,
)
from mubkit.verification import (
    eigenrelation_deviation,
    oracle_passes,
    same_basis,
    same_mub,
    verify_mum,
)

TOL = 1e-9


@dataclass(frozen=True)
class FixtureResult:
    name: str
    kind: str
    status: str
    detail: str = ""

    @property
    def ok(self):
        return self.kind != "verify" or self.status == "pass"

    def line(self):
        tail = f"  {self.detail}" if self.detail else ""
        return f"{self.kind:<8} {self.status:<12} {self.name}{tail}"


def _verify(name, mubs, detail=""):
    rep = verify_mum(mubs, TOL)
    good = rep.passed and oracle_passes(mubs, TOL)
    info = detail or f"{mubs.claimed_count} bases, max deviation {rep.max_deviation:.1e}"
    if rep.failures:
        info += "; " + rep.failures[0]
    return FixtureResult(name, "verify", "pass" if good else "fail", info)


def _check(name, ok, detail=""):
    return FixtureResult(name, "verify", "pass" if ok else "fail", detail)


def _compare(name, printed_m, generated, detail=""):
    if isinstance(printed_m, PhaseMatrix) and isinstance(generated, PhaseMatrix) and printed_m == generated:
        status = "exact"
    else:
        a = eval_dense(printed_m) if isinstance(printed_m, PhaseMatrix) else printed_m
        b = eval_dense(generated) if isinstance(generated, PhaseMatrix) else generated
        if a.shape == b.shape and np.max(np.abs(a - b)) < TOL:
            status = "exact"
        elif same_basis(a, b, TOL):
            status = "equivalent"
        else:
            status = "discrepancy"
    return FixtureResult(name, "compare", status, detail)


def _fixture_set(dim, bases):
    return MubSet(dim, Method.FIXTURE, tuple(bases))


def d2_checks():
    p0, p1 = printed.d2_P0(), printed.d2_P1()
    out = [
        _compare("d=2 printed P0 vs Fourier", p0, build_fourier(2)),
        _compare("d=2 printed P1 vs D'P0", p1, build_P1_even(2)),
        _verify("d=2 E2 = {I, P0, P1}", _fixture_set(2, [p0, p1])),
        _verify("d=2 E2' = {I, P1, P1*}", _fixture_set(2, [p1, adjoint(p1)])),
    ]
    same = same_mub([eval_dense(p0), eval_dense(p1)], [eval_dense(p1), eval_dense(adjoint(p1))])
    out.append(FixtureResult("d=2 E2 and E2' define the same MUB", "compare",
                             "equivalent" if same else "discrepancy"))
    cube = np.linalg.matrix_power(eval_dense(p1), 3)
    claimed = cmath.exp(-1j * math.pi / 4) * np.eye(2)
    actual = cmath.exp(1j * math.pi / 4) * np.eye(2)
    if np.max(np.abs(cube - claimed)) < TOL:
        out.append(FixtureResult("d=2 P1^3 = exp(-i pi/4) I", "compare", "exact"))
    else:
        note = "P1^3 = exp(+i pi/4) I" if np.max(np.abs(cube - actual)) < TOL else "P1^3 not scalar"
        out.append(FixtureResult("d=2 P1^3 = exp(-i pi/4) I", "compare", "discrepancy", note))
    sq = mat_mul(eval_dense(p1), eval_dense(p1))
    out.append(_check("d=2 P1^2 unbiased", np.max(np.abs(np.abs(sq) - 2 ** -0.5)) < TOL))
    return out


def d3_checks():
    gen = [build_Pk_odd(3, k) for k in range(3)]
    pr = [printed.d3_P0(), printed.d3_P1(), printed.d3_P2()]
    out = [_compare(f"d=3 printed P{k} vs D^-{k} P0", pr[k], gen[k]) for k in range(3)]
    out.append(_verify("d=3 E3 = {I, P0, P1, P2}", _fixture_set(3, pr)))
    alt = printed.d3_P1_alt()
    e3p = [printed.d3_P0(), alt, adjoint(alt)]
    out.append(_verify("d=3 E3' = {I, P0, P1', P1'*}", _fixture_set(3, e3p)))
    same = same_mub([eval_dense(m) for m in pr], [eval_dense(m) for m in e3p])
    out.append(FixtureResult("d=3 E3 and E3' define the same MUB", "compare",
                             "equivalent" if same else "discrepancy"))
    return out


def d4_block_product():
    """Twice the upper-left 2x2 block of ``P'01* P'10``, snapped to exact phases."""
    prod = mat_mul(adjoint(eval_dense(printed.d4_P01_prime())), eval_dense(printed.d4_P10_prime()))
    return snap_to_phase(2 * prod[:2, :2], 8)


def d4_checks():
    out = [_verify("d=4 complete set {I, P00, P'01, P'10, P11}", build_d4_complete())]
    p0, p1 = printed.d2_P0(), printed.d2_P1()
    A = eval_dense(printed.d4_A())
    out.append(_check("d=4 A unitary", np.max(np.abs(A.conj().T @ A - np.eye(4))) < TOL))
    out.append(_compare("d=4 P10 = P'10 A", tensor(p1, p0), mat_mul(eval_dense(printed.d4_P10_prime()), A)))
    out.append(_compare("d=4 P01 = P'01 A*", tensor(p0, p1), mat_mul(eval_dense(printed.d4_P01_prime()), adjoint(A))))
    try:
        block = d4_block_product()
        status = "exact" if block == printed.d4_block_identity() else "discrepancy"
    except ValueError as exc:
        status, block = "discrepancy", str(exc)
    out.append(FixtureResult("d=4 block of P'01* P'10 = [[1,-i],[-i,1]]/2", "compare", status))
    literal = mat_mul(
        eval_dense(printed.d2_P0()).conj().T - 1j * eval_dense(printed.d4_P0_prime()).conj().T,
        eval_dense(p1),
    )
    status = "exact" if np.max(np.abs(literal - eval_dense(printed.d4_block_identity()))) < TOL else "discrepancy"
    out.append(FixtureResult(
        "d=4 literal (P0* - i P0'*) P1 = [[1,-i],[-i,1]]", "compare", status,
        "" if status == "exact" else "literal product is [[0,1-i],[1-i,0]]; the block needs P1' in the second term",
    ))
    # W_{j,k} = V_j (x) V_k with d=2 shifts; P' columns must be eigenvectors
    for name, m, (j, k) in (("P'01", printed.d4_P01_prime(), (0, 1)), ("P'10", printed.d4_P10_prime(), (1, 0))):
        w = eval_dense(tensor(build_Vk(2, j), build_Vk(2, k)))
        pm = eval_dense(m)
        diag = mat_mul(mat_mul(adjoint(pm), w), pm)
        off = np.max(np.abs(diag - np.diag(np.diag(diag))))
        out.append(_check(f"d=4 W{j}{k} diagonalized by {name}", off < TOL, f"off-diagonal {off:.1e}"))
    return out


def d6_checks():
    p0, p1, dt = printed.d6_P0(), printed.d6_P1(), printed.d6_Dtilde()
    out = [
        _compare("d=6 printed P0 vs Fourier", p0, build_fourier(6)),
        _compare("d=6 printed P1 vs Dtilde P0", p1, phase_mul_diag(dt, build_fourier(6))),
        _verify("d=6 E6 = {I, P0, P1} (printed)", _fixture_set(6, [p0, p1])),
    ]
    dev = eigenrelation_deviation(6, 1, p1, 1j)
    out.append(_check("d=6 P1* V1 P1 = iU (printed)", dev < TOL, f"deviation {dev:.1e}"))
    dp = build_Dprime_even(6)
    out.append(FixtureResult(
        "d=6 Dtilde vs D' entrywise", "compare", "exact" if dt == dp else "discrepancy",
        "" if dt == dp else f"Dtilde exponents {np.diagonal(dt.lift(12).exponents).tolist()}, "
        f"D' exponents {np.diagonal(dp.lift(12).exponents).tolist()} (mod 12)",
    ))
    out.append(_compare("d=6 Dtilde P0 vs D' P0 as bases", p1, build_P1_even(6)))
    return out


def _tensor_compare(tag, printed_bases, orders):
    out = []
    for label, gen in orders:
        for j, (pm, gm) in enumerate(zip(printed_bases, gen.bases)):
            out.append(_compare(f"{tag} printed R{j} vs {label}", pm, gm))
    return out


def d12_checks():
    r = printed.d12_R()
    d3, d4 = construct_mubs(3), build_d4_complete()
    out = [_verify("d=12 printed {I, R0, R1, R2}", _fixture_set(12, r))]
    out.append(_verify("d=12 tensor_combine(d4, d3)", tensor_combine(d4, d3)))
    out += _tensor_compare("d=12", r, [
        ("P_j (x) Q_j", tensor_combine(d3, d4)),
        ("Q_j (x) P_j", tensor_combine(d4, d3)),
    ])
    return out


def d20_checks():
    r = printed.d20_R()
    d5, d4 = construct_mubs(5), build_d4_complete()
    out = [_verify("d=20 printed {I, R'0..R'3}", _fixture_set(20, r))]
    out.append(_verify("d=20 tensor_combine(d4, d5)", tensor_combine(d4, d5)))
    out += _tensor_compare("d=20", r, [
        ("Q_j (x) P_j", tensor_combine(d4, d5)),
        ("P_j (x) Q_j", tensor_combine(d5, d4)),
    ])
    return out


def run_fixtures():
    results = []
    for fn in (d2_checks, d3_checks, d4_checks, d6_checks, d12_checks, d20_checks):
        results.extend(fn())
    return results
