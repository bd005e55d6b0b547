"""End-to-end acceptance criteria, one test per criterion.

Each test records a one-line PASS/FAIL summary (printed at the end of the
session) and then asserts both correctness and the runtime budget.
"""
import math
import time
from math import gcd

import networkx as nx
import numpy as np

import conftest
from mubkit import gauss, printed
from mubkit.constructions import (
    CliqueSet,
    build_d4_complete,
    build_generic_triple,
    build_odd_clique_mub,
    build_prime_full,
    build_prime_square_tensor,
    construct_mubs,
    max_coprime_clique,
    prime_square_pair,
    smallest_prime_factor,
    tensor_combine,
)
from mubkit.fixtures import d12_checks, d20_checks, d4_block_product
from mubkit.generators import build_V, identity_deviations
from mubkit.matrix import eval_dense
from mubkit.verification import (
    brute_force_inner_products,
    is_mutually_unbiased,
    shift_power_cycles,
    verify_mum,
)

TOL = 1e-9


def both_paths(mubs, tol=TOL):
    """Worst deviation over the product-based check and the inner-product oracle."""
    return max(verify_mum(mubs, tol).max_deviation, brute_force_inner_products(mubs).deviation())


class Criterion:
    def __init__(self, n, title, limit):
        self.n, self.title, self.limit = n, title, limit
        self.checks = []

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def check(self, ok, what):
        self.checks.append((bool(ok), what))

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.t0
        if exc_type is not None:
            self.checks.append((False, f"raised {exc_type.__name__}: {exc}"))
        timed = elapsed < self.limit
        ok = timed and all(c for c, _ in self.checks)
        bad = [w for c, w in self.checks if not c]
        if not timed:
            bad.append(f"took {elapsed:.2f}s")
        detail = "; ".join(bad) if bad else f"{len(self.checks)} checks"
        conftest.ACCEPTANCE_LINES[self.n] = (
            f"{'PASS' if ok else 'FAIL'} criterion {self.n:2d}: {self.title} "
            f"[{elapsed:.2f}s / {self.limit:g}s] {detail}"
        )
        self.ok, self.failed = ok, bad
        return False


def finish(c):
    assert c.ok, c.failed


def test_criterion_01_prime_dimensions():
    with Criterion(1, "prime dimensions give d+1 MUBs", 1.0) as c:
        for d in [2, 3, 5, 7, 11, 13, 17, 19]:
            m = construct_mubs(d)
            c.check(m.claimed_count == d + 1, f"d={d} count {m.claimed_count}")
            dev = both_paths(m)
            c.check(dev < TOL, f"d={d} deviation {dev:.1e}")
    finish(c)


def test_criterion_02_universal_triple():
    with Criterion(2, "generic triple for 2 <= d <= 50", 5.0) as c:
        for d in range(2, 51):
            m = build_generic_triple(d)
            dev = both_paths(m)
            c.check(m.claimed_count == 3 and dev < TOL, f"d={d} deviation {dev:.1e}")
    finish(c)


def test_criterion_03_d15_cliques():
    with Criterion(3, "d=15 coprime clique sets", 1.0) as c:
        for s in [(0, 1, 2), (0, 2, 4), (0, 1, 8), (0, 4, 8), (0, 7, 14)]:
            m = build_odd_clique_mub(15, CliqueSet(15, s))
            dev = both_paths(m)
            c.check(m.claimed_count == 4 and dev < TOL, f"{s} deviation {dev:.1e}")
        # {0, 3} is not a clique; build the bases directly to see the bias
        from mubkit.constructions import build_Pk_odd

        ok, dev = is_mutually_unbiased(build_Pk_odd(15, 0), build_Pk_odd(15, 3))
        c.check(not ok and dev > 1e-3, f"{{0,3}} deviation {dev:.1e}")
    finish(c)


def test_criterion_04_d4_completion():
    with Criterion(4, "d=4 completion and block identity", 1.0) as c:
        m = build_d4_complete()
        dev = both_paths(m)
        c.check(m.claimed_count == 5 and dev < TOL, f"deviation {dev:.1e}")
        # upper-left block of P'01* P'10 is (P0* P1 - i P0'* P1')/2
        c.check(d4_block_product() == printed.d4_block_identity(), "block of P'01* P'10 not exact")
    finish(c)


def test_criterion_05_tensor_12_20():
    with Criterion(5, "tensor products for d=12 and d=20", 1.0) as c:
        d4 = build_d4_complete()
        for other, d, want in [(build_prime_full(3), 12, 4), (build_prime_full(5), 20, 5)]:
            m = tensor_combine(d4, other)
            dev = both_paths(m)
            c.check(m.dim == d and m.claimed_count == want and dev < TOL, f"d={d} deviation {dev:.1e}")
            disp = construct_mubs(d)
            c.check(disp.claimed_count == want, f"dispatcher d={d} count {disp.claimed_count}")
        for tag, results, n in [("d=12", d12_checks(), 3), ("d=20", d20_checks(), 4)]:
            verifies = [r for r in results if r.kind == "verify"]
            c.check(all(r.status == "pass" for r in verifies), f"{tag} printed set fails")
            for j in range(n):
                rows = [r for r in results if r.kind == "compare" and f"R{j} " in r.name]
                matched = any(r.status in ("exact", "equivalent") for r in rows)
                itemized = all(r.detail or r.status != "discrepancy" for r in rows) and rows
                c.check(matched or itemized, f"{tag} R{j} neither matched nor itemized")
    finish(c)


def test_criterion_06_gauss_trace():
    with Criterion(6, "|Tr D^k| = sqrt(d) for odd d <= 99, gcd(k,d)=1", 2.0) as c:
        worst = 0.0
        for d in range(1, 100, 2):
            for k in range(1, max(d, 2)):
                if gcd(k, d) == 1:
                    worst = max(worst, abs(gauss.trace_Dk(d, k).modulus - math.sqrt(d)))
        c.check(worst < TOL, f"worst {worst:.1e}")
        for d in [9, 15, 21]:
            for k in range(1, d):
                if gcd(k, d) > 1:
                    gap = abs(gauss.trace_Dk(d, k).modulus - math.sqrt(d))
                    c.check(gap > 1e-3, f"d={d} k={k} negative control gap {gap:.1e}")
    finish(c)


def test_criterion_07_even_sum():
    with Criterion(7, "even quadratic sum for d <= 100", 1.0) as c:
        for d in range(2, 101, 2):
            dev = abs(gauss.even_quadratic_sum(d).value - math.sqrt(d) * np.exp(1j * math.pi / 4))
            c.check(dev < TOL, f"d={d} deviation {dev:.1e}")
    finish(c)


def test_criterion_08_reciprocity():
    with Criterion(8, "reciprocity law and S(1,1,d)", 2.0) as c:
        params = gauss.valid_reciprocity_params(12)
        worst = max(gauss.reciprocity_check(a, b, d)[2] for a, b, d in params)
        c.check(worst < TOL, f"reciprocity worst {worst:.1e} over {len(params)} triples")
        for d in range(1, 50, 2):
            dev = abs(gauss.gauss_S(1, 1, d).value - math.sqrt(d) * np.exp(1j * math.pi * (1 - 1 / d) / 4))
            c.check(dev < TOL, f"S(1,1,{d}) deviation {dev:.1e}")
    finish(c)


def test_criterion_09_structural_identities():
    with Criterion(9, "structural identities for d <= 50", 5.0) as c:
        for d in range(1, 51):
            devs = identity_deviations(d)
            want = 5 if d % 2 else 4
            c.check(len(devs) == want, f"d={d} has {len(devs)} identities")
            for name, dev in devs.items():
                c.check(dev < TOL, f"d={d} {name} deviation {dev:.1e}")
    finish(c)


def test_criterion_10_clique_oracle():
    with Criterion(10, "clique size = smallest prime factor", 2.0) as c:
        for d in [9, 15, 21, 25, 33, 35]:
            g = nx.Graph()
            g.add_nodes_from(range(d))
            g.add_edges_from((a, b) for a in range(d) for b in range(a + 1, d) if gcd(b - a, d) == 1)
            _, size = nx.max_weight_clique(g, weight=None)
            got = len(max_coprime_clique(d))
            spf = smallest_prime_factor(d)
            c.check(got == size == spf, f"d={d} search {got}, exhaustive {size}, spf {spf}")
    finish(c)


def test_criterion_11_prime_square():
    with Criterion(11, "prime-square tensor and off-diagonal pair", 3.0) as c:
        for p in [3, 5]:
            m = build_prime_square_tensor(p)
            dev = both_paths(m)
            c.check(m.dim == p * p and m.claimed_count == p + 1 and dev < TOL, f"p={p} deviation {dev:.1e}")
        ok, dev = is_mutually_unbiased(eval_dense(prime_square_pair(3, 0, 1)), eval_dense(prime_square_pair(3, 1, 0)))
        c.check(not ok, f"(P01, P10) for p=3 is mutually unbiased (deviation {dev:.1e})")
    finish(c)


def test_criterion_12_eigenvector_moduli():
    with Criterion(12, "eigenvector moduli and single d-cycle", 2.0) as c:
        for d in range(3, 22, 2):
            V = eval_dense(build_V(d))
            U = np.diag(np.exp(2j * np.pi * np.arange(d) / d))
            for k in range(1, d):
                if gcd(k, d) != 1:
                    continue
                _, vecs = np.linalg.eig(U @ np.linalg.matrix_power(V.conj().T, k))
                dev = float(np.max(np.abs(np.abs(vecs) - d ** -0.5)))
                c.check(dev < 1e-6, f"d={d} k={k} modulus deviation {dev:.1e}")
                c.check(shift_power_cycles(d, k) == [d], f"d={d} k={k} cycles {shift_power_cycles(d, k)}")
    finish(c)
