"""MUB constructions for each dimension class.

A :class:`MubSet` stores the non-identity bases only; the computational
(identity) basis is always implied, so ``claimed_count == len(bases) + 1``.
"""
import enum
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

import numpy as np

from mubkit import kernels, printed
from mubkit.generators import build_D_odd, build_Dprime_even, build_fourier
from mubkit.matrix import PhaseMatrix, eval_dense, phase_mul_diag, phase_pow, tensor


class Method(str, enum.Enum):
    GENERIC_TRIPLE = "GenericTriple"
    EVEN_TRIPLE = "EvenTriple"
    ODD_CLIQUE = "OddClique"
    PRIME_FULL = "PrimeFull"
    TENSOR_COMBINED = "TensorCombined"
    D4_COMPLETE = "D4Complete"
    PRIME_SQUARE = "PrimeSquareTensor"
    FIXTURE = "Fixture"


@dataclass(frozen=True)
class MubSet:
    dim: int
    method: Method
    bases: tuple

    def __post_init__(self):
        object.__setattr__(self, "bases", tuple(self.bases))
        object.__setattr__(self, "method", Method(self.method))
        for b in self.bases:
            if not isinstance(b, PhaseMatrix) or b.dim != self.dim:
                raise ValueError(f"every basis must be a {self.dim}x{self.dim} PhaseMatrix")

    @property
    def claimed_count(self):
        return len(self.bases) + 1

    def dense(self):
        """Stored bases as a ``(n, d, d)`` complex array."""
        if not self.bases:
            return np.zeros((0, self.dim, self.dim), dtype=np.complex128)
        return np.stack([eval_dense(b) for b in self.bases])

    def to_json(self):
        return {
            "dim": self.dim,
            "method": self.method.value,
            "claimed_count": self.claimed_count,
            "bases": [b.to_json() for b in self.bases],
        }

    @classmethod
    def from_json(cls, obj):
        try:
            dim = int(obj["dim"])
            method = Method(obj["method"])
            bases = [PhaseMatrix.from_json(b) for b in obj["bases"]]
            claimed = int(obj["claimed_count"])
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed MUB set: {exc}") from exc
        out = cls(dim, method, bases)
        if claimed != out.claimed_count:
            raise ValueError(f"claimed_count {claimed} does not match {len(bases)} stored bases")
        return out


@dataclass(frozen=True)
class CliqueSet:
    """Residues mod odd ``dim`` whose pairwise differences are coprime to ``dim``."""

    dim: int
    members: tuple

    def __post_init__(self):
        members = tuple(sorted(int(k) for k in self.members))
        object.__setattr__(self, "members", members)
        if self.dim % 2 == 0:
            raise ValueError(f"clique sets are defined for odd d, got {self.dim}")
        if len(set(members)) != len(members) or any(not 0 <= k < self.dim for k in members):
            raise ValueError(f"members must be distinct residues mod {self.dim}")
        for i, a in enumerate(members):
            for b in members[i + 1:]:
                g = gcd((b - a) % self.dim, self.dim)
                if g != 1:
                    raise ValueError(f"gcd({b} - {a}, {self.dim}) = {g}: not a coprime clique")

    def __len__(self):
        return len(self.members)


def is_prime(n):
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def smallest_prime_factor(n):
    f = 2
    while f * f <= n:
        if n % f == 0:
            return f
        f += 1
    return n


def prime_power(n):
    """``(p, k)`` with ``n == p**k`` and ``p`` prime, or ``None``."""
    if n < 2:
        return None
    p = smallest_prime_factor(n)
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return (p, k) if n == 1 else None


# ---------------------------------------------------------------------------
# single bases
# ---------------------------------------------------------------------------

def build_Pk_odd(d, k):
    """``D**(-k) @ P0`` for odd ``d``; diagonalizes ``V @ U**k`` to ``U``."""
    if d % 2 == 0:
        raise ValueError(f"odd-case P_k needs odd d, got {d}")
    if not 0 <= k < d:
        raise ValueError(f"k must lie in [0, {d}), got {k}")
    return phase_mul_diag(phase_pow(build_D_odd(d), -k), build_fourier(d))


def build_P1_even(d):
    """``D' @ P0`` for even ``d``; diagonalizes ``V @ U`` to ``omega * U``."""
    if d % 2:
        raise ValueError(f"even-case P_1 needs even d, got {d}")
    return phase_mul_diag(build_Dprime_even(d), build_fourier(d))


def build_P1(d):
    return build_P1_even(d) if d % 2 == 0 else build_Pk_odd(d, 1)


# ---------------------------------------------------------------------------
# sets
# ---------------------------------------------------------------------------

def build_generic_triple(d):
    """``{I, P0, P1}``: three MUBs in any dimension ``d >= 2``."""
    if d < 2:
        raise ValueError(f"need d >= 2, got {d}")
    method = Method.EVEN_TRIPLE if d % 2 == 0 else Method.GENERIC_TRIPLE
    return MubSet(d, method, (build_fourier(d), build_P1(d)))


def all_max_coprime_cliques(d):
    """Every maximum coprime clique containing 0, lexicographically ordered.

    Every maximum clique is a translate of one of these.
    """
    if d % 2 == 0 or d < 3:
        raise ValueError(f"clique search needs odd d >= 3, got {d}")
    rows = kernels.max_cliques_through_zero(kernels.coprime_adjacency(d), collect_all=True)
    return [CliqueSet(d, tuple(r)) for r in rows]


def max_coprime_clique(d):
    """Lexicographically smallest maximum coprime clique mod odd ``d``."""
    if d % 2 == 0 or d < 3:
        raise ValueError(f"clique search needs odd d >= 3, got {d}")
    # translating any clique by its minimum gives a clique through 0 that is
    # no larger lexicographically, so searching through 0 is exhaustive
    rows = kernels.max_cliques_through_zero(kernels.coprime_adjacency(d), collect_all=False)
    return CliqueSet(d, tuple(rows[0]))


def build_odd_clique_mub(d, clique):
    if not isinstance(clique, CliqueSet):
        clique = CliqueSet(d, tuple(clique))
    if clique.dim != d:
        raise ValueError(f"clique is for d={clique.dim}, not {d}")
    return MubSet(d, Method.ODD_CLIQUE, tuple(build_Pk_odd(d, k) for k in clique.members))


def build_prime_full(d):
    """``d + 1`` MUBs for prime ``d``."""
    if not is_prime(d):
        raise ValueError(f"{d} is not prime")
    if d == 2:
        return MubSet(2, Method.PRIME_FULL, (build_fourier(2), build_P1_even(2)))
    return MubSet(d, Method.PRIME_FULL, tuple(build_Pk_odd(d, k) for k in range(d)))


def tensor_combine(a, b):
    """Pair the i-th stored bases of two sets: ``A_i (x) B_i``."""
    n = min(len(a.bases), len(b.bases))
    bases = tuple(tensor(a.bases[i], b.bases[i]) for i in range(n))
    return MubSet(a.dim * b.dim, Method.TENSOR_COMBINED, bases)


def build_prime_square_tensor(p):
    """``P_j (x) P_j`` for ``j < p``: ``p + 1`` MUBs in dimension ``p**2``."""
    if p == 2 or not is_prime(p):
        raise ValueError(f"need an odd prime, got {p}")
    bases = tuple(tensor(build_Pk_odd(p, j), build_Pk_odd(p, j)) for j in range(p))
    return MubSet(p * p, Method.PRIME_SQUARE, bases)


def prime_square_pair(p, j, k):
    """``P_j (x) P_k`` in dimension ``p**2`` (off-diagonal pairs included)."""
    return tensor(build_Pk_odd(p, j), build_Pk_odd(p, k))


def build_d4_complete():
    """Five MUBs in dimension 4 from the recombined degenerate eigenspaces."""
    return MubSet(4, Method.D4_COMPLETE, printed.d4_Q())


# ---------------------------------------------------------------------------
# dispatcher
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _plan(d):
    """``(claimed_count, plan)`` for the best construction of dimension ``d``."""
    if is_prime(d):
        return d + 1, ("prime",)
    if d == 4:
        return 5, ("d4",)
    direct = []
    pp = prime_power(d)
    if pp and pp[1] == 2 and pp[0] > 2:
        direct.append((pp[0] + 1, ("prime-square", pp[0])))
    if d % 2:
        direct.append((smallest_prime_factor(d) + 1, ("clique",)))
    best_tensor = None
    for a in range(2, d):
        if d % a or d // a < 2:
            continue
        ca, _ = _plan(a)
        cb, _ = _plan(d // a)
        cand = (min(ca, cb), ("tensor", a, d // a))
        if best_tensor is None or cand[0] > best_tensor[0]:
            best_tensor = cand
    best = max(direct, key=lambda c: c[0], default=None)
    if best_tensor is not None:
        beats = best_tensor[0] > 3 or (pp is not None and pp[1] >= 3)
        if beats and (best is None or best_tensor[0] > best[0]):
            best = best_tensor
    if best is None or best[0] < 3:
        best = (3, ("triple",))
    return best


def _build(d, plan):
    kind = plan[0]
    if kind == "prime":
        return build_prime_full(d)
    if kind == "d4":
        return build_d4_complete()
    if kind == "prime-square":
        return build_prime_square_tensor(plan[1])
    if kind == "clique":
        return build_odd_clique_mub(d, max_coprime_clique(d))
    if kind == "tensor":
        a, b = plan[1], plan[2]
        return tensor_combine(construct_mubs(a), construct_mubs(b))
    return build_generic_triple(d)


def best_count(d):
    if d < 2:
        raise ValueError(f"need d >= 2, got {d}")
    return _plan(d)[0]


def construct_mubs(d):
    """Largest MUB set available for ``d`` among the implemented constructions."""
    if d < 2:
        raise ValueError(f"need d >= 2, got {d}")
    count, plan = _plan(d)
    out = _build(d, plan)
    assert out.claimed_count == count
    return out


METHOD_BUILDERS = {
    "generic-triple": build_generic_triple,
    "odd-clique": lambda d: build_odd_clique_mub(d, max_coprime_clique(d)),
    "prime-full": build_prime_full,
    "prime-square": lambda d: _prime_square_for_dim(d),
    "d4-complete": lambda d: _d4_for_dim(d),
    "tensor": lambda d: _tensor_for_dim(d),
}


def _prime_square_for_dim(d):
    pp = prime_power(d)
    if not pp or pp[1] != 2:
        raise ValueError(f"{d} is not the square of a prime")
    return build_prime_square_tensor(pp[0])


def _d4_for_dim(d):
    if d != 4:
        raise ValueError("the d=4 completion needs d=4")
    return build_d4_complete()


def _tensor_for_dim(d):
    best = None
    for a in range(2, d):
        if d % a == 0 and d // a >= 2:
            c = min(best_count(a), best_count(d // a))
            if best is None or c > best[0]:
                best = (c, a)
    if best is None:
        raise ValueError(f"{d} has no nontrivial factorization")
    a = best[1]
    return tensor_combine(construct_mubs(a), construct_mubs(d // a))
