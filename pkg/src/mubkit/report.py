from dataclasses import dataclass, field


@dataclass(frozen=True)
class PairResult:
    """Deviation for one pair of bases; index 0 is the implicit identity."""

    i: int
    j: int
    max_dev: float
    location: tuple = ()


@dataclass
class VerificationReport:
    dim: int
    tolerance: float
    pairs: list = field(default_factory=list)
    unitarity: list = field(default_factory=list)
    eigen: list | None = None
    identities: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    def _values(self):
        yield from (p.max_dev for p in self.pairs)
        yield from self.unitarity
        yield from (self.eigen or ())
        yield from self.identities.values()

    @property
    def passed(self):
        return all(v < self.tolerance for v in self._values())

    @property
    def max_deviation(self):
        return max(self._values(), default=0.0)

    def to_json(self):
        out = {
            "dim": self.dim,
            "passed": self.passed,
            "tolerance": self.tolerance,
            "pairs": [{"i": p.i, "j": p.j, "max_dev": p.max_dev} for p in self.pairs],
            "unitarity": list(self.unitarity),
        }
        if self.eigen is not None:
            out["eigen"] = list(self.eigen)
        if self.identities:
            out["identities"] = dict(self.identities)
        if self.failures:
            out["failures"] = list(self.failures)
        return out
