import math
from dataclasses import dataclass, field

from nnmwe.exceptions import ConfigError

PMI = "pmi"
LLR = "llr"
PHI = "phi"
COOCCURRENCE = "cooccurrence"
SIGNIFICANCE = "significance"
COMBINED = "combined"

MEASURES = (PMI, LLR, COOCCURRENCE, PHI, SIGNIFICANCE)
WEIGHTED_MEASURES = (COOCCURRENCE, PHI, SIGNIFICANCE)


@dataclass(frozen=True)
class ContingencyTable:
    """
    2x2 co-occurrence counts of a bigram <M1 M2> over all bigram windows.

    n11: M1 followed by M2; n12: M1 followed by something else;
    n21: M2 preceded by something else; n22: neither.
    """

    n11: int
    n12: int
    n21: int
    n22: int

    def __post_init__(self):
        for name in ("n11", "n12", "n21", "n22"):
            if getattr(self, name) < 0:
                raise ValueError(f"Contingency cell {name} is negative: {getattr(self, name)}")

    @property
    def total(self):
        return self.n11 + self.n12 + self.n21 + self.n22

    @property
    def f1(self):
        """Windows with M1 in the left slot."""
        return self.n11 + self.n12

    @property
    def f2(self):
        """Windows with M2 in the right slot."""
        return self.n11 + self.n21

    @property
    def not_f1(self):
        return self.n21 + self.n22

    @property
    def not_f2(self):
        return self.n12 + self.n22

    def transpose(self):
        return ContingencyTable(self.n11, self.n21, self.n12, self.n22)

    def scaled(self, factor):
        return ContingencyTable(self.n11 * factor, self.n12 * factor, self.n21 * factor, self.n22 * factor)


@dataclass
class ScoredCandidate:
    candidate: object
    raw: dict = field(default_factory=dict)
    normalized: dict = field(default_factory=dict)
    combined: float = 0.0
    bin: int = 0

    @property
    def key(self):
        return self.candidate.key

    def score(self, measure):
        """The normalized value of a measure, or the combined score."""
        if measure == COMBINED:
            return self.combined
        return self.normalized.get(measure, 0.0)


@dataclass(frozen=True)
class RankedList:
    """Candidates partitioned into ``k`` bins; ``bins[0]`` is rank 1."""

    bins: tuple
    measure: str = COMBINED

    def __len__(self):
        return sum(len(members) for members in self.bins)

    @property
    def k(self):
        return len(self.bins)

    def members(self):
        return [scored for members in self.bins for scored in members]


@dataclass(frozen=True)
class WeightConfig:
    w_cooc: float = 0.45
    w_phi: float = 0.35
    w_sig: float = 0.20

    def __post_init__(self):
        weights = (self.w_cooc, self.w_phi, self.w_sig)
        if any(w < 0 for w in weights):
            raise ConfigError(f"Weights must be non-negative, got {weights}")
        if not math.isclose(sum(weights), 1.0, abs_tol=1e-9):
            raise ConfigError(f"Weights must sum to 1, got {sum(weights):.6f}")

    def as_dict(self):
        return {COOCCURRENCE: self.w_cooc, PHI: self.w_phi, SIGNIFICANCE: self.w_sig}
