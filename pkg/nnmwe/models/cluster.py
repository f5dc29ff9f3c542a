from dataclasses import dataclass, field
from enum import Enum

from nnmwe.exceptions import ConfigError


class Verdict(str, Enum):
    MWE = "MWE"
    NOT_MWE = "NotMWE"
    UNTRANSLATED = "untranslated"


class ClassifierMode(str, Enum):
    COSINE = "cosine"
    EUCLIDEAN = "euclidean"
    TAXONOMY = "taxonomy"
    BASELINE = "baseline"


@dataclass(frozen=True)
class SemanticCluster:
    """A corpus noun and the corpus nouns sharing synsets with it, with their commonality."""

    center: str
    neighbors: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.center in self.neighbors:
            raise ValueError(f"Cluster center '{self.center}' cannot be its own neighbor")

    def __len__(self):
        return len(self.neighbors)


@dataclass(frozen=True)
class SimilarityVectors:
    """Two components placed in the space spanned by their shared cluster members."""

    axes: tuple
    v1: tuple
    v2: tuple

    def __post_init__(self):
        if not len(self.axes) == len(self.v1) == len(self.v2):
            raise ValueError(
                f"Vector lengths {len(self.v1)}/{len(self.v2)} do not match {len(self.axes)} axes"
            )

    @property
    def n(self):
        return len(self.axes)


@dataclass(frozen=True)
class DecisionConfig:
    """Cut-offs of the cluster decision; alpha for cosine, beta for Euclidean distance."""

    alpha: float = 0.5
    beta: float = 0.5
    min_freq_zero_dim: int = 2

    def __post_init__(self):
        if not 0.0 <= self.alpha <= 1.0:
            raise ConfigError(f"alpha must lie in [0, 1], got {self.alpha}")
        if self.beta < 0:
            raise ConfigError(f"beta must be non-negative, got {self.beta}")
        if self.min_freq_zero_dim < 1:
            raise ConfigError(f"min_freq_zero_dim must be >= 1, got {self.min_freq_zero_dim}")


@dataclass(frozen=True)
class Decision:
    """
    The verdict for one candidate with the diagnostics that produced it.

    ``n`` is the number of shared axes (None outside the cluster modes),
    ``score`` the cosine, distance or taxonomy distance compared against the
    cut-off, and ``fallback`` marks the zero-dimension frequency rule.
    """

    key: tuple
    mode: ClassifierMode
    verdict: Verdict
    n: int = None
    score: float = None
    fallback: bool = False
    reason: str = ""

    @property
    def is_mwe(self):
        return self.verdict is Verdict.MWE

    @property
    def is_scored(self):
        return self.verdict is not Verdict.UNTRANSLATED
