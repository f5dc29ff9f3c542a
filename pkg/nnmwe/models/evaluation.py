from dataclasses import dataclass
from enum import Enum


class GoldClass(str, Enum):
    MWE = "M"
    SEMANTIC_COLLOCATION = "S"
    LONGER_CHUNK = "B"
    PARSE_ERROR = "E"

    @property
    def is_evaluated(self):
        """Classes B and E are filtered out before any metric."""
        return self in (GoldClass.MWE, GoldClass.SEMANTIC_COLLOCATION)


@dataclass(frozen=True)
class GoldLabel:
    """
    The annotated class of one candidate.

    ``labels`` holds every class the annotator listed for the item (for
    set-valued agreement); ``gold_class`` is the first of them.
    """

    key: tuple
    gold_class: GoldClass
    labels: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "gold_class", GoldClass(self.gold_class))
        if not self.labels:
            object.__setattr__(self, "labels", frozenset({self.gold_class}))

    @property
    def is_mwe(self):
        return self.gold_class is GoldClass.MWE


@dataclass(frozen=True)
class PRF:
    """
    Precision, recall and F-score in percent.

    ``flagged`` marks rows whose precision or recall had an empty
    denominator and was defined as 0.
    """

    precision: float
    recall: float
    f_score: float
    flagged: bool = False

    @classmethod
    def from_pr(cls, precision, recall, flagged=False):
        total = precision + recall
        f_score = 2 * precision * recall / total if total > 0 else 0.0
        return cls(precision, recall, f_score, flagged)

    @classmethod
    def from_counts(cls, true_positives, predicted, actual):
        """
        Build a row from confusion counts.

        Args:
            true_positives (int): Items predicted positive that are positive
            predicted (int): Items predicted positive
            actual (int): Positive items in the evaluated set

        Returns:
            PRF: The row, flagged when ``predicted`` or ``actual`` is 0
        """
        precision = 100.0 * true_positives / predicted if predicted else 0.0
        recall = 100.0 * true_positives / actual if actual else 0.0
        return cls.from_pr(precision, recall, flagged=not predicted or not actual)

    def rounded(self):
        return round(self.precision, 1), round(self.recall, 1), round(self.f_score, 1)


@dataclass(frozen=True)
class AgreementInput:
    """Paired labels of two annotators over the same items."""

    items: tuple

    def __post_init__(self):
        object.__setattr__(self, "items", tuple(tuple(pair) for pair in self.items))
        if not self.items:
            raise ValueError("Agreement needs at least one item")

    def __len__(self):
        return len(self.items)

    @property
    def alphabet(self):
        return sorted({label for pair in self.items for label in pair}, key=str)
