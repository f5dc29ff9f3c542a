import math
from abc import ABC, abstractmethod

import numpy as np

from nnmwe.exceptions import MeasureError
from nnmwe.models.scoring import COOCCURRENCE, LLR, PHI, PMI, SIGNIFICANCE


def pmi(t):
    """
    Pointwise mutual information, in bits.

    log2(n11 * N / (f1 * f2)) where f1 and f2 are the left and right
    marginals of the table.

    Raises:
        MeasureError: If the pair never occurs or a marginal is zero
    """
    if t.n11 < 1 or t.f1 < 1 or t.f2 < 1:
        raise MeasureError(f"PMI needs n11, f1 and f2 >= 1, got {t}")
    return math.log2(t.n11 * t.total / (t.f1 * t.f2))


def llr(t):
    """
    Dunning's log-likelihood ratio G² = 2 Σ obs · ln(obs / expected).

    Cells with no observations contribute 0. The result is never negative.

    Raises:
        MeasureError: If the table is empty
    """
    if t.total < 1:
        raise MeasureError(f"LLR needs a non-empty table, got {t}")

    observed = np.array([[t.n11, t.n12], [t.n21, t.n22]], dtype=np.float64)
    expected = np.outer(observed.sum(axis=1), observed.sum(axis=0)) / t.total
    seen = observed > 0
    g2 = 2.0 * float(np.sum(observed[seen] * np.log(observed[seen] / expected[seen])))
    return max(g2, 0.0)


def phi(t):
    """
    Phi coefficient of the 2x2 table, in [-1, 1].

    Raises:
        MeasureError: If any of the four marginals is zero
    """
    marginals = (t.f1, t.not_f1, t.f2, t.not_f2)
    if min(marginals) < 1:
        raise MeasureError(f"Phi needs all marginals >= 1, got {t}")
    value = (t.n11 * t.n22 - t.n12 * t.n21) / math.sqrt(math.prod(marginals))
    return min(1.0, max(-1.0, value))


def cooccurrence(t):
    """
    Overlap of the occurrence sets of the two components: n11 / (f1 + f2 - n11).

    Raises:
        MeasureError: If either component never occurs
    """
    if t.f1 < 1 or t.f2 < 1:
        raise MeasureError(f"Co-occurrence needs f1 and f2 >= 1, got {t}")
    return t.n11 / (t.f1 + t.f2 - t.n11)


def significance(t):
    """
    Dice overlap damped for rare pairs: (2 n11 / (f1 + f2)) · (1 - e^(-n11)).

    Raises:
        MeasureError: If either component never occurs
    """
    if t.f1 < 1 or t.f2 < 1:
        raise MeasureError(f"Significance needs f1 and f2 >= 1, got {t}")
    return (2.0 * t.n11 / (t.f1 + t.f2)) * (1.0 - math.exp(-t.n11))


class AssociationMeasure(ABC):
    """
    Strategy Pattern Implementation

    This abstract class defines the interface for the association measures
    scored over a bigram's contingency table.
    """

    name = None

    @abstractmethod
    def score(self, table):
        """
        Score a bigram.

        Args:
            table (ContingencyTable): The bigram's co-occurrence counts

        Returns:
            float: The association score

        Raises:
            MeasureError: If the table lies outside the measure's domain
        """
        pass

    def __repr__(self):
        return f"<{type(self).__name__} {self.name}>"


class PmiMeasure(AssociationMeasure):
    name = PMI

    def score(self, table):
        return pmi(table)


class LlrMeasure(AssociationMeasure):
    name = LLR

    def score(self, table):
        return llr(table)


class PhiMeasure(AssociationMeasure):
    name = PHI

    def score(self, table):
        return phi(table)


class CooccurrenceMeasure(AssociationMeasure):
    """
    Default co-occurrence strategy.

    The overlap formula is a stand-in; register another strategy under the
    same name to use a different definition.
    """

    name = COOCCURRENCE

    def score(self, table):
        return cooccurrence(table)


class SignificanceMeasure(AssociationMeasure):
    """Default significance strategy; replaceable the same way as co-occurrence."""

    name = SIGNIFICANCE

    def score(self, table):
        return significance(table)
