import logging
from abc import ABC, abstractmethod
from dataclasses import replace

from nnmwe.exceptions import FormatError
from nnmwe.models.cluster import ClassifierMode, Decision, Verdict
from nnmwe.services.cluster_service import ClusterService
from nnmwe.services.evaluation_service import EvaluationService
from nnmwe.services.taxonomy_service import TaxonomyService
from nnmwe.services.tsv_format import data_rows, fmt, header, parse_float

logger = logging.getLogger(__name__)

DECISION_COLUMNS = ("m1_root", "m2_root", "mode", "n", "score", "fallback", "decision", "reason")


class MweClassifier(ABC):
    """
    Strategy Pattern Implementation

    This abstract class defines the interface for the MWE decision
    strategies: the two cluster geometries, the taxonomy distance and the
    chunk-context baseline.
    """

    mode = None

    @abstractmethod
    def classify(self, candidate):
        """
        Decide one candidate.

        Args:
            candidate (CandidateBigram): The candidate

        Returns:
            Decision: The verdict with its diagnostics
        """
        pass

    def with_cutoff(self, cutoff):
        """
        Get a copy of this classifier using another cut-off.

        Raises:
            ValueError: If the strategy has no cut-off
        """
        raise ValueError(f"Mode '{self.mode.value}' has no cut-off to sweep")

    def classify_all(self, candidates):
        decisions = [self.classify(candidate) for candidate in candidates]
        mwes = sum(1 for d in decisions if d.is_mwe)
        logger.info("%s: %d of %d candidates classified MWE", self.mode.value, mwes, len(decisions))
        return decisions


class ClusterClassifier(MweClassifier):
    """
    Cluster similarity strategy; cosine or Euclidean distance between the
    components' semantic-cluster vectors.
    """

    def __init__(self, mode, lexicon, corpus_nouns, decision_config, lexicon_service=None, cluster_service=None):
        self.mode = ClassifierMode(mode)
        self.decision_config = decision_config
        self.cluster_service = cluster_service or ClusterService(lexicon, corpus_nouns, lexicon_service)

    def classify(self, candidate):
        return self.cluster_service.check_mwe(candidate, self.decision_config, self.mode)

    def with_cutoff(self, cutoff):
        field = "alpha" if self.mode is ClassifierMode.COSINE else "beta"
        return ClusterClassifier(
            self.mode, None, None,
            replace(self.decision_config, **{field: cutoff}),
            cluster_service=self.cluster_service,
        )


class TaxonomyClassifier(MweClassifier):
    """Taxonomy distance strategy over the translations of both components."""

    mode = ClassifierMode.TAXONOMY

    def __init__(self, taxonomy, translations, mu, taxonomy_service=None):
        if mu < 0:
            raise ValueError(f"mu must be non-negative, got {mu}")
        self.taxonomy = taxonomy
        self.translations = translations
        self.mu = mu
        self.taxonomy_service = taxonomy_service or TaxonomyService()

    def classify(self, candidate):
        return self.taxonomy_service.classify_by_taxonomy(self.taxonomy, self.translations, candidate, self.mu)

    def with_cutoff(self, cutoff):
        return TaxonomyClassifier(self.taxonomy, self.translations, cutoff, self.taxonomy_service)


class BaselineClassifier(MweClassifier):
    """Chunk-context baseline: no determiner or nominal chunk around the candidate."""

    mode = ClassifierMode.BASELINE

    def __init__(self, corpus, determiner_pos=None, nominal_chunks=None, evaluation_service=None):
        self.corpus = corpus
        self.determiner_pos = determiner_pos
        self.nominal_chunks = nominal_chunks
        self.evaluation_service = evaluation_service or EvaluationService()

    def classify(self, candidate):
        return self.evaluation_service.baseline_classify(
            candidate, self.corpus, self.determiner_pos, self.nominal_chunks
        )


def write_decisions(decisions):
    """Render decisions as the decisions TSV, one row per candidate."""
    lines = [header(DECISION_COLUMNS)]
    for d in decisions:
        lines.append("\t".join((
            *d.key,
            d.mode.value,
            fmt(d.n),
            fmt(d.score),
            fmt(d.fallback),
            d.verdict.value,
            d.reason.replace("\t", " ") or "-",
        )))
    return "\n".join(lines) + "\n"


def read_decisions(stream):
    """
    Read a decisions TSV.

    Raises:
        FormatError: On a malformed row
    """
    decisions = []
    for line_number, fields in data_rows(stream, len(DECISION_COLUMNS)):
        m1, m2, mode, n, score, fallback, verdict, reason = fields
        try:
            decisions.append(Decision(
                key=(m1, m2),
                mode=ClassifierMode(mode),
                verdict=Verdict(verdict),
                n=None if n == "-" else int(n),
                score=None if score == "-" else parse_float(score),
                fallback=fallback == "1",
                reason="" if reason == "-" else reason,
            ))
        except ValueError as e:
            raise FormatError(f"bad decision row: {e}", line_number) from None
    return decisions
