import logging

import numpy as np

from nnmwe.exceptions import ZeroVectorError
from nnmwe.models.cluster import (
    ClassifierMode,
    Decision,
    SemanticCluster,
    SimilarityVectors,
    Verdict,
)
from nnmwe.services.lexicon_service import LexiconService

logger = logging.getLogger(__name__)


def intersect_axes(c1, c2):
    """
    Place the centers of two clusters in the space of their shared neighbors.

    Axes are the neighbor nouns present in both clusters, in lexicographic
    order; each center's coordinate on an axis is its commonality with
    that noun.

    Returns:
        SimilarityVectors: Possibly zero-dimensional
    """
    axes = tuple(sorted(c1.neighbors.keys() & c2.neighbors.keys()))
    return SimilarityVectors(
        axes=axes,
        v1=tuple(float(c1.neighbors[a]) for a in axes),
        v2=tuple(float(c2.neighbors[a]) for a in axes),
    )


def _unit_vectors(sv):
    if sv.n == 0:
        raise ValueError("Similarity needs at least one shared axis")
    v1 = np.asarray(sv.v1, dtype=np.float64)
    v2 = np.asarray(sv.v2, dtype=np.float64)
    norm1, norm2 = np.linalg.norm(v1), np.linalg.norm(v2)
    if norm1 == 0 or norm2 == 0:
        raise ZeroVectorError(f"Zero vector over axes {sv.axes}")
    return v1 / norm1, v2 / norm2


def cosine_similarity(sv):
    """
    Cosine of the angle between the two component vectors.

    Raises:
        ValueError: If there are no axes
        ZeroVectorError: If either vector is all zeros
    """
    u1, u2 = _unit_vectors(sv)
    return float(np.clip(np.dot(u1, u2), -1.0, 1.0))


def euclidean_distance(sv):
    """
    Distance between the unit-normalized component vectors, in [0, sqrt(2)].

    Raises:
        ValueError: If there are no axes
        ZeroVectorError: If either vector is all zeros
    """
    u1, u2 = _unit_vectors(sv)
    return float(np.linalg.norm(u1 - u2))


class ClusterService:
    """
    Service for semantic clusters of corpus nouns and the cluster-based MWE decision.

    The service is bound to one lexicon and one corpus noun set. Built
    clusters are memoised; each center is stored once and never replaced.
    """

    def __init__(self, lexicon, corpus_nouns, lexicon_service=None):
        self.lexicon = lexicon
        self.corpus_nouns = frozenset(corpus_nouns)
        self.lexicon_service = lexicon_service or LexiconService()
        self._clusters = {}
        self._synsets = {noun: self.synset_of(noun) for noun in sorted(self.corpus_nouns)}

        # headword → corpus nouns whose synset contains it
        self._nouns_of = {}
        for noun, synset in self._synsets.items():
            for headword in synset:
                self._nouns_of.setdefault(headword, []).append(noun)

    def synset_of(self, noun):
        return self.lexicon_service.synset_of(self.lexicon, noun)

    def comm(self, n1, n2):
        """
        Commonality of two nouns: the number of headwords their synsets share.

        Symmetric; comm(n, n) is the size of the synset of n.
        """
        return len(self.synset_of(n1) & self.synset_of(n2))

    def build_cluster(self, center):
        """
        Build the cluster of corpus nouns semantically related to ``center``.

        Args:
            center (str): A corpus noun

        Returns:
            SemanticCluster: Every other corpus noun with commonality >= 1,
                with its commonality score
        """
        cluster = self._clusters.get(center)
        if cluster is not None:
            return cluster

        if center not in self.corpus_nouns:
            logger.debug("Cluster center '%s' is not a corpus noun", center)

        synset = self._synsets.get(center)
        if synset is None:
            synset = self.synset_of(center)

        scores = {}
        for headword in synset:
            for noun in self._nouns_of.get(headword, ()):
                if noun != center:
                    scores[noun] = scores.get(noun, 0) + 1

        cluster = SemanticCluster(center=center, neighbors=dict(sorted(scores.items())))
        return self._clusters.setdefault(center, cluster)

    def check_mwe(self, candidate, cfg, mode=ClassifierMode.COSINE):
        """
        Decide whether a candidate is an MWE from the similarity of its components.

        With no shared axes the candidate is an MWE when it occurs at least
        ``cfg.min_freq_zero_dim`` times. Otherwise high similarity means
        compositional: cosine mode returns NotMWE when the cosine exceeds
        alpha, Euclidean mode when the distance exceeds beta.

        Args:
            candidate (CandidateBigram): The candidate
            cfg (DecisionConfig): Cut-offs
            mode (ClassifierMode): COSINE or EUCLIDEAN

        Returns:
            Decision: The verdict with n, score and the fallback flag
        """
        mode = ClassifierMode(mode)
        if mode not in (ClassifierMode.COSINE, ClassifierMode.EUCLIDEAN):
            raise ValueError(f"Cluster decision does not support mode '{mode.value}'")

        sv = intersect_axes(self.build_cluster(candidate.m1), self.build_cluster(candidate.m2))

        if sv.n == 0:
            is_mwe = candidate.freq_pair >= cfg.min_freq_zero_dim
            return Decision(
                key=candidate.key,
                mode=mode,
                verdict=Verdict.MWE if is_mwe else Verdict.NOT_MWE,
                n=0,
                fallback=True,
                reason=f"no shared cluster members, frequency {candidate.freq_pair}",
            )

        try:
            if mode is ClassifierMode.COSINE:
                score = cosine_similarity(sv)
                not_mwe = score > cfg.alpha
            else:
                score = euclidean_distance(sv)
                not_mwe = score > cfg.beta
        except ZeroVectorError as e:
            logger.warning("Undecidable candidate %s %s: %s", candidate.m1, candidate.m2, e)
            return Decision(
                key=candidate.key, mode=mode, verdict=Verdict.NOT_MWE, n=sv.n,
                reason=f"undecidable: {e}",
            )

        return Decision(
            key=candidate.key,
            mode=mode,
            verdict=Verdict.NOT_MWE if not_mwe else Verdict.MWE,
            n=sv.n,
            score=score,
        )
