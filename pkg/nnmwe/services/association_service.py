import logging
import math

import numpy as np

from nnmwe.exceptions import FormatError, MeasureError
from nnmwe.models.corpus import CandidateRef
from nnmwe.models.scoring import (
    COMBINED,
    MEASURES,
    WEIGHTED_MEASURES,
    ContingencyTable,
    RankedList,
    ScoredCandidate,
    WeightConfig,
)
from nnmwe.patterns.creational.factory import MeasureFactory
from nnmwe.services.tsv_format import data_rows, fmt, header, parse_float

logger = logging.getLogger(__name__)

SCORE_COLUMNS = (
    "m1_root", "m2_root",
    *MEASURES,
    *(f"norm_{m}" for m in WEIGHTED_MEASURES),
    COMBINED, "bin",
)

# Scores within this distance of a bin edge belong to the higher bin
EDGE_TOLERANCE = 1e-9


class AssociationService:
    """
    Service for scoring candidates with association measures and ranking them into bins.
    """

    def __init__(self, measures=MEASURES):
        self.measures = MeasureFactory.create_measures(measures)

    def contingency(self, candidate, windows):
        """
        Build the 2x2 table of a candidate over the corpus bigram windows.

        Args:
            candidate (CandidateBigram): The candidate
            windows (WindowStats): Window counts of the same corpus

        Returns:
            ContingencyTable: The table

        Raises:
            ValueError: If the window counts do not cover the candidate
        """
        n11 = candidate.freq_pair
        n12 = windows.first[candidate.m1] - n11
        n21 = windows.second[candidate.m2] - n11
        n22 = windows.total - n11 - n12 - n21
        try:
            return ContingencyTable(n11, n12, n21, n22)
        except ValueError as e:
            raise ValueError(f"Window counts do not cover candidate {candidate.key}: {e}") from e

    def score_candidates(self, candidates, windows):
        """
        Compute every raw measure for every candidate.

        A measure whose precondition fails for a table yields NaN, which
        normalizes to 0.

        Returns:
            list: ScoredCandidate objects in input order
        """
        scored = []
        for candidate in candidates:
            table = self.contingency(candidate, windows)
            raw = {}
            for measure in self.measures:
                try:
                    raw[measure.name] = measure.score(table)
                except MeasureError as e:
                    logger.warning("No %s score for %s %s: %s", measure.name, candidate.m1, candidate.m2, e)
                    raw[measure.name] = math.nan
            scored.append(ScoredCandidate(candidate=candidate, raw=raw))
        return scored

    def normalize(self, scored, measure):
        """
        Min-max normalize one raw measure over the list into [0, 1].

        NaN scores map to 0, and so does every score of a measure whose
        finite values are all equal.
        """
        values = np.array([s.raw.get(measure, np.nan) for s in scored], dtype=float)
        finite = ~np.isnan(values)
        normalized = np.zeros_like(values)
        if finite.any():
            low, high = values[finite].min(), values[finite].max()
            if high > low:
                normalized[finite] = (values[finite] - low) / (high - low)

        for item, value in zip(scored, normalized):
            item.normalized[measure] = float(value)
        return scored

    def combine(self, scored, weights=None):
        """
        Normalize every measure and compute the weighted combined score.

        Args:
            scored (list): ScoredCandidate objects with raw scores
            weights (WeightConfig): Weights of co-occurrence, phi and significance

        Returns:
            list: The same objects with ``normalized`` and ``combined`` filled in

        Raises:
            ValueError: If the list is empty
        """
        if not scored:
            raise ValueError("Cannot combine an empty candidate list")
        weights = weights or WeightConfig()

        for measure in sorted({name for s in scored for name in s.raw}):
            self.normalize(scored, measure)

        weight_of = weights.as_dict()
        for item in scored:
            combined = sum(weight_of[m] * item.normalized.get(m, 0.0) for m in WEIGHTED_MEASURES)
            item.combined = float(np.clip(combined, 0.0, 1.0))
        return scored

    def rank_into_bins(self, scored, k=5, measure=COMBINED):
        """
        Partition candidates into ``k`` equal-width score bins.

        The range [min, max] of the chosen score is split into ``k``
        intervals; bin 1 holds the top interval and a score on an edge goes
        to the higher bin. When every score is equal all candidates land in
        bin 1. Ranking by the combined score also records the bin on each
        ScoredCandidate.

        Args:
            scored (list): Non-empty list of ScoredCandidate
            k (int): Number of bins
            measure (str): A measure name (its normalized score) or 'combined'

        Returns:
            RankedList: Bins in rank order, each sorted by descending score
        """
        if not scored:
            raise ValueError("Cannot rank an empty candidate list")
        if k < 1:
            raise ValueError(f"Number of bins must be >= 1, got {k}")

        scores = [s.score(measure) for s in scored]
        low, high = min(scores), max(scores)
        width = (high - low) / k
        bins = [[] for _ in range(k)]

        order = sorted(range(len(scored)), key=lambda i: -scores[i])
        for i in order:
            if width == 0:
                rank = 1
            else:
                from_bottom = min(int(np.floor((scores[i] - low) / width + EDGE_TOLERANCE)), k - 1)
                rank = k - from_bottom
            bins[rank - 1].append(scored[i])
            if measure == COMBINED:
                scored[i].bin = rank

        return RankedList(bins=tuple(bins), measure=measure)

    def rank_all(self, scored, k=5):
        """Rank by every individual measure and by the combined score."""
        return {measure: self.rank_into_bins(scored, k, measure) for measure in (*MEASURES, COMBINED)}

    def write_scores(self, scored):
        """Render scored candidates as the scores TSV, in input order."""
        lines = [header(SCORE_COLUMNS)]
        for item in scored:
            fields = [item.candidate.m1, item.candidate.m2]
            fields += [fmt(item.raw.get(m, math.nan)) for m in MEASURES]
            fields += [fmt(item.normalized.get(m, 0.0)) for m in WEIGHTED_MEASURES]
            fields += [fmt(item.combined), str(item.bin)]
            lines.append("\t".join(fields))
        return "\n".join(lines) + "\n"

    def read_scores(self, stream):
        """
        Read a scores TSV back into ScoredCandidate objects carrying the raw scores.

        Normalized and combined values are recomputed by ``combine``.
        """
        scored = []
        for line_number, fields in data_rows(stream, len(SCORE_COLUMNS), FormatError):
            try:
                raw = {m: parse_float(v) for m, v in zip(MEASURES, fields[2:2 + len(MEASURES)])}
            except ValueError:
                raise FormatError("scores must be numbers", line_number) from None
            scored.append(ScoredCandidate(candidate=CandidateRef(fields[0], fields[1]), raw=raw))
        return scored
