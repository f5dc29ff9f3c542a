import logging
from collections import Counter
from itertools import combinations

import numpy as np

from nnmwe.exceptions import FormatError
from nnmwe.models.cluster import ClassifierMode, Decision, Verdict
from nnmwe.models.evaluation import PRF, AgreementInput, GoldClass, GoldLabel
from nnmwe.services.tsv_format import data_rows, fmt, header

logger = logging.getLogger(__name__)

GOLD_COLUMNS = ("m1_root", "m2_root", "class")
REPORT_COLUMNS = ("section", "system", "rank", "precision", "recall", "f_score", "flagged")
AGREEMENT_COLUMNS = ("pair", "items", "kappa", "masi")


def cohen_kappa(inp):
    """
    Chance-corrected agreement of two annotators over categorical labels.

    (p_o - p_e) / (1 - p_e) over the confusion matrix of the paired labels.
    When both annotators use one and the same label throughout, p_e is 1
    and the result is defined as 1.

    Args:
        inp (AgreementInput): Paired labels

    Returns:
        float: Kappa in [-1, 1]

    Raises:
        ValueError: With fewer than two items
    """
    if len(inp) < 2:
        raise ValueError(f"Kappa needs at least 2 items, got {len(inp)}")

    index = {label: i for i, label in enumerate(inp.alphabet)}
    confusion = np.zeros((len(index), len(index)), dtype=np.int64)
    for a, b in inp.items:
        confusion[index[a], index[b]] += 1

    total = float(confusion.sum())
    observed = np.trace(confusion) / total
    expected = float(np.dot(confusion.sum(axis=1) / total, confusion.sum(axis=0) / total))
    if np.isclose(expected, 1.0, rtol=0.0, atol=1e-12):
        return 1.0
    return float((observed - expected) / (1.0 - expected))


def masi(a, b):
    """
    Set-valued agreement: Jaccard overlap times a monotonicity weight.

    The weight is 1 for equal sets, 2/3 when one set contains the other,
    1/3 for overlapping sets and 0 for disjoint ones. Two empty sets count
    as identical.
    """
    a, b = frozenset(a), frozenset(b)
    if a == b:
        return 1.0
    union = a | b
    shared = a & b
    if not shared:
        return 0.0
    if a <= b or b <= a:
        monotonicity = 2 / 3
    else:
        monotonicity = 1 / 3
    return len(shared) / len(union) * monotonicity


def _is_mwe(decision):
    if isinstance(decision, Decision):
        return decision.is_mwe
    if isinstance(decision, Verdict):
        return decision is Verdict.MWE
    return bool(decision)


def _gold_class(label):
    return label.gold_class if isinstance(label, GoldLabel) else GoldClass(label)


class EvaluationService:
    """
    Service for scoring system output against gold labels and measuring
    annotator agreement.

    Gold classes B and E never enter a metric; M is the positive class and
    S the negative one.
    """

    def read_gold(self, stream):
        """
        Read a gold file of ``m1<TAB>m2<TAB>class`` rows.

        The class column may list several classes joined by ``|``; the
        first one is the item's class and the whole set is kept for MASI.

        Returns:
            dict: key → GoldLabel, in file order

        Raises:
            FormatError: On a bad row, an unknown class or a repeated key
        """
        gold = {}
        for line_number, (m1, m2, classes) in data_rows(stream, len(GOLD_COLUMNS)):
            names = [name.strip() for name in classes.split("|") if name.strip()]
            try:
                labels = [GoldClass(name) for name in names]
            except ValueError:
                raise FormatError(f"unknown gold class '{classes}'; expected M, S, B or E", line_number) from None
            if not labels:
                raise FormatError("empty gold class", line_number)
            key = (m1, m2)
            if key in gold:
                raise FormatError(f"candidate {m1} {m2} is labelled twice", line_number)
            gold[key] = GoldLabel(key=key, gold_class=labels[0], labels=frozenset(labels))
        logger.info("Read %d gold labels", len(gold))
        return gold

    def write_gold(self, gold):
        lines = [header(GOLD_COLUMNS)]
        for label in gold.values():
            others = sorted(c.value for c in label.labels if c is not label.gold_class)
            lines.append("\t".join((*label.key, "|".join([label.gold_class.value, *others]))))
        return "\n".join(lines) + "\n"

    def filter_gold(self, gold):
        """
        Drop classes B and E.

        Returns:
            tuple: (filtered mapping, class → percentage of all labels before filtering)
        """
        counts = Counter(label.gold_class for label in gold.values())
        total = sum(counts.values())
        distribution = {c: (100.0 * counts[c] / total if total else 0.0) for c in GoldClass}
        filtered = {key: label for key, label in gold.items() if label.gold_class.is_evaluated}
        logger.info(
            "Kept %d of %d gold labels (B %.2f%%, E %.2f%%)",
            len(filtered), total,
            distribution[GoldClass.LONGER_CHUNK], distribution[GoldClass.PARSE_ERROR],
        )
        return filtered, distribution

    def coverage(self, keys, gold):
        """
        Tally candidate keys as evaluated, filtered (class B or E) or unlabeled.

        Returns:
            Counter: Keys 'evaluated', 'filtered' and 'unlabeled'
        """
        tally = Counter({"evaluated": 0, "filtered": 0, "unlabeled": 0})
        for key in keys:
            label = gold.get(key)
            if label is None:
                tally["unlabeled"] += 1
            elif label.gold_class.is_evaluated:
                tally["evaluated"] += 1
            else:
                tally["filtered"] += 1
        return tally

    def prf_per_rank(self, ranked, gold):
        """
        Precision, recall and F-score of every rank bin.

        Only candidates with a gold class of M or S are counted. Recall is
        taken against all M items across the bins, so the recalls of the
        bins add up to 100 whenever any M item is present.

        Args:
            ranked (RankedList): The binned candidates
            gold (dict): key → GoldLabel

        Returns:
            list: One PRF per bin, rank 1 first
        """
        per_bin = []
        for members in ranked.bins:
            labels = [gold.get(item.key) for item in members]
            labels = [label for label in labels if label is not None and label.gold_class.is_evaluated]
            per_bin.append((sum(1 for label in labels if label.is_mwe), len(labels)))

        actual = sum(positives for positives, _ in per_bin)
        if actual == 0:
            logger.warning("No gold MWE among the ranked candidates; recall is 0 in every bin")
        return [PRF.from_counts(positives, size, actual) for positives, size in per_bin]

    def prf_binary(self, decisions):
        """
        Binary precision, recall and F-score of MWE decisions against classes M/S.

        Args:
            decisions (list): (decision, gold class) pairs; a decision is a
                Decision, a Verdict or a bool, the gold class a GoldLabel,
                GoldClass or class letter

        Returns:
            PRF: Flagged when nothing was predicted MWE or no item is M
        """
        predicted = actual = true_positives = 0
        for decision, label in decisions:
            guess, truth = _is_mwe(decision), _gold_class(label) is GoldClass.MWE
            predicted += guess
            actual += truth
            true_positives += guess and truth
        return PRF.from_counts(true_positives, predicted, actual)

    def pair_decisions(self, decisions, gold):
        """
        Match decisions with gold labels for ``prf_binary``.

        Untranslated decisions, unlabeled keys and classes B/E are left out.
        """
        pairs = []
        for decision in decisions:
            label = gold.get(decision.key)
            if decision.is_scored and label is not None and label.gold_class.is_evaluated:
                pairs.append((decision, label))
        return pairs

    def baseline_classify(self, candidate, corpus, determiner_pos=None, nominal_chunks=None):
        """
        Classify a candidate by the tokens around its chunk.

        The candidate is an MWE when, at every occurrence, neither the token
        right before nor the token right after its chunk is a determiner or
        belongs to a nominal chunk. Sentence boundaries count as clear.

        Args:
            candidate (CandidateBigram): Candidate with occurrence positions
            corpus (Corpus): The corpus the positions refer to
            determiner_pos (frozenset): Determiner POS tags
            nominal_chunks (frozenset): Nominal chunk labels

        Returns:
            Decision: The baseline verdict
        """
        determiner_pos = frozenset(("DT", "DEM") if determiner_pos is None else determiner_pos)
        nominal_chunks = frozenset(("NP",) if nominal_chunks is None else nominal_chunks)

        for sentence_index, index in candidate.positions:
            sentence = corpus[sentence_index]
            start, end = sentence.chunk_span(index) or (index, index + 2)
            for neighbor in (start - 1, end):
                if not 0 <= neighbor < len(sentence):
                    continue
                token = sentence[neighbor]
                in_nominal_chunk = sentence.chunk_ids[neighbor] is not None \
                    and token.chunk_label in nominal_chunks
                if token.pos in determiner_pos or in_nominal_chunk:
                    return Decision(
                        key=candidate.key,
                        mode=ClassifierMode.BASELINE,
                        verdict=Verdict.NOT_MWE,
                        reason=f"'{token.surface}' next to the chunk in sentence {sentence_index + 1}",
                    )

        return Decision(key=candidate.key, mode=ClassifierMode.BASELINE, verdict=Verdict.MWE)

    def agreement_table(self, annotations):
        """
        Pairwise kappa and mean MASI between annotators, plus their average.

        Pairs are listed neighbours first, so three annotators give
        A1-A2, A2-A3, A1-A3.

        Args:
            annotations (dict): annotator name → gold mapping, in annotator order

        Returns:
            list: Dicts with keys pair, items, kappa, masi; the last row is
                the average
        """
        names = list(annotations)
        if len(names) < 2:
            raise ValueError("Agreement needs at least two annotators")

        pairs = sorted(combinations(range(len(names)), 2), key=lambda p: (p[1] - p[0], p[0]))
        rows = []
        for i, j in pairs:
            first, second = annotations[names[i]], annotations[names[j]]
            shared = [key for key in first if key in second]
            if not shared:
                raise ValueError(f"Annotators {names[i]} and {names[j]} share no labelled item")
            classes = AgreementInput([(first[k].gold_class.value, second[k].gold_class.value) for k in shared])
            rows.append({
                "pair": f"{names[i]}-{names[j]}",
                "items": len(shared),
                "kappa": cohen_kappa(classes),
                "masi": float(np.mean([masi(first[k].labels, second[k].labels) for k in shared])),
            })

        rows.append({
            "pair": "average",
            "items": round(float(np.mean([row["items"] for row in rows]))),
            "kappa": float(np.mean([row["kappa"] for row in rows])),
            "masi": float(np.mean([row["masi"] for row in rows])),
        })
        return rows

    def sweep_cutoffs(self, decide, cutoffs, gold):
        """
        Evaluate a classifier at several cut-off values.

        Args:
            decide (callable): cut-off → list of Decision
            cutoffs (list): Cut-off values, in report order
            gold (dict): key → GoldLabel

        Returns:
            list: (cutoff, PRF) pairs
        """
        results = []
        for cutoff in cutoffs:
            row = self.prf_binary(self.pair_decisions(decide(cutoff), gold))
            logger.info("Cut-off %.2f: P=%.1f R=%.1f F=%.1f", cutoff, *row.rounded())
            results.append((cutoff, row))
        return results

    def split_dev_test(self, keys, seed=0):
        """
        Split labelled keys into a development half and a test half.

        The split is a seeded random permutation; both halves keep the
        input order. With an odd count the extra key goes to dev.
        """
        keys = list(keys)
        order = np.random.default_rng(seed).permutation(len(keys))
        dev_indices = set(order[:(len(keys) + 1) // 2].tolist())
        dev = [key for i, key in enumerate(keys) if i in dev_indices]
        test = [key for i, key in enumerate(keys) if i not in dev_indices]
        return dev, test

    def render_report(self, per_rank=None, binary=None, agreement=None, tally=None):
        """
        Render evaluation results as an aligned text table and a TSV.

        Args:
            per_rank (dict): system name → list of PRF per bin
            binary (dict): system name → PRF
            agreement (list): Rows from ``agreement_table``
            tally (Counter): Result of ``coverage``

        Returns:
            tuple: (text, tsv)
        """
        rows = []
        for system, prfs in (per_rank or {}).items():
            for rank, prf in enumerate(prfs, start=1):
                rows.append(("rank", system, str(rank), prf))
        for system, prf in (binary or {}).items():
            rows.append(("binary", system, "-", prf))

        text = []
        tsv = [header(REPORT_COLUMNS)]
        if tally is not None:
            text.append(
                f"candidates: {tally['evaluated']} evaluated, "
                f"{tally['filtered']} filtered (B/E), {tally['unlabeled']} unlabeled"
            )
        if rows:
            text.append(f"{'section':<8} {'system':<14} {'rank':>4} {'P':>6} {'R':>6} {'F':>6}")
            for section, system, rank, prf in rows:
                p, r, f = prf.rounded()
                mark = " *" if prf.flagged else ""
                text.append(f"{section:<8} {system:<14} {rank:>4} {p:>6.1f} {r:>6.1f} {f:>6.1f}{mark}")
                tsv.append("\t".join((
                    section, system, rank,
                    fmt(prf.precision), fmt(prf.recall), fmt(prf.f_score), fmt(prf.flagged),
                )))
            if any(prf.flagged for *_, prf in rows):
                text.append("* empty denominator, value defined as 0")

        if agreement:
            text.append(f"{'pair':<14} {'items':>6} {'kappa':>7} {'masi':>7}")
            tsv.append(header(AGREEMENT_COLUMNS))
            for row in agreement:
                text.append(f"{row['pair']:<14} {row['items']:>6} {row['kappa']:>7.3f} {row['masi']:>7.3f}")
                tsv.append("\t".join((row["pair"], str(row["items"]), fmt(row["kappa"]), fmt(row["masi"]))))

        return "\n".join(text) + "\n", "\n".join(tsv) + "\n"
