import logging
import os

from nnmwe.exceptions import ConfigError
from nnmwe.models.cluster import ClassifierMode
from nnmwe.models.scoring import COMBINED
from nnmwe.patterns.behavioral.classifier_strategy import (
    DECISION_COLUMNS,
    read_decisions,
    write_decisions,
)
from nnmwe.patterns.creational.factory import ClassifierFactory
from nnmwe.patterns.structural.adapter import ShallowParserAdapter
from nnmwe.patterns.structural.decorator import log_stage, result_on_error
from nnmwe.services.association_service import SCORE_COLUMNS, AssociationService
from nnmwe.services.corpus_service import CorpusService
from nnmwe.services.evaluation_service import EvaluationService
from nnmwe.services.lexicon_service import LexiconService
from nnmwe.services.taxonomy_service import TaxonomyService
from nnmwe.services.tsv_format import fmt, header

logger = logging.getLogger(__name__)

CANDIDATES_FILE = "candidates.tsv"
SCORES_FILE = "scores.tsv"
CORPUS_FILE = "corpus.tsv"
THESAURUS_FILE = "thesaurus.tsv"
REPORT_TEXT_FILE = "report.txt"
REPORT_TSV_FILE = "report.tsv"
GOLD_DEV_FILE = "gold-dev.tsv"
GOLD_TEST_FILE = "gold-test.tsv"
SWEEP_COLUMNS = ("cutoff", "precision", "recall", "f_score", "flagged")


def decisions_file(mode):
    return f"decisions-{ClassifierMode(mode).value}.tsv"


def sweep_file(mode):
    return f"sweep-{ClassifierMode(mode).value}.tsv"


class PipelineFacade:
    """
    Facade Pattern Implementation

    This class provides a simplified interface for the MWE pipeline,
    hiding the interactions between the corpus, lexicon, association,
    cluster, taxonomy and evaluation services. Every stage reads its inputs
    from the Config, writes its files into the output directory and
    returns a dictionary with the status and details of the run.
    """

    def __init__(self, config):
        self.config = config
        self.corpus_service = CorpusService()
        self.lexicon_service = LexiconService(prefix_min_length=config.prefix_min_length)
        self.association_service = AssociationService()
        self.taxonomy_service = TaxonomyService()
        self.evaluation_service = EvaluationService()
        self.ssf_adapter = ShallowParserAdapter()

    # Input and output helpers

    @staticmethod
    def _read(path):
        with open(path, encoding="utf-8") as f:
            return f.read()

    def _write(self, name, text):
        os.makedirs(self.config.OUT, exist_ok=True)
        path = os.path.join(self.config.OUT, name)
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
        logger.debug("Wrote %s", path)
        return path

    def _out_path(self, name):
        return os.path.join(self.config.OUT, name)

    def _load_corpus(self):
        self.config.require("CORPUS")
        text = self._read(self.config.CORPUS)
        if self.config.CORPUS_FORMAT == "ssf":
            return self.ssf_adapter.read_ssf(text)
        if self.config.CORPUS_FORMAT != "tsv":
            raise ConfigError(f"--format must be tsv or ssf, got '{self.config.CORPUS_FORMAT}'")
        return self.corpus_service.parse_corpus(text)

    def _input(self, default_name):
        """The --input file, or a file of the previous stage in the output directory."""
        path = self.config.INPUT or self._out_path(default_name)
        if not os.path.isfile(path):
            raise ConfigError(f"input file '{path}' does not exist")
        return path

    def _load_candidates(self, corpus):
        """Re-extract the corpus candidates and keep those listed in the candidate file."""
        keys = self.corpus_service.read_candidate_keys(self._read(self._input(CANDIDATES_FILE)))
        candidates = self.corpus_service.extract_candidates(corpus, self.config.heuristics())
        return self.corpus_service.select(candidates, keys)

    def _load_lexicon(self):
        self.config.require("LEXICON")
        return self.lexicon_service.parse_lexicon(self._read(self.config.LEXICON))

    def _load_gold(self, key="GOLD"):
        self.config.require(key)
        return self.evaluation_service.read_gold(self._read(getattr(self.config, key)))

    def _classifier(self, mode, corpus):
        mode = ClassifierMode(mode)
        if mode in (ClassifierMode.COSINE, ClassifierMode.EUCLIDEAN):
            heuristics = self.config.heuristics()
            return ClassifierFactory.create_classifier(
                mode,
                lexicon=self._load_lexicon(),
                corpus_nouns=self.corpus_service.noun_set(corpus, heuristics.allowed_pos),
                decision_config=self.config.decision(),
                lexicon_service=self.lexicon_service,
            )
        if mode is ClassifierMode.TAXONOMY:
            self.config.require("TAXONOMY", "TRANSLATIONS")
            taxonomy = self.taxonomy_service.parse_taxonomy(self._read(self.config.TAXONOMY))
            translations = self.taxonomy_service.parse_translations(
                self._read(self.config.TRANSLATIONS), taxonomy
            )
            return ClassifierFactory.create_classifier(
                mode, taxonomy=taxonomy, translations=translations, mu=self.config.mu
            )
        return ClassifierFactory.create_classifier(
            mode,
            corpus=corpus,
            determiner_pos=self.config.determiner_pos,
            nominal_chunks=self.config.heuristics().nominal_chunks,
        )

    @staticmethod
    def _mode(mode):
        try:
            return ClassifierMode(mode)
        except ValueError:
            modes = ", ".join(m.value for m in ClassifierMode)
            raise ConfigError(f"Unknown mode '{mode}'; expected one of {modes}") from None

    # Pipeline stages

    @log_stage("extract")
    @result_on_error
    def extract(self):
        """
        Extract noun-noun candidates from the corpus.

        Returns:
            dict: status, candidate count, filter statistics and output path
        """
        corpus = self._load_corpus()
        heuristics = self.config.heuristics()
        candidates = self.corpus_service.extract_candidates(corpus, heuristics)
        stats = self.corpus_service.filter_statistics(corpus, heuristics)
        path = self._write(CANDIDATES_FILE, self.corpus_service.write_candidates(candidates))
        return {
            "success": True,
            "message": f"{len(candidates)} candidates extracted",
            "candidates": len(candidates),
            "filter_statistics": dict(stats),
            "path": path,
        }

    @log_stage("rank")
    @result_on_error
    def rank(self):
        """
        Score candidates with every association measure and rank them into bins.

        An empty candidate file yields an empty scores file.
        """
        weights = self.config.weights()
        bins = self.config.bins
        corpus = self._load_corpus()
        candidates = self._load_candidates(corpus)

        if not candidates:
            logger.warning("No candidates to rank")
            path = self._write(SCORES_FILE, header(SCORE_COLUMNS) + "\n")
            return {"success": True, "message": "No candidates to rank", "scored": 0, "path": path}

        windows = self.corpus_service.window_stats(corpus, self.config.heuristics().allowed_pos)
        scored = self.association_service.score_candidates(candidates, windows)
        self.association_service.combine(scored, weights)
        ranked = self.association_service.rank_into_bins(scored, bins, COMBINED)
        path = self._write(SCORES_FILE, self.association_service.write_scores(scored))
        return {
            "success": True,
            "message": f"{len(scored)} candidates ranked into {bins} bins",
            "scored": len(scored),
            "bin_sizes": [len(members) for members in ranked.bins],
            "path": path,
        }

    @log_stage("classify")
    @result_on_error
    def classify(self, mode=None):
        """
        Decide every candidate with the classifier of a mode.

        Args:
            mode (str): cosine, euclidean, taxonomy or baseline; defaults to MODE

        Returns:
            dict: status, decision counts and output path
        """
        mode = self._mode(mode or self.config.MODE)
        corpus = self._load_corpus()
        candidates = self._load_candidates(corpus)
        classifier = self._classifier(mode, corpus)
        decisions = classifier.classify_all(candidates)
        path = self._write(decisions_file(mode), write_decisions(decisions))
        return {
            "success": True,
            "message": f"{len(decisions)} candidates classified ({mode.value})",
            "decisions": len(decisions),
            "mwe": sum(1 for d in decisions if d.is_mwe),
            "untranslated": sum(1 for d in decisions if not d.is_scored),
            "path": path,
        }

    def _eval_inputs(self):
        if self.config.INPUT:
            return [self._input(SCORES_FILE)]
        names = [SCORES_FILE] + [decisions_file(m) for m in ClassifierMode]
        paths = [self._out_path(name) for name in names if os.path.isfile(self._out_path(name))]
        if not paths:
            raise ConfigError(f"no scores or decisions file in '{self.config.OUT}'; pass --input")
        return paths

    @staticmethod
    def _columns(text):
        first = text.split("\n", 1)[0]
        return tuple(first.split("\t")[1:]) if first.startswith("#") else ()

    @log_stage("eval")
    @result_on_error
    def evaluate(self):
        """
        Evaluate scores and decisions against the gold labels.

        A scores file gives per-rank P/R/F for every measure, computed over
        its M and S items only; a decisions file gives binary P/R/F. With
        --gold2 (and --gold3) the annotator agreement is added.
        """
        gold = self._load_gold()
        per_rank, binary, keys = {}, {}, []

        for path in self._eval_inputs():
            text = self._read(path)
            columns = self._columns(text)
            if columns == SCORE_COLUMNS:
                scored = self.association_service.read_scores(text)
                keys += [s.key for s in scored]
                # Only M and S items set the normalization range and the bin edges
                scored = [s for s in scored if s.key in gold and gold[s.key].gold_class.is_evaluated]
                if not scored:
                    logger.warning("No labelled M or S candidate in %s", path)
                    continue
                self.association_service.combine(scored, self.config.weights())
                for measure, ranked in self.association_service.rank_all(scored, self.config.bins).items():
                    per_rank[measure] = self.evaluation_service.prf_per_rank(ranked, gold)
            elif columns == DECISION_COLUMNS:
                decisions = read_decisions(text)
                keys += [d.key for d in decisions]
                modes = {d.mode for d in decisions}
                name = modes.pop().value if len(modes) == 1 else os.path.basename(path)
                binary[name] = self.evaluation_service.prf_binary(
                    self.evaluation_service.pair_decisions(decisions, gold)
                )
            else:
                raise ConfigError(f"'{path}' is neither a scores nor a decisions file")

        tally = self.evaluation_service.coverage(dict.fromkeys(keys), gold)
        if tally["unlabeled"]:
            logger.warning("%d candidates have no gold label", tally["unlabeled"])

        agreement = None
        if self.config.GOLD2:
            annotations = {"A1": gold, "A2": self._load_gold("GOLD2")}
            if self.config.GOLD3:
                annotations["A3"] = self._load_gold("GOLD3")
            agreement = self.evaluation_service.agreement_table(annotations)

        text, tsv = self.evaluation_service.render_report(per_rank, binary, agreement, tally)
        self._write(REPORT_TEXT_FILE, text)
        path = self._write(REPORT_TSV_FILE, tsv)
        return {
            "success": True,
            "message": f"Evaluated {tally['evaluated']} labelled candidates",
            "report": text,
            "unlabeled": tally["unlabeled"],
            "path": path,
        }

    @log_stage("sweep")
    @result_on_error
    def sweep(self, mode=None):
        """Evaluate a classifier at every cut-off in CUTOFFS."""
        mode = self._mode(mode or self.config.MODE)
        if mode is ClassifierMode.BASELINE:
            raise ConfigError("The baseline has no cut-off to sweep")
        gold = self._load_gold()
        corpus = self._load_corpus()
        candidates = self._load_candidates(corpus)
        classifier = self._classifier(mode, corpus)

        rows = self.evaluation_service.sweep_cutoffs(
            lambda cutoff: classifier.with_cutoff(cutoff).classify_all(candidates),
            self.config.cutoffs,
            gold,
        )
        lines = [header(SWEEP_COLUMNS)]
        for cutoff, prf in rows:
            lines.append("\t".join((
                fmt(cutoff), fmt(prf.precision), fmt(prf.recall), fmt(prf.f_score), fmt(prf.flagged),
            )))
        path = self._write(sweep_file(mode), "\n".join(lines) + "\n")
        best_cutoff, best = max(rows, key=lambda row: row[1].f_score)
        return {
            "success": True,
            "message": f"Best cut-off {best_cutoff:g} (F={best.f_score:.1f})",
            "rows": rows,
            "path": path,
        }

    @log_stage("thesaurus")
    @result_on_error
    def thesaurus(self):
        """Dump the noun → headwords index of the lexicon."""
        lexicon = self._load_lexicon()
        path = self._write(THESAURUS_FILE, self.lexicon_service.write_thesaurus(lexicon))
        return {"success": True, "message": f"{len(lexicon.reverse)} nouns indexed", "path": path}

    @log_stage("stats")
    @result_on_error
    def stats(self):
        statistics = self.lexicon_service.lexicon_statistics(self._load_lexicon())
        return {
            "success": True,
            "message": f"{statistics['entries']} entries, {statistics['sense_groups']} sense groups",
            "statistics": statistics,
        }

    @log_stage("convert")
    @result_on_error
    def convert(self):
        """Convert shallow-parser SSF output (--input) into the corpus TSV."""
        if not self.config.INPUT:
            raise ConfigError("--input is required")
        corpus = self.ssf_adapter.read_ssf(self._read(self._input(CORPUS_FILE)))
        path = self._write(CORPUS_FILE, self.corpus_service.write_corpus(corpus))
        return {
            "success": True,
            "message": f"{len(corpus)} sentences, {corpus.token_count} tokens converted",
            "path": path,
        }

    @log_stage("split")
    @result_on_error
    def split(self):
        """Split the gold labels into a development and a test half."""
        gold = self._load_gold()
        dev, test = self.evaluation_service.split_dev_test(list(gold), self.config.seed)
        self._write(GOLD_DEV_FILE, self.evaluation_service.write_gold({k: gold[k] for k in dev}))
        path = self._write(GOLD_TEST_FILE, self.evaluation_service.write_gold({k: gold[k] for k in test}))
        return {
            "success": True,
            "message": f"{len(dev)} development and {len(test)} test items",
            "dev": len(dev),
            "test": len(test),
            "path": path,
        }
