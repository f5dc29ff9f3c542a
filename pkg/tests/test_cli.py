import logging
import os

import pytest
from click.testing import CliRunner

from conftest import fixture_path, read_fixture
from nnmwe.cli import cli
from nnmwe.models.corpus import CandidateRef
from nnmwe.models.scoring import MEASURES, ScoredCandidate
from nnmwe.services.association_service import AssociationService


@pytest.fixture(autouse=True)
def reset_package_logger():
    yield
    logger = logging.getLogger("nnmwe")
    for handler in logger.handlers:
        handler.close()
    logger.handlers.clear()


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def out(tmp_path):
    return str(tmp_path / "out")


def invoke(runner, *args):
    return runner.invoke(cli, [str(arg) for arg in args])


def run_pipeline(runner, cli_args, out, modes=("cosine", "euclidean", "taxonomy", "baseline")):
    for stage in ("extract", "rank"):
        result = invoke(runner, stage, *cli_args, "--out", out)
        assert result.exit_code == 0, result.output
    for mode in modes:
        result = invoke(runner, "classify", "--mode", mode, *cli_args, "--out", out)
        assert result.exit_code == 0, result.output


def read(out, name):
    with open(os.path.join(out, name), encoding="utf-8") as f:
        return f.read()


def data_lines(text):
    return [line for line in text.splitlines() if not line.startswith("#")]


class TestPipeline:
    def test_extract(self, runner, cli_args, out):
        result = invoke(runner, "extract", *cli_args, "--out", out)
        assert result.exit_code == 0
        assert "6 candidates extracted" in result.stdout
        assert "pairs: 16" in result.stdout
        assert len(data_lines(read(out, "candidates.tsv"))) == 6

    def test_every_output_has_one_row_per_candidate(self, runner, cli_args, out):
        run_pipeline(runner, cli_args, out)
        keys = [line.split("\t")[:2] for line in data_lines(read(out, "candidates.tsv"))]
        assert [line.split("\t")[:2] for line in data_lines(read(out, "scores.tsv"))] == keys
        for mode in ("cosine", "euclidean", "taxonomy", "baseline"):
            decisions = data_lines(read(out, f"decisions-{mode}.tsv"))
            assert [line.split("\t")[:2] for line in decisions] == keys

    def test_outputs_are_reproducible(self, runner, cli_args, tmp_path):
        first, second = str(tmp_path / "a"), str(tmp_path / "b")
        run_pipeline(runner, cli_args, first)
        run_pipeline(runner, cli_args, second)
        for name in sorted(os.listdir(first)):
            with open(os.path.join(first, name), "rb") as a, open(os.path.join(second, name), "rb") as b:
                assert a.read() == b.read(), name

    def test_eval(self, runner, cli_args, out):
        run_pipeline(runner, cli_args, out, modes=("cosine", "taxonomy", "baseline"))
        result = invoke(runner, "eval", *cli_args, "--gold2", fixture_path("gold2.tsv"), "--out", out)
        assert result.exit_code == 0, result.output
        assert "4 evaluated, 1 filtered (B/E), 1 unlabeled" in result.stdout

        rows = {tuple(line.split("\t")[:3]): line.split("\t")[3:] for line in data_lines(read(out, "report.tsv"))}
        assert rows[("binary", "cosine", "-")] == ["100.000000", "50.000000", "66.666667", "0"]
        assert rows[("binary", "baseline", "-")] == ["50.000000", "50.000000", "50.000000", "0"]
        assert rows[("binary", "taxonomy", "-")] == ["100.000000", "100.000000", "100.000000", "0"]
        assert rows[("rank", "combined", "1")] == ["100.000000", "100.000000", "100.000000", "0"]
        assert rows[("rank", "combined", "2")] == ["0.000000", "0.000000", "0.000000", "1"]
        assert rows[("rank", "combined", "5")] == ["0.000000", "0.000000", "0.000000", "0"]
        assert ("rank", "llr", "5") in rows

        agreement = [line.split("\t") for line in data_lines(read(out, "report.tsv")) if line.startswith("A1-A2")]
        assert agreement == [["A1-A2", "5", "0.375000", "0.666667"]]
        assert read(out, "report.txt") in result.stdout

    def test_eval_ranks_only_labelled_m_and_s_items(self, runner, tmp_path, out):
        items = []
        for m1, value in (("a", 0.9), ("b", 0.5), ("c", 0.1), ("d", 10.0)):
            items.append(ScoredCandidate(candidate=CandidateRef(m1, "x"), raw=dict.fromkeys(MEASURES, value)))
        scores = tmp_path / "scores.tsv"
        scores.write_text(AssociationService().write_scores(items), encoding="utf-8")
        gold = tmp_path / "gold.tsv"
        gold.write_text("a\tx\tM\nb\tx\tS\nc\tx\tM\nd\tx\tB\n", encoding="utf-8")

        result = invoke(runner, "eval", "--gold", gold, "--input", scores, "--out", out)
        assert result.exit_code == 0, result.output
        rows = {tuple(line.split("\t")[:3]): line.split("\t")[3:] for line in data_lines(read(out, "report.tsv"))}
        for measure in ("combined", "llr"):
            assert rows[("rank", measure, "1")][:3] == ["100.000000", "50.000000", "66.666667"]
            assert rows[("rank", measure, "3")][:3] == ["0.000000", "0.000000", "0.000000"]
            assert rows[("rank", measure, "5")][:3] == ["100.000000", "50.000000", "66.666667"]
        assert "3 evaluated, 1 filtered (B/E), 0 unlabeled" in result.stdout

    def test_eval_single_input(self, runner, cli_args, out):
        run_pipeline(runner, cli_args, out, modes=("baseline",))
        result = invoke(
            runner, "eval", *cli_args, "--input", os.path.join(out, "decisions-baseline.tsv"), "--out", out,
        )
        assert result.exit_code == 0, result.output
        rows = [line.split("\t")[:2] for line in data_lines(read(out, "report.tsv"))]
        assert rows == [["binary", "baseline"]]

    def test_sweep(self, runner, cli_args, out):
        invoke(runner, "extract", *cli_args, "--out", out)
        result = invoke(runner, "sweep", "--mode", "taxonomy", *cli_args, "--cutoffs", "0.5,0.2", "--out", out)
        assert result.exit_code == 0, result.output
        assert "Best cut-off 0.5" in result.stdout
        rows = [line.split("\t") for line in data_lines(read(out, "sweep-taxonomy.tsv"))]
        assert [row[0] for row in rows] == ["0.500000", "0.200000"]
        assert rows[0][1:4] == ["100.000000", "100.000000", "100.000000"]

    def test_min_freq_zero_dim_flag(self, runner, cli_args, out):
        invoke(runner, "extract", *cli_args, "--out", out)
        for value, verdict in ((None, "NotMWE"), (1, "MWE")):
            flag = () if value is None else ("--min-freq-zero-dim", value)
            result = invoke(runner, "classify", "--mode", "cosine", *cli_args, *flag, "--out", out)
            assert result.exit_code == 0, result.output
            rows = [line.split("\t") for line in data_lines(read(out, "decisions-cosine.tsv"))]
            assert {tuple(row[:2]): row[6] for row in rows}[("sky", "ink")] == verdict

    def test_prefix_min_length_flag(self, runner, tmp_path, out):
        corpus = tmp_path / "corpus.tsv"
        corpus.write_text(
            "housed\thoused\tNN\tNP:B\t0\nhome\thome\tNN\tNP:I\t0\n\nabode\tabode\tNN\tNP:B\t0\n", encoding="utf-8",
        )
        args = ["--corpus", corpus, "--lexicon", fixture_path("lexicon.txt")]
        invoke(runner, "extract", *args, "--out", out)
        shared_axes = []
        for flag in ((), ("--prefix-min-length", 6)):
            result = invoke(runner, "classify", "--mode", "cosine", *args, *flag, "--out", out)
            assert result.exit_code == 0, result.output
            row = data_lines(read(out, "decisions-cosine.tsv"))[0].split("\t")
            shared_axes.append((row[3], row[5]))
        # 'housed' borrows the synset of 'house' only through a five-letter prefix
        assert shared_axes == [("1", "0"), ("0", "1")]

    def test_rank_empty_candidates(self, runner, tmp_path, out):
        corpus = tmp_path / "verbs.tsv"
        corpus.write_text("go\tgo\tVB\tVP:B\t0\nhome\thome\tNN\tNP:B\t0\n", encoding="utf-8")
        assert invoke(runner, "extract", "--corpus", corpus, "--out", out).exit_code == 0
        result = invoke(runner, "rank", "--corpus", corpus, "--out", out)
        assert result.exit_code == 0
        assert data_lines(read(out, "scores.tsv")) == []


class TestUtilities:
    def test_split(self, runner, cli_args, out):
        result = invoke(runner, "split", *cli_args, "--seed", 7, "--out", out)
        assert result.exit_code == 0
        dev, test = data_lines(read(out, "gold-dev.tsv")), data_lines(read(out, "gold-test.tsv"))
        assert (len(dev), len(test)) == (3, 2)
        assert sorted(dev + test) == sorted(data_lines(read_fixture("gold.tsv")))

    def test_convert(self, runner, out):
        result = invoke(runner, "convert", "--input", fixture_path("sample.ssf"), "--out", out)
        assert result.exit_code == 0, result.output
        assert "2 sentences" in result.stdout
        assert os.path.isfile(os.path.join(out, "corpus.tsv"))

    def test_convert_needs_input(self, runner, out):
        assert invoke(runner, "convert", "--out", out).exit_code == 2

    def test_thesaurus(self, runner, cli_args, out):
        result = invoke(runner, "thesaurus", *cli_args, "--out", out)
        assert result.exit_code == 0
        assert "abode" in read(out, "thesaurus.tsv")

    def test_stats(self, runner, cli_args):
        result = invoke(runner, "stats", *cli_args)
        assert result.exit_code == 0
        assert "4 entries, 5 sense groups" in result.stdout

    def test_version(self, runner):
        result = invoke(runner, "--version")
        assert result.exit_code == 0
        assert "nnmwe" in result.stdout

    def test_config_file(self, runner, cli_args, tmp_path, out):
        config = tmp_path / "nnmwe.env"
        config.write_text("BINS=3\n", encoding="utf-8")
        invoke(runner, "extract", *cli_args, "--out", out)
        result = invoke(runner, "rank", *cli_args, "--config", config, "--out", out)
        assert result.exit_code == 0
        assert "ranked into 3 bins" in result.stdout


class TestExitCodes:
    def test_missing_corpus(self, runner, tmp_path, out):
        result = invoke(runner, "extract", "--corpus", tmp_path / "absent.tsv", "--out", out)
        assert result.exit_code == 2
        assert "does not exist" in result.stderr

    def test_no_corpus_flag(self, runner, out):
        assert invoke(runner, "extract", "--out", out).exit_code == 2

    def test_unknown_mode(self, runner, cli_args, out):
        assert invoke(runner, "classify", "--mode", "jaccard", *cli_args, "--out", out).exit_code == 2

    def test_bad_weights(self, runner, cli_args, out):
        invoke(runner, "extract", *cli_args, "--out", out)
        assert invoke(runner, "rank", *cli_args, "--weights", "0.5,0.6,0.1", "--out", out).exit_code == 2

    def test_taxonomy_without_translations(self, runner, out):
        args = ["--corpus", fixture_path("corpus.tsv"), "--taxonomy", fixture_path("taxonomy.tsv")]
        invoke(runner, "extract", *args, "--out", out)
        result = invoke(runner, "classify", "--mode", "taxonomy", *args, "--out", out)
        assert result.exit_code == 2
        assert "translations" in result.stderr

    def test_classify_before_extract(self, runner, cli_args, out):
        assert invoke(runner, "classify", *cli_args, "--out", out).exit_code == 2

    def test_malformed_corpus(self, runner, tmp_path, out):
        corpus = tmp_path / "bad.tsv"
        corpus.write_text("house\thouse\tNN\n", encoding="utf-8")
        result = invoke(runner, "extract", "--corpus", corpus, "--out", out)
        assert result.exit_code == 1
        assert "line 1" in result.stderr

    def test_unknown_log_level(self, runner, cli_args, out):
        assert invoke(runner, "extract", *cli_args, "--log-level", "loud", "--out", out).exit_code == 2

    def test_sweep_rejects_baseline(self, runner, cli_args, out):
        assert invoke(runner, "sweep", "--mode", "baseline", *cli_args, "--out", out).exit_code == 2
