import os

import pytest

from conftest import fixture_path
from nnmwe import configure_logging
from nnmwe.config import Config
from nnmwe.exceptions import ConfigError
from nnmwe.models.scoring import WeightConfig


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    for key in ("ALPHA", "BETA", "MU", "WEIGHTS", "OUT", "CORPUS", "LOG_LEVEL"):
        monkeypatch.delenv(f"NNMWE_{key}", raising=False)


class TestLayers:
    def test_defaults(self):
        config = Config()
        assert config.alpha == 0.5
        assert config.beta == 0.5
        assert config.mu == 0.5
        assert config.bins == 5
        assert config.cutoffs == [0.6, 0.5, 0.4]
        assert config.weights() == WeightConfig(0.45, 0.35, 0.20)
        assert config.OUT == "out"

    def test_environment(self, monkeypatch):
        monkeypatch.setenv("NNMWE_ALPHA", "0.7")
        assert Config().alpha == 0.7

    def test_file_over_environment(self, monkeypatch, tmp_path):
        monkeypatch.setenv("NNMWE_ALPHA", "0.7")
        path = tmp_path / "nnmwe.env"
        path.write_text("ALPHA=0.3\nmu=0.25\n", encoding="utf-8")
        config = Config(str(path))
        assert config.alpha == 0.3
        assert config.mu == 0.25

    def test_overrides_win_and_none_is_ignored(self, tmp_path):
        path = tmp_path / "nnmwe.env"
        path.write_text("BETA=0.9\n", encoding="utf-8")
        config = Config(str(path), BETA="0.1", ALPHA=None)
        assert config.beta == 0.1
        assert config.alpha == 0.5

    def test_unknown_key(self, tmp_path):
        path = tmp_path / "nnmwe.env"
        path.write_text("GAMMA=1\n", encoding="utf-8")
        with pytest.raises(ConfigError, match="GAMMA"):
            Config(str(path))

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigError, match="not found"):
            Config(str(tmp_path / "absent.env"))


class TestValues:
    @pytest.mark.parametrize("weights", ["0.5,0.5", "0.5,0.5,0.5", "a,b,c", "-0.2,0.6,0.6"])
    def test_bad_weights(self, weights):
        with pytest.raises(ConfigError):
            Config(WEIGHTS=weights).weights()

    def test_weights_order(self):
        assert Config(WEIGHTS="0.2, 0.3, 0.5").weights() == WeightConfig(0.2, 0.3, 0.5)

    def test_alpha_out_of_range(self):
        with pytest.raises(ConfigError, match="alpha"):
            Config(ALPHA="1.5").decision()

    def test_negative_mu(self):
        with pytest.raises(ConfigError):
            Config(MU="-1").mu

    def test_bins_must_be_positive(self):
        with pytest.raises(ConfigError):
            Config(BINS="0").bins

    def test_not_a_number(self):
        with pytest.raises(ConfigError, match="beta"):
            Config(BETA="far").beta

    def test_heuristics(self):
        heuristics = Config(ALLOWED_POS="NN", NOMINAL_CHUNKS="NP,NX").heuristics()
        assert heuristics.allowed_pos == {"NN"}
        assert heuristics.nominal_chunks == {"NP", "NX"}


class TestRequire:
    def test_present(self):
        Config(CORPUS=fixture_path("corpus.tsv")).require("CORPUS")

    def test_unset(self):
        with pytest.raises(ConfigError, match="--lexicon is required"):
            Config().require("LEXICON")

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigError, match="does not exist"):
            Config(GOLD=str(tmp_path / "gold.tsv")).require("GOLD")


class TestLogging:
    def test_level_and_file(self, tmp_path):
        log_file = tmp_path / "run.log"
        logger = configure_logging(Config(LOG_LEVEL="debug", LOG_FILE=str(log_file)))
        try:
            assert logger.level == 10
            assert len(logger.handlers) == 2
            logger.debug("hello")
            assert "hello" in log_file.read_text(encoding="utf-8")
        finally:
            for handler in logger.handlers:
                handler.close()
            logger.handlers.clear()

    def test_unknown_level(self):
        with pytest.raises(ConfigError, match="log level"):
            configure_logging(Config(LOG_LEVEL="loud"))

    def test_reconfiguring_closes_old_handlers(self, tmp_path):
        first = configure_logging(Config(LOG_FILE=str(tmp_path / "first.log")))
        old_file = first.handlers[1]
        logger = configure_logging(Config())
        try:
            assert old_file.stream is None
            assert len(logger.handlers) == 1
        finally:
            for handler in logger.handlers:
                handler.close()
            logger.handlers.clear()


class TestShippedConfig:
    def test_bengali_config(self):
        path = os.path.join(os.path.dirname(os.path.dirname(__file__)), "config", "bengali.cfg")
        config = Config(path)
        heuristics = config.heuristics()
        assert "0" in heuristics.allowed_m1_inflections
        assert "এর" in heuristics.allowed_m1_inflections
        assert config.determiner_pos == {"DEM", "DT"}
        assert config.weights() == WeightConfig(0.45, 0.35, 0.20)
