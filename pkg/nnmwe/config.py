import os

from dotenv import dotenv_values

from nnmwe.exceptions import ConfigError
from nnmwe.models.cluster import DecisionConfig
from nnmwe.models.corpus import BENGALI_M1_INFLECTIONS, DEFAULT_NOUN_POS, HeuristicsConfig
from nnmwe.models.scoring import WeightConfig

ENV_PREFIX = "NNMWE_"


class Config:
    """
    Configuration class for the nnmwe pipeline.

    Values come from the built-in defaults, then ``NNMWE_*`` environment
    variables, then an optional key=value config file, then explicit
    overrides (the CLI flags), each layer replacing the previous one.
    """

    def __init__(self, config_file=None, **overrides):
        # Input resources
        self.CORPUS = self._env('CORPUS')
        self.CORPUS_FORMAT = self._env('CORPUS_FORMAT', 'tsv')  # tsv or ssf
        self.LEXICON = self._env('LEXICON')
        self.GOLD = self._env('GOLD')
        self.GOLD2 = self._env('GOLD2')
        self.GOLD3 = self._env('GOLD3')
        self.TAXONOMY = self._env('TAXONOMY')
        self.TRANSLATIONS = self._env('TRANSLATIONS')
        self.INPUT = self._env('INPUT')
        self.OUT = self._env('OUT', 'out')

        # Candidate heuristics
        self.ALLOWED_POS = self._env('ALLOWED_POS', ','.join(sorted(DEFAULT_NOUN_POS)))
        self.M1_INFLECTIONS = self._env('M1_INFLECTIONS', ','.join(sorted(BENGALI_M1_INFLECTIONS)))
        self.DETERMINER_POS = self._env('DETERMINER_POS', 'DT,DEM')
        self.NOMINAL_CHUNKS = self._env('NOMINAL_CHUNKS', 'NP')

        # Association measures
        self.WEIGHTS = self._env('WEIGHTS', '0.45,0.35,0.20')  # co-occurrence, phi, significance
        self.BINS = self._env('BINS', '5')

        # Cut-offs
        self.ALPHA = self._env('ALPHA', '0.5')  # cosine similarity
        self.BETA = self._env('BETA', '0.5')  # Euclidean distance
        self.MU = self._env('MU', '0.5')  # taxonomy distance
        self.MIN_FREQ_ZERO_DIM = self._env('MIN_FREQ_ZERO_DIM', '2')
        self.PREFIX_MIN_LENGTH = self._env('PREFIX_MIN_LENGTH', '3')
        self.MODE = self._env('MODE', 'cosine')
        self.CUTOFFS = self._env('CUTOFFS', '0.6,0.5,0.4')
        self.SEED = self._env('SEED', '0')

        # Logging configuration
        self.LOG_LEVEL = self._env('LOG_LEVEL', 'INFO')
        self.LOG_FILE = self._env('LOG_FILE')

        if config_file:
            self._load_file(config_file)

        for key, value in overrides.items():
            if value is not None:
                self._set(key, value)

    @staticmethod
    def _env(key, default=None):
        return os.environ.get(ENV_PREFIX + key, default)

    def _load_file(self, config_file):
        if not os.path.isfile(config_file):
            raise ConfigError(f"Config file '{config_file}' not found")
        for key, value in dotenv_values(config_file).items():
            self._set(key, value)

    def _set(self, key, value):
        name = key.upper()
        if not hasattr(self, name):
            raise ConfigError(f"Unknown configuration key '{key}'")
        setattr(self, name, str(value) if value is not None else None)

    def require(self, *keys):
        """
        Check that path settings are present and point at existing files.

        Args:
            *keys (str): Names of path settings, e.g. 'CORPUS'

        Raises:
            ConfigError: If a setting is unset or its file does not exist
        """
        for key in keys:
            path = getattr(self, key)
            if not path:
                raise ConfigError(f"--{key.lower()} is required")
            if not os.path.isfile(path):
                raise ConfigError(f"{key.lower()} file '{path}' does not exist")

    def heuristics(self):
        """Build the candidate filter from ALLOWED_POS, M1_INFLECTIONS and NOMINAL_CHUNKS."""
        return HeuristicsConfig(
            allowed_pos=_split(self.ALLOWED_POS),
            allowed_m1_inflections=_split(self.M1_INFLECTIONS),
            nominal_chunks=_split(self.NOMINAL_CHUNKS),
        )

    def weights(self):
        values = [self._number(v, 'WEIGHTS') for v in _split_ordered(self.WEIGHTS)]
        if len(values) != 3:
            raise ConfigError(f"--weights takes three comma-separated values, got '{self.WEIGHTS}'")
        return WeightConfig(*values)

    def decision(self):
        return DecisionConfig(
            alpha=self.alpha,
            beta=self.beta,
            min_freq_zero_dim=self._integer(self.MIN_FREQ_ZERO_DIM, 'MIN_FREQ_ZERO_DIM'),
        )

    @property
    def alpha(self):
        return self._number(self.ALPHA, 'ALPHA')

    @property
    def beta(self):
        return self._number(self.BETA, 'BETA')

    @property
    def mu(self):
        mu = self._number(self.MU, 'MU')
        if mu < 0:
            raise ConfigError(f"mu must be non-negative, got {mu}")
        return mu

    @property
    def bins(self):
        bins = self._integer(self.BINS, 'BINS')
        if bins < 1:
            raise ConfigError(f"bins must be >= 1, got {bins}")
        return bins

    @property
    def prefix_min_length(self):
        return self._integer(self.PREFIX_MIN_LENGTH, 'PREFIX_MIN_LENGTH')

    @property
    def seed(self):
        return self._integer(self.SEED, 'SEED')

    @property
    def cutoffs(self):
        return [self._number(v, 'CUTOFFS') for v in _split_ordered(self.CUTOFFS)]

    @property
    def determiner_pos(self):
        return _split(self.DETERMINER_POS)

    @staticmethod
    def _number(value, key):
        try:
            return float(value)
        except (TypeError, ValueError):
            raise ConfigError(f"{key.lower()} must be a number, got '{value}'") from None

    @staticmethod
    def _integer(value, key):
        try:
            return int(value)
        except (TypeError, ValueError):
            raise ConfigError(f"{key.lower()} must be an integer, got '{value}'") from None


def _split_ordered(value):
    return [part.strip() for part in (value or '').split(',') if part.strip()]


def _split(value):
    return frozenset(_split_ordered(value))
