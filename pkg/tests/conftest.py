import os

import pytest

from nnmwe.models.corpus import HeuristicsConfig
from nnmwe.services.corpus_service import CorpusService
from nnmwe.services.lexicon_service import LexiconService
from nnmwe.services.taxonomy_service import TaxonomyService

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")


def fixture_path(name):
    return os.path.join(FIXTURES, name)


def read_fixture(name):
    with open(fixture_path(name), encoding="utf-8") as f:
        return f.read()


@pytest.fixture
def corpus_service():
    return CorpusService()


@pytest.fixture
def lexicon_service():
    return LexiconService()


@pytest.fixture
def heuristics():
    return HeuristicsConfig()


@pytest.fixture
def corpus(corpus_service):
    return corpus_service.parse_corpus(read_fixture("corpus.tsv"))


@pytest.fixture
def candidates(corpus_service, corpus, heuristics):
    return corpus_service.extract_candidates(corpus, heuristics)


@pytest.fixture
def by_key(candidates):
    return {c.key: c for c in candidates}


@pytest.fixture
def lexicon(lexicon_service):
    return lexicon_service.parse_lexicon(read_fixture("lexicon.txt"))


@pytest.fixture
def taxonomy():
    return TaxonomyService().parse_taxonomy(read_fixture("taxonomy.tsv"))


@pytest.fixture
def translations(taxonomy):
    return TaxonomyService().parse_translations(read_fixture("translations.tsv"), taxonomy)


@pytest.fixture
def cli_args():
    """Resource flags pointing at the fixture files."""
    return [
        "--corpus", fixture_path("corpus.tsv"),
        "--lexicon", fixture_path("lexicon.txt"),
        "--taxonomy", fixture_path("taxonomy.tsv"),
        "--translations", fixture_path("translations.tsv"),
        "--gold", fixture_path("gold.tsv"),
    ]
