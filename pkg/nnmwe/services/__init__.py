# Import services
from nnmwe.services.corpus_service import CorpusService
from nnmwe.services.lexicon_service import LexiconService
from nnmwe.services.taxonomy_service import TaxonomyService
from nnmwe.services.evaluation_service import EvaluationService
