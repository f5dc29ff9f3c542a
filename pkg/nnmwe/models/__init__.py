# Import models to make them available when importing from nnmwe.models
from nnmwe.models.corpus import (
    NULL_INFLECTION,
    CandidateBigram,
    CandidateRef,
    ChunkPosition,
    Corpus,
    HeuristicsConfig,
    Sentence,
    Token,
    WindowStats,
)
from nnmwe.models.lexicon import Lexicon, LexiconEntry, SenseGroup
from nnmwe.models.scoring import ContingencyTable, RankedList, ScoredCandidate, WeightConfig
from nnmwe.models.cluster import (
    ClassifierMode,
    Decision,
    DecisionConfig,
    SemanticCluster,
    SimilarityVectors,
    Verdict,
)
from nnmwe.models.taxonomy import Taxonomy, TranslationMap
from nnmwe.models.evaluation import PRF, AgreementInput, GoldClass, GoldLabel
