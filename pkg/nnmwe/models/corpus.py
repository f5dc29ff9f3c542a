from collections import Counter
from dataclasses import dataclass, field
from enum import Enum

from nnmwe.exceptions import ConfigError

NULL_INFLECTION = "0"

# Inflections the first noun of a Bengali compound may carry
BENGALI_M1_INFLECTIONS = frozenset({NULL_INFLECTION, "র", "এর", "এ", "য়", "য়ে"})

DEFAULT_NOUN_POS = frozenset({"NN", "NNP"})


class ChunkPosition(str, Enum):
    BEGIN = "B"
    INSIDE = "I"
    OUTSIDE = "O"


@dataclass(frozen=True)
class Token:
    """
    One annotated token of the corpus.

    The chunk column is split into a label (e.g. ``NP``) and a position
    marker; tokens outside every chunk carry an empty label.
    """

    surface: str
    root: str
    pos: str
    chunk_label: str
    chunk_position: ChunkPosition
    inflection: str = NULL_INFLECTION

    def __post_init__(self):
        if not self.surface:
            raise ValueError("Token surface must be non-empty")
        if not self.root:
            raise ValueError(f"Token '{self.surface}' has an empty root")
        if not isinstance(self.chunk_position, ChunkPosition):
            object.__setattr__(self, "chunk_position", ChunkPosition(self.chunk_position))

    @property
    def chunk(self):
        """The chunk column as written in the corpus file."""
        if self.chunk_position is ChunkPosition.OUTSIDE and not self.chunk_label:
            return ChunkPosition.OUTSIDE.value
        return f"{self.chunk_label}:{self.chunk_position.value}"

    @property
    def has_null_inflection(self):
        return self.inflection == NULL_INFLECTION


@dataclass(frozen=True)
class Sentence:
    """
    An ordered run of tokens.

    ``chunk_ids`` gives, per token, the index of the chunk instance it
    belongs to within the sentence, or None for tokens outside any chunk.
    """

    tokens: tuple
    chunk_ids: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "tokens", tuple(self.tokens))
        chunk_ids = []
        current = None
        next_id = 0
        previous = None
        for index, token in enumerate(self.tokens):
            if token.chunk_position is ChunkPosition.BEGIN:
                current = next_id
                next_id += 1
            elif token.chunk_position is ChunkPosition.INSIDE:
                if previous is None or current is None or previous.chunk_label != token.chunk_label:
                    raise ValueError(
                        f"Token {index} ('{token.surface}') is inside a chunk that was never opened"
                    )
            else:
                current = None
            chunk_ids.append(current)
            previous = token
        object.__setattr__(self, "chunk_ids", tuple(chunk_ids))

    def __len__(self):
        return len(self.tokens)

    def __iter__(self):
        return iter(self.tokens)

    def __getitem__(self, index):
        return self.tokens[index]

    def chunk_span(self, index):
        """
        Get the token span of the chunk instance containing a token.

        Args:
            index (int): Token index within the sentence

        Returns:
            tuple: (start, end) with ``end`` exclusive, or None when the
                token is outside every chunk
        """
        chunk_id = self.chunk_ids[index]
        if chunk_id is None:
            return None
        start = index
        while start > 0 and self.chunk_ids[start - 1] == chunk_id:
            start -= 1
        end = index + 1
        while end < len(self.tokens) and self.chunk_ids[end] == chunk_id:
            end += 1
        return start, end


@dataclass(frozen=True)
class Corpus:
    sentences: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "sentences", tuple(self.sentences))

    def __len__(self):
        return len(self.sentences)

    def __iter__(self):
        return iter(self.sentences)

    def __getitem__(self, index):
        return self.sentences[index]

    def __add__(self, other):
        return Corpus(self.sentences + other.sentences)

    @property
    def token_count(self):
        return sum(len(sentence) for sentence in self.sentences)


@dataclass(frozen=True)
class HeuristicsConfig:
    """
    The morpho-syntactic filter applied to adjacent token pairs.

    Only the first noun's inflection is restricted; the second noun may
    carry any inflection.
    """

    allowed_pos: frozenset = DEFAULT_NOUN_POS
    allowed_m1_inflections: frozenset = BENGALI_M1_INFLECTIONS
    m2_inflection_policy: str = "any"
    nominal_chunks: frozenset = frozenset({"NP"})

    def __post_init__(self):
        object.__setattr__(self, "allowed_pos", frozenset(self.allowed_pos))
        object.__setattr__(self, "allowed_m1_inflections", frozenset(self.allowed_m1_inflections))
        object.__setattr__(self, "nominal_chunks", frozenset(self.nominal_chunks))
        if not self.allowed_pos:
            raise ConfigError("allowed_pos must name at least one POS tag")
        if NULL_INFLECTION not in self.allowed_m1_inflections:
            raise ConfigError(
                f"allowed_m1_inflections must contain the null marker '{NULL_INFLECTION}'"
            )
        if self.m2_inflection_policy != "any":
            raise ConfigError(f"Unsupported m2 inflection policy '{self.m2_inflection_policy}'")
        if not self.nominal_chunks:
            raise ConfigError("nominal_chunks must name at least one chunk label")


@dataclass(frozen=True)
class CandidateBigram:
    """A noun-noun bigram <M1 M2> keyed by the roots of its two components."""

    m1: str
    m2: str
    surface_pair: tuple
    freq_pair: int
    freq_m1: int
    freq_m2: int
    in_longer_chunk: bool = False
    positions: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "surface_pair", tuple(self.surface_pair))
        object.__setattr__(self, "positions", tuple(self.positions))
        if self.freq_pair < 1:
            raise ValueError(f"Candidate {self.key} must occur at least once")
        if self.freq_pair > min(self.freq_m1, self.freq_m2):
            raise ValueError(f"Candidate {self.key} occurs more often than one of its components")
        if len(self.positions) != self.freq_pair:
            raise ValueError(f"Candidate {self.key} has {len(self.positions)} positions for frequency {self.freq_pair}")

    @property
    def key(self):
        return self.m1, self.m2

    def __repr__(self):
        return f"<CandidateBigram {self.m1} {self.m2} freq={self.freq_pair}>"


@dataclass(frozen=True)
class WindowStats:
    """
    Counts over adjacent noun-noun token pairs (bigram windows).

    ``first`` counts roots in the left slot of a window, ``second`` roots in
    the right slot and ``pairs`` whole root pairs. ``total`` is the number
    of windows.
    """

    total: int
    first: Counter
    second: Counter
    pairs: Counter


@dataclass(frozen=True)
class CandidateRef:
    """A candidate known only by its root pair, as read back from an output file."""

    m1: str
    m2: str

    @property
    def key(self):
        return self.m1, self.m2
