import logging
from collections import Counter

from nnmwe.exceptions import CorpusFormatError
from nnmwe.models.corpus import (
    DEFAULT_NOUN_POS,
    CandidateBigram,
    ChunkPosition,
    Corpus,
    Sentence,
    Token,
    WindowStats,
)
from nnmwe.services.tsv_format import data_rows, header, lines_of

logger = logging.getLogger(__name__)

CANDIDATE_COLUMNS = ("m1_root", "m2_root", "freq_pair", "freq_m1", "freq_m2", "in_longer_chunk")

# Heuristic names, in the order a pair is checked against them
POS_RULE = "pos"
CHUNK_RULE = "chunk"
INFLECTION_RULE = "inflection"


class CorpusService:
    """
    Service for reading annotated corpora and extracting noun-noun candidates.
    """

    def parse_corpus(self, stream):
        """
        Parse the one-token-per-line annotated corpus format.

        Each line holds surface, root, POS, chunk (``LABEL:B``, ``LABEL:I``
        or ``O``) and inflection separated by tabs; a blank line ends a
        sentence.

        Args:
            stream: Text stream or string in the corpus format

        Returns:
            Corpus: The sentences in input order

        Raises:
            CorpusFormatError: If a line is malformed
        """
        sentences = []
        tokens = []

        for line_number, line in enumerate(lines_of(stream), start=1):
            if not line.strip():
                if tokens:
                    sentences.append(Sentence(tokens))
                    tokens = []
                continue

            fields = line.split("\t")
            if len(fields) != 5:
                raise CorpusFormatError(
                    f"expected 5 tab-separated columns, found {len(fields)}", line_number
                )
            surface, root, pos, chunk, inflection = fields
            label, position = self._parse_chunk(chunk, line_number)

            if position is ChunkPosition.INSIDE:
                previous = tokens[-1] if tokens else None
                if previous is None or previous.chunk_position is ChunkPosition.OUTSIDE \
                        or previous.chunk_label != label:
                    raise CorpusFormatError(
                        f"token '{surface}' continues a '{label}' chunk that was never opened",
                        line_number,
                    )

            try:
                tokens.append(Token(surface, root, pos, label, position, inflection))
            except ValueError as e:
                raise CorpusFormatError(str(e), line_number) from e

        if tokens:
            sentences.append(Sentence(tokens))

        corpus = Corpus(sentences)
        logger.debug("Parsed %d sentences, %d tokens", len(corpus), corpus.token_count)
        return corpus

    @staticmethod
    def _parse_chunk(chunk, line_number):
        if chunk == ChunkPosition.OUTSIDE.value:
            return "", ChunkPosition.OUTSIDE

        label, _, marker = chunk.rpartition(":")
        try:
            position = ChunkPosition(marker)
        except ValueError:
            raise CorpusFormatError(
                f"chunk '{chunk}' must be LABEL:B, LABEL:I, LABEL:O or O", line_number
            ) from None
        if not label and position is not ChunkPosition.OUTSIDE:
            raise CorpusFormatError(f"chunk '{chunk}' has no label", line_number)
        return label, position

    def write_corpus(self, corpus):
        """Serialize a corpus back to the annotated corpus format."""
        blocks = []
        for sentence in corpus:
            blocks.append("\n".join(
                "\t".join((t.surface, t.root, t.pos, t.chunk, t.inflection)) for t in sentence
            ))
        return "\n\n".join(blocks) + ("\n" if blocks else "")

    def rejected_by(self, sentence, index, cfg):
        """
        Check the pair (index, index + 1) against the candidate heuristics.

        Args:
            sentence (Sentence): The sentence holding the pair
            index (int): Index of the first token
            cfg (HeuristicsConfig): The heuristics to apply

        Returns:
            str: The first heuristic the pair fails, or None if it passes all
        """
        first, second = sentence[index], sentence[index + 1]

        if first.pos not in cfg.allowed_pos or second.pos not in cfg.allowed_pos:
            return POS_RULE

        chunk_id = sentence.chunk_ids[index]
        if chunk_id is None or chunk_id != sentence.chunk_ids[index + 1] \
                or first.chunk_label not in cfg.nominal_chunks:
            return CHUNK_RULE

        if first.inflection not in cfg.allowed_m1_inflections:
            return INFLECTION_RULE

        return None

    def extract_candidates(self, corpus, cfg):
        """
        Extract every noun-noun bigram that satisfies the candidate heuristics.

        Occurrences sharing the same root pair are merged into one
        candidate, in order of first occurrence.

        Args:
            corpus (Corpus): The parsed corpus
            cfg (HeuristicsConfig): The heuristics to apply

        Returns:
            list: CandidateBigram objects
        """
        unigrams = self.unigram_counts(corpus, cfg.allowed_pos)
        found = {}

        for sentence_index, sentence in enumerate(corpus):
            for index in range(len(sentence) - 1):
                if self.rejected_by(sentence, index, cfg):
                    continue

                first, second = sentence[index], sentence[index + 1]
                entry = found.setdefault((first.root, second.root), {
                    "surface_pair": (first.surface, second.surface),
                    "positions": [],
                    "in_longer_chunk": False,
                })
                entry["positions"].append((sentence_index, index))

                start, end = sentence.chunk_span(index)
                nouns = sum(1 for t in sentence.tokens[start:end] if t.pos in cfg.allowed_pos)
                if nouns > 2:
                    entry["in_longer_chunk"] = True

        candidates = [
            CandidateBigram(
                m1=m1,
                m2=m2,
                surface_pair=entry["surface_pair"],
                freq_pair=len(entry["positions"]),
                freq_m1=unigrams[m1],
                freq_m2=unigrams[m2],
                in_longer_chunk=entry["in_longer_chunk"],
                positions=entry["positions"],
            )
            for (m1, m2), entry in found.items()
        ]
        logger.info("Extracted %d candidates from %d sentences", len(candidates), len(corpus))
        return candidates

    def filter_statistics(self, corpus, cfg):
        """
        Count adjacent token pairs by the first heuristic they fail.

        Returns:
            Counter: Keys 'pairs', 'pos', 'chunk', 'inflection' and 'accepted'
        """
        stats = Counter({"pairs": 0, POS_RULE: 0, CHUNK_RULE: 0, INFLECTION_RULE: 0, "accepted": 0})
        for sentence in corpus:
            for index in range(len(sentence) - 1):
                stats["pairs"] += 1
                stats[self.rejected_by(sentence, index, cfg) or "accepted"] += 1
        return stats

    def unigram_counts(self, corpus, noun_pos=DEFAULT_NOUN_POS):
        """
        Count the occurrences of each noun root.

        Args:
            corpus (Corpus): The parsed corpus
            noun_pos (frozenset): POS tags counted as nouns

        Returns:
            Counter: root → number of noun tokens with that root
        """
        return Counter(token.root for sentence in corpus for token in sentence if token.pos in noun_pos)

    def noun_set(self, corpus, noun_pos=DEFAULT_NOUN_POS):
        """The roots of all noun tokens in the corpus."""
        return frozenset(self.unigram_counts(corpus, noun_pos))

    def window_stats(self, corpus, noun_pos=DEFAULT_NOUN_POS):
        """
        Count the bigram windows: adjacent noun-noun token pairs within a sentence.

        Returns:
            WindowStats: Window total plus left-slot, right-slot and pair counts
        """
        first, second, pairs = Counter(), Counter(), Counter()
        for sentence in corpus:
            for a, b in zip(sentence.tokens, sentence.tokens[1:]):
                if a.pos in noun_pos and b.pos in noun_pos:
                    first[a.root] += 1
                    second[b.root] += 1
                    pairs[(a.root, b.root)] += 1
        return WindowStats(total=sum(pairs.values()), first=first, second=second, pairs=pairs)

    def write_candidates(self, candidates):
        """Render candidates as the candidate TSV."""
        lines = [header(CANDIDATE_COLUMNS)]
        for c in candidates:
            lines.append("\t".join((
                c.m1, c.m2, str(c.freq_pair), str(c.freq_m1), str(c.freq_m2),
                "1" if c.in_longer_chunk else "0",
            )))
        return "\n".join(lines) + "\n"

    def read_candidate_keys(self, stream):
        """
        Read the root pairs listed in a candidate TSV, in file order.

        Raises:
            CorpusFormatError: If a row does not have the candidate columns
        """
        keys = []
        for line_number, fields in data_rows(stream, len(CANDIDATE_COLUMNS), CorpusFormatError):
            if fields[5] not in ("0", "1"):
                raise CorpusFormatError(f"in_longer_chunk must be 0 or 1, got '{fields[5]}'", line_number)
            keys.append((fields[0], fields[1]))
        return keys

    def select(self, candidates, keys):
        """
        Restrict candidates to the given keys, in the order of ``keys``.

        Keys without a matching candidate are logged and skipped.
        """
        by_key = {c.key: c for c in candidates}
        selected = []
        for key in keys:
            if key in by_key:
                selected.append(by_key[key])
            else:
                logger.warning("Candidate %s %s does not occur in the corpus", *key)
        return selected
