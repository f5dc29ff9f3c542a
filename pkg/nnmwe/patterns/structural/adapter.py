import re

from nnmwe.exceptions import CorpusFormatError
from nnmwe.models.corpus import NULL_INFLECTION, ChunkPosition, Corpus, Sentence, Token
from nnmwe.services.tsv_format import lines_of

AF_PATTERN = re.compile(r"""\baf=(['"])(.*?)\1""")


class ShallowParserAdapter:
    """
    Adapter Pattern Implementation

    This class adapts the Shakti Standard Format (SSF) written by the
    Indian-language shallow parsers to the corpus model, so their output
    can be fed to candidate extraction without an intermediate tool.
    """

    # Positions inside the comma-separated 'af' feature
    ROOT_FIELD = 0
    SUFFIX_FIELD = 6

    def read_ssf(self, stream):
        """
        Convert SSF text to a Corpus.

        Args:
            stream: Text stream or string in SSF

        Returns:
            Corpus: One sentence per ``<Sentence>`` block

        Raises:
            CorpusFormatError: If brackets are unbalanced or a feature
                structure is malformed
        """
        sentences = []
        tokens = None
        chunk_label = None
        chunk_size = 0

        for line_number, line in enumerate(lines_of(stream), start=1):
            stripped = line.strip()
            if not stripped:
                continue

            if stripped.startswith("<Sentence"):
                if tokens is not None:
                    raise CorpusFormatError("sentence opened inside another sentence", line_number)
                tokens = []
                continue

            if stripped.startswith("</Sentence"):
                if tokens is None:
                    raise CorpusFormatError("sentence closed without being opened", line_number)
                if chunk_label is not None:
                    raise CorpusFormatError(f"chunk '{chunk_label}' is never closed", line_number)
                if tokens:
                    sentences.append(Sentence(tokens))
                tokens = None
                continue

            if tokens is None:
                raise CorpusFormatError("content outside a <Sentence> block", line_number)

            fields = line.split("\t")
            marker = fields[1].strip() if len(fields) > 1 else stripped

            if marker == "((":
                if chunk_label is not None:
                    raise CorpusFormatError("nested chunks are not supported", line_number)
                if len(fields) < 3 or not fields[2].strip():
                    raise CorpusFormatError("chunk opened without a label", line_number)
                chunk_label = fields[2].strip()
                chunk_size = 0
                continue

            if marker == "))":
                if chunk_label is None:
                    raise CorpusFormatError("chunk closed without being opened", line_number)
                chunk_label = None
                continue

            if len(fields) < 3:
                raise CorpusFormatError("token line needs address, word and POS", line_number)

            surface, pos = fields[1].strip(), fields[2].strip()
            root, inflection = self._morphology(surface, fields[3] if len(fields) > 3 else "", line_number)

            if chunk_label is None:
                label, position = "", ChunkPosition.OUTSIDE
            else:
                label = chunk_label
                position = ChunkPosition.BEGIN if chunk_size == 0 else ChunkPosition.INSIDE
                chunk_size += 1

            try:
                tokens.append(Token(surface, root, pos, label, position, inflection))
            except ValueError as e:
                raise CorpusFormatError(str(e), line_number) from e

        if tokens is not None:
            raise CorpusFormatError("last sentence is never closed")

        return Corpus(sentences)

    def _morphology(self, surface, feature_structure, line_number):
        """Extract (root, inflection) from a token's feature structure."""
        match = AF_PATTERN.search(feature_structure)
        if not match:
            return surface, NULL_INFLECTION

        parts = match.group(2).split(",")
        if len(parts) <= self.SUFFIX_FIELD:
            raise CorpusFormatError(
                f"af feature '{match.group(2)}' has {len(parts)} fields, expected at least {self.SUFFIX_FIELD + 1}",
                line_number,
            )
        root = parts[self.ROOT_FIELD].strip() or surface
        inflection = parts[self.SUFFIX_FIELD].strip() or NULL_INFLECTION
        return root, inflection
