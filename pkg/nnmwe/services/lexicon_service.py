import logging
from collections import Counter

from nnmwe.exceptions import LexiconFormatError
from nnmwe.patterns.creational.builder import LexiconBuilder
from nnmwe.services.tsv_format import header, lines_of

logger = logging.getLogger(__name__)

SENSE_SEPARATOR = ";"
SYNONYM_SEPARATOR = ","
TILDE = "~"

DEFAULT_PREFIX_MIN_LENGTH = 3


class LexiconService:
    """
    Service for the restructured dictionary and its synset index.

    Each entry line reads ``headword<TAB>pos_marker<TAB>senses``. Senses
    are separated by ``;`` and synonyms of one sense by ``,``. A member
    written ``~suffix`` starts a derived entry ``headword + suffix`` which
    takes the synonyms after it, up to the next ``~`` member.
    """

    def __init__(self, prefix_min_length=DEFAULT_PREFIX_MIN_LENGTH):
        self.prefix_min_length = prefix_min_length

    def parse_lexicon(self, stream):
        """
        Parse a lexicon file.

        Args:
            stream: Text stream or string in the lexicon format

        Returns:
            Lexicon: The entries with their reverse index

        Raises:
            LexiconFormatError: On a duplicate headword, an empty synonym
                field, a ``~`` with no suffix or a wrong column count
        """
        builder = LexiconBuilder()

        for line_number, line in enumerate(lines_of(stream), start=1):
            if not line.strip() or line.startswith("#"):
                continue

            fields = line.split("\t")
            if len(fields) != 3:
                raise LexiconFormatError(
                    f"expected 3 tab-separated columns, found {len(fields)}", line_number
                )
            headword, pos_marker, sense_field = (f.strip() for f in fields)
            if not headword:
                raise LexiconFormatError("empty headword", line_number)
            if not sense_field:
                raise LexiconFormatError(f"entry '{headword}' has an empty synonym field", line_number, headword)

            for entry_headword, groups in self._split_entries(headword, sense_field, line_number):
                try:
                    builder.with_entry(entry_headword, pos_marker, groups)
                except ValueError as e:
                    raise LexiconFormatError(str(e), line_number, entry_headword) from e

        lexicon = builder.build()
        logger.info("Loaded %d lexicon entries indexing %d nouns", len(lexicon), len(lexicon.reverse))
        return lexicon

    def _split_entries(self, headword, sense_field, line_number):
        """Split one sense field into (headword, groups) pairs, expanding tildes."""
        entries = [(headword, [])]

        for raw_group in sense_field.split(SENSE_SEPARATOR):
            group = []
            for member in (m.strip() for m in raw_group.split(SYNONYM_SEPARATOR)):
                if not member:
                    continue
                if member.startswith(TILDE):
                    suffix = member[len(TILDE):].strip()
                    if not suffix:
                        raise LexiconFormatError(
                            f"'{TILDE}' without a suffix in entry '{headword}'", line_number, headword
                        )
                    entries[-1][1].append(group)
                    entries.append((headword + suffix, []))
                    group = []
                else:
                    group.append(member)
            entries[-1][1].append(group)

        return entries

    def serialize_lexicon(self, lexicon):
        """Render a lexicon in the entry-line format, one line per entry and no tildes."""
        lines = []
        for entry in lexicon.entries.values():
            senses = f" {SENSE_SEPARATOR} ".join(
                f"{SYNONYM_SEPARATOR} ".join(sense.members) for sense in entry.senses
            )
            lines.append(f"{entry.headword}\t{entry.pos_marker}\t{senses}")
        return "\n".join(lines) + ("\n" if lines else "")

    def synset_of(self, lexicon, noun):
        """
        Get the headwords whose sense groups contain a noun.

        Nouns missing from the index fall back to the indexed noun with the
        longest common prefix of at least ``prefix_min_length`` characters,
        which absorbs inflected forms without a stemmer.

        Args:
            lexicon (Lexicon): The lexicon
            noun (str): The noun to look up

        Returns:
            frozenset: Headwords, empty when nothing matches
        """
        if noun in lexicon.reverse:
            return lexicon.reverse[noun]

        match = lexicon.longest_prefix_match(noun, self.prefix_min_length)
        if match is None:
            return frozenset()

        logger.debug("No synset for '%s', using prefix match '%s'", noun, match)
        return lexicon.reverse[match]

    def write_thesaurus(self, lexicon):
        """Render the reverse index as ``noun<TAB>headword|headword...`` rows."""
        lines = [header(("noun", "headwords"))]
        for noun in sorted(lexicon.reverse):
            lines.append(f"{noun}\t{'|'.join(sorted(lexicon.reverse[noun]))}")
        return "\n".join(lines) + "\n"

    def lexicon_statistics(self, lexicon):
        """
        Summarise a lexicon.

        Returns:
            dict: Entry, sense-group and indexed-noun counts, plus sense
                groups per part-of-speech marker
        """
        by_pos = Counter()
        for entry in lexicon.entries.values():
            for sense in entry.senses:
                by_pos[sense.pos_marker] += 1

        return {
            "entries": len(lexicon.entries),
            "sense_groups": sum(by_pos.values()),
            "indexed_nouns": len(lexicon.reverse),
            "by_pos": dict(sorted(by_pos.items())),
        }
