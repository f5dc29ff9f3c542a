from nnmwe.models.lexicon import Lexicon, LexiconEntry, SenseGroup


class LexiconBuilder:
    """
    Builder Pattern Implementation

    This class collects dictionary entries one at a time and builds the
    immutable Lexicon, computing the noun → headword reverse index once
    every entry is known.
    """

    def __init__(self):
        self._entries = {}

    def with_entry(self, headword, pos_marker, groups):
        """
        Add a dictionary entry.

        Args:
            headword (str): The entry word
            pos_marker (str): The dictionary's part-of-speech abbreviation
            groups (list): One list of synonyms per sense, in sense order

        Returns:
            LexiconBuilder: self, for chaining

        Raises:
            ValueError: If the headword is already present or has no senses
        """
        if headword in self._entries:
            raise ValueError(f"Duplicate headword '{headword}'")

        senses = [
            SenseGroup(members=tuple(group), pos_marker=pos_marker, sense_index=index)
            for index, group in enumerate((g for g in groups if g), start=1)
        ]
        if not senses:
            raise ValueError(f"Entry '{headword}' has an empty synonym field")

        self._entries[headword] = LexiconEntry(headword=headword, senses=tuple(senses))
        return self

    def __contains__(self, headword):
        return headword in self._entries

    def build(self):
        """Build the Lexicon and its reverse index."""
        reverse = {}
        for headword, entry in self._entries.items():
            for noun in entry.members():
                reverse.setdefault(noun, set()).add(headword)

        return Lexicon(
            entries=dict(self._entries),
            reverse={noun: frozenset(headwords) for noun, headwords in reverse.items()},
        )
