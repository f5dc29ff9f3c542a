from bisect import bisect_left
from dataclasses import dataclass


@dataclass(frozen=True)
class SenseGroup:
    """Synonyms of one sense of a dictionary entry."""

    members: tuple
    pos_marker: str
    sense_index: int

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(dict.fromkeys(self.members)))
        if not self.members:
            raise ValueError("A sense group needs at least one member")
        if self.sense_index < 1:
            raise ValueError(f"Sense index must be >= 1, got {self.sense_index}")


@dataclass(frozen=True)
class LexiconEntry:
    headword: str
    senses: tuple

    def __post_init__(self):
        object.__setattr__(self, "senses", tuple(self.senses))
        if not self.headword:
            raise ValueError("Lexicon headword must be non-empty")
        if not self.senses:
            raise ValueError(f"Entry '{self.headword}' has no senses")

    @property
    def pos_marker(self):
        return self.senses[0].pos_marker

    def members(self):
        """Every synonym of the entry across all of its senses."""
        return {member for sense in self.senses for member in sense.members}


class Lexicon:
    """
    A restructured monolingual dictionary.

    ``entries`` maps each headword to its entry and ``reverse`` maps every
    synonym to the set of headwords whose sense groups contain it. Instances
    are built by ``LexiconBuilder`` and are not modified afterwards.
    """

    def __init__(self, entries, reverse):
        self.entries = entries
        self.reverse = reverse
        self._sorted_nouns = sorted(reverse)

    def __len__(self):
        return len(self.entries)

    def __contains__(self, headword):
        return headword in self.entries

    def __eq__(self, other):
        if not isinstance(other, Lexicon):
            return NotImplemented
        return self.entries == other.entries and self.reverse == other.reverse

    def __repr__(self):
        return f"<Lexicon {len(self.entries)} entries, {len(self.reverse)} indexed nouns>"

    def longest_prefix_match(self, noun, min_length):
        """
        Find the indexed noun sharing the longest common prefix with ``noun``.

        Among indexed nouns tied on prefix length the lexicographically
        smallest wins.

        Args:
            noun (str): The query noun
            min_length (int): Minimum common prefix length, in characters

        Returns:
            str: The matching indexed noun, or None
        """
        keys = self._sorted_nouns
        if not keys:
            return None

        point = bisect_left(keys, noun)
        best = 0
        for neighbour in keys[max(point - 1, 0):point + 1]:
            best = max(best, _common_prefix_length(noun, neighbour))

        if best < min_length:
            return None
        return keys[bisect_left(keys, noun[:best])]


def _common_prefix_length(a, b):
    length = 0
    for x, y in zip(a, b):
        if x != y:
            break
        length += 1
    return length
