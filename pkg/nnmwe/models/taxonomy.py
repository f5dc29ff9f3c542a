from dataclasses import dataclass, field

from nnmwe.exceptions import TaxonomyError


@dataclass(frozen=True)
class Taxonomy:
    """
    A concept hierarchy given as child → parent links.

    The root is the single node that is its own parent. Depths are
    computed once at construction, which also checks that every parent
    chain reaches the root.
    """

    parent: dict
    root: str
    depths: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.parent.get(self.root) != self.root:
            raise TaxonomyError(f"Root '{self.root}' must be its own parent")

        depths = {self.root: 0}
        for node in self.parent:
            chain = []
            current = node
            while current not in depths:
                if current in chain:
                    raise TaxonomyError(f"Cycle through '{current}'")
                if current not in self.parent:
                    raise TaxonomyError(f"Node '{current}' has no parent link")
                chain.append(current)
                current = self.parent[current]
                if current == chain[-1]:
                    raise TaxonomyError(f"Node '{current}' is a second root")
            depth = depths[current]
            for visited in reversed(chain):
                depth += 1
                depths[visited] = depth
        object.__setattr__(self, "depths", depths)

    @property
    def nodes(self):
        return frozenset(self.parent)

    def __contains__(self, node):
        return node in self.parent

    def __len__(self):
        return len(self.parent)


@dataclass(frozen=True)
class TranslationMap:
    """Source-language roots mapped to the taxonomy concepts they translate to."""

    entries: dict

    def translations(self, root):
        return self.entries.get(root, frozenset())

    def __contains__(self, root):
        return bool(self.entries.get(root))
