import logging

from nnmwe.exceptions import FormatError, TaxonomyError
from nnmwe.models.cluster import ClassifierMode, Decision, Verdict
from nnmwe.models.taxonomy import Taxonomy, TranslationMap
from nnmwe.services.tsv_format import data_rows

logger = logging.getLogger(__name__)


def ancestors(tax, node):
    """
    The path from a node up to the root, both included.

    Raises:
        TaxonomyError: If the node is not in the taxonomy
    """
    if node not in tax:
        raise TaxonomyError(f"Unknown concept '{node}'")
    path = [node]
    while path[-1] != tax.root:
        path.append(tax.parent[path[-1]])
    return path


def depth(tax, node):
    """Number of edges between a node and the root."""
    if node not in tax:
        raise TaxonomyError(f"Unknown concept '{node}'")
    return tax.depths[node]


def lcs(tax, a, b):
    """
    Least common subsumer: the deepest node on both root paths.

    Raises:
        TaxonomyError: If either node is not in the taxonomy
    """
    path_a = ancestors(tax, a)
    on_b = set(ancestors(tax, b))
    for node in path_a:
        if node in on_b:
            return node
    raise TaxonomyError(f"'{a}' and '{b}' share no ancestor")


def norm_dist(tax, a, b):
    """
    Normalized path distance between two concepts, in [0, 1].

    min_dist / (lcs_depth + min_dist), where min_dist is the smaller of the
    two node-to-LCS distances and lcs_depth the LCS's distance to the
    root. Two concepts that both equal the root give 0.
    """
    common = lcs(tax, a, b)
    min_dist = min(depth(tax, a), depth(tax, b)) - depth(tax, common)
    denominator = depth(tax, common) + min_dist
    if denominator == 0:
        return 0.0
    return min_dist / denominator


class TaxonomyService:
    """
    Service for loading a concept taxonomy and classifying candidates by the
    taxonomy distance between their translated components.
    """

    def parse_taxonomy(self, stream):
        """
        Parse ``child<TAB>parent`` rows; the root is declared by a self-edge.

        Raises:
            FormatError: If a row does not have two columns
            TaxonomyError: On zero or several roots, a node with two
                parents, a cycle or a dangling parent
        """
        parent = {}
        roots = []
        for line_number, (child, parent_node) in data_rows(stream, 2):
            child, parent_node = child.strip(), parent_node.strip()
            if not child or not parent_node:
                raise FormatError("empty concept id", line_number)
            if child in parent and parent[child] != parent_node:
                raise TaxonomyError(f"line {line_number}: '{child}' has two parents")
            parent[child] = parent_node
            if child == parent_node:
                roots.append(child)

        if len(roots) != 1:
            raise TaxonomyError(f"A taxonomy needs exactly one root, found {len(roots)}")

        for child, parent_node in list(parent.items()):
            if parent_node not in parent:
                raise TaxonomyError(f"Parent '{parent_node}' of '{child}' is not a concept")

        taxonomy = Taxonomy(parent=parent, root=roots[0])
        logger.info("Loaded taxonomy of %d concepts rooted at '%s'", len(taxonomy), taxonomy.root)
        return taxonomy

    def parse_translations(self, stream, taxonomy):
        """
        Parse ``source_root<TAB>concept_id`` rows; a source may repeat.

        Raises:
            TaxonomyError: If a concept id is not in the taxonomy
        """
        entries = {}
        for line_number, (source, concept) in data_rows(stream, 2):
            source, concept = source.strip(), concept.strip()
            if concept not in taxonomy:
                raise TaxonomyError(f"line {line_number}: unknown concept '{concept}' for '{source}'")
            entries.setdefault(source, set()).add(concept)
        return TranslationMap({source: frozenset(concepts) for source, concepts in entries.items()})

    def classify_by_taxonomy(self, tax, tmap, candidate, mu):
        """
        Classify a candidate by the distance between its components' concepts.

        The distance is the smallest norm_dist over all pairs of
        translations; a candidate is an MWE when that distance exceeds mu.

        Args:
            tax (Taxonomy): The concept hierarchy
            tmap (TranslationMap): Root translations
            candidate (CandidateBigram): The candidate
            mu (float): Distance cut-off

        Returns:
            Decision: Verdict UNTRANSLATED when a component has no translation
        """
        first, second = tmap.translations(candidate.m1), tmap.translations(candidate.m2)
        if not first or not second:
            missing = [root for root, t in ((candidate.m1, first), (candidate.m2, second)) if not t]
            return Decision(
                key=candidate.key,
                mode=ClassifierMode.TAXONOMY,
                verdict=Verdict.UNTRANSLATED,
                reason=f"no translation for {', '.join(missing)}",
            )

        distance = min(norm_dist(tax, a, b) for a in first for b in second)
        return Decision(
            key=candidate.key,
            mode=ClassifierMode.TAXONOMY,
            verdict=Verdict.MWE if distance > mu else Verdict.NOT_MWE,
            score=distance,
        )
