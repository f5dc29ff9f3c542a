import numpy as np
import pytest

from nnmwe.exceptions import TaxonomyError
from nnmwe.models.cluster import Verdict
from nnmwe.models.taxonomy import Taxonomy
from nnmwe.services.taxonomy_service import TaxonomyService, ancestors, depth, lcs, norm_dist


def random_tree(rng):
    size = int(rng.integers(1, 31))
    parent = {"n0": "n0"}
    for i in range(1, size):
        parent[f"n{i}"] = f"n{int(rng.integers(0, i))}"
    return Taxonomy(parent=parent, root="n0")


def brute_force_norm_dist(parent, a, b):
    def chain(node):
        path = [node]
        while parent[path[-1]] != path[-1]:
            path.append(parent[path[-1]])
        return path

    chain_a, chain_b = chain(a), chain(b)
    shared = set(chain_a) & set(chain_b)
    common = max(shared, key=lambda node: len(chain(node)))
    lcs_depth = len(chain(common)) - 1
    min_dist = min(chain_a.index(common), chain_b.index(common))
    if lcs_depth + min_dist == 0:
        return 0.0
    return min_dist / (lcs_depth + min_dist)


@pytest.fixture
def service():
    return TaxonomyService()


class TestTaxonomyStructure:
    def test_depths(self, taxonomy):
        assert taxonomy.root == "entity"
        assert depth(taxonomy, "entity") == 0
        assert depth(taxonomy, "house.n") == 4
        assert depth(taxonomy, "home.n") == 2

    def test_ancestors(self, taxonomy):
        assert ancestors(taxonomy, "house.n") == ["house.n", "building", "structure", "object", "entity"]

    def test_lcs(self, taxonomy):
        assert lcs(taxonomy, "house.n", "shelter.n") == "structure"
        assert lcs(taxonomy, "hand.n", "five.n") == "entity"
        assert lcs(taxonomy, "building", "house.n") == "building"

    def test_unknown_node(self, taxonomy):
        with pytest.raises(TaxonomyError):
            lcs(taxonomy, "house.n", "castle.n")

    def test_no_root(self, service):
        with pytest.raises(TaxonomyError, match="exactly one root"):
            service.parse_taxonomy("a\tb\nb\ta2\n")

    def test_two_roots(self, service):
        with pytest.raises(TaxonomyError, match="found 2"):
            service.parse_taxonomy("a\ta\nb\tb\n")

    def test_cycle(self, service):
        with pytest.raises(TaxonomyError, match="Cycle"):
            service.parse_taxonomy("r\tr\nb\tc\nc\tb\n")

    def test_dangling_parent(self, service):
        with pytest.raises(TaxonomyError, match="not a concept"):
            service.parse_taxonomy("r\tr\nb\tmissing\n")

    def test_two_parents(self, service):
        with pytest.raises(TaxonomyError, match="two parents"):
            service.parse_taxonomy("r\tr\na\tr\nb\ta\nb\tr\n")


class TestNormDist:
    def test_examples(self, taxonomy):
        assert norm_dist(taxonomy, "house.n", "shelter.n") == pytest.approx(1 / 3)
        assert norm_dist(taxonomy, "hand.n", "five.n") == 1.0
        assert norm_dist(taxonomy, "house.n", "house.n") == 0.0
        assert norm_dist(taxonomy, "entity", "entity") == 0.0

    def test_children_of_root(self, taxonomy):
        assert norm_dist(taxonomy, "object", "abstraction") == 1.0

    def test_matches_brute_force_on_random_trees(self):
        rng = np.random.default_rng(23)
        for _ in range(200):
            tree = random_tree(rng)
            nodes = sorted(tree.nodes)
            for a in nodes:
                assert norm_dist(tree, a, a) == 0.0
                for b in nodes:
                    value = norm_dist(tree, a, b)
                    assert value == brute_force_norm_dist(tree.parent, a, b)
                    assert value == norm_dist(tree, b, a)
                    assert 0.0 <= value <= 1.0


class TestTranslations:
    def test_several_translations(self, translations):
        assert translations.translations("home") == {"home.n", "house.n"}
        assert "sky" not in translations

    def test_unknown_concept(self, service, taxonomy):
        with pytest.raises(TaxonomyError, match="line 1"):
            service.parse_translations("house\tcastle.n\n", taxonomy)


class TestClassifyByTaxonomy:
    def test_distant_concepts_are_mwe(self, service, taxonomy, translations, by_key):
        decision = service.classify_by_taxonomy(taxonomy, translations, by_key[("hand", "five")], 0.5)
        assert decision.verdict is Verdict.MWE
        assert decision.score == 1.0

    def test_minimum_over_translations(self, service, taxonomy, translations, by_key):
        decision = service.classify_by_taxonomy(taxonomy, translations, by_key[("house", "home")], 0.5)
        assert decision.score == 0.0
        assert decision.verdict is Verdict.NOT_MWE

    def test_close_concepts(self, service, taxonomy, translations, by_key):
        decision = service.classify_by_taxonomy(taxonomy, translations, by_key[("shelter", "house")], 0.5)
        assert decision.score == pytest.approx(1 / 3)
        assert decision.verdict is Verdict.NOT_MWE
        lowered = service.classify_by_taxonomy(taxonomy, translations, by_key[("shelter", "house")], 0.3)
        assert lowered.verdict is Verdict.MWE

    def test_untranslated(self, service, taxonomy, translations, by_key):
        decision = service.classify_by_taxonomy(taxonomy, translations, by_key[("house", "tax")], 0.5)
        assert decision.verdict is Verdict.UNTRANSLATED
        assert not decision.is_scored
        assert "tax" in decision.reason
