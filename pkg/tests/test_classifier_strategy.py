import pytest

from nnmwe.exceptions import FormatError
from nnmwe.models.cluster import ClassifierMode, Decision, DecisionConfig, Verdict
from nnmwe.patterns.behavioral.classifier_strategy import (
    BaselineClassifier,
    ClusterClassifier,
    TaxonomyClassifier,
    read_decisions,
    write_decisions,
)
from nnmwe.patterns.creational.factory import ClassifierFactory


@pytest.fixture
def resources(lexicon, corpus_service, corpus, taxonomy, translations):
    return {
        "lexicon": lexicon,
        "corpus_nouns": corpus_service.noun_set(corpus),
        "decision_config": DecisionConfig(),
        "taxonomy": taxonomy,
        "translations": translations,
        "mu": 0.5,
        "corpus": corpus,
    }


def verdicts(decisions):
    return {d.key: d.verdict for d in decisions}


class TestClassifierFactory:
    @pytest.mark.parametrize("mode, cls", [
        ("cosine", ClusterClassifier),
        ("euclidean", ClusterClassifier),
        ("taxonomy", TaxonomyClassifier),
        ("baseline", BaselineClassifier),
    ])
    def test_creates_every_mode(self, resources, mode, cls):
        classifier = ClassifierFactory.create_classifier(mode, **resources)
        assert isinstance(classifier, cls)
        assert classifier.mode is ClassifierMode(mode)

    def test_unknown_mode(self, resources):
        with pytest.raises(ValueError, match="Unknown mode 'jaccard'"):
            ClassifierFactory.create_classifier("jaccard", **resources)

    def test_missing_resource(self, resources):
        resources["translations"] = None
        with pytest.raises(ValueError, match="needs translations"):
            ClassifierFactory.create_classifier("taxonomy", **resources)


class TestClassifyAll:
    def test_cosine(self, resources, candidates):
        decisions = ClassifierFactory.create_classifier("cosine", **resources).classify_all(candidates)
        assert [d.key for d in decisions] == [c.key for c in candidates]
        assert verdicts(decisions) == {
            ("house", "home"): Verdict.NOT_MWE,
            ("hand", "five"): Verdict.MWE,
            ("sky", "ink"): Verdict.NOT_MWE,
            ("shelter", "house"): Verdict.NOT_MWE,
            ("house", "tax"): Verdict.NOT_MWE,
            ("home", "abode"): Verdict.NOT_MWE,
        }

    def test_taxonomy(self, resources, candidates):
        decisions = ClassifierFactory.create_classifier("taxonomy", **resources).classify_all(candidates)
        found = verdicts(decisions)
        assert found[("house", "home")] is Verdict.NOT_MWE
        assert found[("hand", "five")] is Verdict.MWE
        assert found[("shelter", "house")] is Verdict.NOT_MWE
        assert found[("sky", "ink")] is Verdict.UNTRANSLATED
        assert found[("house", "tax")] is Verdict.UNTRANSLATED

    def test_baseline(self, resources, candidates):
        decisions = ClassifierFactory.create_classifier("baseline", **resources).classify_all(candidates)
        assert [d.verdict for d in decisions] == [
            Verdict.NOT_MWE, Verdict.MWE, Verdict.NOT_MWE, Verdict.MWE, Verdict.MWE, Verdict.MWE,
        ]


class TestWithCutoff:
    def test_cosine_replaces_alpha(self, resources, by_key):
        classifier = ClassifierFactory.create_classifier("cosine", **resources)
        relaxed = classifier.with_cutoff(1.0)
        assert relaxed.decision_config.alpha == 1.0
        assert relaxed.cluster_service is classifier.cluster_service
        assert relaxed.classify(by_key[("home", "abode")]).verdict is Verdict.MWE
        assert classifier.classify(by_key[("home", "abode")]).verdict is Verdict.NOT_MWE

    def test_euclidean_replaces_beta(self, resources):
        classifier = ClassifierFactory.create_classifier("euclidean", **resources)
        tuned = classifier.with_cutoff(0.1)
        assert tuned.decision_config.beta == 0.1
        assert tuned.decision_config.alpha == classifier.decision_config.alpha

    def test_taxonomy_replaces_mu(self, resources, by_key):
        classifier = ClassifierFactory.create_classifier("taxonomy", **resources)
        assert classifier.classify(by_key[("shelter", "house")]).verdict is Verdict.NOT_MWE
        assert classifier.with_cutoff(0.2).classify(by_key[("shelter", "house")]).verdict is Verdict.MWE

    def test_baseline_has_no_cutoff(self, resources):
        with pytest.raises(ValueError, match="no cut-off"):
            ClassifierFactory.create_classifier("baseline", **resources).with_cutoff(0.5)

    def test_negative_mu(self, taxonomy, translations):
        with pytest.raises(ValueError):
            TaxonomyClassifier(taxonomy, translations, -0.1)


class TestDecisionFile:
    def test_rows(self, resources, candidates):
        decisions = ClassifierFactory.create_classifier("cosine", **resources).classify_all(candidates)
        lines = write_decisions(decisions).splitlines()
        assert lines[0].startswith("# nnmwe ")
        assert lines[0].endswith("\treason")
        assert len(lines) == 7
        hand_five = lines[2].split("\t")
        assert hand_five[:4] == ["hand", "five", "cosine", "0"]
        assert hand_five[4] == "-"
        assert hand_five[5:7] == ["1", "MWE"]

    def test_read_back(self):
        decisions = [
            Decision(key=("a", "b"), mode=ClassifierMode.TAXONOMY, verdict=Verdict.UNTRANSLATED,
                     reason="no translation for a"),
            Decision(key=("c", "d"), mode=ClassifierMode.COSINE, verdict=Verdict.NOT_MWE, n=3, score=0.75),
        ]
        assert read_decisions(write_decisions(decisions)) == decisions

    def test_bad_verdict(self):
        with pytest.raises(FormatError, match="line 1"):
            read_decisions("a\tb\tcosine\t-\t-\t0\tmaybe\t-\n")
