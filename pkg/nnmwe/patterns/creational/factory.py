from nnmwe.models.cluster import ClassifierMode
from nnmwe.patterns.behavioral.strategy import (
    CooccurrenceMeasure,
    LlrMeasure,
    PhiMeasure,
    PmiMeasure,
    SignificanceMeasure,
)


class MeasureFactory:
    """
    Factory Pattern Implementation

    This class creates association measure strategies by name. Alternative
    definitions (e.g. another co-occurrence formula) are plugged in with
    ``register``.
    """

    _registry = {
        measure.name: measure
        for measure in (PmiMeasure, LlrMeasure, CooccurrenceMeasure, PhiMeasure, SignificanceMeasure)
    }

    @classmethod
    def register(cls, measure_class):
        """
        Register a measure strategy under its ``name``, replacing any previous one.

        Args:
            measure_class (type): An AssociationMeasure subclass

        Returns:
            type: The registered class, so this can be used as a decorator
        """
        if not measure_class.name:
            raise ValueError(f"{measure_class.__name__} has no measure name")
        cls._registry[measure_class.name] = measure_class
        return measure_class

    @classmethod
    def create_measure(cls, name):
        """
        Create the measure registered under a name.

        Raises:
            ValueError: If no measure has that name
        """
        measure_class = cls._registry.get(name)
        if not measure_class:
            raise ValueError(f"Measure '{name}' not found")
        return measure_class()

    @classmethod
    def create_measures(cls, names):
        return [cls.create_measure(name) for name in names]


class ClassifierFactory:
    """
    Factory Pattern Implementation

    This class creates the MWE classifier for a mode name, checking that
    the resources the mode needs were supplied.
    """

    @staticmethod
    def create_classifier(mode, **resources):
        """
        Create a classifier.

        Args:
            mode (str): One of cosine, euclidean, taxonomy, baseline
            **resources: lexicon, corpus_nouns, decision_config,
                lexicon_service for the cluster modes; taxonomy,
                translations, mu for taxonomy; corpus, determiner_pos,
                nominal_chunks for baseline

        Returns:
            MweClassifier: The classifier

        Raises:
            ValueError: If the mode is unknown or a resource is missing
        """
        from nnmwe.patterns.behavioral.classifier_strategy import (
            BaselineClassifier,
            ClusterClassifier,
            TaxonomyClassifier,
        )

        try:
            mode = ClassifierMode(mode)
        except ValueError:
            modes = ", ".join(m.value for m in ClassifierMode)
            raise ValueError(f"Unknown mode '{mode}'; expected one of {modes}") from None

        if mode in (ClassifierMode.COSINE, ClassifierMode.EUCLIDEAN):
            ClassifierFactory._need(mode, resources, "lexicon", "corpus_nouns", "decision_config")
            return ClusterClassifier(
                mode,
                resources["lexicon"],
                resources["corpus_nouns"],
                resources["decision_config"],
                lexicon_service=resources.get("lexicon_service"),
            )

        if mode is ClassifierMode.TAXONOMY:
            ClassifierFactory._need(mode, resources, "taxonomy", "translations", "mu")
            return TaxonomyClassifier(resources["taxonomy"], resources["translations"], resources["mu"])

        ClassifierFactory._need(mode, resources, "corpus")
        return BaselineClassifier(
            resources["corpus"],
            determiner_pos=resources.get("determiner_pos"),
            nominal_chunks=resources.get("nominal_chunks"),
        )

    @staticmethod
    def _need(mode, resources, *names):
        missing = [name for name in names if resources.get(name) is None]
        if missing:
            raise ValueError(f"Mode '{mode.value}' needs {', '.join(missing)}")
