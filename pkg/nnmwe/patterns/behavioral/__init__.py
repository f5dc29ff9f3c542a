# Import behavioral patterns
from nnmwe.patterns.behavioral.strategy import AssociationMeasure
