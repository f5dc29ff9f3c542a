# Import creational patterns
from nnmwe.patterns.creational.builder import LexiconBuilder
