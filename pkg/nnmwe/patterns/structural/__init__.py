# Import structural patterns
from nnmwe.patterns.structural.adapter import ShallowParserAdapter
from nnmwe.patterns.structural.decorator import log_stage
