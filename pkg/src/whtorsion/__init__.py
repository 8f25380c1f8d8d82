"""Whitehead-torsion calculus for invertible cobordisms with cyclic fundamental group."""

from .group_ring import CyclicGroupSpec, GroupRingElement, parse_element, format_element
from .whitehead import (
    GeneratorRegistry,
    NotInSpan,
    PrecisionError,
    WhiteheadClass,
    bass_unit,
    class_of,
    express_in_generators,
    generators,
    independence_check,
    rank,
)
from .torsion import DimensionContext
from .cobordism import InvertibleCobordism, ManifoldProfile
from .verdict import Answer, Verdict

__all__ = [
    "Answer",
    "CyclicGroupSpec",
    "DimensionContext",
    "GeneratorRegistry",
    "GroupRingElement",
    "InvertibleCobordism",
    "ManifoldProfile",
    "NotInSpan",
    "PrecisionError",
    "Verdict",
    "WhiteheadClass",
    "bass_unit",
    "class_of",
    "express_in_generators",
    "format_element",
    "generators",
    "independence_check",
    "parse_element",
    "rank",
]

__version__ = "0.1.0"
