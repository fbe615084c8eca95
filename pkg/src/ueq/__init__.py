"""Exact computation with U-equivalence spaces on finite carriers."""

from .classes import UeqClass, generate, induced_class, product, relative
from .maps import SpaceMap
from .pseudometrics import MetricFamily, TransitivePseudoMetric
from .relations import EquivRel, delta, from_blocks, from_pairs, full, meet
from .topology import FiniteTopology, induce_topology

__all__ = [
    "EquivRel",
    "FiniteTopology",
    "MetricFamily",
    "SpaceMap",
    "TransitivePseudoMetric",
    "UeqClass",
    "delta",
    "from_blocks",
    "from_pairs",
    "full",
    "generate",
    "induce_topology",
    "induced_class",
    "meet",
    "product",
    "relative",
]
