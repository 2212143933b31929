"""Finite set-class algebra: operators, structure tests, generation,
partitions, products, Boolean rings and encodings over small universes."""

from .core import (
    MAX_UNIVERSE,
    Partition,
    PreconditionError,
    ResourceError,
    SetClass,
    SetClassError,
    SetSeq,
    Subset,
    Universe,
    UniverseMismatch,
    class_canonicalize,
    subset_op,
    trace,
)
from .setops import OpWord, apply, apply_word, lim_seq, liminf_seq, limsup_seq
from .structures import atoms, classify, filter_ops, ideal_classify
from .generate import hierarchy, closure_criteria_check, localize
from .partitions import (
    bell,
    complete_algebra,
    enumerate_partitions,
    join,
    meet,
    partition_from_class,
    partition_of_complete_algebra,
    refines,
    s_partitions,
)

__all__ = [
    "MAX_UNIVERSE", "Partition", "PreconditionError", "ResourceError", "SetClass", "SetClassError",
    "SetSeq", "Subset", "Universe", "UniverseMismatch", "class_canonicalize", "subset_op", "trace",
    "OpWord", "apply", "apply_word", "lim_seq", "liminf_seq", "limsup_seq",
    "atoms", "classify", "filter_ops", "ideal_classify",
    "hierarchy", "closure_criteria_check", "localize",
    "bell", "complete_algebra", "enumerate_partitions", "join", "meet", "partition_from_class",
    "partition_of_complete_algebra", "refines", "s_partitions",
]
