"""rigcat: exact verification engine for matrix categories over rig categories."""

from .rig_core import (
    COUNTERS,
    GrRing,
    Mor,
    OutOfRangeError,
    Pi0Rig,
    RigAxiomError,
    RigError,
    build_discrete_rig,
    build_finite_sets_E,
    build_free_modules,
    grothendieck,
    load_category,
    nat_truncated,
    pi0,
    zmod,
)

__all__ = [
    "COUNTERS", "GrRing", "Mor", "OutOfRangeError", "Pi0Rig",
    "RigAxiomError", "RigError", "build_discrete_rig", "build_finite_sets_E",
    "build_free_modules", "grothendieck", "load_category", "nat_truncated",
    "pi0", "zmod",
]
