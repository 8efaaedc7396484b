"""First-order reasoning by refutation resolution."""

from .cnf import Clause, CnfConverter, CnfLimitError, Literal, to_cnf
from .resolution import (
    InconsistentPremises,
    SaturationLimits,
    Status,
    decide,
    saturate,
    subsumes,
)
from .unify import Substitution, substitute, unify

__all__ = [
    "Clause",
    "CnfConverter",
    "CnfLimitError",
    "InconsistentPremises",
    "Literal",
    "SaturationLimits",
    "Status",
    "Substitution",
    "decide",
    "saturate",
    "substitute",
    "subsumes",
    "to_cnf",
    "unify",
]
