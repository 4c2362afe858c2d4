"""
Consequence operator components
"""

from .universe import FormulaUniverse, formula_universe, parse_subset, format_subset
from .operators import (
    OperatorTable, Saturation, s_axiom, axiom_instances, closure_S, closure_Sn, closure_with_support,
    s_operator, sn_operator, identity_operator, empty_operator, materialize,
)
from .checks import AxiomCheck, OperatorReport, IdempotentReport, check_operator_axioms, idempotent_theorems

__all__ = [
    "FormulaUniverse",
    "formula_universe",
    "parse_subset",
    "format_subset",
    "OperatorTable",
    "Saturation",
    "s_axiom",
    "axiom_instances",
    "closure_S",
    "closure_Sn",
    "closure_with_support",
    "s_operator",
    "sn_operator",
    "identity_operator",
    "empty_operator",
    "materialize",
    "AxiomCheck",
    "OperatorReport",
    "IdempotentReport",
    "check_operator_axioms",
    "idempotent_theorems",
]
