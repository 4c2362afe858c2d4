"""
Propositional semantics components
"""

from .assignments import (
    Assignment, TruthTable, canonical_assignments, evaluate, evaluate_in, evaluate_partial,
    truth_table, format_table,
)
from .classify import FormulaStatus, Classification, classify, is_valid, equivalent
from .forcing import (
    Strategy, ConsequenceStatus, SatStatus, ConsequenceVerdict, SatVerdict, ForcingEngine,
    valid_consequence, satisfiable, consequence_by_refutation,
)
from .schemata import SCHEMATA, SCHEMA_TEXT, schema_instance
from .extension import Extension, maximal_extension, check_extension_properties, universe_order
from .compactness import (
    CompactnessChecker, CompactnessReport, finite_subsets_satisfiable, FAMILIES,
    negation_conjunction_family, growing_disjunction_family, implication_tower_family,
    negated_identity_family, biconditional_chain_family,
)

__all__ = [
    "Assignment",
    "TruthTable",
    "canonical_assignments",
    "evaluate",
    "evaluate_in",
    "evaluate_partial",
    "truth_table",
    "format_table",
    "FormulaStatus",
    "Classification",
    "classify",
    "is_valid",
    "equivalent",
    "Strategy",
    "ConsequenceStatus",
    "SatStatus",
    "ConsequenceVerdict",
    "SatVerdict",
    "ForcingEngine",
    "valid_consequence",
    "satisfiable",
    "consequence_by_refutation",
    "SCHEMATA",
    "SCHEMA_TEXT",
    "schema_instance",
    "Extension",
    "maximal_extension",
    "check_extension_properties",
    "universe_order",
    "CompactnessChecker",
    "CompactnessReport",
    "finite_subsets_satisfiable",
    "FAMILIES",
    "negation_conjunction_family",
    "growing_disjunction_family",
    "implication_tower_family",
    "negated_identity_family",
    "biconditional_chain_family",
]
