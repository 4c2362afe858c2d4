"""
Propositional syntax components
"""

from .models import Formula, Atom, Not, Binary, And, Or, Implies, Iff, Connective, connective_of
from .parser import FormulaParser, parse
from .printer import FormulaPrinter, FlatPrinter, print_atomic, print_full, print_flat
from .syntax import (
    SpanPair, size, connective_count, atoms, atoms_of, common_pairs, cpr_labels, cpr_depth,
    subformulas, positions, subformula_at, find_position, substitute_subformula,
    substitute_atoms, instantiate, to_Lprime, is_Lprime,
)
from .levels import LevelBuilder, LevelEnumeration, enumerate_level, level_count, level_members

__all__ = [
    "Formula",
    "Atom",
    "Not",
    "Binary",
    "And",
    "Or",
    "Implies",
    "Iff",
    "Connective",
    "connective_of",
    "FormulaParser",
    "parse",
    "FormulaPrinter",
    "FlatPrinter",
    "print_atomic",
    "print_full",
    "print_flat",
    "SpanPair",
    "size",
    "connective_count",
    "atoms",
    "atoms_of",
    "common_pairs",
    "cpr_labels",
    "cpr_depth",
    "subformulas",
    "positions",
    "subformula_at",
    "find_position",
    "substitute_subformula",
    "substitute_atoms",
    "instantiate",
    "to_Lprime",
    "is_Lprime",
    "LevelBuilder",
    "LevelEnumeration",
    "enumerate_level",
    "level_count",
    "level_members",
]
