"""
Axiom schemata P1, P2, P3
"""

from typing import Dict, Sequence, Type, Union

from logickernel.core.models import Formula
from logickernel.errors import ArityMismatch
from logickernel.proofs.models import AxiomP1, AxiomP2, AxiomP3, Justification

AXIOMS: Dict[str, Type[Justification]] = {
    "P1": AxiomP1,
    "P2": AxiomP2,
    "P3": AxiomP3,
}

ARITY: Dict[str, int] = {"P1": 2, "P2": 3, "P3": 2}


def axiom_justification(schema: str, parts: Sequence[Formula]) -> Justification:
    name = schema.upper()
    if name not in AXIOMS:
        raise KeyError(f"unknown axiom schema {schema}")
    if len(parts) != ARITY[name]:
        raise ArityMismatch(name, ARITY[name], len(parts))
    return AXIOMS[name](*parts)


def instantiate_axiom(schema: Union[str, Type[Justification]], parts: Sequence[Formula]) -> Formula:
    """
    Instance of P1, P2 or P3.

    Args:
        schema: "P1", "P2", "P3" or the justification class
        parts: Formulas for A, B (and C for P2)

    Returns:
        The instantiated axiom
    """
    if not isinstance(schema, str):
        schema = next(name for name, kind in AXIOMS.items() if kind is schema)
    return axiom_justification(schema, parts).axiom_formula()
