"""
Validity, contradiction and equivalence by truth table
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from logickernel.core.models import Formula, Iff
from logickernel.core.syntax import atoms
from logickernel.semantics.assignments import Assignment, canonical_assignments, evaluate_in


class FormulaStatus(Enum):
    VALID = "valid"
    CONTRADICTION = "contradiction"
    CONTINGENT = "contingent"


@dataclass(frozen=True)
class Classification:
    status: FormulaStatus
    true_witness: Optional[Assignment] = None
    false_witness: Optional[Assignment] = None


def classify(f: Formula) -> Classification:
    """First T-row and first F-row in table order decide the status"""
    true_row = false_row = None
    for a in canonical_assignments(atoms(f)):
        if evaluate_in(f, a.as_dict()):
            true_row = true_row or a
        else:
            false_row = false_row or a
        if true_row and false_row:
            return Classification(FormulaStatus.CONTINGENT, true_row, false_row)
    if false_row is None:
        return Classification(FormulaStatus.VALID, true_witness=true_row)
    return Classification(FormulaStatus.CONTRADICTION, false_witness=false_row)


def is_valid(f: Formula) -> bool:
    return classify(f).status is FormulaStatus.VALID


def equivalent(a: Formula, b: Formula) -> bool:
    """a and b agree on every assignment to the union of their atoms"""
    return is_valid(Iff(a, b))
