"""
Negation normal form, denial and full disjunctive normal form
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from logickernel.core.models import And, Atom, Formula, Iff, Implies, Not, Or
from logickernel.core.printer import print_flat
from logickernel.core.syntax import atoms
from logickernel.errors import IsContradiction, NotInNormalForm
from logickernel.semantics.assignments import canonical_assignments, evaluate_in


def reduce_nf(f: Formula) -> Formula:
    """
    Equivalent formula over &, | and ~ with every ~ directly on an atom.
    A -> B becomes (~A) | B and A <-> B becomes (A -> B) & (B -> A).
    """
    return _nnf(f, False)


def _nnf(f: Formula, negated: bool) -> Formula:
    if isinstance(f, Atom):
        return Not(f) if negated else f
    if isinstance(f, Not):
        return _nnf(f.child, not negated)
    if isinstance(f, And):
        kind = Or if negated else And
        return kind(_nnf(f.left, negated), _nnf(f.right, negated))
    if isinstance(f, Or):
        kind = And if negated else Or
        return kind(_nnf(f.left, negated), _nnf(f.right, negated))
    if isinstance(f, Implies):
        if negated:
            return And(_nnf(f.left, False), _nnf(f.right, True))
        return Or(_nnf(f.left, True), _nnf(f.right, False))
    if isinstance(f, Iff):
        return _nnf(And(Implies(f.left, f.right), Implies(f.right, f.left)), negated)
    raise TypeError(f"unsupported node {type(f).__name__}")


def is_nnf(f: Formula) -> bool:
    for node in f.walk():
        if isinstance(node, Not):
            if not isinstance(node.child, Atom):
                return False
        elif not isinstance(node, (Atom, And, Or)):
            return False
    return True


def denial(f: Formula) -> Formula:
    """Flip every literal and swap & with |; the result is equivalent to ~f"""
    if not is_nnf(f):
        raise NotInNormalForm(f)
    return _deny(f)


def _deny(f: Formula) -> Formula:
    if isinstance(f, Atom):
        return Not(f)
    if isinstance(f, Not):
        return f.child
    if isinstance(f, And):
        return Or(_deny(f.left), _deny(f.right))
    return And(_deny(f.left), _deny(f.right))


@dataclass(frozen=True)
class FundamentalConjunction:
    """Literals of one table row, in column order"""
    literals: Tuple[Tuple[str, bool], ...]

    def formula(self) -> Formula:
        parts: List[Formula] = [Atom(a) if v else Not(Atom(a)) for a, v in self.literals]
        return right_nested(And, parts)

    def __str__(self) -> str:
        return print_flat(self.formula())


def right_nested(kind: type, parts: Sequence[Formula]) -> Formula:
    result = parts[-1]
    for part in reversed(parts[:-1]):
        result = kind(part, result)
    return result


def fundamental_conjunctions(f: Formula, order: Optional[Sequence[str]] = None) -> List[FundamentalConjunction]:
    """One conjunction per T-row, rows in canonical order"""
    names = list(order) if order is not None else atoms(f)
    return [
        FundamentalConjunction(tuple(zip(a.atoms, a.values)))
        for a in canonical_assignments(names)
        if evaluate_in(f, a.as_dict())
    ]


def fdnf(f: Formula, order: Optional[Sequence[str]] = None) -> Formula:
    """Disjunction of the fundamental conjunctions; IsContradiction when there are none"""
    conjunctions = fundamental_conjunctions(f, order)
    if not conjunctions:
        raise IsContradiction(f)
    return right_nested(Or, [c.formula() for c in conjunctions])
