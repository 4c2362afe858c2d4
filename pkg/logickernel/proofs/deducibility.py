"""
Deducibility relations: literals of a row prove the formula or its denial
"""

from typing import Dict

from logickernel.core.models import Atom, Formula, Implies, Not
from logickernel.core.syntax import is_Lprime
from logickernel.errors import NotInLPrime
from logickernel.proofs.builder import ProofBuilder
from logickernel.proofs.models import Proof
from logickernel.semantics.assignments import Assignment, evaluate_in


def literal(f: Formula, value: bool) -> Formula:
    """f' : f itself when true, ~f when false"""
    return f if value else Not(f)


class DeducibilityProver:
    """Builds A'_1, ..., A'_n |- f' by recursion on f, one block per subformula"""

    def __init__(self, row: Assignment, library=None):
        self.values = row.as_dict()
        premises = [literal(Atom(name), value) for name, value in zip(row.atoms, row.values)]
        self.builder = ProofBuilder(premises, library)
        self._steps: Dict[Formula, int] = {}

    def prove(self, f: Formula) -> Proof:
        if not is_Lprime(f):
            raise NotInLPrime(f)
        self._prove(f)
        return self.builder.build()

    def _prove(self, f: Formula) -> int:
        step = self._steps.get(f)
        if step is None:
            step = self._derive(f)
            self._steps[f] = step
        return step

    def _derive(self, f: Formula) -> int:
        b = self.builder
        if isinstance(f, Atom):
            return b.premise(literal(f, evaluate_in(f, self.values)))
        if isinstance(f, Not):
            inner = self._prove(f.child)
            if not evaluate_in(f.child, self.values):
                return inner
            return b.mp(inner, b.lemma("dneg-intro", A=f.child))
        if isinstance(f, Implies):
            left, right = f.left, f.right
            if evaluate_in(right, self.values):
                return b.mp(self._prove(right), b.p1(right, left))
            if not evaluate_in(left, self.values):
                return b.mp(self._prove(left), b.lemma("exfalso", A=right, B=left))
            s = b.mp(self._prove(left), b.lemma("neg-imp", A=left, B=right))
            return b.mp(self._prove(right), s)
        raise NotInLPrime(f)


def deducibility_proof(f: Formula, row: Assignment, library=None) -> Proof:
    """
    Demonstration of f' from the literals of row, listed in row order.

    Raises:
        NotInLPrime: f uses a connective other than ~ and ->
        UncoveredAtom: row misses an atom of f
    """
    return DeducibilityProver(row, library).prove(f)
