"""
Incremental construction of proofs whose step formulas are derived from their reasons
"""

from typing import List, Sequence

from logickernel.core.models import Formula, Implies
from logickernel.proofs.models import (
    HS, MP, AxiomP1, AxiomP2, AxiomP3, Justification, Lemma, Premise, Proof, Step,
)


class ProofBuilder:
    """Appends steps and returns their 1-based numbers"""

    def __init__(self, premises: Sequence[Formula] = (), library=None):
        self.premises: List[Formula] = list(premises)
        self.steps: List[Step] = []
        self._library = library

    @property
    def library(self):
        if self._library is None:
            from logickernel.proofs.lemmas import default_library
            self._library = default_library()
        return self._library

    def __len__(self) -> int:
        return len(self.steps)

    def formula(self, k: int) -> Formula:
        return self.steps[k - 1].formula

    def add(self, formula: Formula, justification: Justification) -> int:
        self.steps.append(Step(formula, justification))
        return len(self.steps)

    def premise(self, f: Formula) -> int:
        if f not in self.premises:
            self.premises.append(f)
        return self.add(f, Premise())

    def axiom(self, justification: Justification) -> int:
        return self.add(justification.axiom_formula(), justification)

    def p1(self, a: Formula, b: Formula) -> int:
        return self.axiom(AxiomP1(a, b))

    def p2(self, a: Formula, b: Formula, c: Formula) -> int:
        return self.axiom(AxiomP2(a, b, c))

    def p3(self, a: Formula, b: Formula) -> int:
        return self.axiom(AxiomP3(a, b))

    def mp(self, i: int, j: int) -> int:
        """MP(i, j) with the conclusion read off whichever cited step is the implication"""
        fi, fj = self.formula(i), self.formula(j)
        if isinstance(fj, Implies) and fj.left == fi:
            return self.add(fj.right, MP(i, j))
        if isinstance(fi, Implies) and fi.left == fj:
            return self.add(fi.right, MP(i, j))
        raise ValueError(f"MP({i},{j}) does not apply to {fi} and {fj}")

    def hs(self, i: int, j: int) -> int:
        fi, fj = self.formula(i), self.formula(j)
        for first, second in ((fi, fj), (fj, fi)):
            if isinstance(first, Implies) and isinstance(second, Implies) and first.right == second.left:
                return self.add(Implies(first.left, second.right), HS(i, j))
        raise ValueError(f"HS({i},{j}) does not apply to {fi} and {fj}")

    def lemma(self, name: str, **mapping: Formula) -> int:
        conclusion = self.library.conclusion(name, mapping)
        return self.add(conclusion, Lemma(name, tuple(sorted(mapping.items()))))

    def extend(self, proof: Proof) -> int:
        """Append a proof's steps, shifting its citations; returns the number of its last step"""
        shift = len(self.steps)
        mapping = {k: k + shift for k in range(1, len(proof.steps) + 1)}
        for step in proof.steps:
            if isinstance(step.justification, Premise) and step.formula not in self.premises:
                self.premises.append(step.formula)
            self.add(step.formula, step.justification.renumber(mapping))
        return len(self.steps)

    def build(self) -> Proof:
        return Proof(tuple(self.premises), tuple(self.steps))
