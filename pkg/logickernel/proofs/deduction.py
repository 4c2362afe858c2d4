"""
Constructive deduction theorem: from a demonstration of B using premise A,
build a demonstration of A -> B without it
"""

import logging
from typing import Dict, Optional

from logickernel.core.models import Formula, Implies
from logickernel.errors import InputRejected
from logickernel.proofs.builder import ProofBuilder
from logickernel.proofs.checker import ProofChecker
from logickernel.proofs.expansion import expand_hs
from logickernel.proofs.models import MP, Proof, Step

logger = logging.getLogger(__name__)


class DeductionTransformer:
    """
    Rewrites each step B_k of the input into a block ending in A -> B_k.
    Lemma steps are theorems and are wrapped like axioms.
    """

    def __init__(self, library=None, inline_identity: bool = False):
        self.library = library
        self.inline_identity = inline_identity

    def make_checker(self) -> ProofChecker:
        return ProofChecker(self.library)

    def make_builder(self, premises) -> ProofBuilder:
        return ProofBuilder(premises, self.library)

    def transform(self, proof: Proof, a: Formula) -> Proof:
        verdict = self.make_checker().check(proof)
        if not verdict.accepted:
            raise InputRejected(verdict.step, verdict.reason.value)
        proof = expand_hs(proof, self.library)
        builder = self.make_builder(p for p in proof.premises if p != a)
        moved: Dict[int, int] = {}
        for k, step in enumerate(proof.steps, start=1):
            if step.formula == a:
                moved[k] = self.identity(builder, a)
            elif isinstance(step.justification, MP):
                moved[k] = self.discharge_mp(builder, proof, step, moved, a)
            else:
                moved[k] = self.discharge_other(builder, k, step, moved, a)
        result = builder.build()
        logger.debug("deduction transform: %d steps became %d", len(proof), len(result))
        return result

    def identity(self, builder: ProofBuilder, a: Formula) -> int:
        if not self.inline_identity:
            return builder.lemma("id", A=a)
        s1 = builder.p2(a, Implies(a, a), a)
        s2 = builder.p1(a, Implies(a, a))
        s3 = builder.mp(s1, s2)
        s4 = builder.p1(a, a)
        return builder.mp(s3, s4)

    def discharge_mp(self, builder: ProofBuilder, proof: Proof, step: Step,
                     moved: Dict[int, int], a: Formula) -> int:
        i, j = step.justification.i, step.justification.j
        major, minor = (i, j) if proof.step(i).formula == Implies(proof.step(j).formula, step.formula) else (j, i)
        g = proof.step(minor).formula
        p2 = builder.p2(a, g, step.formula)
        s = builder.mp(moved[major], p2)
        return builder.mp(moved[minor], s)

    def discharge_other(self, builder: ProofBuilder, k: int, step: Step,
                        moved: Dict[int, int], a: Formula) -> int:
        """Premise, axiom or lemma step: keep it, then P1 and MP"""
        kept = builder.add(step.formula, step.justification)
        p1 = builder.p1(step.formula, a)
        return builder.mp(kept, p1)


def deduction_transform(proof: Proof, a: Formula, library=None,
                        inline_identity: bool = False,
                        transformer: Optional[DeductionTransformer] = None) -> Proof:
    """
    Discharge premise a.

    Args:
        proof: Accepted demonstration of B from premises that may include a
        a: The premise to discharge

    Returns:
        Accepted demonstration of a -> B from the remaining premises
    """
    transformer = transformer or DeductionTransformer(library, inline_identity)
    return transformer.transform(proof, a)
