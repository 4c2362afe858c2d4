"""
Proof checker for the L' Hilbert system
"""

import logging
from typing import Dict, List, Optional, Tuple

from logickernel.core.models import Formula, Implies
from logickernel.errors import UnknownLemma
from logickernel.proofs.lemmas import LemmaLibrary, default_library
from logickernel.proofs.models import HS, MP, Lemma, Premise, Proof, ProofVerdict, RejectReason, Step

logger = logging.getLogger(__name__)

Failure = Tuple[RejectReason, str]


def detach(minor: Formula, major: Formula) -> Optional[Formula]:
    """B when major is minor -> B"""
    if isinstance(major, Implies) and major.left == minor:
        return major.right
    return None


def mp_conclusions(fi: Formula, fj: Formula) -> List[Formula]:
    """Every formula MP yields from the two cited formulas, either order"""
    return [f for f in (detach(fi, fj), detach(fj, fi)) if f is not None]


def hs_conclusions(fi: Formula, fj: Formula) -> List[Formula]:
    found = []
    for first, second in ((fi, fj), (fj, fi)):
        if isinstance(first, Implies) and isinstance(second, Implies) and first.right == second.left:
            found.append(Implies(first.left, second.right))
    return found


class ProofChecker:
    """
    Checks each step against Def. of a demonstration: premise occurrence,
    axiom instance, MP or HS on earlier steps, or a lemma instance.
    Never raises on a bad proof; the verdict names the first failing step.
    """

    def __init__(self, library: Optional[LemmaLibrary] = None):
        self.library = library or default_library()

    def check(self, proof: Proof) -> ProofVerdict:
        if not proof.steps:
            return ProofVerdict(False, 0, RejectReason.EMPTY_PROOF)
        premises = set(proof.premises)
        used: Dict[Formula, None] = {}
        for k, step in enumerate(proof.steps, start=1):
            failure = self.check_formula(k, step) or self.check_step(k, step, proof, premises)
            if failure is not None:
                reason, detail = failure
                logger.debug("step %d rejected: %s %s", k, reason.value, detail)
                return ProofVerdict(False, k, reason, detail=detail)
            if isinstance(step.justification, Premise):
                used.setdefault(step.formula, None)
        ordered = tuple(p for p in proof.premises if p in used)
        return ProofVerdict(True, used_premises=ordered)

    def check_formula(self, k: int, step: Step) -> Optional[Failure]:
        return None

    def check_step(self, k: int, step: Step, proof: Proof, premises: set) -> Optional[Failure]:
        j = step.justification
        for cited in j.cites():
            if not 1 <= cited < k:
                return RejectReason.FORWARD_REFERENCE, f"cites step {cited}"
        if isinstance(j, Premise):
            if step.formula not in premises:
                return RejectReason.NOT_PREMISE, str(step.formula)
            return None
        axiom = j.axiom_formula()
        if axiom is not None:
            if axiom != step.formula:
                return RejectReason.BAD_AXIOM_INSTANCE, f"instance is {axiom}"
            return self.check_side_conditions(j)
        if isinstance(j, MP):
            candidates = mp_conclusions(proof.step(j.i).formula, proof.step(j.j).formula)
            if step.formula not in candidates:
                return RejectReason.BAD_MP_SHAPE, f"MP({j.i},{j.j})"
            return None
        if isinstance(j, HS):
            candidates = hs_conclusions(proof.step(j.i).formula, proof.step(j.j).formula)
            if step.formula not in candidates:
                return RejectReason.BAD_MP_SHAPE, f"HS({j.i},{j.j})"
            return None
        if isinstance(j, Lemma):
            try:
                expected = self.library.conclusion(j.name, j.mapping)
            except UnknownLemma:
                return RejectReason.UNKNOWN_LEMMA, j.name
            if expected != step.formula:
                return RejectReason.BAD_AXIOM_INSTANCE, f"lemma {j.name} gives {expected}"
            return None
        return self.check_other(k, step, proof)

    def check_side_conditions(self, j) -> Optional[Failure]:
        return None

    def check_other(self, k: int, step: Step, proof: Proof) -> Optional[Failure]:
        return RejectReason.BAD_AXIOM_INSTANCE, f"unsupported justification {type(step.justification).__name__}"


def check_proof(proof: Proof, library: Optional[LemmaLibrary] = None) -> ProofVerdict:
    return ProofChecker(library).check(proof)
