"""
Proof synthesis for tautologies and semantic soundness checks of proofs
"""

import logging
from typing import List

from logickernel.core.models import Atom, Formula
from logickernel.core.syntax import atoms, to_Lprime
from logickernel.errors import CapExceeded, NotATautology, SelfCheckFailed
from logickernel.proofs.builder import ProofBuilder
from logickernel.proofs.checker import ProofChecker
from logickernel.proofs.deducibility import deducibility_proof, literal
from logickernel.proofs.deduction import deduction_transform
from logickernel.proofs.expansion import expand_lemmas
from logickernel.proofs.models import Proof, ProofVerdict
from logickernel.semantics.assignments import canonical_assignments
from logickernel.semantics.classify import FormulaStatus, classify
from logickernel.semantics.forcing import Strategy, valid_consequence

logger = logging.getLogger(__name__)


class ProofSynthesizer:
    """
    Completeness made constructive: one deducibility proof per row, the
    literals discharged, then pairs merged with case-split atom by atom.
    """

    DEFAULT_ATOM_CAP = 6
    PROOF_SIZE_WARNING = 100_000

    def __init__(self, atom_cap: int = DEFAULT_ATOM_CAP,
                 size_warning: int = PROOF_SIZE_WARNING, library=None):
        self.atom_cap = atom_cap
        self.size_warning = size_warning
        self.library = library

    def synthesize(self, f: Formula) -> Proof:
        target = to_Lprime(f)
        if classify(target).status is not FormulaStatus.VALID:
            raise NotATautology(f)
        names = sorted(atoms(target))
        if len(names) > self.atom_cap:
            raise CapExceeded(len(names), self.atom_cap)

        builder = ProofBuilder(library=self.library)
        branches: List[int] = []
        for row in canonical_assignments(names):
            proof = deducibility_proof(target, row, self.library)
            for name, value in reversed(list(zip(row.atoms, row.values))):
                proof = deduction_transform(proof, literal(Atom(name), value), self.library)
            branches.append(builder.extend(proof))

        for name in names:
            half = len(branches) // 2
            merged = []
            for k in range(half):
                positive, negative = branches[k], branches[k + half]
                rest = builder.formula(positive).right
                cs = builder.lemma("case-split", A=Atom(name), B=rest)
                s = builder.mp(positive, cs)
                merged.append(builder.mp(negative, s))
            logger.debug("merged %d branch pairs on %s", half, name)
            branches = merged

        proof = expand_lemmas(builder.build(), self.library)
        verdict = ProofChecker(self.library).check(proof)
        if not verdict.accepted or proof.conclusion != target:
            raise SelfCheckFailed(f"proof of {target}", f"checker verdict {verdict}")
        soundness = verify_soundness(proof)
        if not soundness.accepted:
            raise SelfCheckFailed(f"proof of {target}", f"soundness {soundness}")
        if len(proof) > self.size_warning:
            logger.warning("proof of %s has %d steps", target, len(proof))
        return proof


def synthesize_proof(f: Formula, atom_cap: int = ProofSynthesizer.DEFAULT_ATOM_CAP,
                     size_warning: int = ProofSynthesizer.PROOF_SIZE_WARNING,
                     library=None) -> Proof:
    """
    Primitive proof of a tautology from no premises.

    Raises:
        NotATautology: to_Lprime(f) is not valid
        CapExceeded: f has more atoms than atom_cap
    """
    return ProofSynthesizer(atom_cap, size_warning, library).synthesize(f)


def verify_soundness(proof: Proof) -> ProofVerdict:
    """Every step must be a semantic consequence of the proof's premises"""
    for k, step in enumerate(proof.steps, start=1):
        verdict = valid_consequence(proof.premises, step.formula, Strategy.TABLE)
        if not verdict.valid:
            return ProofVerdict(False, k, detail=f"counterexample {verdict.witness}")
    return ProofVerdict(True, used_premises=proof.premises)
