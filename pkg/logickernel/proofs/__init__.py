"""
Hilbert-style proof components
"""

from .models import (
    RejectReason, Justification, Premise, AxiomP1, AxiomP2, AxiomP3, MP, HS, Lemma, Step, Proof,
    ProofVerdict,
)
from .axioms import AXIOMS, instantiate_axiom
from .checker import ProofChecker, check_proof
from .builder import ProofBuilder
from .lemmas import LemmaLibrary, LemmaTemplate, default_library
from .expansion import expand_lemmas, expand_hs
from .deduction import DeductionTransformer, deduction_transform
from .deducibility import deducibility_proof, literal
from .synthesis import ProofSynthesizer, synthesize_proof, verify_soundness
from .script import ProofScript, format_proof, parse_proof

__all__ = [
    "RejectReason",
    "Justification",
    "Premise",
    "AxiomP1",
    "AxiomP2",
    "AxiomP3",
    "MP",
    "HS",
    "Lemma",
    "Step",
    "Proof",
    "ProofVerdict",
    "AXIOMS",
    "instantiate_axiom",
    "ProofChecker",
    "check_proof",
    "ProofBuilder",
    "LemmaLibrary",
    "LemmaTemplate",
    "default_library",
    "expand_lemmas",
    "expand_hs",
    "DeductionTransformer",
    "deduction_transform",
    "deducibility_proof",
    "literal",
    "ProofSynthesizer",
    "synthesize_proof",
    "verify_soundness",
    "ProofScript",
    "format_proof",
    "parse_proof",
]
