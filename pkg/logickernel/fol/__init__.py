"""
First-order (Pd) components
"""

from .models import Var, Const, Term, Pred, Quantified, Forall, Exists, is_variable_name, make_term
from .parser import PdParser, parse_pd, print_pd
from .syntax import (
    Occurrence, Scope, OccurrenceReport, occurrences, variable_key, pd_size, is_pd_prime,
    to_pd_prime, free_vars, bound_vars, is_sentence, constants, predicates, congruent, subst_free,
    free_for, universal_closure, fresh_variables, rectify, prenex,
)
from .structures import (
    Structure, Signature, StructureEnumerator, load_structure, dump_structure, domain_ids,
    interpretation_count, enumerate_structures,
)
from .semantics import (
    ModelVerdict, ValidityReport, FolStatus, FolVerdict, ModelSearch, models, expand_quantifiers,
    valid_over, fol_consequence, fol_satisfiable,
)
from .proofs import (
    AxiomP4, AxiomP5, Gen, PdProofChecker, PdProofBuilder, PdDeductionTransformer, SoundnessReport,
    check_pd_proof, pd_deduction_transform, pd_soundness_spotcheck, renaming_proof,
    generalize_proof, instantiate_proof,
)
from .script import PdProofScript, format_pd_proof, parse_pd_proof

__all__ = [
    "Var",
    "Const",
    "Term",
    "Pred",
    "Quantified",
    "Forall",
    "Exists",
    "is_variable_name",
    "make_term",
    "PdParser",
    "parse_pd",
    "print_pd",
    "Occurrence",
    "Scope",
    "OccurrenceReport",
    "occurrences",
    "variable_key",
    "pd_size",
    "is_pd_prime",
    "to_pd_prime",
    "free_vars",
    "bound_vars",
    "is_sentence",
    "constants",
    "predicates",
    "congruent",
    "subst_free",
    "free_for",
    "universal_closure",
    "fresh_variables",
    "rectify",
    "prenex",
    "Structure",
    "Signature",
    "StructureEnumerator",
    "load_structure",
    "dump_structure",
    "domain_ids",
    "interpretation_count",
    "enumerate_structures",
    "ModelVerdict",
    "ValidityReport",
    "FolStatus",
    "FolVerdict",
    "ModelSearch",
    "models",
    "expand_quantifiers",
    "valid_over",
    "fol_consequence",
    "fol_satisfiable",
    "AxiomP4",
    "AxiomP5",
    "Gen",
    "PdProofChecker",
    "PdProofBuilder",
    "PdDeductionTransformer",
    "SoundnessReport",
    "check_pd_proof",
    "pd_deduction_transform",
    "pd_soundness_spotcheck",
    "renaming_proof",
    "generalize_proof",
    "instantiate_proof",
    "PdProofScript",
    "format_pd_proof",
    "parse_pd_proof",
]
