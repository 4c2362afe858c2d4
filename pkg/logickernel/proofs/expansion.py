"""
Replacing HS and lemma steps by primitive steps
"""

import logging
from typing import Dict, Mapping, Optional

from logickernel.core.models import Formula, Implies
from logickernel.core.syntax import instantiate
from logickernel.proofs.builder import ProofBuilder
from logickernel.proofs.models import (
    HS, AxiomP1, AxiomP2, AxiomP3, Justification, Lemma, Proof, Step,
)

logger = logging.getLogger(__name__)


def instantiate_justification(j: Justification, mapping: Mapping[str, Formula]) -> Justification:
    """Apply a formula-variable instantiation to the parts an axiom justification names"""
    if isinstance(j, AxiomP1):
        return AxiomP1(instantiate(j.a, mapping), instantiate(j.b, mapping))
    if isinstance(j, AxiomP2):
        return AxiomP2(instantiate(j.a, mapping), instantiate(j.b, mapping), instantiate(j.c, mapping))
    if isinstance(j, AxiomP3):
        return AxiomP3(instantiate(j.a, mapping), instantiate(j.b, mapping))
    if isinstance(j, Lemma):
        inner = {name: instantiate(f, mapping) for name, f in j.instantiation}
        for name, f in mapping.items():
            inner.setdefault(name, f)
        return Lemma(j.name, tuple(sorted(inner.items())))
    return j


def instantiate_template(proof: Proof, mapping: Mapping[str, Formula]) -> Proof:
    steps = tuple(
        Step(instantiate(s.formula, mapping), instantiate_justification(s.justification, mapping))
        for s in proof.steps
    )
    premises = tuple(instantiate(p, mapping) for p in proof.premises)
    return Proof(premises, steps)


def expand_hs_step(builder: ProofBuilder, i: int, j: int) -> int:
    """
    Hypothetical syllogism as primitive steps. Given step i: X -> Y and step j: Y -> Z, append
    P1, MP, P2, MP, MP ending in X -> Z and return the last step number.
    """
    fi, fj = builder.formula(i), builder.formula(j)
    if not (isinstance(fi, Implies) and isinstance(fj, Implies) and fi.right == fj.left):
        i, j = j, i
        fi, fj = fj, fi
    x, y, z = fi.left, fi.right, fj.right
    s1 = builder.p1(Implies(y, z), x)
    s2 = builder.mp(j, s1)
    s3 = builder.p2(x, y, z)
    s4 = builder.mp(s2, s3)
    return builder.mp(i, s4)


def expand_lemmas(proof: Proof, library=None, lemmas: bool = True) -> Proof:
    """
    Lemma-free copy of a proof.

    Args:
        proof: Proof that may contain HS and lemma steps
        library: Lemma library resolving lemma names
        lemmas: False expands HS steps only

    Returns:
        Proof with the same premises and conclusion and renumbered citations
    """
    if not any(isinstance(s.justification, (HS, Lemma)) for s in proof.steps):
        return proof
    builder = ProofBuilder(proof.premises, library)
    moved: Dict[int, int] = {}
    for k, step in enumerate(proof.steps, start=1):
        j = step.justification
        if isinstance(j, HS):
            moved[k] = expand_hs_step(builder, moved[j.i], moved[j.j])
        elif isinstance(j, Lemma) and lemmas:
            template = builder.library.expanded(j.name)
            moved[k] = builder.extend(instantiate_template(template, j.mapping))
        elif j.cites():
            moved[k] = builder.add(step.formula, j.renumber(moved))
        else:
            moved[k] = builder.add(step.formula, j)
    expanded = builder.build()
    logger.debug("expanded %d steps into %d", len(proof), len(expanded))
    return expanded


def expand_hs(proof: Proof, library: Optional[object] = None) -> Proof:
    return expand_lemmas(proof, library, lemmas=False)
