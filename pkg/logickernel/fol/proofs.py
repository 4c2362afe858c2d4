"""
The Pd' Hilbert system: P4, P5, generalization, checking and the restricted deduction theorem
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from logickernel.core.models import Formula, Implies
from logickernel.errors import GeneralizationOnFreeVariable, NotFreeFor, UnknownSymbol
from logickernel.fol.models import Const, Forall, Term, Var
from logickernel.fol.semantics import models
from logickernel.fol.structures import Structure
from logickernel.fol.syntax import (
    TermLike, VariableLike, as_term, free_for, free_vars, is_pd_prime, subst_free, variable_name,
)
from logickernel.proofs.builder import ProofBuilder
from logickernel.proofs.checker import Failure, ProofChecker
from logickernel.proofs.deduction import DeductionTransformer
from logickernel.proofs.models import Justification, Proof, ProofVerdict, RejectReason, Step

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AxiomP4(Justification):
    """forall x (A -> B) -> (A -> forall x B), x not free in A"""
    a: Formula
    b: Formula
    x: Var

    def axiom_formula(self) -> Formula:
        return Implies(Forall(self.x, Implies(self.a, self.b)), Implies(self.a, Forall(self.x, self.b)))


@dataclass(frozen=True)
class AxiomP5(Justification):
    """(forall x A) -> S^x_lam A, lam free for x in A or a constant"""
    a: Formula
    x: Var
    lam: Term

    def axiom_formula(self) -> Formula:
        return Implies(Forall(self.x, self.a), subst_free(self.a, self.x, self.lam))


@dataclass(frozen=True)
class Gen(Justification):
    """Generalization: from step i infer forall x of it"""
    i: int
    x: Var

    def cites(self) -> Tuple[int, ...]:
        return (self.i,)

    def renumber(self, mapping: Dict[int, int]) -> Justification:
        return Gen(mapping[self.i], self.x)


class PdProofChecker(ProofChecker):
    """ProofChecker over Pd' formulas with the P4 and P5 side conditions and Gen"""

    def check_formula(self, k: int, step: Step) -> Optional[Failure]:
        if not is_pd_prime(step.formula):
            return RejectReason.NOT_IN_PD_PRIME, str(step.formula)
        return None

    def check_side_conditions(self, j) -> Optional[Failure]:
        if isinstance(j, AxiomP4) and j.x.name in free_vars(j.a):
            return RejectReason.SIDE_CONDITION_VIOLATION, f"{j.x} is free in {j.a}"
        if isinstance(j, AxiomP5) and not free_for(j.a, j.x, j.lam):
            return RejectReason.SIDE_CONDITION_VIOLATION, f"{j.lam} is not free for {j.x} in {j.a}"
        return None

    def check_other(self, k: int, step: Step, proof: Proof) -> Optional[Failure]:
        j = step.justification
        if isinstance(j, Gen):
            expected = Forall(j.x, proof.step(j.i).formula)
            if step.formula != expected:
                return RejectReason.BAD_MP_SHAPE, f"GEN({j.i},{j.x}) gives {expected}"
            return None
        return super().check_other(k, step, proof)


def check_pd_proof(proof: Proof, library=None) -> ProofVerdict:
    return PdProofChecker(library).check(proof)


class PdProofBuilder(ProofBuilder):

    def p4(self, a: Formula, b: Formula, x: VariableLike) -> int:
        return self.axiom(AxiomP4(a, b, Var(variable_name(x))))

    def p5(self, a: Formula, x: VariableLike, lam: TermLike) -> int:
        return self.axiom(AxiomP5(a, Var(variable_name(x)), as_term(lam)))

    def gen(self, i: int, x: VariableLike) -> int:
        var = Var(variable_name(x))
        return self.add(Forall(var, self.formula(i)), Gen(i, var))


class PdDeductionTransformer(DeductionTransformer):
    """
    The propositional rewrite plus generalization steps: Gen on y becomes
    Gen on A -> B, the P4 instance and MP. Refuses when y is free in A.
    """

    def make_checker(self) -> ProofChecker:
        return PdProofChecker(self.library)

    def make_builder(self, premises) -> ProofBuilder:
        return PdProofBuilder(premises, self.library)

    def transform(self, proof: Proof, a: Formula) -> Proof:
        free = set(free_vars(a))
        for k, step in enumerate(proof.steps, start=1):
            j = step.justification
            if isinstance(j, Gen) and j.x.name in free:
                raise GeneralizationOnFreeVariable(k, j.x.name)
        return super().transform(proof, a)

    def discharge_other(self, builder: ProofBuilder, k: int, step: Step,
                        moved: Dict[int, int], a: Formula) -> int:
        j = step.justification
        if not isinstance(j, Gen):
            return super().discharge_other(builder, k, step, moved, a)
        inner = step.formula.body
        generalized = builder.gen(moved[j.i], j.x)
        p4 = builder.p4(a, inner, j.x)
        return builder.mp(generalized, p4)


def pd_deduction_transform(proof: Proof, a: Formula, library=None) -> Proof:
    """
    Discharge premise a from a Pd' demonstration.

    Raises:
        InputRejected: the proof does not check
        GeneralizationOnFreeVariable: a Gen step generalizes a variable free in a
    """
    return PdDeductionTransformer(library).transform(proof, a)


@dataclass
class SoundnessReport:
    checked: int = 0
    skipped: int = 0
    failures: List[Tuple[int, int]] = field(default_factory=list)

    @property
    def sound(self) -> bool:
        return not self.failures


def pd_soundness_spotcheck(proof: Proof, structures: Iterable[Structure]) -> SoundnessReport:
    """
    Check every step of an accepted proof, universally closed, in each structure
    that models all premises. Failures are (structure index, step number) pairs.
    Structures that miss a premise or a symbol are skipped.
    """
    report = SoundnessReport()
    for index, m in enumerate(structures):
        try:
            if not all(models(m, p).holds for p in proof.premises):
                report.skipped += 1
                continue
            report.checked += 1
            for k, step in enumerate(proof.steps, start=1):
                if not models(m, step.formula).holds:
                    logger.error("step %d of an accepted proof fails in %s", k, m)
                    report.failures.append((index, k))
                    break
        except UnknownSymbol as e:
            logger.debug("structure %d skipped: %s", index, e)
            report.skipped += 1
    return report


def renaming_proof(a: Formula, x: VariableLike, y: VariableLike) -> Proof:
    """
    forall x A |- forall y S^x_y A in four steps: premise, P5, MP, Gen.

    Raises:
        NotFreeFor: y is not free for x in a
    """
    if not free_for(a, x, Var(variable_name(y))):
        raise NotFreeFor(variable_name(y), variable_name(x))
    start = Forall(Var(variable_name(x)), a)
    b = PdProofBuilder([start])
    s1 = b.premise(start)
    s2 = b.p5(a, x, Var(variable_name(y)))
    s3 = b.mp(s1, s2)
    b.gen(s3, y)
    return b.build()


def _continue(proof: Proof) -> PdProofBuilder:
    b = PdProofBuilder(proof.premises)
    b.extend(proof)
    return b


def generalize_proof(proof: Proof, variables: Sequence[VariableLike]) -> Proof:
    """Append Gen steps; variables are listed outermost first, as universal_closure orders them"""
    b = _continue(proof)
    for x in reversed(list(variables)):
        b.gen(len(b), x)
    return b.build()


def instantiate_proof(proof: Proof, x: VariableLike, lam: TermLike) -> Proof:
    """
    From a proof of forall x A, a proof of S^x_lam A by P5 and MP.

    Raises:
        ValueError: the conclusion is not quantified over x
        NotFreeFor: lam is a variable not free for x
    """
    conclusion = proof.conclusion
    if not isinstance(conclusion, Forall) or conclusion.var.name != variable_name(x):
        raise ValueError(f"conclusion {conclusion} is not quantified over {variable_name(x)}")
    term = as_term(lam)
    if not isinstance(term, Const) and not free_for(conclusion.body, x, term):
        raise NotFreeFor(term.name, variable_name(x))
    b = _continue(proof)
    last = len(b)
    p5 = b.p5(conclusion.body, x, term)
    b.mp(last, p5)
    return b.build()
