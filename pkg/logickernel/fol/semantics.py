"""
Structure valuation for Pd and bounded model search
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

from logickernel.core.models import And, Formula, Iff, Implies, Not, Or
from logickernel.errors import CapExceeded
from logickernel.fol.models import Const, Exists, Forall, Pred, Quantified, Var
from logickernel.fol.structures import ELEMENT_PREFIX, Signature, Structure, StructureEnumerator
from logickernel.fol.syntax import subst_free, universal_closure

logger = logging.getLogger(__name__)


def element_constant(element: str) -> Const:
    """The minted constant naming a domain element"""
    return Const(ELEMENT_PREFIX + element)


@dataclass(frozen=True)
class ModelVerdict:
    """trace lists the elements that decided each quantifier along the deciding path"""
    holds: bool
    trace: Tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.holds


class Valuation:
    """Valuation of sentences in one structure; quantifiers instantiate minted element constants"""

    def __init__(self, structure: Structure):
        self.structure = structure

    def value(self, f: Formula) -> Tuple[bool, List[str]]:
        m = self.structure
        if isinstance(f, Pred):
            images = []
            for t in f.args:
                if isinstance(t, Var):
                    raise ValueError(f"free variable {t.name} left in {f}")
                images.append(m.element(t.name))
            return tuple(images) in m.relation(f.name, f.arity), []
        if isinstance(f, Not):
            holds, trace = self.value(f.child)
            return not holds, trace
        if isinstance(f, Quantified):
            looking_for = isinstance(f, Exists)
            for d in m.domain:
                holds, trace = self.value(subst_free(f.body, f.var, element_constant(d)))
                if holds == looking_for:
                    role = "witness" if looking_for else "refuter"
                    return looking_for, [f"{f.WORD} {f.var.name}: {role} {d}"] + trace
            return not looking_for, []
        if isinstance(f, (And, Or, Implies, Iff)):
            left, left_trace = self.value(f.left)
            if isinstance(f, And) and not left:
                return False, left_trace
            if isinstance(f, Or) and left:
                return True, left_trace
            if isinstance(f, Implies) and not left:
                return True, left_trace
            right, right_trace = self.value(f.right)
            trace = left_trace + right_trace
            if isinstance(f, Iff):
                return left == right, trace
            return right, trace
        raise TypeError(f"cannot evaluate {type(f).__name__}")


def models(m: Structure, f: Formula) -> ModelVerdict:
    """
    Whether m is a model of f; open formulas are read as their universal closure.

    Raises:
        UnknownSymbol: a predicate or constant of f is not interpreted in m
    """
    holds, trace = Valuation(m).value(universal_closure(f))
    return ModelVerdict(holds, tuple(trace))


def expand_quantifiers(f: Formula, m: Structure) -> Formula:
    """forall as a conjunction and exists as a disjunction over the named elements of m"""
    if isinstance(f, Quantified):
        instances = [expand_quantifiers(subst_free(f.body, f.var, element_constant(d)), m)
                     for d in m.domain]
        kind = And if isinstance(f, Forall) else Or
        result = instances[-1]
        for instance in reversed(instances[:-1]):
            result = kind(instance, result)
        return result
    children = f.children()
    if not children:
        return f
    return f.rebuild(tuple(expand_quantifiers(child, m) for child in children))


@dataclass
class ValidityReport:
    """Per domain size: True (n-valid), False, or None when the size was over the cap"""
    sizes: Dict[int, Optional[bool]] = field(default_factory=dict)
    countermodel: Optional[Structure] = None

    @property
    def valid_up_to_bound(self) -> bool:
        return all(v is True for v in self.sizes.values())


class FolStatus(Enum):
    VALID_UP_TO_BOUND = "valid-up-to-bound"
    INVALID = "invalid"
    SATISFIABLE = "satisfiable"
    NO_MODEL_UP_TO = "no-model-up-to"


@dataclass(frozen=True)
class FolVerdict:
    status: FolStatus
    bound: int
    structure: Optional[Structure] = None

    def __str__(self) -> str:
        if self.status is FolStatus.VALID_UP_TO_BOUND:
            return f"no countermodel up to {self.bound}"
        if self.status is FolStatus.NO_MODEL_UP_TO:
            return f"no model up to {self.bound}"
        return f"{self.status.value}: {self.structure}"


class ModelSearch:
    """Scans domain sizes 1..max_domain in order and returns the first hit"""

    DEFAULT_MAX_DOMAIN = 3

    def __init__(self, max_domain: int = DEFAULT_MAX_DOMAIN, cap: int = StructureEnumerator.DEFAULT_CAP):
        if max_domain < 1:
            raise ValueError("max_domain must be at least 1")
        self.max_domain = max_domain
        self.cap = cap

    def valid_over(self, f: Formula) -> ValidityReport:
        closed = universal_closure(f)
        enumerator = StructureEnumerator(Signature.of([closed]), self.cap)
        report = ValidityReport()
        for size in range(1, self.max_domain + 1):
            try:
                structures = enumerator.structures(size)
            except CapExceeded as e:
                logger.warning("domain size %d skipped: %s", size, e)
                report.sizes[size] = None
                continue
            report.sizes[size] = True
            for m in structures:
                if not models(m, closed).holds:
                    report.sizes[size] = False
                    if report.countermodel is None:
                        report.countermodel = m
                    break
        return report

    def find(self, premises: Sequence[Formula], goal: Optional[Formula]) -> Optional[Structure]:
        """First structure modelling every premise and, when a goal is given, failing it"""
        closed = [universal_closure(p) for p in premises]
        target = universal_closure(goal) if goal is not None else None
        formulas = closed + ([target] if target is not None else [])
        enumerator = StructureEnumerator(Signature.of(formulas), self.cap)
        for size in range(1, self.max_domain + 1):
            try:
                structures = enumerator.structures(size)
            except CapExceeded as e:
                logger.warning("domain size %d over the interpretation cap", size)
                raise CapExceeded(e.requested, e.cap, partial=size - 1) from None
            for m in structures:
                if all(models(m, p).holds for p in closed):
                    if target is None or not models(m, target).holds:
                        return m
        return None


def valid_over(f: Formula, max_domain: int = ModelSearch.DEFAULT_MAX_DOMAIN,
               cap: int = StructureEnumerator.DEFAULT_CAP) -> ValidityReport:
    """n-validity of f for every n up to max_domain, with the first countermodel found"""
    return ModelSearch(max_domain, cap).valid_over(f)


def fol_consequence(premises: Sequence[Formula], b: Formula,
                    max_domain: int = ModelSearch.DEFAULT_MAX_DOMAIN,
                    cap: int = StructureEnumerator.DEFAULT_CAP) -> FolVerdict:
    """
    Search for a structure modelling the premises but not b.

    Returns:
        INVALID with the countermodel, or VALID_UP_TO_BOUND, which is not a proof of validity

    Raises:
        CapExceeded: a domain size has too many interpretations; partial is the last size searched
    """
    m = ModelSearch(max_domain, cap).find(premises, b)
    if m is not None:
        return FolVerdict(FolStatus.INVALID, max_domain, m)
    return FolVerdict(FolStatus.VALID_UP_TO_BOUND, max_domain)


def fol_satisfiable(premises: Sequence[Formula],
                    max_domain: int = ModelSearch.DEFAULT_MAX_DOMAIN,
                    cap: int = StructureEnumerator.DEFAULT_CAP) -> FolVerdict:
    m = ModelSearch(max_domain, cap).find(premises, None)
    if m is not None:
        return FolVerdict(FolStatus.SATISFIABLE, max_domain, m)
    return FolVerdict(FolStatus.NO_MODEL_UP_TO, max_domain)
