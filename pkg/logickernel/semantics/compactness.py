"""
Finite-subset satisfiability checks for indexed premise families
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional

from logickernel.core.models import And, Atom, Formula, Iff, Implies, Not, Or
from logickernel.errors import CapExceeded
from logickernel.semantics.assignments import Assignment
from logickernel.semantics.forcing import Strategy, satisfiable

logger = logging.getLogger(__name__)

Family = Callable[[int], Formula]


@dataclass
class CompactnessReport:
    k: int
    subsets_checked: int
    truncated: bool
    first_unsatisfiable: Optional[List[int]]
    prefix_satisfiable: bool
    witness: Optional[Assignment] = None

    @property
    def satisfiable(self) -> bool:
        return self.first_unsatisfiable is None and self.prefix_satisfiable


class CompactnessChecker:
    """Checks the nonempty subsets of {A_1..A_k} by size, then lexicographically"""

    DEFAULT_SUBSET_CAP = 2 ** 16

    def __init__(self, subset_cap: int = DEFAULT_SUBSET_CAP, strategy: Strategy = Strategy.FORCING):
        self.subset_cap = subset_cap
        self.strategy = strategy

    def check(self, family: Family, k: int, strict: bool = False) -> CompactnessReport:
        members = [family(i) for i in range(1, k + 1)]
        prefix = satisfiable(members, self.strategy)
        total = 2 ** k - 1
        report = CompactnessReport(
            k=k,
            subsets_checked=0,
            truncated=total > self.subset_cap,
            first_unsatisfiable=None,
            prefix_satisfiable=prefix.satisfiable,
            witness=prefix.witness,
        )
        for indices in self._subsets(k):
            if report.subsets_checked >= self.subset_cap:
                break
            report.subsets_checked += 1
            if not satisfiable([members[i - 1] for i in indices], self.strategy).satisfiable:
                report.first_unsatisfiable = list(indices)
                break
        if report.truncated and report.first_unsatisfiable is None:
            logger.warning(
                "%d subsets exceed the subset cap %d; checked %d plus the full prefix",
                total, self.subset_cap, report.subsets_checked,
            )
            if strict:
                raise CapExceeded(total, self.subset_cap, partial=report)
        return report

    @staticmethod
    def _subsets(k: int):
        for r in range(1, k + 1):
            yield from itertools.combinations(range(1, k + 1), r)


def finite_subsets_satisfiable(
    family: Family,
    k: int,
    subset_cap: int = CompactnessChecker.DEFAULT_SUBSET_CAP,
    strict: bool = False,
) -> CompactnessReport:
    return CompactnessChecker(subset_cap).check(family, k, strict)


def negation_conjunction_family(i: int) -> Formula:
    """A_1 = ~P, A_k = A_(k-1) & P"""
    f: Formula = Not(Atom("P"))
    for _ in range(i - 1):
        f = And(f, Atom("P"))
    return f


def growing_disjunction_family(i: int) -> Formula:
    """A_1 = P, A_k = A_(k-1) | P_(k-1)"""
    f: Formula = Atom("P")
    for j in range(1, i):
        f = Or(f, Atom(f"P{j}"))
    return f


def implication_tower_family(i: int) -> Formula:
    p = Atom("P")
    f: Formula = Implies(p, p)
    for _ in range(i - 1):
        f = Implies(p, f)
    return f


def negated_identity_family(i: int) -> Formula:
    p = Atom("P")
    if i == 1:
        return Implies(p, p)
    f: Formula = Not(Implies(p, p))
    for _ in range(i - 2):
        f = Implies(p, f)
    return f


def biconditional_chain_family(i: int) -> Formula:
    """A_(2j-1) = P_j <-> P_(j+1), A_(2j) = P_j <-> ~P_(j+1)"""
    j = (i + 1) // 2
    left, right = Atom(f"P{j}"), Atom(f"P{j + 1}")
    if i % 2:
        return Iff(left, right)
    return Iff(left, Not(right))


FAMILIES: Dict[str, Family] = {
    "negation-conjunction": negation_conjunction_family,
    "growing-disjunction": growing_disjunction_family,
    "implication-tower": implication_tower_family,
    "negated-identity": negated_identity_family,
    "biconditional-chain": biconditional_chain_family,
}
