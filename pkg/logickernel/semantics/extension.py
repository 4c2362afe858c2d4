"""
Staged maximal consistent extension of a premise set over a finite universe
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Sequence, Set

from logickernel.core.models import Atom, Formula, Implies, Not
from logickernel.core.printer import print_atomic
from logickernel.core.syntax import atoms_of, size
from logickernel.errors import InputUnsatisfiable
from logickernel.semantics.assignments import Assignment
from logickernel.semantics.forcing import Strategy, satisfiable

logger = logging.getLogger(__name__)


@dataclass
class Extension:
    formulas: List[Formula]
    assignment: Assignment

    def __contains__(self, f: Formula) -> bool:
        return f in set(self.formulas)


def universe_order(universe: Sequence[Formula]) -> List[Formula]:
    """Deduplicated, by size and then by printed form"""
    return sorted(set(universe), key=lambda f: (size(f), print_atomic(f)))


def maximal_extension(
    gamma: Sequence[Formula],
    universe: Sequence[Formula],
    strategy: Strategy = Strategy.TABLE,
) -> Extension:
    """
    Walk the universe in order and keep each formula whose addition leaves
    the set satisfiable.

    Args:
        gamma: Satisfiable starting set
        universe: Finite formula list, e.g. a construction level
        strategy: Engine used as the consistency oracle

    Returns:
        The extension, with the assignment that is T exactly on the atoms it contains
    """
    current: List[Formula] = list(dict.fromkeys(gamma))
    if not satisfiable(current, strategy).satisfiable:
        raise InputUnsatisfiable()
    members: Set[Formula] = set(current)
    for stage, candidate in enumerate(universe_order(universe)):
        if candidate in members:
            continue
        if satisfiable(current + [candidate], strategy).satisfiable:
            current.append(candidate)
            members.add(candidate)
        logger.debug("stage %d: %s %s", stage, "kept" if candidate in members else "skipped", candidate)
    names = atoms_of(current + list(universe))
    fallback = satisfiable(current, strategy).witness
    values: Dict[str, bool] = {}
    for name in names:
        if Atom(name) in members or Not(Atom(name)) in members:
            values[name] = Atom(name) in members
        else:
            values[name] = fallback.value(name)
    return Extension(current, Assignment.of(values, names))


def check_extension_properties(extension: Sequence[Formula], universe: Sequence[Formula]) -> List[str]:
    """
    Check negation completeness and the implication closure conditions on
    the finite universe.

    Returns:
        Violations, one line each; empty when every property holds
    """
    members = set(extension)
    inside = set(universe)
    violations: List[str] = []
    if not satisfiable(list(members), Strategy.TABLE).satisfiable:
        violations.append("extension is not consistent")
    for b in universe_order(universe):
        negation = Not(b)
        if negation in inside:
            if b not in members and negation not in members:
                violations.append(f"(ii) neither {b} nor its negation")
            if b in members and negation in members:
                violations.append(f"(ii) both {b} and its negation")
    for f in universe_order(universe):
        if not isinstance(f, Implies):
            continue
        a, b = f.left, f.right
        if b in members and f not in members:
            violations.append(f"(iii) {b} present but {f} missing")
        if a in inside and a not in members and f not in members:
            violations.append(f"(iv) {a} absent but {f} missing")
        if a in members and b in inside and b not in members and f in members:
            violations.append(f"(v) {f} present with {a} present and {b} absent")
    return violations
