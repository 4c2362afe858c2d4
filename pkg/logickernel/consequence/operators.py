"""
Consequence operators S and S_n relative to a finite universe
"""

import logging
from collections import defaultdict, deque
from typing import Callable, Deque, Dict, FrozenSet, Iterable, List, Optional

from logickernel.core.models import And, Formula, Implies
from logickernel.core.syntax import size
from logickernel.consequence.universe import FormulaUniverse, Subset

logger = logging.getLogger(__name__)

Support = Dict[Formula, FrozenSet[Formula]]


def s_axiom(f: Formula) -> Optional[int]:
    """
    Which S axiom f instantiates, if any:
    1 (A&(B&C))->((A&B)&C), 2 ((A&B)&C)->(A&(B&C)), 3 (A&B)->A, 4 (A&B)->B.
    """
    if not isinstance(f, Implies) or not isinstance(f.left, And):
        return None
    left, right = f.left, f.right
    if isinstance(left.right, And) and isinstance(right, And) and isinstance(right.left, And):
        a, b, c = left.left, left.right.left, left.right.right
        if right == And(And(a, b), c):
            return 1
    if isinstance(left.left, And) and isinstance(right, And) and isinstance(right.right, And):
        a, b, c = left.left.left, left.left.right, left.right
        if right == And(a, And(b, c)):
            return 2
    if right == left.left:
        return 3
    if right == left.right:
        return 4
    return None


def axiom_instances(u: FormulaUniverse) -> List[Formula]:
    """Instances of the S axioms lying in u, in universe order"""
    return [f for f in u if s_axiom(f) is not None]


class Saturation:
    """
    Worklist fixpoint of gamma plus the axiom instances under MP inside the
    universe. With a level n, MP only fires on implications of size <= n.
    Each member keeps the gamma members it was derived from.
    """

    def __init__(self, u: FormulaUniverse, level: Optional[int] = None):
        self.universe = u
        self.level = level
        self.axioms = axiom_instances(u)
        self._by_antecedent: Dict[Formula, List[Formula]] = defaultdict(list)
        for f in u:
            if isinstance(f, Implies) and (level is None or size(f) <= level):
                self._by_antecedent[f.left].append(f)

    def run(self, gamma: Iterable[Formula]) -> Support:
        gamma = self.universe.require(gamma)
        support: Support = {}
        queue: Deque[Formula] = deque()

        def add(f: Formula, origin: FrozenSet[Formula]) -> None:
            if f not in support and f in self.universe:
                support[f] = origin
                queue.append(f)

        for f in self.universe:
            if f in gamma:
                add(f, frozenset([f]))
        for f in self.axioms:
            add(f, frozenset())
        rounds = 0
        while queue:
            rounds += 1
            x = queue.popleft()
            if self._fires(x) and x.left in support:
                add(x.right, support[x.left] | support[x])
            for imp in self._by_antecedent.get(x, ()):
                if imp in support:
                    add(imp.right, support[x] | support[imp])
        logger.debug("saturated %d formulas into %d after %d worklist steps",
                     len(gamma), len(support), rounds)
        return support

    def _fires(self, f: Formula) -> bool:
        return isinstance(f, Implies) and (self.level is None or size(f) <= self.level)


def closure_with_support(gamma: Iterable[Formula], u: FormulaUniverse,
                         level: Optional[int] = None) -> Support:
    return Saturation(u, level).run(gamma)


def closure_S(gamma: Iterable[Formula], u: FormulaUniverse) -> Subset:
    """
    S-consequences of gamma within u.

    Raises:
        NotInUniverse: gamma has a member outside u
    """
    return frozenset(closure_with_support(gamma, u))


def closure_Sn(gamma: Iterable[Formula], u: FormulaUniverse, n: int) -> Subset:
    """As closure_S, with MP restricted to implications of size at most n"""
    return frozenset(closure_with_support(gamma, u, n))


class OperatorTable:
    """
    A map on subsets of a universe. Outputs computed by the procedure
    are cached in the table; a table without a procedure answers only
    for its materialized inputs.
    """

    def __init__(self, universe: FormulaUniverse,
                 procedure: Optional[Callable[[Subset], Subset]] = None,
                 name: str = "",
                 support: Optional[Callable[[Subset], Support]] = None):
        self.universe = universe
        self.procedure = procedure
        self.name = name
        self.support = support
        self.table: Dict[Subset, Subset] = {}

    def __call__(self, subset: Iterable[Formula]) -> Subset:
        key = frozenset(subset)
        result = self.table.get(key)
        if result is None:
            if self.procedure is None:
                raise KeyError(f"{self.name or 'operator'} has no entry for this input")
            result = frozenset(self.procedure(key))
            self.table[key] = result
        return result

    def inputs(self) -> List[Subset]:
        return list(self.table)


def s_operator(u: FormulaUniverse) -> OperatorTable:
    saturation = Saturation(u)
    return OperatorTable(u, lambda x: frozenset(saturation.run(x)), "S", saturation.run)


def sn_operator(u: FormulaUniverse, n: int) -> OperatorTable:
    saturation = Saturation(u, n)
    return OperatorTable(u, lambda x: frozenset(saturation.run(x)), f"S_{n}", saturation.run)


def identity_operator(u: FormulaUniverse) -> OperatorTable:
    return OperatorTable(u, lambda x: x, "I")


def empty_operator(u: FormulaUniverse) -> OperatorTable:
    return OperatorTable(u, lambda x: frozenset(), "empty")


def materialize(op: OperatorTable, samples: Iterable[Iterable[Formula]]) -> OperatorTable:
    """Fill the table of op for every sample input and return it"""
    for sample in samples:
        op(sample)
    return op
