"""
Valid consequence and satisfiability by the forcing method, with a table fallback
"""

import itertools
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

from logickernel.core.models import Formula, Not
from logickernel.core.syntax import atoms, atoms_of
from logickernel.semantics.assignments import (
    Assignment, canonical_assignments, evaluate_in, evaluate_partial, truth_letter,
)

logger = logging.getLogger(__name__)


class Strategy(Enum):
    FORCING = "forcing"
    TABLE = "table"


class ConsequenceStatus(Enum):
    VALID = "valid"
    INVALID = "invalid"


class SatStatus(Enum):
    SATISFIABLE = "satisfiable"
    UNSATISFIABLE = "unsatisfiable"


@dataclass(frozen=True)
class ConsequenceVerdict:
    status: ConsequenceStatus
    witness: Optional[Assignment] = None
    trace: Tuple[str, ...] = ()

    @property
    def valid(self) -> bool:
        return self.status is ConsequenceStatus.VALID


@dataclass(frozen=True)
class SatVerdict:
    status: SatStatus
    witness: Optional[Assignment] = None
    trace: Tuple[str, ...] = ()

    @property
    def satisfiable(self) -> bool:
        return self.status is SatStatus.SATISFIABLE


@dataclass(frozen=True)
class Constraint:
    formula: Formula
    required: bool
    reason: str
    atoms: Tuple[str, ...]


@dataclass
class _Search:
    trace: List[str] = field(default_factory=list)

    def record(self, atom: str, value: bool, reason: str) -> None:
        line = f"step {len(self.trace) + 1}: set v({atom})={truth_letter(value)} because {reason}"
        self.trace.append(line)
        logger.debug(line)


class ForcingEngine:
    """
    Backtracking search that fixes the required values of its constraints
    and propagates every atom value they force. When nothing is forced it
    splits on the first unassigned atom of the open constraint with the
    fewest unassigned atoms, trying T before F.
    """

    def __init__(self, constraints: Sequence[Constraint]):
        self.constraints = list(constraints)
        self.order = atoms_of([c.formula for c in self.constraints])

    def run(self) -> Tuple[Optional[Assignment], List[str]]:
        """
        Returns:
            A total assignment meeting every constraint (free atoms set T), or None, and the trace
        """
        search = _Search()
        found = self._solve(search, {}, split=False)
        if found is None:
            return None, search.trace
        values = {name: found.get(name, True) for name in self.order}
        return Assignment.of(values, self.order), search.trace

    def _solve(self, search: _Search, values: Dict[str, bool], split: bool) -> Optional[Dict[str, bool]]:
        values = dict(values)
        if not self._propagate(search, values, split):
            return None
        open_constraints = [c for c in self.constraints if evaluate_partial(c.formula, values) is None]
        if not open_constraints:
            return values
        target = min(
            enumerate(open_constraints),
            key=lambda item: (sum(1 for a in item[1].atoms if a not in values), item[0]),
        )[1]
        atom = next(a for a in target.atoms if a not in values)
        for value in (True, False):
            search.record(atom, value, "case-split")
            branch = dict(values)
            branch[atom] = value
            found = self._solve(search, branch, split=True)
            if found is not None:
                return found
        return None

    def _propagate(self, search: _Search, values: Dict[str, bool], split: bool) -> bool:
        """Apply forced values until none remain; False on a conflict"""
        changed = True
        while changed:
            changed = False
            for c in self.constraints:
                current = evaluate_partial(c.formula, values)
                if current is not None:
                    if current != c.required:
                        return False
                    continue
                free = [a for a in c.atoms if a not in values]
                forced = self._forced_values(c, values, free)
                if forced is None:
                    return False
                for atom, value in forced.items():
                    values[atom] = value
                    search.record(atom, value, "forced" if split else c.reason)
                    changed = True
                if changed:
                    break
        return True

    @staticmethod
    def _forced_values(c: Constraint, values: Dict[str, bool], free: List[str]) -> Optional[Dict[str, bool]]:
        """Values shared by every completion meeting c; None if no completion does"""
        agreed: Optional[List[Optional[bool]]] = None
        trial = dict(values)
        for combo in itertools.product((True, False), repeat=len(free)):
            trial.update(zip(free, combo))
            if evaluate_in(c.formula, trial) != c.required:
                continue
            if agreed is None:
                agreed = list(combo)
            else:
                agreed = [v if v == w else None for v, w in zip(agreed, combo)]
        if agreed is None:
            return None
        return {a: v for a, v in zip(free, agreed) if v is not None}


def _constraint(f: Formula, required: bool, reason: str) -> Constraint:
    return Constraint(f, required, reason, tuple(atoms(f)))


def valid_consequence(
    premises: Sequence[Formula],
    b: Formula,
    strategy: Strategy = Strategy.FORCING,
) -> ConsequenceVerdict:
    """
    Decide premises |= b.

    Args:
        premises: Premise formulas, possibly none
        b: Conclusion
        strategy: FORCING assumes v(b)=F and propagates; TABLE scans every row

    Returns:
        ConsequenceVerdict, with a witness satisfying the premises and falsifying b when invalid
    """
    if strategy is Strategy.TABLE:
        return _consequence_by_table(premises, b)
    constraints = [_constraint(b, False, "goal-false")]
    constraints += [_constraint(p, True, "premise-true") for p in premises]
    engine = ForcingEngine(constraints)
    witness, trace = engine.run()
    if witness is None:
        return ConsequenceVerdict(ConsequenceStatus.VALID, trace=tuple(trace))
    return ConsequenceVerdict(ConsequenceStatus.INVALID, witness, tuple(trace))


def _consequence_by_table(premises: Sequence[Formula], b: Formula) -> ConsequenceVerdict:
    names = atoms_of(list(premises) + [b])
    for a in canonical_assignments(names):
        values = a.as_dict()
        if not evaluate_in(b, values) and all(evaluate_in(p, values) for p in premises):
            return ConsequenceVerdict(ConsequenceStatus.INVALID, a)
    return ConsequenceVerdict(ConsequenceStatus.VALID)


def satisfiable(fs: Sequence[Formula], strategy: Strategy = Strategy.FORCING) -> SatVerdict:
    """A witness making every formula T, or Unsatisfiable; doubles as the consistency verdict"""
    if strategy is Strategy.TABLE:
        names = atoms_of(list(fs))
        for a in canonical_assignments(names):
            values = a.as_dict()
            if all(evaluate_in(f, values) for f in fs):
                return SatVerdict(SatStatus.SATISFIABLE, a)
        return SatVerdict(SatStatus.UNSATISFIABLE)
    engine = ForcingEngine([_constraint(f, True, "premise-true") for f in fs])
    witness, trace = engine.run()
    if witness is None:
        return SatVerdict(SatStatus.UNSATISFIABLE, trace=tuple(trace))
    return SatVerdict(SatStatus.SATISFIABLE, witness, tuple(trace))


def consequence_by_refutation(
    premises: Sequence[Formula],
    b: Formula,
    strategy: Strategy = Strategy.FORCING,
) -> ConsequenceVerdict:
    """premises |= b iff premises together with ~b are unsatisfiable"""
    verdict = satisfiable(list(premises) + [Not(b)], strategy)
    if verdict.satisfiable:
        return ConsequenceVerdict(ConsequenceStatus.INVALID, verdict.witness, verdict.trace)
    return ConsequenceVerdict(ConsequenceStatus.VALID, trace=verdict.trace)
