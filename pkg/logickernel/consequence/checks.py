"""
Property checks for consequence operators on sampled inputs
"""

import logging
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple

from logickernel.consequence.operators import OperatorTable
from logickernel.consequence.universe import Subset, format_subset

logger = logging.getLogger(__name__)


@dataclass
class AxiomCheck:
    name: str
    passed: bool = True
    counterexample: Optional[Tuple[Subset, ...]] = None

    def fail(self, *subsets: Subset) -> None:
        if self.passed:
            self.passed = False
            self.counterexample = tuple(subsets)

    def __str__(self) -> str:
        if self.passed:
            return f"{self.name}: pass"
        shown = " ".join(format_subset(s) for s in self.counterexample)
        return f"{self.name}: fail {shown}"


@dataclass
class OperatorReport:
    operator: str
    checks: List[AxiomCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def violations(self) -> List[str]:
        return [c.name for c in self.checks if not c.passed]

    def __str__(self) -> str:
        return "\n".join(str(c) for c in self.checks)


def check_operator_axioms(op: OperatorTable, samples: Iterable[Iterable]) -> OperatorReport:
    """
    Check op on every sample and every ordered pair of samples.

    Args:
        op: Operator with a procedure (checks evaluate op on derived sets)
        samples: Input subsets of op.universe

    Returns:
        OperatorReport with one entry per property, each with the first counterexample
    """
    inputs = [frozenset(s) for s in samples]
    universe = op.universe.members
    within = AxiomCheck("within-universe")
    extensive = AxiomCheck("extensivity")
    idempotent = AxiomCheck("idempotence")
    finite = AxiomCheck("finite-character")
    monotone = AxiomCheck("monotonicity")
    cover = AxiomCheck("cover")
    union = AxiomCheck("union")

    for x in inputs:
        cx = op(x)
        if not cx <= universe:
            within.fail(x)
        if not x <= cx:
            extensive.fail(x)
        if op(cx) != cx:
            idempotent.fail(x)
        support = op.support(x) if op.support is not None else None
        for member in cx:
            d = support[member] if support is not None and member in support else x
            if not d <= x or member not in op(d):
                finite.fail(x, d)
                break

    for a in inputs:
        ca = op(a)
        for b in inputs:
            cb = op(b)
            if a <= b and not ca <= cb:
                monotone.fail(a, b)
            if (a <= cb) != (ca <= cb):
                cover.fail(a, b)
            joined = op(a | b)
            if joined != op(a | cb) or joined != op(ca | cb):
                union.fail(a, b)

    report = OperatorReport(op.name, [within, extensive, idempotent, finite, monotone, cover, union])
    logger.debug("operator %s checked on %d samples: %s", op.name, len(inputs),
                 report.violations() or "no violations")
    return report


@dataclass
class IdempotentReport:
    """Images of the samples against the fixed points among them"""
    images: List[Subset]
    fixed_points: List[Subset]
    images_are_fixed_points: bool
    injective: bool
    identity_on_samples: bool
    collision: Optional[Tuple[Subset, Subset]] = None

    @property
    def consistent(self) -> bool:
        """An injective idempotent operator must act as the identity"""
        return self.images_are_fixed_points and (not self.injective or self.identity_on_samples)


def idempotent_theorems(op: OperatorTable, samples: Optional[Sequence[Iterable]] = None) -> IdempotentReport:
    inputs = [frozenset(s) for s in samples] if samples is not None else op.inputs()
    images: List[Subset] = []
    for x in inputs:
        cx = op(x)
        if cx not in images:
            images.append(cx)
    candidates = list(dict.fromkeys(inputs + images))
    fixed = [y for y in candidates if op(y) == y]
    collision = None
    seen = {}
    for x in inputs:
        cx = op(x)
        if cx in seen and seen[cx] != x:
            collision = (seen[cx], x)
            break
        seen.setdefault(cx, x)
    return IdempotentReport(
        images=images,
        fixed_points=fixed,
        images_are_fixed_points=set(images) == set(fixed),
        injective=collision is None,
        identity_on_samples=all(op(x) == x for x in inputs),
        collision=collision,
    )
