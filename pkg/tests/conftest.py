"""
Shared fixtures: parse helpers and a seeded generator of small formulas
"""

import random
from typing import Callable, List, Sequence

import pytest

from logickernel.core import And, Atom, Formula, Iff, Implies, Not, Or, parse
from logickernel.fol import parse_pd

BINARY = (And, Or, Implies, Iff)


class FormulaGenerator:
    """Random propositional formulas over a fixed atom list"""

    def __init__(self, seed: int = 20240917):
        self.rng = random.Random(seed)

    def formula(self, atoms: Sequence[str] = ("P", "Q", "R"), depth: int = 3,
                kinds: Sequence[type] = (Not,) + BINARY) -> Formula:
        if depth == 0 or self.rng.random() < 0.25:
            return Atom(self.rng.choice(list(atoms)))
        kind = self.rng.choice(list(kinds))
        if kind is Not:
            return Not(self.formula(atoms, depth - 1, kinds))
        return kind(self.formula(atoms, depth - 1, kinds), self.formula(atoms, depth - 1, kinds))

    def sample(self, count: int, **options) -> List[Formula]:
        return [self.formula(**options) for _ in range(count)]


@pytest.fixture
def gen() -> FormulaGenerator:
    return FormulaGenerator()


@pytest.fixture
def p() -> Callable[[str], Formula]:
    return parse


@pytest.fixture
def pd() -> Callable[[str], Formula]:
    return parse_pd


def fs(*texts: str) -> List[Formula]:
    return [parse(t) for t in texts]
