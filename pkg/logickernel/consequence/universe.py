"""
Finite formula universes and subset literals
"""

from typing import Dict, FrozenSet, Iterable, Iterator, Sequence, Tuple

from logickernel.core.levels import LevelBuilder, level_members
from logickernel.core.models import Connective, Formula
from logickernel.core.parser import parse
from logickernel.core.printer import print_atomic
from logickernel.core.syntax import size
from logickernel.errors import NotInUniverse

Subset = FrozenSet[Formula]


class FormulaUniverse:
    """Deduplicated formula list closed under subformulas"""

    def __init__(self, formulas: Iterable[Formula]):
        ordered: Dict[Formula, None] = {}
        for f in formulas:
            ordered.setdefault(f, None)
        self.formulas: Tuple[Formula, ...] = tuple(ordered)
        self._members = frozenset(self.formulas)

    @classmethod
    def from_formulas(cls, formulas: Iterable[Formula]) -> "FormulaUniverse":
        """The given formulas together with all their subformulas, smallest first"""
        closed: Dict[Formula, None] = {}
        for f in formulas:
            for node in f.walk():
                closed.setdefault(node, None)
        return cls(sorted(closed, key=lambda f: (size(f), print_atomic(f))))

    def __contains__(self, f: Formula) -> bool:
        return f in self._members

    def __iter__(self) -> Iterator[Formula]:
        return iter(self.formulas)

    def __len__(self) -> int:
        return len(self.formulas)

    @property
    def members(self) -> Subset:
        return self._members

    def require(self, subset: Iterable[Formula]) -> Subset:
        """The subset as a frozenset; NotInUniverse for a stray formula"""
        result = frozenset(subset)
        for f in result:
            if f not in self._members:
                raise NotInUniverse(f)
        return result


def formula_universe(atom_names: Sequence[str], connectives: Iterable[Connective], max_size: int,
                     cap: int = LevelBuilder.DEFAULT_CAP) -> FormulaUniverse:
    """All formulas over the atoms and connectives of size at most max_size"""
    return FormulaUniverse(level_members(atom_names, connectives, max_size, cap))


def parse_subset(text: str) -> Subset:
    """One formula per line; blank lines and # comments are skipped"""
    found = []
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            found.append(parse(line))
    return frozenset(found)


def format_subset(subset: Iterable[Formula]) -> str:
    return "{" + ", ".join(sorted(print_atomic(f) for f in subset)) + "}"
