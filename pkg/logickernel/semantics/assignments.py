"""
Assignments, valuation and truth tables
"""

from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from logickernel.core.models import And, Atom, Formula, Iff, Implies, Not, Or
from logickernel.core.syntax import atoms_of
from logickernel.errors import DuplicateAtom, UncoveredAtom


def truth_letter(value: bool) -> str:
    return "T" if value else "F"


@dataclass(frozen=True)
class Assignment:
    """Truth values aligned with an ordered list of distinct atoms"""
    atoms: Tuple[str, ...]
    values: Tuple[bool, ...]

    def __post_init__(self):
        if len(self.atoms) != len(self.values):
            raise ValueError("atoms and values differ in length")
        _require_distinct(self.atoms)

    @classmethod
    def of(cls, mapping: Mapping[str, bool], order: Optional[Sequence[str]] = None) -> "Assignment":
        names = tuple(order) if order is not None else tuple(mapping)
        return cls(names, tuple(bool(mapping[name]) for name in names))

    def value(self, atom: str) -> bool:
        try:
            return self.values[self.atoms.index(atom)]
        except ValueError:
            raise UncoveredAtom(atom) from None

    def as_dict(self) -> Dict[str, bool]:
        return dict(zip(self.atoms, self.values))

    def __str__(self) -> str:
        return ", ".join(f"v({a})={truth_letter(v)}" for a, v in zip(self.atoms, self.values))


def _require_distinct(names: Sequence[str]) -> None:
    seen = set()
    for name in names:
        if name in seen:
            raise DuplicateAtom(name)
        seen.add(name)


def canonical_assignments(atoms: Sequence[str]) -> Iterator[Assignment]:
    """
    All 2^n assignments in table order: in row r, atom j is T iff
    bit (n-1-j) of r is 0, so the first atom is T on the first half.
    """
    names = tuple(atoms)
    _require_distinct(names)
    n = len(names)
    for r in range(2 ** n):
        yield Assignment(names, tuple(not (r >> (n - 1 - j)) & 1 for j in range(n)))


def evaluate(f: Formula, a: Assignment) -> bool:
    """The unique valuation extending a, by the connective tables"""
    return evaluate_in(f, a.as_dict())


def evaluate_in(f: Formula, values: Mapping[str, bool]) -> bool:
    if isinstance(f, Atom):
        try:
            return values[f.name]
        except KeyError:
            raise UncoveredAtom(f.name) from None
    if isinstance(f, Not):
        return not evaluate_in(f.child, values)
    if isinstance(f, And):
        return evaluate_in(f.left, values) and evaluate_in(f.right, values)
    if isinstance(f, Or):
        return evaluate_in(f.left, values) or evaluate_in(f.right, values)
    if isinstance(f, Implies):
        return (not evaluate_in(f.left, values)) or evaluate_in(f.right, values)
    if isinstance(f, Iff):
        return evaluate_in(f.left, values) == evaluate_in(f.right, values)
    raise TypeError(f"cannot evaluate {type(f).__name__}")


def evaluate_partial(f: Formula, values: Mapping[str, bool]) -> Optional[bool]:
    """Three-valued evaluation; None when unassigned atoms leave the value open"""
    if isinstance(f, Atom):
        return values.get(f.name)
    if isinstance(f, Not):
        inner = evaluate_partial(f.child, values)
        return None if inner is None else not inner
    left = evaluate_partial(f.left, values)
    right = evaluate_partial(f.right, values)
    if isinstance(f, And):
        if left is False or right is False:
            return False
        return True if left and right else None
    if isinstance(f, Or):
        if left or right:
            return True
        return False if left is False and right is False else None
    if isinstance(f, Implies):
        if left is False or right is True:
            return True
        return False if left is True and right is False else None
    if isinstance(f, Iff):
        if left is None or right is None:
            return None
        return left == right
    raise TypeError(f"cannot evaluate {type(f).__name__}")


@dataclass
class TruthTable:
    atoms: List[str]
    columns: List[Formula]
    rows: List[Tuple[bool, ...]] = field(default_factory=list)

    def column(self, k: int) -> List[bool]:
        return [row[k] for row in self.rows]

    def assignment(self, r: int) -> Assignment:
        return Assignment(tuple(self.atoms), tuple(self.rows[r][: len(self.atoms)]))


def truth_table(fs: Sequence[Formula]) -> TruthTable:
    """Table over the atoms of fs in first-occurrence order; atom columns come first in each row"""
    names = atoms_of(list(fs))
    table = TruthTable(atoms=names, columns=list(fs))
    for a in canonical_assignments(names):
        values = a.as_dict()
        table.rows.append(a.values + tuple(evaluate_in(f, values) for f in fs))
    return table


def format_table(table: TruthTable) -> str:
    header = " | ".join(table.atoms + [str(f) for f in table.columns])
    lines = [header]
    for row in table.rows:
        lines.append(" | ".join(truth_letter(v) for v in row))
    return "\n".join(lines)
