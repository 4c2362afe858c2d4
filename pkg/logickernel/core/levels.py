"""
Counting and enumerating the construction levels L_n
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Optional, Sequence

from logickernel.core.models import Atom, Connective, Formula, Not
from logickernel.errors import CapExceeded, DuplicateAtom, SelfCheckFailed

logger = logging.getLogger(__name__)

# Key layout: ((left * width + right) * 8) + opcode, opcode 0 for atoms
_ATOM = 0
_OPCODES = {
    Connective.NOT: 1,
    Connective.AND: 2,
    Connective.OR: 3,
    Connective.IMPLIES: 4,
    Connective.IFF: 5,
}
_BY_OPCODE = {code: connective for connective, code in _OPCODES.items()}


@dataclass
class LevelEnumeration:
    """Result of enumerate_level"""
    level: int
    count: int
    verified_count: Optional[int] = None
    members: Optional[Iterator[Formula]] = None


class LevelBuilder:
    """Hash-consed construction of L_0, L_1, ... over fixed atoms and connectives"""

    DEFAULT_CAP = 5_000_000

    def __init__(self, atom_names: Sequence[str], connectives: Iterable[Connective], cap: int = DEFAULT_CAP):
        if len(set(atom_names)) != len(atom_names):
            seen = set()
            for name in atom_names:
                if name in seen:
                    raise DuplicateAtom(name)
                seen.add(name)
        self.atom_names = list(atom_names)
        self.connectives = sorted(set(connectives), key=lambda c: _OPCODES[c])
        self.cap = cap
        self._width = cap + len(self.atom_names) + 1
        self._keys: List[int] = []
        self._ids: Dict[int, int] = {}
        self._built: List[List[int]] = []
        self._formulas: Dict[int, Formula] = {}

    @property
    def unary(self) -> int:
        return 1 if Connective.NOT in self.connectives else 0

    @property
    def binary(self) -> List[Connective]:
        return [c for c in self.connectives if c.is_binary]

    def count(self, n: int) -> int:
        """|L_{n+1}| = |atoms| + u|L_n| + b|L_n|^2, with |L_0| = |atoms|"""
        total = len(self.atom_names)
        for _ in range(n):
            total = len(self.atom_names) + self.unary * total + len(self.binary) * total * total
        return total

    def _key(self, opcode: int, left: int, right: int = 0) -> int:
        return (left * self._width + right) * 8 + opcode

    def _generate(self, level: int) -> Iterator[int]:
        for k in range(len(self.atom_names)):
            yield self._key(_ATOM, k)
        if level == 0:
            return
        below = self._level_ids(level - 1)
        if self.unary:
            for i in below:
                yield self._key(_OPCODES[Connective.NOT], i)
        for connective in self.binary:
            code = _OPCODES[connective]
            for i, j in itertools.product(below, repeat=2):
                yield self._key(code, i, j)

    def _intern(self, key: int) -> int:
        node_id = self._ids.get(key)
        if node_id is None:
            node_id = len(self._keys)
            self._keys.append(key)
            self._ids[key] = node_id
        return node_id

    def _level_ids(self, level: int) -> List[int]:
        while len(self._built) <= level:
            current = len(self._built)
            ids: Dict[int, None] = {}
            for key in self._generate(current):
                ids.setdefault(self._intern(key), None)
            self._built.append(list(ids))
            logger.debug("level %d interned with %d members", current, len(ids))
        return self._built[level]

    def explicit_count(self, n: int) -> int:
        """Count L_n by generating every member and removing duplicates"""
        if n <= len(self._built) - 1:
            return len(self._built[n])
        return len(set(self._generate(n)))

    def members(self, n: int) -> Iterator[Formula]:
        requested = self.count(n)
        if requested > self.cap:
            raise CapExceeded(requested, self.cap)
        return self._members(n)

    def _members(self, n: int) -> Iterator[Formula]:
        seen = set()
        for key in self._generate(n):
            if key in seen:
                continue
            seen.add(key)
            yield self._decode(key)

    def _decode(self, key: int) -> Formula:
        opcode = key % 8
        pair = key // 8
        left, right = divmod(pair, self._width)
        if opcode == _ATOM:
            return Atom(self.atom_names[left])
        connective = _BY_OPCODE[opcode]
        if connective is Connective.NOT:
            return Not(self._formula(left))
        return connective.node_type(self._formula(left), self._formula(right))

    def _formula(self, node_id: int) -> Formula:
        f = self._formulas.get(node_id)
        if f is None:
            f = self._decode(self._keys[node_id])
            self._formulas[node_id] = f
        return f


def level_count(atom_names: Sequence[str], connectives: Iterable[Connective], n: int) -> int:
    return LevelBuilder(atom_names, connectives).count(n)


def level_members(
    atom_names: Sequence[str],
    connectives: Iterable[Connective],
    n: int,
    cap: int = LevelBuilder.DEFAULT_CAP,
) -> Iterator[Formula]:
    """Deduplicated members of L_n; CapExceeded when |L_n| is above the cap"""
    return LevelBuilder(atom_names, connectives, cap).members(n)


def enumerate_level(
    atom_names: Sequence[str],
    connectives: Iterable[Connective],
    n: int,
    cap: int = LevelBuilder.DEFAULT_CAP,
    iterate: bool = False,
    verify: bool = True,
) -> LevelEnumeration:
    """
    Size of L_n, checked by explicit enumeration when it fits the cap.

    Args:
        atom_names: Distinct atoms of L_0
        connectives: Connectives allowed in the construction
        n: Level
        cap: Largest level that is enumerated explicitly
        iterate: Also hand back an iterator over the members
        verify: Run the explicit count below the cap

    Returns:
        LevelEnumeration with the recurrence count
    """
    builder = LevelBuilder(atom_names, connectives, cap)
    count = builder.count(n)
    result = LevelEnumeration(level=n, count=count)
    if count > cap:
        if iterate:
            raise CapExceeded(count, cap, partial=result)
        logger.warning("L_%d has %d members, above the enumeration cap %d", n, count, cap)
        return result
    if verify:
        result.verified_count = builder.explicit_count(n)
        if result.verified_count != count:
            raise SelfCheckFailed(f"L_{n} count", f"explicit {result.verified_count}, recurrence {count}")
    if iterate:
        result.members = builder.members(n)
    return result
