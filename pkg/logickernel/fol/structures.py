"""
Finite structures: validation, the structure-v1 document and enumeration
"""

import itertools
import json
import logging
import string
from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, Iterable, Iterator, List, Mapping, Sequence, Tuple, Union

from logickernel.errors import ArityMismatch, CapExceeded, DomainViolation, SchemaError, UnknownSymbol
from logickernel.fol.syntax import constants, predicates

logger = logging.getLogger(__name__)

SCHEMA = "structure-v1"
ELEMENT_PREFIX = "@"

RelationKey = Tuple[str, int]
Relation = FrozenSet[Tuple[str, ...]]


@dataclass(frozen=True)
class Structure:
    """Domain, constant interpretations and relations keyed by (name, arity)"""
    domain: Tuple[str, ...]
    constants: Mapping[str, str] = field(default_factory=dict)
    relations: Mapping[RelationKey, Relation] = field(default_factory=dict)

    def __post_init__(self):
        if not self.domain:
            raise DomainViolation("domain must be nonempty")
        members = set(self.domain)
        if len(members) != len(self.domain):
            raise DomainViolation("domain lists an element twice")
        for name, element in self.constants.items():
            if element not in members:
                raise DomainViolation(f"constant {name} denotes {element}, outside the domain")
        for (name, arity), tuples in self.relations.items():
            for t in tuples:
                if len(t) != arity:
                    raise ArityMismatch(name, arity, len(t))
                for element in t:
                    if element not in members:
                        raise DomainViolation(f"{name} holds of {element}, outside the domain")

    def element(self, constant: str) -> str:
        """Denotation of a constant; minted names @d denote d"""
        if constant.startswith(ELEMENT_PREFIX):
            return constant[len(ELEMENT_PREFIX):]
        try:
            return self.constants[constant]
        except KeyError:
            raise UnknownSymbol(constant) from None

    def relation(self, name: str, arity: int) -> Relation:
        try:
            return self.relations[(name, arity)]
        except KeyError:
            raise UnknownSymbol(f"{name}/{arity}") from None

    def __str__(self) -> str:
        parts = [f"D={{{','.join(self.domain)}}}"]
        parts += [f"{name}={value}" for name, value in sorted(self.constants.items())]
        for (name, arity), tuples in sorted(self.relations.items()):
            shown = sorted(t[0] if arity == 1 else "(" + ",".join(t) + ")" for t in tuples)
            parts.append(f"{name}'={{{','.join(shown)}}}")
        return ", ".join(parts)


def _relation_key(text: str) -> RelationKey:
    name, sep, arity = text.partition("/")
    if not sep or not name or not arity.isdigit():
        raise SchemaError(f"relation key {text!r} is not Name/arity")
    return name, int(arity)


def load_structure(doc: Union[str, Mapping[str, Any]]) -> Structure:
    """
    Build a Structure from a structure-v1 document.

    Args:
        doc: JSON text or the decoded object

    Raises:
        SchemaError, DomainViolation, ArityMismatch
    """
    if isinstance(doc, str):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as e:
            raise SchemaError(f"not JSON: {e.msg}") from None
    if not isinstance(doc, Mapping):
        raise SchemaError("structure document must be an object")
    schema = doc.get("schema", SCHEMA)
    if schema != SCHEMA:
        raise SchemaError(f"unsupported schema {schema!r}")
    unknown = set(doc) - {"schema", "domain", "constants", "relations"}
    if unknown:
        raise SchemaError(f"unknown fields {sorted(unknown)}")
    domain = doc.get("domain")
    if not isinstance(domain, list) or not all(isinstance(d, str) for d in domain):
        raise SchemaError("domain must be a list of strings")
    consts = doc.get("constants", {})
    if not isinstance(consts, Mapping) or not all(isinstance(v, str) for v in consts.values()):
        raise SchemaError("constants must map names to element ids")
    raw = doc.get("relations", {})
    if not isinstance(raw, Mapping):
        raise SchemaError("relations must be an object")
    relations: Dict[RelationKey, Relation] = {}
    for key, tuples in raw.items():
        if not isinstance(tuples, list) or not all(isinstance(t, list) for t in tuples):
            raise SchemaError(f"relation {key} must be a list of tuples")
        relations[_relation_key(key)] = frozenset(tuple(str(e) for e in t) for t in tuples)
    return Structure(tuple(domain), dict(consts), relations)


def dump_structure(structure: Structure) -> str:
    doc = {
        "schema": SCHEMA,
        "domain": list(structure.domain),
        "constants": dict(sorted(structure.constants.items())),
        "relations": {
            f"{name}/{arity}": [list(t) for t in sorted(tuples)]
            for (name, arity), tuples in sorted(structure.relations.items())
        },
    }
    return json.dumps(doc, indent=2)


@dataclass(frozen=True)
class Signature:
    predicates: Tuple[RelationKey, ...] = ()
    constants: Tuple[str, ...] = ()

    @classmethod
    def of(cls, formulas: Iterable) -> "Signature":
        preds: Dict[RelationKey, None] = {}
        consts: Dict[str, None] = {}
        for f in formulas:
            for key in predicates(f):
                preds.setdefault(key, None)
            for name in constants(f):
                consts.setdefault(name, None)
        return cls(tuple(preds), tuple(consts))


def domain_ids(size: int) -> Tuple[str, ...]:
    """a, b, c, ... then a1, b1, ..."""
    letters = string.ascii_lowercase
    return tuple(letters[k % 26] + (str(k // 26) if k >= 26 else "") for k in range(size))


def interpretation_count(signature: Signature, size: int) -> int:
    count = size ** len(signature.constants)
    for _, arity in signature.predicates:
        count *= 2 ** (size ** arity)
    return count


def _subsets(tuples: Sequence[Tuple[str, ...]]) -> Iterator[Relation]:
    """Smaller relations first; equal sizes in lexicographic order of their tuples"""
    for k in range(len(tuples) + 1):
        for chosen in itertools.combinations(tuples, k):
            yield frozenset(chosen)


class StructureEnumerator:
    """All interpretations of a signature over the domain of a given size, in a fixed order"""

    DEFAULT_CAP = 1_048_576

    def __init__(self, signature: Signature, cap: int = DEFAULT_CAP):
        self.signature = signature
        self.cap = cap

    def structures(self, size: int) -> Iterator[Structure]:
        count = interpretation_count(self.signature, size)
        if count > self.cap:
            raise CapExceeded(count, self.cap)
        logger.debug("enumerating %d interpretations over %d elements", count, size)
        return self._generate(size)

    def _generate(self, size: int) -> Iterator[Structure]:
        domain = domain_ids(size)
        spaces: List[List[Relation]] = [
            list(_subsets(list(itertools.product(domain, repeat=arity))))
            for _, arity in self.signature.predicates
        ]
        for images in itertools.product(domain, repeat=len(self.signature.constants)):
            consts = dict(zip(self.signature.constants, images))
            for chosen in itertools.product(*spaces):
                yield Structure(domain, consts, dict(zip(self.signature.predicates, chosen)))


def enumerate_structures(signature: Signature, size: int,
                         cap: int = StructureEnumerator.DEFAULT_CAP) -> Iterator[Structure]:
    """
    Constant images vary slowest, then the relations in signature order;
    each relation runs through its subsets by size, then lexicographically.

    Raises:
        CapExceeded: more interpretations than cap
    """
    return StructureEnumerator(signature, cap).structures(size)
