"""
Reference list of valid schemata over the formula variables A, B, C
"""

from typing import Dict, Mapping

from logickernel.core.models import Formula
from logickernel.core.parser import parse
from logickernel.core.syntax import instantiate

SCHEMA_TEXT: Dict[int, str] = {
    1: "A -> (B -> A)",
    2: "(A -> (B -> C)) -> ((A -> B) -> (A -> C))",
    3: "(A -> B) -> ((A -> (B -> C)) -> (A -> C))",
    4: "A -> (B -> (A & B))",
    5: "(A & B) -> A",
    6: "(A & B) -> B",
    7: "A -> (A | B)",
    8: "B -> (A | B)",
    9: "(A -> C) -> ((B -> C) -> ((A | B) -> C))",
    10: "(A -> B) -> ((A -> ~B) -> ~A)",
    11: "(A -> B) -> ((B -> A) -> (A <-> B))",
    12: "~~A -> A",
    13: "(A <-> B) -> (A -> B)",
    14: "(A <-> B) -> (B -> A)",
    15: "A -> A",
    16: "(A -> (B -> C)) <-> (B -> (A -> C))",
    17: "(A -> B) -> ((B -> C) -> (A -> C))",
    18: "(A -> (B -> C)) <-> ((A & B) -> C)",
    19: "~A -> (A -> B)",
    20: "(~A -> ~B) <-> (B -> A)",
    21: "(~A -> ~B) -> (B -> A)",
    22: "A <-> A",
    23: "(A <-> B) <-> (B <-> A)",
    24: "((A <-> B) & (B <-> C)) -> (A <-> C)",
    25: "((A & B) & C) <-> (A & (B & C))",
    26: "(A & B) <-> (B & A)",
    27: "(A & (B | C)) <-> ((A & B) | (A & C))",
    28: "(A & A) <-> A",
    29: "(A & (A | B)) <-> A",
    30: "((A | B) | C) <-> (A | (B | C))",
    31: "(A | B) <-> (B | A)",
    32: "(A | (B & C)) <-> ((A | B) & (A | C))",
    33: "(A | A) <-> A",
    34: "(A | (A & B)) <-> A",
    35: "~~A <-> A",
    36: "~(A & ~A)",
    37: "A | ~A",
    38: "~(A | B) <-> (~A & ~B)",
    39: "~(A & B) <-> (~A | ~B)",
    40: "~(A -> B) <-> (A & ~B)",
    41: "(A | B) <-> ~(~A & ~B)",
    42: "(A -> B) <-> ~(A & ~B)",
    43: "(A & B) <-> ~(A -> ~B)",
    44: "(A & B) <-> ~(~A | ~B)",
    45: "(A -> B) <-> (~A | B)",
    46: "(A | B) <-> (~A -> B)",
    47: "(A <-> B) <-> ((A -> B) & (B -> A))",
}

SCHEMATA: Dict[int, Formula] = {k: parse(text) for k, text in SCHEMA_TEXT.items()}


def schema_instance(k: int, mapping: Mapping[str, Formula]) -> Formula:
    """Schema k with its formula variables replaced; unmapped variables stay atoms"""
    return instantiate(SCHEMATA[k], dict(mapping))
