"""
Compilation of {~, &, |} formulas into netlists
"""

import logging
from typing import Dict, List, Mapping, Sequence, Tuple

from logickernel.core.models import And, Atom, Formula, Not, Or, connective_of
from logickernel.core.parser import parse
from logickernel.core.syntax import atoms_of
from logickernel.errors import UnsupportedConnective
from logickernel.circuits.netlist import Gate, GateKind, Netlist

logger = logging.getLogger(__name__)

GATE_KINDS = {Not: GateKind.NOT, And: GateKind.AND, Or: GateKind.OR}


class CircuitCompiler:
    """One gate per distinct compound subformula, children before parents, left before right"""

    GATE_PREFIX = "g"

    def __init__(self):
        self.gates: List[Gate] = []
        self._wires: Dict[Formula, str] = {}

    def wire(self, f: Formula) -> str:
        if isinstance(f, Atom):
            return f.name
        if f in self._wires:
            return self._wires[f]
        kind = GATE_KINDS.get(type(f))
        if kind is None:
            connective = connective_of(f)
            raise UnsupportedConnective(connective.value if connective else type(f).__name__)
        refs = tuple(self.wire(child) for child in f.children())
        gate = Gate(f"{self.GATE_PREFIX}{len(self.gates) + 1}", kind, refs)
        self.gates.append(gate)
        self._wires[f] = gate.id
        return gate.id

    def compile(self, outputs: Sequence[Tuple[str, Formula]], inputs: Sequence[str]) -> Netlist:
        wired = [(name, self.wire(f)) for name, f in outputs]
        netlist = Netlist(tuple(inputs), tuple(self.gates), tuple(wired))
        logger.debug("compiled %d outputs into %d gates", len(wired), len(self.gates))
        return netlist


def netlist_from_formulas(outputs: Mapping[str, Formula]) -> Netlist:
    """
    Compile several named outputs over shared inputs; inputs are the atoms in
    first-occurrence order across the outputs, and equal subformulas share a gate.

    Raises:
        UnsupportedConnective: a formula uses -> or <->
    """
    inputs = atoms_of(list(outputs.values()))
    return CircuitCompiler().compile(list(outputs.items()), inputs)


def compile_circuit(f: Formula, output: str = "OUT") -> Netlist:
    """Single-output netlist for f; callers reduce -> and <-> first (reduce_nf or fdnf)"""
    return netlist_from_formulas({output: f})


def half_adder() -> Netlist:
    """S = (A | B) & ~(A & B) and carry C = A & B; the carry reuses the sum's and-gate"""
    return netlist_from_formulas({
        "S": parse("(A | B) & (~(A & B))"),
        "C": parse("A & B"),
    })
