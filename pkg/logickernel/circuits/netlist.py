"""
Gate netlists and their text format
"""

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Tuple

from logickernel.errors import BadNetlist, ParseError


class GateKind(Enum):
    NOT = "NOT"
    AND = "AND"
    OR = "OR"

    @property
    def fan_in(self) -> int:
        return 1 if self is GateKind.NOT else 2


@dataclass(frozen=True)
class Gate:
    id: str
    kind: GateKind
    inputs: Tuple[str, ...]


@dataclass(frozen=True)
class Netlist:
    """
    Input ports, gates in evaluation order and named outputs. A gate may only
    read inputs and earlier gates, so every netlist is acyclic.
    """
    inputs: Tuple[str, ...]
    gates: Tuple[Gate, ...] = ()
    outputs: Tuple[Tuple[str, str], ...] = ()

    def __post_init__(self):
        known = set()
        for name in self.inputs:
            if name in known:
                raise BadNetlist(f"input {name} declared twice")
            known.add(name)
        for gate in self.gates:
            if gate.id in known:
                raise BadNetlist(f"name {gate.id} defined twice")
            if len(gate.inputs) != gate.kind.fan_in:
                raise BadNetlist(f"{gate.kind.value} gate {gate.id} takes {gate.kind.fan_in} inputs")
            for ref in gate.inputs:
                if ref not in known:
                    raise BadNetlist(f"gate {gate.id} reads {ref}, which is not defined before it")
            known.add(gate.id)
        names = set()
        for name, ref in self.outputs:
            if name in names:
                raise BadNetlist(f"output {name} declared twice")
            names.add(name)
            if ref not in known:
                raise BadNetlist(f"output {name} reads undefined {ref}")

    @property
    def output_names(self) -> Tuple[str, ...]:
        return tuple(name for name, _ in self.outputs)

    def gate_counts(self) -> Dict[GateKind, int]:
        counts = {kind: 0 for kind in GateKind}
        for gate in self.gates:
            counts[gate.kind] += 1
        return counts


INPUT_LINE = re.compile(r"^in\s+([A-Za-z][A-Za-z0-9_]*)$")
GATE_LINE = re.compile(r"^gate\s+([A-Za-z][A-Za-z0-9_]*)\s*=\s*(NOT|AND|OR)\s+(.+)$")
OUTPUT_LINE = re.compile(r"^out\s+([A-Za-z][A-Za-z0-9_]*)\s*=\s*([A-Za-z][A-Za-z0-9_]*)$")
REF = re.compile(r"^[A-Za-z][A-Za-z0-9_]*$")


def format_netlist(netlist: Netlist) -> str:
    """
    Render a netlist.

    Returns:
        "in A" lines, then "gate g1 = AND A, B" lines, then "out S = g1" lines
    """
    lines = [f"in {name}" for name in netlist.inputs]
    lines += [f"gate {g.id} = {g.kind.value} {', '.join(g.inputs)}" for g in netlist.gates]
    lines += [f"out {name} = {ref}" for name, ref in netlist.outputs]
    return "\n".join(lines) + "\n"


def parse_netlist(text: str) -> Netlist:
    """
    Parse the netlist text format. Blank lines and # comments are skipped.

    Raises:
        ParseError: a malformed line, with its offset
        BadNetlist: the lines parse but do not form a netlist
    """
    inputs: List[str] = []
    gates: List[Gate] = []
    outputs: List[Tuple[str, str]] = []
    offset = 0
    for raw in text.splitlines(keepends=True):
        line = raw.strip()
        if line and not line.startswith("#"):
            match = INPUT_LINE.match(line)
            if match:
                inputs.append(match.group(1))
            elif GATE_LINE.match(line):
                match = GATE_LINE.match(line)
                refs = tuple(ref.strip() for ref in match.group(3).split(","))
                if not all(REF.match(ref) for ref in refs):
                    raise ParseError(offset, f"bad gate inputs {match.group(3)!r}")
                gates.append(Gate(match.group(1), GateKind(match.group(2)), refs))
            elif OUTPUT_LINE.match(line):
                match = OUTPUT_LINE.match(line)
                outputs.append((match.group(1), match.group(2)))
            else:
                raise ParseError(offset, f"expected in, gate or out line, found {line!r}")
        offset += len(raw)
    return Netlist(tuple(inputs), tuple(gates), tuple(outputs))
