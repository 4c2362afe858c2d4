"""
Netlist simulation and exhaustive equivalence
"""

import logging
from typing import Dict, Mapping, Optional, Union

from logickernel.circuits.netlist import GateKind, Netlist
from logickernel.errors import CapExceeded, MissingInput, PortMismatch
from logickernel.semantics.assignments import canonical_assignments

logger = logging.getLogger(__name__)

DEFAULT_INPUT_CAP = 20

Signal = Union[bool, int]


def simulate(netlist: Netlist, values: Mapping[str, Signal]) -> Dict[str, bool]:
    """
    Evaluate every gate in order.

    Args:
        netlist: The circuit
        values: A value per input port; 1/0 are read as current/no current

    Returns:
        Output name to value, in output order
    """
    wires: Dict[str, bool] = {}
    for name in netlist.inputs:
        if name not in values:
            raise MissingInput(name)
        wires[name] = bool(values[name])
    for gate in netlist.gates:
        signals = [wires[ref] for ref in gate.inputs]
        if gate.kind is GateKind.NOT:
            wires[gate.id] = not signals[0]
        elif gate.kind is GateKind.AND:
            wires[gate.id] = signals[0] and signals[1]
        else:
            wires[gate.id] = signals[0] or signals[1]
    return {name: wires[ref] for name, ref in netlist.outputs}


def first_difference(n1: Netlist, n2: Netlist,
                     cap: int = DEFAULT_INPUT_CAP) -> Optional[Dict[str, bool]]:
    """
    The first input vector, in table order, on which the two netlists disagree.

    Raises:
        PortMismatch: different input or output names
        CapExceeded: more than cap inputs
    """
    if set(n1.inputs) != set(n2.inputs):
        raise PortMismatch(f"inputs {sorted(n1.inputs)} and {sorted(n2.inputs)} differ")
    if set(n1.output_names) != set(n2.output_names):
        raise PortMismatch(f"outputs {sorted(n1.output_names)} and {sorted(n2.output_names)} differ")
    if len(n1.inputs) > cap:
        raise CapExceeded(2 ** len(n1.inputs), 2 ** cap)
    logger.debug("comparing netlists over %d input vectors", 2 ** len(n1.inputs))
    for a in canonical_assignments(n1.inputs):
        values = a.as_dict()
        if simulate(n1, values) != simulate(n2, values):
            return values
    return None


def equivalent_netlists(n1: Netlist, n2: Netlist, cap: int = DEFAULT_INPUT_CAP) -> bool:
    return first_difference(n1, n2, cap) is None
