"""
Logic circuit components
"""

from .netlist import GateKind, Gate, Netlist, format_netlist, parse_netlist
from .compiler import CircuitCompiler, compile_circuit, netlist_from_formulas, half_adder
from .simulator import DEFAULT_INPUT_CAP, simulate, first_difference, equivalent_netlists

__all__ = [
    "GateKind",
    "Gate",
    "Netlist",
    "format_netlist",
    "parse_netlist",
    "CircuitCompiler",
    "compile_circuit",
    "netlist_from_formulas",
    "half_adder",
    "DEFAULT_INPUT_CAP",
    "simulate",
    "first_difference",
    "equivalent_netlists",
]
