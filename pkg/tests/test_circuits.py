from pathlib import Path

import pytest

from logickernel.circuits import (
    Gate, GateKind, Netlist, compile_circuit, equivalent_netlists, first_difference, format_netlist,
    half_adder, netlist_from_formulas, parse_netlist, simulate,
)
from logickernel.core import And, Not, Or, parse
from logickernel.errors import BadNetlist, CapExceeded, MissingInput, ParseError, PortMismatch, UnsupportedConnective
from logickernel.normal import fdnf, reduce_nf
from logickernel.semantics import canonical_assignments, evaluate

DATA = Path(__file__).parent / "data"

HALF_ADDER_TEXT = """\
in A
in B
gate g1 = OR A, B
gate g2 = AND A, B
gate g3 = NOT g2
gate g4 = AND g1, g3
out S = g4
out C = g2
"""


def load(name: str) -> Netlist:
    return parse_netlist((DATA / name).read_text())


class TestNetlist:
    def test_half_adder_text(self):
        assert format_netlist(half_adder()) == HALF_ADDER_TEXT
        assert parse_netlist(HALF_ADDER_TEXT) == half_adder()

    def test_half_adder_table(self):
        rows = {(a, b): simulate(half_adder(), {"A": a, "B": b}) for a in (1, 0) for b in (1, 0)}
        assert rows[(1, 1)] == {"S": False, "C": True}
        assert rows[(1, 0)] == {"S": True, "C": False}
        assert rows[(0, 1)] == {"S": True, "C": False}
        assert rows[(0, 0)] == {"S": False, "C": False}

    def test_gate_counts(self):
        counts = half_adder().gate_counts()
        assert counts == {GateKind.NOT: 1, GateKind.AND: 2, GateKind.OR: 1}

    def test_undefined_reference(self):
        with pytest.raises(BadNetlist):
            Netlist(("A",), (Gate("g1", GateKind.AND, ("A", "g2")),))

    def test_wrong_fan_in(self):
        with pytest.raises(BadNetlist):
            parse_netlist("in A\nin B\ngate g1 = NOT A, B\n")

    def test_duplicate_names(self):
        with pytest.raises(BadNetlist):
            parse_netlist("in A\ngate A = NOT A\n")
        with pytest.raises(BadNetlist):
            parse_netlist("in A\ngate g1 = NOT A\nout O = g1\nout O = A\n")

    def test_undefined_output(self):
        with pytest.raises(BadNetlist):
            parse_netlist("in A\nout O = g9\n")

    def test_malformed_line(self):
        with pytest.raises(ParseError) as info:
            parse_netlist("in A\nwire A B\n")
        assert info.value.position == 5


class TestCompiler:
    def test_shared_subformula(self):
        netlist = compile_circuit(parse("(A & B) | (~(A & B))"))
        assert [g.kind for g in netlist.gates] == [GateKind.AND, GateKind.NOT, GateKind.OR]
        assert netlist.outputs == (("OUT", "g3"),)
        assert netlist.inputs == ("A", "B")

    def test_named_output(self):
        netlist = compile_circuit(parse("~P"), output="Z")
        assert netlist.output_names == ("Z",)

    def test_unsupported(self):
        with pytest.raises(UnsupportedConnective):
            compile_circuit(parse("P -> Q"))
        with pytest.raises(UnsupportedConnective):
            compile_circuit(parse("P <-> Q"))

    def test_reduced_formula_compiles(self):
        f = parse("(P -> Q) <-> R")
        netlist = compile_circuit(reduce_nf(f))
        for row in canonical_assignments(netlist.inputs):
            assert simulate(netlist, row.as_dict())["OUT"] is evaluate(f, row)

    def test_random_agreement(self, gen):
        for f in gen.sample(50, depth=4, kinds=(Not, And, Or)):
            netlist = compile_circuit(f)
            for row in canonical_assignments(netlist.inputs):
                assert simulate(netlist, row.as_dict())["OUT"] is evaluate(f, row)

    def test_several_outputs(self):
        netlist = netlist_from_formulas({"X": parse("P & Q"), "Y": parse("~(P & Q)")})
        assert len(netlist.gates) == 2
        assert simulate(netlist, {"P": True, "Q": True}) == {"X": True, "Y": False}


class TestSimulation:
    def test_missing_input(self):
        with pytest.raises(MissingInput):
            simulate(half_adder(), {"A": 1})

    def test_gated_or_simplifies(self):
        assert equivalent_netlists(load("gated_or.net"), compile_circuit(parse("C & (A | B)")))

    def test_three_input_parity(self):
        parity = compile_circuit(fdnf(parse("(A <-> B) <-> C")))
        netlist = load("parity3.net")
        assert equivalent_netlists(netlist, parity)
        assert simulate(netlist, {"A": 1, "B": 1, "C": 1}) == {"OUT": True}
        assert simulate(netlist, {"A": 1, "B": 1, "C": 0}) == {"OUT": False}

    def test_first_difference(self):
        conj = compile_circuit(parse("A & B"))
        disj = compile_circuit(parse("A | B"))
        assert first_difference(conj, disj) == {"A": True, "B": False}
        assert not equivalent_netlists(conj, disj)

    def test_port_mismatch(self):
        with pytest.raises(PortMismatch):
            first_difference(compile_circuit(parse("A & B")), compile_circuit(parse("A & C")))
        with pytest.raises(PortMismatch):
            first_difference(compile_circuit(parse("A & B")), compile_circuit(parse("A & B"), output="Z"))

    def test_input_cap(self):
        n = compile_circuit(parse("A & B"))
        with pytest.raises(CapExceeded):
            first_difference(n, n, cap=1)
