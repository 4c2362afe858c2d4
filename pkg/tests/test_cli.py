import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from logickernel.cli import main
from logickernel.core import LevelBuilder

ROOT = Path(__file__).parent.parent
DATA = Path(__file__).parent / "data"
CONFIG = str(ROOT / "config" / "kernel.yaml")

CHAIN_SCRIPT = """\
1. P ; premise
2. P -> Q ; premise
3. Q ; MP(1,2)
4. Q -> R ; premise
5. R ; MP(3,4)
"""


@pytest.fixture
def run():
    runner = CliRunner()

    def invoke(*args, input=None):
        return runner.invoke(main, ["--config", CONFIG] + list(args), input=input)

    return invoke


def lines(result):
    return result.output.strip().splitlines()


class TestPropositional:
    def test_parse(self, run):
        result = run("parse", "(P -> (Q -> P))")
        assert result.exit_code == 0
        assert result.output == "P -> (Q -> P)\n"

    def test_parse_error(self, run):
        result = run("parse", "P & & Q")
        assert result.exit_code == 2
        assert "error:" in result.output

    def test_pairs(self, run):
        result = run("pairs", "--labels", "((P -> (Q|R)) <-> (~S))")
        assert lines(result) == ["(a,h)", "(b,e)", "(c,d)", "(f,g)", "depth 3"]

    def test_levels(self, run):
        assert lines(run("levels", "2")) == ["38"]
        assert lines(run("levels", "2", "--atoms", "P", "--connectives", "~,->")) == ["13"]

    def test_levels_over_cap(self, run):
        result = run("--format", "json", "--cap", "100", "levels", "3")
        assert json.loads(result.output) == {"level": 3, "count": 1446, "verified": None}

    def test_bad_connective(self, run):
        assert run("levels", "1", "--connectives", "%").exit_code == 2

    def test_failed_self_check(self, run, monkeypatch):
        monkeypatch.setattr(LevelBuilder, "explicit_count", lambda self, n: 0)
        result = run("levels", "2")
        assert result.exit_code == 2
        assert "error: L_2 count" in result.output

    def test_classify(self, run):
        result = run("classify", "P -> P")
        assert result.exit_code == 0
        assert result.output == "valid\n"
        data = json.loads(run("--format", "json", "classify", "P & ~P").output)
        assert data["status"] == "contradiction"

    def test_equiv(self, run):
        assert run("equiv", "P -> Q", "(~P) | Q").exit_code == 0
        assert run("equiv", "P -> Q", "Q -> P").exit_code == 1

    def test_consequence_with_trace(self, run):
        result = run("--trace", "consequence", "P -> R", "Q -> S", "(~R) | (~S)", "P | (~Q)")
        assert result.exit_code == 1
        assert lines(result) == [
            "step 1: set v(P)=F because goal-false",
            "step 2: set v(Q)=T because goal-false",
            "step 3: set v(S)=T because premise-true",
            "step 4: set v(R)=F because premise-true",
            "invalid",
            "v(P)=F, v(Q)=T, v(R)=F, v(S)=T",
        ]

    @pytest.mark.parametrize("strategy", ["forcing", "table", "refutation"])
    def test_consequence_strategies(self, run, strategy):
        result = run("consequence", "--strategy", strategy, "P", "P -> Q", "Q")
        assert result.exit_code == 0
        assert result.output == "valid\n"

    def test_consequence_needs_conclusion(self, run):
        assert run("consequence").exit_code == 2

    def test_sat_from_file(self, run, tmp_path):
        path = tmp_path / "set.txt"
        path.write_text("# inconsistent\nP\nP -> Q\n~Q\n")
        result = run("sat", "--file", str(path))
        assert result.exit_code == 1
        assert lines(result) == ["unsatisfiable"]
        assert run("sat", "P", "P -> Q").exit_code == 0

    def test_compactness(self, run):
        result = run("compactness", "negation-conjunction", "3")
        assert result.exit_code == 0
        assert result.output == "unsatisfiable at {A2}\n"

    def test_normal_forms(self, run):
        assert lines(run("nnf", "~(P -> Q)")) == ["P & (~Q)"]
        assert lines(run("denial", "P & (~Q)")) == ["(~P) | Q"]
        assert run("fdnf", "P & ~P").exit_code == 2


class TestProofs:
    def test_synth_then_check(self, run):
        synthesized = run("synth", "P -> (Q -> P)")
        assert synthesized.exit_code == 0
        checked = run("prove-check", "-", input=synthesized.output)
        assert checked.exit_code == 0
        assert checked.output == "accepted\n"

    def test_rejected_script(self, run, tmp_path):
        path = tmp_path / "bad.proof"
        path.write_text("1. P ; premise\n2. Q ; MP(1,1)\n")
        result = run("prove-check", str(path))
        assert result.exit_code == 1
        assert result.output == "rejected at step 2: BadMpShape\n"

    def test_deduce(self, run, tmp_path):
        path = tmp_path / "chain.proof"
        path.write_text(CHAIN_SCRIPT)
        result = run("deduce", str(path), "--discharge", "P")
        assert result.exit_code == 0
        steps = lines(result)
        assert len(steps) == 13
        assert steps[-1].startswith("13. P -> R ; MP(")

    def test_deducibility(self, run):
        result = run("deducibility", "P -> Q", "--row", "P=T,Q=F")
        assert result.exit_code == 0
        assert lines(result)[-1].startswith("5. ~(P -> Q) ;")

    def test_synthesis_cap_from_config(self, run, tmp_path):
        path = tmp_path / "kernel.yaml"
        path.write_text("proofs:\n  synthesis_atom_cap: 1\n")
        result = CliRunner().invoke(main, ["--config", str(path), "synth", "P -> (Q -> P)"])
        assert result.exit_code == 2
        assert "error:" in result.output


class TestConsequenceOperators:
    def test_closure(self, run):
        result = run("closure", "--atoms", "P,Q", "--connectives", "&", "--max-size", "1", "P & Q")
        assert result.output == "{P & Q}\n"

    def test_op_check(self, run):
        result = run("op-check", "--atoms", "P", "--max-size", "1")
        assert result.exit_code == 0
        assert lines(result)[-1] == "idempotent-theorems: pass"


class TestFirstOrder:
    def test_occ(self, run):
        assert lines(run("occ", "P(x) & forall x R(x,y)")) == ["free: x, y", "bound: x"]

    def test_subst_not_free(self, run):
        result = run("subst", "forall y R(x,y)", "x", "y")
        assert lines(result) == ["forall y R(y,y)", "y is not free for x"]

    def test_prenex(self, run):
        assert lines(run("prenex", "forall x P(x) -> Q")) == ["exists x (Q | (~P(x)))"]

    def test_model(self, run):
        structure = str(DATA / "two_elements.json")
        result = run("--trace", "model", structure, "forall x P(x)")
        assert result.exit_code == 1
        assert lines(result) == ["forall x: refuter b", "fails"]
        assert run("model", structure, "exists y forall x R(x,y)").exit_code == 0

    def test_countermodel(self, run):
        result = run("countermodel", "exists x P(x) -> forall x P(x)")
        assert result.exit_code == 1
        assert lines(result) == ["1: valid", "2: invalid", "3: invalid", "countermodel: D={a,b}, P'={a}"]

    def test_pd_consequence(self, run):
        result = run("pd-consequence", "forall x (P(x) -> Q(x))", "P(a)", "Q(a)")
        assert result.exit_code == 0
        assert result.output == "no countermodel up to 3\n"

    def test_pd_satisfiable(self, run):
        result = run("--max-domain", "2", "pd-consequence", "--satisfiable", "forall x P(x)", "exists x ~P(x)")
        assert result.exit_code == 1
        assert result.output == "no model up to 2\n"

    def test_pd_proofs(self, run, tmp_path):
        path = tmp_path / "syllogism.proof"
        path.write_text(
            "1. forall x (P(x) -> Q(x)) ; premise\n"
            "2. (forall x (P(x) -> Q(x))) -> (P(x) -> Q(x)) ; P5[P(x) -> Q(x);x;x]\n"
            "3. P(x) -> Q(x) ; MP(1,2)\n"
            "4. P(x) ; premise\n"
            "5. Q(x) ; MP(4,3)\n"
            "6. forall x Q(x) ; GEN(5,x)\n"
        )
        assert run("pd-prove-check", str(path)).output == "accepted\n"
        refused = run("pd-deduce", str(path), "--discharge", "P(x)")
        assert refused.exit_code == 2
        assert "error:" in refused.output


class TestCircuits:
    def test_half_adder(self, run):
        assert lines(run("compile", "--half-adder")) == [
            "in A", "in B",
            "gate g1 = OR A, B", "gate g2 = AND A, B", "gate g3 = NOT g2", "gate g4 = AND g1, g3",
            "out S = g4", "out C = g2",
        ]

    def test_compile_unsupported(self, run):
        assert run("compile", "P -> Q").exit_code == 2

    def test_simulate(self, run):
        net = str(DATA / "parity3.net")
        result = run("simulate", net, "--set", "A=1", "--set", "B=1", "--set", "C=1")
        assert result.output == "OUT=1\n"
        assert run("simulate", net, "--set", "A=1").exit_code == 2

    def test_circuit_equiv(self, run, tmp_path):
        compiled = run("compile", "C & (A | B)")
        path = tmp_path / "simple.net"
        path.write_text(compiled.output)
        assert run("circuit-equiv", str(DATA / "gated_or.net"), str(path)).exit_code == 0
        assert run("circuit-equiv", str(DATA / "gated_or.net"), str(DATA / "parity3.net")).exit_code == 1
