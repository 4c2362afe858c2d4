import pytest

from logickernel.errors import GeneralizationOnFreeVariable, InputRejected, NotFreeFor
from logickernel.fol import (
    AxiomP4, AxiomP5, Const, Forall, Gen, PdProofBuilder, Pred, Signature, Var, check_pd_proof,
    enumerate_structures, format_pd_proof, generalize_proof, instantiate_proof, parse_pd,
    parse_pd_proof, pd_deduction_transform, pd_soundness_spotcheck, renaming_proof, valid_over,
)
from logickernel.proofs import Premise, Proof, RejectReason, Step

x = Var("x")

SYLLOGISM_SCRIPT = """\
1. forall x (P(x) -> Q(x)) ; premise
2. (forall x (P(x) -> Q(x))) -> (P(x) -> Q(x)) ; P5[P(x) -> Q(x);x;x]
3. P(x) -> Q(x) ; MP(1,2)
4. forall x P(x) ; premise
5. (forall x P(x)) -> P(x) ; P5[P(x);x;x]
6. P(x) ; MP(4,5)
7. Q(x) ; MP(6,3)
8. forall x Q(x) ; GEN(7,x)
"""

RENAME_BOUND_SCRIPT = """\
1. (forall x P(x)) -> P(y) ; P5[P(x);x;y]
2. forall y ((forall x P(x)) -> P(y)) ; GEN(1,y)
3. (forall y ((forall x P(x)) -> P(y))) -> ((forall x P(x)) -> (forall y P(y))) ; P4[forall x P(x);P(y);y]
4. (forall x P(x)) -> (forall y P(y)) ; MP(2,3)
"""

SYLLOGISM_THEN_GEN_SCRIPT = """\
1. Q(a) -> (forall x P(x)) ; premise
2. (forall x P(x)) -> P(x) ; P5[P(x);x;x]
3. Q(a) -> P(x) ; HS(1,2)
4. forall x (Q(a) -> P(x)) ; GEN(3,x)
"""

CONTRAPOSED_SCRIPT = """\
1. forall x (P(x) -> Q(x)) ; premise
2. forall x (~Q(x)) ; premise
3. (forall x (P(x) -> Q(x))) -> (P(x) -> Q(x)) ; P5[P(x) -> Q(x);x;x]
4. P(x) -> Q(x) ; MP(1,3)
5. (P(x) -> Q(x)) -> ((~Q(x)) -> (~P(x))) ; LEMMA contrapose[A:=Q(x),B:=P(x)]
6. (~Q(x)) -> (~P(x)) ; MP(4,5)
7. (forall x (~Q(x))) -> (~Q(x)) ; P5[~Q(x);x;x]
8. ~Q(x) ; MP(2,7)
9. ~P(x) ; MP(6,8)
10. forall x (~P(x)) ; GEN(9,x)
"""

SWAPPED_QUANTIFIERS_SCRIPT = """\
1. forall x (forall y R(x,y)) ; premise
2. (forall x (forall y R(x,y))) -> (forall y R(x,y)) ; P5[forall y R(x,y);x;x]
3. forall y R(x,y) ; MP(1,2)
4. (forall y R(x,y)) -> R(x,y) ; P5[R(x,y);y;y]
5. R(x,y) ; MP(3,4)
6. forall x R(x,y) ; GEN(5,x)
7. forall y (forall x R(x,y)) ; GEN(6,y)
"""

GENERALIZED_PREMISE_SCRIPT = """\
1. P(x) ; premise
2. forall x P(x) ; GEN(1,x)
3. (forall x P(x)) -> Q(x) ; premise
4. Q(x) ; MP(2,3)
5. forall x Q(x) ; GEN(4,x)
"""

def signature_of(proof: Proof) -> Signature:
    return Signature.of([s.formula for s in proof.steps])


class TestChecker:
    def test_syllogism(self):
        proof = parse_pd_proof(SYLLOGISM_SCRIPT)
        assert proof.premises == (parse_pd("forall x (P(x) -> Q(x))"), parse_pd("forall x P(x)"))
        verdict = check_pd_proof(proof)
        assert verdict.accepted
        assert isinstance(proof.step(8).justification, Gen)

    def test_script_round_trip(self):
        proof = parse_pd_proof(SYLLOGISM_SCRIPT)
        assert format_pd_proof(proof) == SYLLOGISM_SCRIPT
        assert parse_pd_proof(format_pd_proof(proof)) == proof

    def test_p4_side_condition(self, pd):
        b = PdProofBuilder()
        b.p4(pd("P(x)"), pd("Q(x)"), "x")
        verdict = check_pd_proof(b.build())
        assert (verdict.step, verdict.reason) == (1, RejectReason.SIDE_CONDITION_VIOLATION)

    def test_p4_accepted(self, pd):
        b = PdProofBuilder()
        b.p4(pd("P(a)"), pd("Q(x)"), "x")
        assert check_pd_proof(b.build()).accepted

    def test_p5_side_condition(self, pd):
        step = Step(
            pd("(forall x (forall y R(x,y))) -> (forall y R(y,y))"),
            AxiomP5(pd("forall y R(x,y)"), x, Var("y")),
        )
        verdict = check_pd_proof(Proof((), (step,)))
        assert verdict.reason is RejectReason.SIDE_CONDITION_VIOLATION

    def test_p5_constant(self, pd):
        step = Step(pd("(forall x (forall y R(x,y))) -> (forall y R(a,y))"),
                    AxiomP5(pd("forall y R(x,y)"), x, Const("a")))
        assert check_pd_proof(Proof((), (step,))).accepted

    def test_existential_rejected(self, pd):
        f = pd("exists x P(x)")
        verdict = check_pd_proof(Proof((f,), (Step(f, Premise()),)))
        assert verdict.reason is RejectReason.NOT_IN_PD_PRIME

    def test_bad_generalization(self, pd):
        f = pd("P(x)")
        proof = Proof((f,), (Step(f, Premise()), Step(pd("forall y P(x)"), Gen(1, x))))
        assert check_pd_proof(proof).reason is RejectReason.BAD_MP_SHAPE

    def test_axiom_four_instance(self, pd):
        j = AxiomP4(pd("P(a)"), pd("Q(x)"), x)
        assert j.axiom_formula() == pd("(forall x (P(a) -> Q(x))) -> (P(a) -> forall x Q(x))")

    def test_renaming_bound_variable(self, pd):
        proof = parse_pd_proof(RENAME_BOUND_SCRIPT)
        assert proof.premises == ()
        assert check_pd_proof(proof).accepted
        assert proof.conclusion == pd("(forall x P(x)) -> (forall y P(y))")

    @pytest.mark.parametrize("script, premises, conclusion", [
        (SYLLOGISM_THEN_GEN_SCRIPT, ["Q(a) -> (forall x P(x))"], "forall x (Q(a) -> P(x))"),
        (CONTRAPOSED_SCRIPT, ["forall x (P(x) -> Q(x))", "forall x (~Q(x))"], "forall x (~P(x))"),
        (SWAPPED_QUANTIFIERS_SCRIPT, ["forall x (forall y R(x,y))"], "forall y (forall x R(x,y))"),
        (GENERALIZED_PREMISE_SCRIPT, ["P(x)", "(forall x P(x)) -> Q(x)"], "forall x Q(x)"),
    ])
    def test_demonstrations(self, pd, script, premises, conclusion):
        proof = parse_pd_proof(script)
        assert proof.premises == tuple(pd(p) for p in premises)
        assert proof.conclusion == pd(conclusion)
        verdict = check_pd_proof(proof)
        assert verdict.accepted
        assert verdict.used_premises == proof.premises


class TestDeduction:
    def test_discharge_sentence(self, pd):
        proof = parse_pd_proof(SYLLOGISM_SCRIPT)
        result = pd_deduction_transform(proof, pd("forall x P(x)"))
        assert result.conclusion == pd("(forall x P(x)) -> (forall x Q(x))")
        assert result.premises == (pd("forall x (P(x) -> Q(x))"),)
        assert check_pd_proof(result).accepted

    def test_generalization_on_free_variable(self, pd):
        b = PdProofBuilder()
        s1 = b.premise(pd("P(x)"))
        b.gen(s1, "x")
        with pytest.raises(GeneralizationOnFreeVariable) as info:
            pd_deduction_transform(b.build(), pd("P(x)"))
        assert info.value.step == 2
        assert info.value.variable == "x"

    def test_generalized_premise_stays(self, pd):
        with pytest.raises(GeneralizationOnFreeVariable) as info:
            pd_deduction_transform(parse_pd_proof(GENERALIZED_PREMISE_SCRIPT), pd("P(x)"))
        assert info.value.step == 2

    def test_discharge_through_syllogism(self, pd):
        proof = parse_pd_proof(SYLLOGISM_THEN_GEN_SCRIPT)
        result = pd_deduction_transform(proof, pd("Q(a) -> (forall x P(x))"))
        assert result.premises == ()
        assert result.conclusion == pd("(Q(a) -> (forall x P(x))) -> (forall x (Q(a) -> P(x)))")
        assert check_pd_proof(result).accepted

    def test_generalized_premise_is_not_valid(self, pd):
        report = valid_over(pd("P(x) -> forall x P(x)"))
        assert report.sizes[1] is True
        assert report.sizes[2] is False
        assert str(report.countermodel) == "D={a,b}, P'={a}"

    def test_rejected_input(self, pd):
        f = pd("P(x)")
        proof = Proof((), (Step(f, Premise()),))
        with pytest.raises(InputRejected):
            pd_deduction_transform(proof, pd("Q(x)"))


class TestDerivedRules:
    def test_renaming(self, pd):
        proof = renaming_proof(pd("P(x)"), "x", "y")
        assert len(proof) == 4
        assert proof.conclusion == pd("forall y P(y)")
        assert check_pd_proof(proof).accepted

    def test_renaming_not_free(self, pd):
        with pytest.raises(NotFreeFor):
            renaming_proof(pd("forall y R(x,y)"), "x", "y")

    def test_generalize_and_instantiate(self, pd):
        b = PdProofBuilder()
        b.lemma("id", A=pd("R(x,y)"))
        general = generalize_proof(b.build(), ["x", "y"])
        assert general.conclusion == pd("forall x forall y (R(x,y) -> R(x,y))")
        assert check_pd_proof(general).accepted

        instance = instantiate_proof(general, "x", "a")
        assert instance.conclusion == pd("forall y (R(a,y) -> R(a,y))")
        assert check_pd_proof(instance).accepted

    def test_instantiate_wrong_variable(self, pd):
        proof = renaming_proof(pd("P(x)"), "x", "y")
        with pytest.raises(ValueError):
            instantiate_proof(proof, "x", "a")


class TestSoundness:
    def test_spotcheck(self):
        proof = parse_pd_proof(SYLLOGISM_SCRIPT)
        report = pd_soundness_spotcheck(proof, enumerate_structures(signature_of(proof), 2))
        assert report.sound
        assert report.checked + report.skipped == 16
        assert report.checked > 0

    def test_unsound_step_is_reported(self, pd):
        f = pd("P(a)")
        bogus = Proof((f,), (Step(f, Premise()), Step(Forall(x, Pred("P", (x,))), Gen(1, x))))
        report = pd_soundness_spotcheck(bogus, enumerate_structures(signature_of(bogus), 2))
        assert not report.sound
        assert all(k == 2 for _, k in report.failures)

    def test_missing_symbols_are_skipped(self):
        proof = parse_pd_proof(SYLLOGISM_SCRIPT)
        only_p = enumerate_structures(Signature((("P", 1),)), 1)
        report = pd_soundness_spotcheck(proof, only_p)
        assert report.checked == 0
        assert report.skipped == 2
