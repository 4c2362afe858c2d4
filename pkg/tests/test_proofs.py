import pytest

from logickernel.core import Atom, Implies, Not, parse
from logickernel.errors import (
    ArityMismatch, CapExceeded, InputRejected, NotATautology, NotInLPrime, SelfCheckFailed,
)
from logickernel.proofs import (
    HS, MP, AxiomP1, AxiomP3, Lemma, LemmaLibrary, Premise, Proof, ProofBuilder, ProofVerdict, RejectReason,
    Step, check_proof,
    deducibility_proof, deduction_transform, default_library, expand_hs, expand_lemmas, format_proof,
    instantiate_axiom, literal, parse_proof, synthesize_proof, verify_soundness,
)
from logickernel.semantics import Assignment, canonical_assignments, evaluate

P, Q, R = Atom("P"), Atom("Q"), Atom("R")

IDENTITY_SCRIPT = """\
1. (P -> ((P -> P) -> P)) -> ((P -> (P -> P)) -> (P -> P)) ; P2[P;P -> P;P]
2. P -> ((P -> P) -> P) ; P1[P;P -> P]
3. (P -> (P -> P)) -> (P -> P) ; MP(1,2)
4. P -> (P -> P) ; P1[P;P]
5. P -> P ; MP(3,4)
"""

DOUBLE_NEGATION_SCRIPT = """\
# ~~P |- P
1. ~(~P) ; premise
2. ~(~P) -> (~(~(~(~P))) -> ~(~P)) ; P1[~(~P);~(~(~(~P)))]
3. ~(~(~(~P))) -> ~(~P) ; MP(1,2)

4. (~(~(~(~P))) -> ~(~P)) -> (~P -> ~(~(~P))) ; P3[~(~(~P));~P]
5. ~P -> ~(~(~P)) ; MP(3,4)
6. (~P -> ~(~(~P))) -> (~(~P) -> P) ; P3[P;~(~P)]
7. ~(~P) -> P ; MP(5,6)
8. P ; MP(1,7)
"""

DOUBLE_NEGATION_THEOREM_SCRIPT = """\
1. (~(~P)) -> ((~(~(~(~P)))) -> (~(~P))) ; P1[~(~P);~(~(~(~P)))]
2. ((~(~(~(~P)))) -> (~(~P))) -> ((~P) -> (~(~(~P)))) ; P3[~(~(~P));~P]
3. (~(~P)) -> ((~P) -> (~(~(~P)))) ; HS(1,2)
4. ((~P) -> (~(~(~P)))) -> ((~(~P)) -> P) ; P3[P;~(~P)]
5. (~(~P)) -> ((~(~P)) -> P) ; HS(3,4)
6. ((~(~P)) -> ((~(~P)) -> P)) -> (((~(~P)) -> (~(~P))) -> ((~(~P)) -> P)) ; P2[~(~P);~(~P);P]
7. ((~(~P)) -> (~(~P))) -> ((~(~P)) -> P) ; MP(5,6)
8. ((~(~P)) -> (((~(~P)) -> (~(~P))) -> (~(~P)))) -> (((~(~P)) -> ((~(~P)) -> (~(~P)))) -> ((~(~P)) -> (~(~P)))) ; P2[~(~P);(~(~P)) -> (~(~P));~(~P)]
9. (~(~P)) -> (((~(~P)) -> (~(~P))) -> (~(~P))) ; P1[~(~P);(~(~P)) -> (~(~P))]
10. ((~(~P)) -> ((~(~P)) -> (~(~P)))) -> ((~(~P)) -> (~(~P))) ; MP(9,8)
11. (~(~P)) -> ((~(~P)) -> (~(~P))) ; P1[~(~P);~(~P)]
12. (~(~P)) -> (~(~P)) ; MP(11,10)
13. (~(~P)) -> P ; MP(12,7)
"""

# Q -> P |- (~P) -> (~Q), before discharging the premise
CONTRAPOSE_SCRIPT = """\
1. Q -> P ; premise
2. (~(~Q)) -> Q ; LEMMA dneg-elim[A:=Q]
3. (~(~Q)) -> P ; HS(1,2)
4. P -> (~(~P)) ; LEMMA dneg-intro[A:=P]
5. (~(~Q)) -> (~(~P)) ; HS(3,4)
6. ((~(~Q)) -> (~(~P))) -> ((~P) -> (~Q)) ; P3[~Q;~P]
7. (~P) -> (~Q) ; MP(5,6)
"""

# (P -> Q) -> P |- P, before discharging the premise
PEIRCE_SCRIPT = """\
1. (P -> Q) -> P ; premise
2. (~P) -> (P -> Q) ; LEMMA exfalso[A:=Q,B:=P]
3. (~P) -> P ; HS(1,2)
4. (~P) -> ((~(~((~P) -> P))) -> (~P)) ; P1[~P;~(~((~P) -> P))]
5. ((~(~((~P) -> P))) -> (~P)) -> (P -> (~((~P) -> P))) ; P3[~((~P) -> P);P]
6. (~P) -> (P -> (~((~P) -> P))) ; HS(4,5)
7. ((~P) -> (P -> (~((~P) -> P)))) -> (((~P) -> P) -> ((~P) -> (~((~P) -> P)))) ; P2[~P;P;~((~P) -> P)]
8. ((~P) -> P) -> ((~P) -> (~((~P) -> P))) ; MP(6,7)
9. (~P) -> (~((~P) -> P)) ; MP(3,8)
10. ((~P) -> (~((~P) -> P))) -> (((~P) -> P) -> P) ; P3[P;(~P) -> P]
11. ((~P) -> P) -> P ; MP(9,10)
12. P ; MP(3,11)
"""

SYLLOGISM_CHAIN_SCRIPT = """\
1. P -> Q ; premise
2. Q -> R ; premise
3. P ; premise
4. Q ; MP(1,3)
5. R ; MP(2,4)
"""

DISCHARGED_CHAIN_SCRIPT = """\
1. P -> Q ; premise
2. (P -> Q) -> (P -> (P -> Q)) ; P1[P -> Q;P]
3. P -> (P -> Q) ; MP(1,2)
4. Q -> R ; premise
5. (Q -> R) -> (P -> (Q -> R)) ; P1[Q -> R;P]
6. P -> (Q -> R) ; MP(4,5)
7. P -> P ; LEMMA id[A:=P]
8. (P -> (P -> Q)) -> ((P -> P) -> (P -> Q)) ; P2[P;P;Q]
9. (P -> P) -> (P -> Q) ; MP(3,8)
10. P -> Q ; MP(7,9)
11. (P -> (Q -> R)) -> ((P -> Q) -> (P -> R)) ; P2[P;Q;R]
12. (P -> Q) -> (P -> R) ; MP(6,11)
13. P -> R ; MP(10,12)
"""


def chain_proof() -> Proof:
    """P, P -> Q, Q -> R |- R"""
    b = ProofBuilder()
    s1 = b.premise(P)
    s2 = b.premise(Implies(P, Q))
    s3 = b.mp(s1, s2)
    s4 = b.premise(Implies(Q, R))
    b.mp(s3, s4)
    return b.build()


class TestAxioms:
    def test_instances(self):
        assert instantiate_axiom("P1", [P, Q]) == parse("P -> (Q -> P)")
        assert instantiate_axiom("P2", [P, Q, R]) == parse("(P -> (Q -> R)) -> ((P -> Q) -> (P -> R))")
        assert instantiate_axiom(AxiomP3, [P, Q]) == parse("((~P) -> (~Q)) -> (Q -> P)")

    def test_arity(self):
        with pytest.raises(ArityMismatch):
            instantiate_axiom("P2", [P, Q])


class TestChecker:
    def test_identity(self):
        verdict = check_proof(parse_proof(IDENTITY_SCRIPT))
        assert verdict.accepted
        assert str(verdict) == "accepted"
        assert verdict.used_premises == ()

    def test_double_negation(self):
        proof = parse_proof(DOUBLE_NEGATION_SCRIPT)
        assert len(proof) == 8
        assert proof.premises == (parse("~~P"),)
        verdict = check_proof(proof)
        assert verdict.accepted
        assert verdict.used_premises == (parse("~~P"),)

    def test_double_negation_theorem_with_syllogisms(self):
        proof = parse_proof(DOUBLE_NEGATION_THEOREM_SCRIPT)
        assert len(proof) == 13
        assert proof.premises == ()
        assert [type(proof.step(k).justification) for k in (3, 5)] == [HS, HS]
        assert proof.conclusion == parse("(~(~P)) -> P")
        assert check_proof(proof).accepted
        assert check_proof(expand_hs(proof)).accepted

    @pytest.mark.parametrize("script, premise, theorem", [
        (CONTRAPOSE_SCRIPT, "Q -> P", "(Q -> P) -> ((~P) -> (~Q))"),
        (PEIRCE_SCRIPT, "(P -> Q) -> P", "((P -> Q) -> P) -> P"),
    ])
    def test_filled_demonstrations(self, script, premise, theorem):
        proof = parse_proof(script)
        verdict = check_proof(proof)
        assert verdict.accepted
        assert verdict.used_premises == (parse(premise),)
        discharged = deduction_transform(proof, parse(premise))
        assert discharged.premises == ()
        assert discharged.conclusion == parse(theorem)
        assert check_proof(discharged).accepted
        assert check_proof(expand_lemmas(discharged)).accepted

    def test_empty(self):
        verdict = check_proof(Proof((), ()))
        assert not verdict.accepted
        assert verdict.step == 0
        assert verdict.reason is RejectReason.EMPTY_PROOF

    def test_forward_reference(self):
        proof = Proof((P, Implies(P, Q)), (
            Step(Q, MP(2, 3)),
            Step(P, Premise()),
            Step(Implies(P, Q), Premise()),
        ))
        verdict = check_proof(proof)
        assert verdict.step == 1
        assert verdict.reason is RejectReason.FORWARD_REFERENCE
        assert str(verdict) == "rejected at step 1: ForwardReference"

    def test_not_premise(self):
        proof = parse_proof(DOUBLE_NEGATION_SCRIPT, premises=[P])
        verdict = check_proof(proof)
        assert verdict.step == 1
        assert verdict.reason is RejectReason.NOT_PREMISE

    def test_bad_axiom_instance(self):
        proof = Proof((), (Step(parse("P -> (Q -> Q)"), AxiomP1(P, Q)),))
        assert check_proof(proof).reason is RejectReason.BAD_AXIOM_INSTANCE

    def test_bad_mp_shape(self):
        proof = Proof((P, Implies(Q, R)), (
            Step(P, Premise()),
            Step(Implies(Q, R), Premise()),
            Step(R, MP(1, 2)),
        ))
        verdict = check_proof(proof)
        assert (verdict.step, verdict.reason) == (3, RejectReason.BAD_MP_SHAPE)

    def test_lemma_steps(self):
        proof = Proof((), (Step(parse("Q -> Q"), Lemma("id", (("A", Q),))),))
        assert check_proof(proof).accepted
        wrong = Proof((), (Step(parse("P -> P"), Lemma("id", (("A", Q),))),))
        assert check_proof(wrong).reason is RejectReason.BAD_AXIOM_INSTANCE
        unknown = Proof((), (Step(parse("P -> P"), Lemma("no-such-lemma")),))
        assert check_proof(unknown).reason is RejectReason.UNKNOWN_LEMMA

    def test_used_premises_and_restriction(self):
        proof = Proof((P, Q, Implies(P, R)), (
            Step(Implies(P, R), Premise()),
            Step(P, Premise()),
            Step(R, MP(2, 1)),
        ))
        assert check_proof(proof).used_premises == (P, Implies(P, R))
        verdict = check_proof(proof.restricted_to([P]))
        assert (verdict.step, verdict.reason) == (1, RejectReason.NOT_PREMISE)


class TestScript:
    def test_round_trip(self):
        for text in (IDENTITY_SCRIPT, DOUBLE_NEGATION_SCRIPT):
            proof = parse_proof(text)
            assert parse_proof(format_proof(proof)) == proof

    def test_format(self):
        text = format_proof(parse_proof(IDENTITY_SCRIPT))
        assert text == IDENTITY_SCRIPT

    def test_lemma_reason(self):
        b = ProofBuilder()
        b.lemma("exfalso", B=P, A=Q)
        text = format_proof(b.build())
        assert text == "1. (~P) -> (P -> Q) ; LEMMA exfalso[A:=Q,B:=P]\n"
        assert parse_proof(text) == b.build()

    def test_out_of_sequence(self):
        from logickernel.errors import ParseError

        with pytest.raises(ParseError):
            parse_proof("1. P ; premise\n3. P ; premise\n")

    def test_unknown_reason(self):
        from logickernel.errors import ParseError

        with pytest.raises(ParseError):
            parse_proof("1. P ; guess\n")


class TestLemmas:
    @pytest.mark.parametrize("name", default_library().names())
    def test_template_checks(self, name):
        library = default_library()
        template = library.get(name)
        assert template.proof.conclusion == library.statement(name)
        assert check_proof(template.proof).accepted
        assert template.proof.premises == ()

    @pytest.mark.parametrize("name", ["id", "dneg-elim", "exfalso", "contrapose", "neg-imp"])
    def test_expanded_templates_are_primitive(self, name):
        expanded = default_library().expanded(name)
        assert not expanded.uses_lemmas()
        assert check_proof(expanded).accepted
        assert expanded.conclusion == default_library().statement(name)

    def test_builder_with_wrong_conclusion(self):
        def wrong_identity(b: ProofBuilder) -> Proof:
            b.p1(Atom("A"), Atom("A"))
            return b.build()

        library = LemmaLibrary({"id": "A -> A"}, {"id": wrong_identity})
        with pytest.raises(SelfCheckFailed) as info:
            library.get("id")
        assert info.value.what == "lemma id"


class TestExpansion:
    def test_hypothetical_syllogism(self):
        b = ProofBuilder()
        s1 = b.premise(Implies(P, Q))
        s2 = b.premise(Implies(Q, R))
        b.hs(s1, s2)
        proof = b.build()
        assert isinstance(proof.step(3).justification, HS)
        expanded = expand_hs(proof)
        assert len(expanded) == 7
        assert expanded.conclusion == Implies(P, R)
        assert not expanded.uses_lemmas()
        assert check_proof(expanded).accepted

    def test_lemma_instance(self):
        b = ProofBuilder([Not(Not(Q))])
        s1 = b.premise(Not(Not(Q)))
        s2 = b.lemma("dneg-elim", A=Q)
        b.mp(s1, s2)
        expanded = expand_lemmas(b.build())
        assert expanded.conclusion == Q
        assert not expanded.uses_lemmas()
        assert check_proof(expanded).accepted

    def test_primitive_proof_is_unchanged(self):
        proof = parse_proof(IDENTITY_SCRIPT)
        assert expand_lemmas(proof) is proof


class TestDeduction:
    def test_chain(self):
        result = deduction_transform(chain_proof(), P)
        assert len(result) == 13
        assert result.premises == (Implies(P, Q), Implies(Q, R))
        assert result.conclusion == Implies(P, R)
        assert check_proof(result).accepted

    def test_chain_listing(self):
        proof = parse_proof(SYLLOGISM_CHAIN_SCRIPT)
        assert format_proof(deduction_transform(proof, P)) == DISCHARGED_CHAIN_SCRIPT

    def test_inline_identity(self):
        result = deduction_transform(chain_proof(), P, inline_identity=True)
        assert len(result) == 17
        assert not result.uses_lemmas()
        assert check_proof(result).accepted

    def test_discharge_twice(self):
        once = deduction_transform(chain_proof(), Implies(Q, R))
        twice = deduction_transform(once, P)
        assert twice.conclusion == parse("P -> ((Q -> R) -> R)")
        assert twice.premises == (Implies(P, Q),)
        assert check_proof(twice).accepted

    def test_unused_premise(self):
        proof = parse_proof(IDENTITY_SCRIPT)
        result = deduction_transform(proof, Q)
        assert result.conclusion == parse("Q -> (P -> P)")
        assert check_proof(result).accepted

    def test_rejected_input(self):
        proof = Proof((), (Step(Q, Premise()),))
        with pytest.raises(InputRejected):
            deduction_transform(proof, P)


class TestDeducibility:
    def test_false_implication(self):
        row = Assignment(("P", "Q"), (True, False))
        proof = deducibility_proof(parse("P -> Q"), row)
        assert proof.premises == (P, Not(Q))
        assert proof.conclusion == parse("~(P -> Q)")
        assert check_proof(proof).accepted

    def test_every_row(self):
        f = parse("((~P) -> Q) -> (~(Q -> R))")
        for row in canonical_assignments(["P", "Q", "R"]):
            proof = deducibility_proof(f, row)
            assert proof.conclusion == literal(f, evaluate(f, row))
            assert check_proof(proof).accepted
            assert set(check_proof(proof).used_premises) <= set(proof.premises)

    def test_requires_Lprime(self):
        with pytest.raises(NotInLPrime):
            deducibility_proof(parse("P & Q"), Assignment(("P", "Q"), (True, True)))


class TestSynthesis:
    @pytest.mark.parametrize("text", ["P -> (Q -> P)", "P -> P", "(~(~P)) -> P"])
    def test_tautologies(self, text):
        proof = synthesize_proof(parse(text))
        assert proof.premises == ()
        assert proof.conclusion == parse(text)
        assert not proof.uses_lemmas()
        assert check_proof(proof).accepted

    def test_non_Lprime_input_is_rewritten(self):
        proof = synthesize_proof(parse("P | ~P"))
        assert proof.conclusion == parse("(~P) -> (~P)")

    def test_not_a_tautology(self):
        with pytest.raises(NotATautology):
            synthesize_proof(parse("P -> Q"))

    def test_atom_cap(self):
        with pytest.raises(CapExceeded):
            synthesize_proof(parse("P -> (Q -> P)"), atom_cap=1)

    def test_unsound_result_is_refused(self, monkeypatch):
        monkeypatch.setattr(
            "logickernel.proofs.synthesis.verify_soundness",
            lambda proof: ProofVerdict(False, 1, detail="counterexample"),
        )
        with pytest.raises(SelfCheckFailed) as info:
            synthesize_proof(parse("P -> P"))
        assert info.value.what == "proof of P -> P"


class TestSoundness:
    def test_accepted(self):
        verdict = verify_soundness(parse_proof(DOUBLE_NEGATION_SCRIPT))
        assert verdict.accepted

    def test_unsound_step(self):
        proof = Proof((P,), (Step(P, Premise()), Step(Q, AxiomP3(P, Q))))
        verdict = verify_soundness(proof)
        assert not verdict.accepted
        assert verdict.step == 2
        assert verdict.reason is None
        assert "counterexample" in verdict.detail
