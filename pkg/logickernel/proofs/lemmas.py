"""
Named theorem templates over the formula variables A, B, C
"""

import logging
import threading
from dataclasses import dataclass
from typing import Callable, Dict, List, Mapping, Optional

from logickernel.core.models import META_A, META_B, META_C, Formula, Implies, Not
from logickernel.core.parser import parse
from logickernel.core.syntax import instantiate
from logickernel.errors import SelfCheckFailed, UnknownLemma
from logickernel.proofs.builder import ProofBuilder
from logickernel.proofs.models import Proof

logger = logging.getLogger(__name__)

A, B, C = META_A, META_B, META_C

STATEMENT_TEXT: Dict[str, str] = {
    "id": "A -> A",
    "dneg-elim": "(~(~A)) -> A",
    "dneg-intro": "A -> (~(~A))",
    "exfalso": "(~B) -> (B -> A)",
    "contrapose": "(B -> A) -> ((~A) -> (~B))",
    "peirce": "((A -> B) -> A) -> A",
    "b-to-mp": "A -> ((A -> B) -> B)",
    "neg-imp": "A -> ((~B) -> (~(A -> B)))",
    "neg-self-exfalso": "((~A) -> A) -> ((~A) -> B)",
    "dneg-antecedent": "(B -> C) -> ((~(~B)) -> C)",
    "neg-self": "((~A) -> A) -> A",
    "case-split": "(A -> B) -> (((~A) -> B) -> B)",
}


@dataclass(frozen=True)
class LemmaTemplate:
    name: str
    statement: Formula
    proof: Proof


def _discharge(builder: ProofBuilder, *premises: Formula) -> Proof:
    """Run the deduction transform on the builder's demonstration, innermost premise first"""
    from logickernel.proofs.deduction import deduction_transform

    proof = builder.build()
    for premise in premises:
        proof = deduction_transform(proof, premise, library=builder.library)
    return proof


def _build_id(b: ProofBuilder) -> Proof:
    s1 = b.p2(A, Implies(A, A), A)
    s2 = b.p1(A, Implies(A, A))
    s3 = b.mp(s1, s2)
    s4 = b.p1(A, A)
    b.mp(s3, s4)
    return b.build()


def _build_dneg_elim(b: ProofBuilder) -> Proof:
    nn = Not(Not(A))
    s1 = b.p1(nn, Not(Not(nn)))
    s2 = b.p3(Not(nn), Not(A))
    s3 = b.hs(s1, s2)
    s4 = b.p3(A, nn)
    s5 = b.hs(s3, s4)
    s6 = b.p2(nn, nn, A)
    s7 = b.mp(s5, s6)
    s8 = b.p2(nn, Implies(nn, nn), nn)
    s9 = b.p1(nn, Implies(nn, nn))
    s10 = b.mp(s8, s9)
    s11 = b.p1(nn, nn)
    s12 = b.mp(s10, s11)
    b.mp(s7, s12)
    return b.build()


def _build_dneg_intro(b: ProofBuilder) -> Proof:
    s1 = b.p3(Not(Not(A)), A)
    s2 = b.lemma("dneg-elim", A=Not(A))
    b.mp(s2, s1)
    return b.build()


def _build_exfalso(b: ProofBuilder) -> Proof:
    s1 = b.p1(Not(B), Not(A))
    s2 = b.p3(A, B)
    b.hs(s1, s2)
    return b.build()


def _build_contrapose(b: ProofBuilder) -> Proof:
    s1 = b.premise(Implies(B, A))
    s2 = b.lemma("dneg-elim", A=B)
    s3 = b.hs(s2, s1)
    s4 = b.lemma("dneg-intro")
    s5 = b.hs(s3, s4)
    s6 = b.p3(Not(B), Not(A))
    b.mp(s5, s6)
    return _discharge(b, Implies(B, A))


def _build_peirce(b: ProofBuilder) -> Proof:
    premise = Implies(Implies(A, B), A)
    loop = Implies(Not(A), A)
    s1 = b.premise(premise)
    s2 = b.lemma("exfalso", A=B, B=A)
    s3 = b.hs(s2, s1)
    s4 = b.p1(Not(A), Not(Not(loop)))
    s5 = b.p3(Not(loop), A)
    s6 = b.hs(s4, s5)
    s7 = b.p2(Not(A), A, Not(loop))
    s8 = b.mp(s6, s7)
    s9 = b.mp(s3, s8)
    s10 = b.p3(A, loop)
    s11 = b.mp(s9, s10)
    b.mp(s3, s11)
    return _discharge(b, premise)


def _build_b_to_mp(b: ProofBuilder) -> Proof:
    s1 = b.premise(A)
    s2 = b.premise(Implies(A, B))
    b.mp(s1, s2)
    return _discharge(b, Implies(A, B), A)


def _build_neg_imp(b: ProofBuilder) -> Proof:
    s1 = b.lemma("b-to-mp")
    s2 = b.lemma("contrapose", A=B, B=Implies(A, B))
    b.hs(s1, s2)
    return b.build()


def _build_neg_self_exfalso(b: ProofBuilder) -> Proof:
    s1 = b.premise(Implies(Not(A), A))
    s2 = b.premise(Not(A))
    s3 = b.mp(s2, s1)
    s4 = b.lemma("exfalso", A=B, B=A)
    s5 = b.mp(s2, s4)
    b.mp(s3, s5)
    return _discharge(b, Not(A), Implies(Not(A), A))


def _build_dneg_antecedent(b: ProofBuilder) -> Proof:
    s1 = b.premise(Implies(B, C))
    s2 = b.lemma("dneg-elim", A=B)
    b.hs(s2, s1)
    return _discharge(b, Implies(B, C))


def _build_neg_self(b: ProofBuilder) -> Proof:
    s1 = b.premise(Implies(Not(A), A))
    s2 = b.lemma("neg-self-exfalso", B=Not(Implies(A, A)))
    s3 = b.mp(s1, s2)
    s4 = b.p3(A, Implies(A, A))
    s5 = b.mp(s3, s4)
    s6 = b.lemma("id")
    b.mp(s6, s5)
    return _discharge(b, Implies(Not(A), A))


def _build_case_split(b: ProofBuilder) -> Proof:
    s1 = b.premise(Implies(A, B))
    s2 = b.premise(Implies(Not(A), B))
    s3 = b.lemma("contrapose", A=B, B=Not(A))
    s4 = b.mp(s2, s3)
    s5 = b.lemma("dneg-antecedent", B=A, C=B)
    s6 = b.mp(s1, s5)
    s7 = b.hs(s4, s6)
    s8 = b.lemma("neg-self", A=B)
    b.mp(s7, s8)
    return _discharge(b, Implies(Not(A), B), Implies(A, B))


BUILDERS: Dict[str, Callable[[ProofBuilder], Proof]] = {
    "id": _build_id,
    "dneg-elim": _build_dneg_elim,
    "dneg-intro": _build_dneg_intro,
    "exfalso": _build_exfalso,
    "contrapose": _build_contrapose,
    "peirce": _build_peirce,
    "b-to-mp": _build_b_to_mp,
    "neg-imp": _build_neg_imp,
    "neg-self-exfalso": _build_neg_self_exfalso,
    "dneg-antecedent": _build_dneg_antecedent,
    "neg-self": _build_neg_self,
    "case-split": _build_case_split,
}


class LemmaLibrary:
    """
    Statements are fixed up front; template proofs are built on first use
    and may cite any lemma listed before them.
    """

    def __init__(self, statements: Optional[Mapping[str, str]] = None,
                 builders: Optional[Mapping[str, Callable[[ProofBuilder], Proof]]] = None):
        texts = STATEMENT_TEXT if statements is None else statements
        self.statements: Dict[str, Formula] = {name: parse(text) for name, text in texts.items()}
        self.builders = dict(BUILDERS if builders is None else builders)
        self._templates: Dict[str, LemmaTemplate] = {}
        self._expanded: Dict[str, Proof] = {}
        self._lock = threading.RLock()

    def names(self) -> List[str]:
        return list(self.statements)

    def __contains__(self, name: str) -> bool:
        return name in self.statements

    def statement(self, name: str) -> Formula:
        try:
            return self.statements[name]
        except KeyError:
            raise UnknownLemma(name) from None

    def conclusion(self, name: str, mapping: Mapping[str, Formula]) -> Formula:
        """The statement with the mapped formula variables replaced; unmapped ones stay"""
        return instantiate(self.statement(name), mapping)

    def get(self, name: str) -> LemmaTemplate:
        with self._lock:
            template = self._templates.get(name)
            if template is None:
                statement = self.statement(name)
                if name not in self.builders:
                    raise UnknownLemma(name)
                proof = self.builders[name](ProofBuilder(library=self))
                if proof.conclusion != statement:
                    raise SelfCheckFailed(f"lemma {name}", f"template concludes {proof.conclusion}")
                template = LemmaTemplate(name, statement, proof)
                self._templates[name] = template
                logger.debug("built lemma %s in %d steps", name, len(proof))
            return template

    def expanded(self, name: str) -> Proof:
        """Primitive (P1, P2, P3, MP only) proof of the lemma statement"""
        from logickernel.proofs.expansion import expand_lemmas

        with self._lock:
            proof = self._expanded.get(name)
            if proof is None:
                proof = expand_lemmas(self.get(name).proof, library=self)
                self._expanded[name] = proof
            return proof


_default: Optional[LemmaLibrary] = None
_default_lock = threading.Lock()


def default_library() -> LemmaLibrary:
    global _default
    with _default_lock:
        if _default is None:
            _default = LemmaLibrary()
        return _default
