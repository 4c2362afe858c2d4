"""
Kernel configuration and the LogicKernel facade
"""

import logging
from dataclasses import dataclass, fields
from pathlib import Path
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Union

import yaml

from logickernel.circuits import (
    Netlist, compile_circuit, equivalent_netlists, format_netlist, half_adder, parse_netlist, simulate,
)
from logickernel.consequence import (
    FormulaUniverse, IdempotentReport, OperatorReport, OperatorTable, check_operator_axioms,
    closure_S, closure_Sn, formula_universe, idempotent_theorems, s_operator, sn_operator,
)
from logickernel.core import (
    Connective, Formula, LevelEnumeration, common_pairs, enumerate_level, parse, print_atomic,
    size, subformulas, substitute_atoms, substitute_subformula, to_Lprime,
)
from logickernel.fol import (
    FolVerdict, ModelVerdict, OccurrenceReport, SoundnessReport, Structure, ValidityReport,
    check_pd_proof, congruent, fol_consequence, fol_satisfiable, free_for, is_sentence,
    load_structure, models, occurrences, parse_pd, pd_deduction_transform, pd_soundness_spotcheck,
    format_pd_proof, parse_pd_proof, prenex, print_pd, subst_free, universal_closure, valid_over,
)
from logickernel.normal import denial, fdnf, reduce_nf
from logickernel.proofs import (
    Proof, ProofVerdict, check_proof, deducibility_proof, deduction_transform, expand_lemmas,
    format_proof, instantiate_axiom, parse_proof, synthesize_proof, verify_soundness,
)
from logickernel.semantics import (
    Assignment, Classification, CompactnessReport, ConsequenceVerdict, Extension, SatVerdict,
    Strategy, TruthTable, canonical_assignments, classify, consequence_by_refutation, equivalent,
    evaluate, finite_subsets_satisfiable, maximal_extension, satisfiable, truth_table,
    valid_consequence,
)

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_PATH = Path("config") / "kernel.yaml"

# YAML section of each setting; flat top-level keys are accepted as well.
SECTIONS: Dict[str, str] = {
    "enumeration_cap": "enumeration",
    "subset_cap": "semantics",
    "synthesis_atom_cap": "proofs",
    "proof_size_warning": "proofs",
    "interpretation_cap": "fol",
    "max_domain": "fol",
    "strict_arity": "fol",
    "netlist_input_cap": "circuits",
    "log_level": "logging",
}


@dataclass
class KernelConfig:
    """Caps and switches forwarded by the facade to every operation that takes one"""
    enumeration_cap: int = 5_000_000
    subset_cap: int = 65_536
    interpretation_cap: int = 1_048_576
    synthesis_atom_cap: int = 6
    netlist_input_cap: int = 20
    proof_size_warning: int = 100_000
    max_domain: int = 3
    strict_arity: bool = True
    log_level: str = "WARNING"

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "KernelConfig":
        known = {f.name for f in fields(cls)}
        sections = set(SECTIONS.values())
        values: Dict[str, Any] = {}
        for key, value in (data or {}).items():
            if key in sections and isinstance(value, Mapping):
                for name, setting in value.items():
                    if name in known and SECTIONS[name] == key:
                        values[name] = setting
                    else:
                        logger.warning("ignoring unknown setting %s.%s", key, name)
            elif key in known:
                values[key] = value
            else:
                logger.warning("ignoring unknown setting %s", key)
        return cls(**values)

    @classmethod
    def load(cls, path: Optional[Union[str, Path]] = None) -> "KernelConfig":
        """
        Read a YAML configuration file.

        Args:
            path: File to read; config/kernel.yaml when omitted

        Returns:
            The configuration, or the defaults when the file does not exist
        """
        target = Path(path) if path is not None else DEFAULT_CONFIG_PATH
        try:
            with open(target, "r", encoding="utf-8") as f:
                data = yaml.safe_load(f) or {}
        except FileNotFoundError:
            logger.warning("%s not found, using defaults", target)
            return cls()
        config = cls.from_dict(data)
        logger.info("loaded configuration from %s", target)
        return config

    def as_sections(self) -> Dict[str, Dict[str, Any]]:
        grouped: Dict[str, Dict[str, Any]] = {}
        for f in fields(self):
            grouped.setdefault(SECTIONS[f.name], {})[f.name] = getattr(self, f.name)
        return grouped


class LogicKernel:
    """Main entry point coordinating every component with the configured caps"""

    def __init__(self, config_path: Optional[Union[str, Path]] = None,
                 config: Optional[KernelConfig] = None):
        self.config = config or KernelConfig.load(config_path)

    # formulas

    def parse(self, text: str) -> Formula:
        return parse(text)

    def print_atomic(self, f: Formula) -> str:
        return print_atomic(f)

    def size(self, f: Formula) -> int:
        return size(f)

    def common_pairs(self, text: str):
        return common_pairs(text)

    def subformulas(self, f: Formula) -> List[Formula]:
        return subformulas(f)

    def substitute_atoms(self, f: Formula, mapping: Mapping[str, Formula]) -> Formula:
        return substitute_atoms(f, mapping)

    def substitute_subformula(self, c: Formula, occurrence, b: Formula) -> Formula:
        return substitute_subformula(c, occurrence, b)

    def enumerate_level(self, atoms: Sequence[str], connectives: Iterable[Connective], n: int,
                        iterate: bool = False, verify: bool = True) -> LevelEnumeration:
        return enumerate_level(atoms, connectives, n, self.config.enumeration_cap, iterate, verify)

    def to_Lprime(self, f: Formula) -> Formula:
        return to_Lprime(f)

    # truth tables and consequence

    def canonical_assignments(self, atoms: Sequence[str]) -> List[Assignment]:
        return list(canonical_assignments(atoms))

    def eval(self, f: Formula, a: Assignment) -> bool:
        return evaluate(f, a)

    def truth_table(self, fs: Sequence[Formula]) -> TruthTable:
        return truth_table(fs)

    def classify(self, f: Formula) -> Classification:
        return classify(f)

    def equivalent(self, a: Formula, b: Formula) -> bool:
        return equivalent(a, b)

    def valid_consequence(self, premises: Sequence[Formula], b: Formula,
                          strategy: Strategy = Strategy.FORCING) -> ConsequenceVerdict:
        return valid_consequence(premises, b, strategy)

    def satisfiable(self, fs: Sequence[Formula], strategy: Strategy = Strategy.FORCING) -> SatVerdict:
        return satisfiable(fs, strategy)

    def consequence_by_refutation(self, premises: Sequence[Formula], b: Formula,
                                  strategy: Strategy = Strategy.FORCING) -> ConsequenceVerdict:
        return consequence_by_refutation(premises, b, strategy)

    def maximal_extension(self, gamma: Sequence[Formula], universe: Sequence[Formula],
                          strategy: Strategy = Strategy.TABLE) -> Extension:
        return maximal_extension(gamma, universe, strategy)

    def finite_subsets_satisfiable(self, family, k: int) -> CompactnessReport:
        return finite_subsets_satisfiable(family, k, self.config.subset_cap)

    # normal forms

    def reduce_nf(self, f: Formula) -> Formula:
        return reduce_nf(f)

    def denial(self, f: Formula) -> Formula:
        return denial(f)

    def fdnf(self, f: Formula) -> Formula:
        return fdnf(f)

    # proofs

    def instantiate_axiom(self, schema: str, parts: Sequence[Formula]) -> Formula:
        return instantiate_axiom(schema, parts)

    def check_proof(self, proof: Proof) -> ProofVerdict:
        return check_proof(proof)

    def expand_lemmas(self, proof: Proof) -> Proof:
        return expand_lemmas(proof)

    def deduction_transform(self, proof: Proof, a: Formula) -> Proof:
        return deduction_transform(proof, a)

    def deducibility_proof(self, f: Formula, row: Assignment) -> Proof:
        return deducibility_proof(f, row)

    def synthesize_proof(self, f: Formula) -> Proof:
        return synthesize_proof(f, self.config.synthesis_atom_cap, self.config.proof_size_warning)

    def verify_soundness(self, proof: Proof) -> ProofVerdict:
        return verify_soundness(proof)

    def parse_proof(self, text: str, premises: Optional[Sequence[Formula]] = None) -> Proof:
        return parse_proof(text, premises)

    def format_proof(self, proof: Proof) -> str:
        return format_proof(proof)

    # consequence operators

    def formula_universe(self, atoms: Sequence[str], connectives: Iterable[Connective],
                         max_size: int) -> FormulaUniverse:
        return formula_universe(atoms, connectives, max_size, self.config.enumeration_cap)

    def closure_S(self, gamma: Iterable[Formula], u: FormulaUniverse):
        return closure_S(gamma, u)

    def closure_Sn(self, gamma: Iterable[Formula], u: FormulaUniverse, n: int):
        return closure_Sn(gamma, u, n)

    def check_operator_axioms(self, op: OperatorTable, samples: Iterable[Iterable[Formula]]) -> OperatorReport:
        return check_operator_axioms(op, samples)

    def operator(self, u: FormulaUniverse, level: Optional[int] = None) -> OperatorTable:
        """S on u, or S_n when a level is given"""
        return s_operator(u) if level is None else sn_operator(u, level)

    def idempotent_theorems(self, op: OperatorTable, samples=None) -> IdempotentReport:
        return idempotent_theorems(op, samples)

    # first-order syntax

    def parse_pd(self, text: str) -> Formula:
        return parse_pd(text, self.config.strict_arity)

    def print_pd(self, f: Formula) -> str:
        return print_pd(f)

    def occurrences(self, f: Formula) -> OccurrenceReport:
        return occurrences(f)

    def is_sentence(self, f: Formula) -> bool:
        return is_sentence(f)

    def congruent(self, a: Formula, b: Formula) -> bool:
        return congruent(a, b)

    def subst_free(self, f: Formula, x, lam) -> Formula:
        return subst_free(f, x, lam)

    def free_for(self, f: Formula, x, v) -> bool:
        return free_for(f, x, v)

    def universal_closure(self, f: Formula) -> Formula:
        return universal_closure(f)

    def prenex(self, f: Formula) -> Formula:
        return prenex(f)

    # structures and model search

    def load_structure(self, doc) -> Structure:
        return load_structure(doc)

    def models(self, m: Structure, f: Formula) -> ModelVerdict:
        return models(m, f)

    def valid_over(self, f: Formula, max_domain: Optional[int] = None) -> ValidityReport:
        return valid_over(f, max_domain or self.config.max_domain, self.config.interpretation_cap)

    def fol_consequence(self, premises: Sequence[Formula], b: Formula,
                        max_domain: Optional[int] = None) -> FolVerdict:
        return fol_consequence(premises, b, max_domain or self.config.max_domain,
                               self.config.interpretation_cap)

    def fol_satisfiable(self, premises: Sequence[Formula], max_domain: Optional[int] = None) -> FolVerdict:
        return fol_satisfiable(premises, max_domain or self.config.max_domain,
                               self.config.interpretation_cap)

    # first-order proofs

    def check_pd_proof(self, proof: Proof) -> ProofVerdict:
        return check_pd_proof(proof)

    def pd_deduction_transform(self, proof: Proof, a: Formula) -> Proof:
        return pd_deduction_transform(proof, a)

    def pd_soundness_spotcheck(self, proof: Proof, structures: Iterable[Structure]) -> SoundnessReport:
        return pd_soundness_spotcheck(proof, structures)

    def parse_pd_proof(self, text: str, premises: Optional[Sequence[Formula]] = None) -> Proof:
        return parse_pd_proof(text, premises, self.config.strict_arity)

    def format_pd_proof(self, proof: Proof) -> str:
        return format_pd_proof(proof)

    # circuits

    def compile_circuit(self, f: Formula, output: str = "OUT") -> Netlist:
        return compile_circuit(f, output)

    def simulate(self, netlist: Netlist, values: Mapping[str, Any]) -> Dict[str, bool]:
        return simulate(netlist, values)

    def equivalent_netlists(self, n1: Netlist, n2: Netlist) -> bool:
        return equivalent_netlists(n1, n2, self.config.netlist_input_cap)

    def half_adder(self) -> Netlist:
        return half_adder()

    def parse_netlist(self, text: str) -> Netlist:
        return parse_netlist(text)

    def format_netlist(self, netlist: Netlist) -> str:
        return format_netlist(netlist)
