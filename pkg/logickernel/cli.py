"""
Command line front end for the logic kernel
"""

import json
import logging
import sys
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence

import click

from logickernel.consequence import format_subset
from logickernel.core import Connective, Formula, cpr_depth, cpr_labels
from logickernel.errors import KernelError
from logickernel.fol import dump_structure, is_pd_prime
from logickernel.semantics import FAMILIES, Assignment, Strategy, format_table
from logickernel.system import KernelConfig, LogicKernel

# Exit codes: 0 success, 1 negative verdict, 2 usage, parse or domain error.
NEGATIVE = 1
ERROR = 2


@dataclass
class Session:
    kernel: LogicKernel
    json_output: bool
    trace: bool

    def emit(self, text: str, data: Optional[Dict[str, Any]] = None) -> None:
        if self.json_output:
            click.echo(json.dumps(data if data is not None else {"result": text}, sort_keys=True))
        else:
            click.echo(text)

    def emit_trace(self, lines: Sequence[str]) -> None:
        if self.trace and not self.json_output:
            for line in lines:
                click.echo(line)


class KernelGroup(click.Group):
    """Reports kernel errors on stderr with exit code 2"""

    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except (KernelError, OSError) as e:
            click.echo(f"error: {e}", err=True)
            ctx.exit(ERROR)


def _read(source: str) -> str:
    """Inline text, '-' for stdin, or @path for a file"""
    if source == "-":
        return sys.stdin.read()
    if source.startswith("@"):
        with open(source[1:], "r", encoding="utf-8") as f:
            return f.read()
    return source


def _formula_lines(text: str) -> List[str]:
    return [line.strip() for line in text.splitlines() if line.strip() and not line.strip().startswith("#")]


def _premises(kernel: LogicKernel, inline: Sequence[str], file: Optional[str], pd: bool = False) -> List[Formula]:
    parse = kernel.parse_pd if pd else kernel.parse
    texts = list(inline)
    if file is not None:
        texts += _formula_lines(_read(file if file == "-" else "@" + file))
    return [parse(t) for t in texts]


def _connectives(text: str) -> List[Connective]:
    try:
        return [Connective.parse(part) for part in text.split(",") if part.strip()]
    except ValueError as e:
        raise click.BadParameter(str(e)) from None


def _atoms(text: str) -> List[str]:
    return [part.strip() for part in text.split(",") if part.strip()]


def _row(text: str) -> Assignment:
    values: Dict[str, bool] = {}
    for item in _atoms(text):
        name, sep, value = item.partition("=")
        if not sep or value.strip().upper() not in ("T", "F", "1", "0"):
            raise click.BadParameter(f"expected NAME=T|F, found {item!r}")
        values[name.strip()] = value.strip().upper() in ("T", "1")
    return Assignment.of(values)


def _witness(a: Optional[Assignment]) -> Optional[Dict[str, bool]]:
    return a.as_dict() if a is not None else None


@click.group(cls=KernelGroup)
@click.option("--format", "output_format", type=click.Choice(["text", "json"]), default="text",
              help="Output format")
@click.option("--config", "config_path", type=click.Path(dir_okay=False), default=None,
              help="YAML configuration file")
@click.option("--cap", type=int, default=None, help="Override the enumeration, subset and interpretation caps")
@click.option("--max-domain", type=int, default=None, help="Largest domain size for model search")
@click.option("--trace", is_flag=True, help="Print the search trace")
@click.option("--verbose", is_flag=True, help="Debug logging")
@click.pass_context
def main(ctx: click.Context, output_format: str, config_path: Optional[str], cap: Optional[int],
         max_domain: Optional[int], trace: bool, verbose: bool):
    """Propositional and first-order logic kernel"""
    config = KernelConfig.load(config_path)
    if cap is not None:
        config.enumeration_cap = config.subset_cap = config.interpretation_cap = cap
    if max_domain is not None:
        config.max_domain = max_domain
    level = logging.DEBUG if verbose else getattr(logging, str(config.log_level).upper(), logging.WARNING)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
    ctx.obj = Session(LogicKernel(config=config), output_format == "json", trace)


# formulas

@main.command("parse")
@click.argument("text")
@click.pass_obj
def parse_cmd(s: Session, text: str):
    """Print a formula in atomic form"""
    f = s.kernel.parse(_read(text).strip())
    s.emit(s.kernel.print_atomic(f), {"formula": s.kernel.print_atomic(f), "size": s.kernel.size(f)})


@main.command("size")
@click.argument("text")
@click.pass_obj
def size_cmd(s: Session, text: str):
    n = s.kernel.size(s.kernel.parse(_read(text).strip()))
    s.emit(str(n), {"size": n})


@main.command("pairs")
@click.argument("text")
@click.option("--labels", is_flag=True, help="Name the parentheses a, b, c, ... instead of offsets")
@click.pass_obj
def pairs_cmd(s: Session, text: str, labels: bool):
    """Common pairs of parentheses"""
    source = _read(text).strip()
    if labels:
        pairs = cpr_labels(source)
        depth = cpr_depth(source)
        s.emit("\n".join(f"({a},{b})" for a, b in pairs) + f"\ndepth {depth}",
               {"pairs": [list(p) for p in pairs], "depth": depth})
        return
    spans = s.kernel.common_pairs(source)
    s.emit("\n".join(f"({p.open_index},{p.close_index})" for p in spans),
           {"pairs": [[p.open_index, p.close_index] for p in spans]})


@main.command("levels")
@click.argument("n", type=int)
@click.option("--atoms", "atom_list", default="P,Q", show_default=True)
@click.option("--connectives", default="&", show_default=True)
@click.option("--no-verify", is_flag=True, help="Recurrence only")
@click.pass_obj
def levels_cmd(s: Session, n: int, atom_list: str, connectives: str, no_verify: bool):
    """Number of formulas in level L_n"""
    result = s.kernel.enumerate_level(_atoms(atom_list), _connectives(connectives), n, verify=not no_verify)
    s.emit(str(result.count), {"level": n, "count": result.count, "verified": result.verified_count})


# truth tables and consequence

@main.command("table")
@click.argument("formulas", nargs=-1, required=True)
@click.pass_obj
def table_cmd(s: Session, formulas):
    table = s.kernel.truth_table([s.kernel.parse(_read(t).strip()) for t in formulas])
    s.emit(format_table(table), {
        "atoms": table.atoms,
        "columns": [str(f) for f in table.columns],
        "rows": [["T" if v else "F" for v in row] for row in table.rows],
    })


@main.command("classify")
@click.argument("text")
@click.pass_obj
def classify_cmd(s: Session, text: str):
    """valid, contradiction or contingent"""
    c = s.kernel.classify(s.kernel.parse(_read(text).strip()))
    s.emit(c.status.value, {
        "status": c.status.value,
        "true_witness": _witness(c.true_witness),
        "false_witness": _witness(c.false_witness),
    })


@main.command("equiv")
@click.argument("a")
@click.argument("b")
@click.pass_context
def equiv_cmd(ctx: click.Context, a: str, b: str):
    """Exit 1 when the formulas are not equivalent"""
    s: Session = ctx.obj
    same = s.kernel.equivalent(s.kernel.parse(a), s.kernel.parse(b))
    s.emit("equivalent" if same else "not equivalent", {"equivalent": same})
    if not same:
        ctx.exit(NEGATIVE)


@main.command("consequence")
@click.argument("formulas", nargs=-1)
@click.option("--file", "premise_file", default=None, help="Premises, one per line ('-' for stdin)")
@click.option("--strategy", type=click.Choice(["forcing", "table", "refutation"]), default="forcing")
@click.pass_context
def consequence_cmd(ctx: click.Context, formulas, premise_file: Optional[str], strategy: str):
    """PREMISES... CONCLUSION: exit 1 when the consequence is invalid"""
    s: Session = ctx.obj
    if not formulas:
        raise click.UsageError("a conclusion is required")
    premises = _premises(s.kernel, formulas[:-1], premise_file)
    goal = s.kernel.parse(formulas[-1])
    if strategy == "refutation":
        verdict = s.kernel.consequence_by_refutation(premises, goal)
    else:
        verdict = s.kernel.valid_consequence(premises, goal, Strategy(strategy))
    s.emit_trace(verdict.trace)
    text = verdict.status.value
    if verdict.witness is not None:
        text += f"\n{verdict.witness}"
    s.emit(text, {"status": verdict.status.value, "witness": _witness(verdict.witness),
                  "trace": list(verdict.trace)})
    if not verdict.valid:
        ctx.exit(NEGATIVE)


@main.command("sat")
@click.argument("formulas", nargs=-1)
@click.option("--file", "premise_file", default=None, help="Formulas, one per line ('-' for stdin)")
@click.pass_context
def sat_cmd(ctx: click.Context, formulas, premise_file: Optional[str]):
    """Exit 1 when the set is unsatisfiable"""
    s: Session = ctx.obj
    verdict = s.kernel.satisfiable(_premises(s.kernel, formulas, premise_file))
    s.emit_trace(verdict.trace)
    text = verdict.status.value
    if verdict.witness is not None:
        text += f"\n{verdict.witness}"
    s.emit(text, {"status": verdict.status.value, "witness": _witness(verdict.witness),
                  "trace": list(verdict.trace)})
    if not verdict.satisfiable:
        ctx.exit(NEGATIVE)


@main.command("extend")
@click.argument("formulas", nargs=-1)
@click.option("--atoms", "atom_list", default="P,Q", show_default=True)
@click.option("--connectives", default="~,->", show_default=True)
@click.option("--max-size", type=int, default=1, show_default=True)
@click.pass_obj
def extend_cmd(s: Session, formulas, atom_list: str, connectives: str, max_size: int):
    """Maximal satisfiable extension of the given set within a universe of small formulas"""
    universe = s.kernel.formula_universe(_atoms(atom_list), _connectives(connectives), max_size)
    extension = s.kernel.maximal_extension([s.kernel.parse(t) for t in formulas], list(universe))
    lines = [str(f) for f in extension.formulas]
    s.emit("\n".join(lines + [str(extension.assignment)]),
           {"formulas": lines, "assignment": extension.assignment.as_dict()})


@main.command("compactness")
@click.argument("family", type=click.Choice(sorted(FAMILIES)))
@click.argument("k", type=int)
@click.pass_obj
def compactness_cmd(s: Session, family: str, k: int):
    """Check the finite subsets of a named premise family"""
    report = s.kernel.finite_subsets_satisfiable(FAMILIES[family], k)
    if report.first_unsatisfiable is not None:
        text = "unsatisfiable at {" + ", ".join(f"A{i}" for i in report.first_unsatisfiable) + "}"
    else:
        text = f"all {report.subsets_checked} subsets satisfiable"
    if report.truncated:
        text += " (truncated at the subset cap)"
    s.emit(text, {"checked": report.subsets_checked, "truncated": report.truncated,
                  "first_unsatisfiable": report.first_unsatisfiable})


# normal forms

def _transform(name: str, method: str, doc: str):
    @main.command(name, help=doc)
    @click.argument("text")
    @click.pass_obj
    def command(s: Session, text: str):
        result = getattr(s.kernel, method)(s.kernel.parse(_read(text).strip()))
        s.emit(str(result), {"formula": str(result)})
    return command


_transform("nnf", "reduce_nf", "Negation normal form over ~, & and |")
_transform("denial", "denial", "Denial of a negation normal form")
_transform("fdnf", "fdnf", "Full disjunctive normal form")


# proofs

def _verdict(ctx: click.Context, verdict) -> None:
    s: Session = ctx.obj
    s.emit(str(verdict), {
        "accepted": verdict.accepted,
        "step": verdict.step,
        "reason": verdict.reason.value if verdict.reason is not None else None,
        "used_premises": [str(p) for p in verdict.used_premises],
    })
    if not verdict.accepted:
        ctx.exit(NEGATIVE)


@main.command("prove-check")
@click.argument("script")
@click.pass_context
def prove_check_cmd(ctx: click.Context, script: str):
    """Check a proof script (a path, or '-' for stdin)"""
    s: Session = ctx.obj
    proof = s.kernel.parse_proof(_read(script if script == "-" else "@" + script))
    _verdict(ctx, s.kernel.check_proof(proof))


@main.command("deduce")
@click.argument("script")
@click.option("--discharge", required=True, help="Premise to discharge")
@click.pass_obj
def deduce_cmd(s: Session, script: str, discharge: str):
    proof = s.kernel.parse_proof(_read(script if script == "-" else "@" + script))
    result = s.kernel.deduction_transform(proof, s.kernel.parse(discharge))
    s.emit(s.kernel.format_proof(result).rstrip("\n"), {"proof": s.kernel.format_proof(result)})


@main.command("synth")
@click.argument("text")
@click.pass_obj
def synth_cmd(s: Session, text: str):
    """Primitive proof of a tautology"""
    proof = s.kernel.synthesize_proof(s.kernel.parse(_read(text).strip()))
    s.emit(s.kernel.format_proof(proof).rstrip("\n"), {"proof": s.kernel.format_proof(proof)})


@main.command("deducibility")
@click.argument("text")
@click.option("--row", required=True, help="Assignment such as P=T,Q=F")
@click.pass_obj
def deducibility_cmd(s: Session, text: str, row: str):
    proof = s.kernel.deducibility_proof(s.kernel.parse(_read(text).strip()), _row(row))
    s.emit(s.kernel.format_proof(proof).rstrip("\n"), {"proof": s.kernel.format_proof(proof)})


# consequence operators

def _universe_options(command):
    command = click.option("--max-size", type=int, default=2, show_default=True)(command)
    command = click.option("--connectives", default="&,->,~", show_default=True)(command)
    command = click.option("--atoms", "atom_list", default="P,Q", show_default=True)(command)
    return command


@main.command("closure")
@click.argument("formulas", nargs=-1)
@_universe_options
@click.option("--level", type=int, default=None, help="Restrict MP to implications of at most this size")
@click.pass_obj
def closure_cmd(s: Session, formulas, atom_list: str, connectives: str, max_size: int, level: Optional[int]):
    """S (or S_n) closure of a subset of the universe"""
    u = s.kernel.formula_universe(_atoms(atom_list), _connectives(connectives), max_size)
    gamma = [s.kernel.parse(t) for t in formulas]
    result = s.kernel.closure_S(gamma, u) if level is None else s.kernel.closure_Sn(gamma, u, level)
    s.emit(format_subset(result), {"closure": sorted(str(f) for f in result)})


@main.command("op-check")
@_universe_options
@click.option("--level", type=int, default=None)
@click.option("--samples", "sample_file", default=None,
              help="Subsets separated by blank lines; default is the empty set and every singleton")
@click.pass_context
def op_check_cmd(ctx: click.Context, atom_list: str, connectives: str, max_size: int,
                 level: Optional[int], sample_file: Optional[str]):
    """Consequence operator axioms on sample subsets; exit 1 on a violation"""
    s: Session = ctx.obj
    u = s.kernel.formula_universe(_atoms(atom_list), _connectives(connectives), max_size)
    if sample_file is None:
        samples = [frozenset()] + [frozenset([f]) for f in u]
    else:
        blocks = _read("@" + sample_file).split("\n\n")
        samples = [frozenset(s.kernel.parse(t) for t in _formula_lines(block)) for block in blocks]
    op = s.kernel.operator(u, level)
    report = s.kernel.check_operator_axioms(op, samples)
    theorems = s.kernel.idempotent_theorems(op, samples)
    s.emit(f"{report}\nidempotent-theorems: {'pass' if theorems.consistent else 'fail'}", {
        "operator": report.operator,
        "checks": {c.name: c.passed for c in report.checks},
        "idempotent_theorems": theorems.consistent,
    })
    if not (report.passed and theorems.consistent):
        ctx.exit(NEGATIVE)


# first-order syntax

@main.command("pd-parse")
@click.argument("text")
@click.pass_obj
def pd_parse_cmd(s: Session, text: str):
    f = s.kernel.parse_pd(_read(text).strip())
    s.emit(s.kernel.print_pd(f), {"formula": s.kernel.print_pd(f), "pd_prime": is_pd_prime(f),
                                  "sentence": s.kernel.is_sentence(f)})


@main.command("occ")
@click.argument("text")
@click.pass_obj
def occ_cmd(s: Session, text: str):
    """Free and bound variables"""
    report = s.kernel.occurrences(s.kernel.parse_pd(_read(text).strip()))
    free, bound = report.free_names(), report.bound_names()
    s.emit(f"free: {', '.join(free)}\nbound: {', '.join(bound)}", {
        "free": free,
        "bound": bound,
        "occurrences": [
            {"name": o.name, "position": list(o.position), "argument": o.argument, "free": o.free}
            for o in report.occurrences
        ],
    })


@main.command("congruent")
@click.argument("a")
@click.argument("b")
@click.pass_context
def congruent_cmd(ctx: click.Context, a: str, b: str):
    s: Session = ctx.obj
    same = s.kernel.congruent(s.kernel.parse_pd(a), s.kernel.parse_pd(b))
    s.emit("congruent" if same else "not congruent", {"congruent": same})
    if not same:
        ctx.exit(NEGATIVE)


@main.command("subst")
@click.argument("text")
@click.argument("variable")
@click.argument("term")
@click.pass_obj
def subst_cmd(s: Session, text: str, variable: str, term: str):
    """S^x_t: the term at every free occurrence of the variable"""
    f = s.kernel.parse_pd(_read(text).strip())
    result = s.kernel.subst_free(f, variable, term)
    free = s.kernel.free_for(f, variable, term)
    note = "" if free else f"\n{term} is not free for {variable}"
    s.emit(s.kernel.print_pd(result) + note, {"formula": s.kernel.print_pd(result), "free_for": free})


@main.command("closure-univ")
@click.argument("text")
@click.pass_obj
def closure_univ_cmd(s: Session, text: str):
    result = s.kernel.universal_closure(s.kernel.parse_pd(_read(text).strip()))
    s.emit(s.kernel.print_pd(result), {"formula": s.kernel.print_pd(result)})


@main.command("prenex")
@click.argument("text")
@click.pass_obj
def prenex_cmd(s: Session, text: str):
    result = s.kernel.prenex(s.kernel.parse_pd(_read(text).strip()))
    s.emit(s.kernel.print_pd(result), {"formula": s.kernel.print_pd(result)})


# structures and model search

@main.command("model")
@click.argument("structure")
@click.argument("text")
@click.pass_context
def model_cmd(ctx: click.Context, structure: str, text: str):
    """Whether a structure document (a path) models a formula; exit 1 when it does not"""
    s: Session = ctx.obj
    m = s.kernel.load_structure(_read("@" + structure))
    verdict = s.kernel.models(m, s.kernel.parse_pd(text))
    s.emit_trace(verdict.trace)
    s.emit("holds" if verdict.holds else "fails", {"holds": verdict.holds, "trace": list(verdict.trace)})
    if not verdict.holds:
        ctx.exit(NEGATIVE)


@main.command("countermodel")
@click.argument("text")
@click.pass_context
def countermodel_cmd(ctx: click.Context, text: str):
    """n-validity for each domain size; exit 1 with the first countermodel"""
    s: Session = ctx.obj
    report = s.kernel.valid_over(s.kernel.parse_pd(text))
    shown = {True: "valid", False: "invalid", None: "unknown"}
    lines = [f"{n}: {shown[v]}" for n, v in sorted(report.sizes.items())]
    if report.countermodel is not None:
        lines.append(f"countermodel: {report.countermodel}")
    s.emit("\n".join(lines), {
        "sizes": {str(n): v for n, v in report.sizes.items()},
        "countermodel": json.loads(dump_structure(report.countermodel)) if report.countermodel else None,
    })
    if report.countermodel is not None:
        ctx.exit(NEGATIVE)


@main.command("pd-consequence")
@click.argument("formulas", nargs=-1)
@click.option("--file", "premise_file", default=None, help="Premises, one per line ('-' for stdin)")
@click.option("--satisfiable", "sat_only", is_flag=True, help="Search for a model of all formulas instead")
@click.pass_context
def pd_consequence_cmd(ctx: click.Context, formulas, premise_file: Optional[str], sat_only: bool):
    """PREMISES... CONCLUSION, checked over every domain up to --max-domain"""
    s: Session = ctx.obj
    if sat_only:
        verdict = s.kernel.fol_satisfiable(_premises(s.kernel, formulas, premise_file, pd=True))
        negative = verdict.structure is None
    else:
        if not formulas:
            raise click.UsageError("a conclusion is required")
        premises = _premises(s.kernel, formulas[:-1], premise_file, pd=True)
        verdict = s.kernel.fol_consequence(premises, s.kernel.parse_pd(formulas[-1]))
        negative = verdict.structure is not None
    s.emit(str(verdict), {
        "status": verdict.status.value,
        "bound": verdict.bound,
        "structure": json.loads(dump_structure(verdict.structure)) if verdict.structure else None,
    })
    if negative:
        ctx.exit(NEGATIVE)


# first-order proofs

@main.command("pd-prove-check")
@click.argument("script")
@click.pass_context
def pd_prove_check_cmd(ctx: click.Context, script: str):
    s: Session = ctx.obj
    proof = s.kernel.parse_pd_proof(_read(script if script == "-" else "@" + script))
    _verdict(ctx, s.kernel.check_pd_proof(proof))


@main.command("pd-deduce")
@click.argument("script")
@click.option("--discharge", required=True, help="Premise to discharge")
@click.pass_obj
def pd_deduce_cmd(s: Session, script: str, discharge: str):
    proof = s.kernel.parse_pd_proof(_read(script if script == "-" else "@" + script))
    result = s.kernel.pd_deduction_transform(proof, s.kernel.parse_pd(discharge))
    text = s.kernel.format_pd_proof(result)
    s.emit(text.rstrip("\n"), {"proof": text})


# circuits

@main.command("compile")
@click.argument("text", required=False)
@click.option("--output", "output_name", default="OUT", show_default=True)
@click.option("--half-adder", "adder", is_flag=True, help="Print the half adder instead")
@click.pass_obj
def compile_cmd(s: Session, text: Optional[str], output_name: str, adder: bool):
    """Netlist for a formula over ~, & and |"""
    if adder:
        netlist = s.kernel.half_adder()
    elif text is None:
        raise click.UsageError("a formula or --half-adder is required")
    else:
        netlist = s.kernel.compile_circuit(s.kernel.parse(_read(text).strip()), output_name)
    text_form = s.kernel.format_netlist(netlist)
    s.emit(text_form.rstrip("\n"), {"netlist": text_form})


@main.command("simulate")
@click.argument("netlist")
@click.option("--set", "assignments", multiple=True, help="NAME=1 or NAME=0, repeatable")
@click.pass_obj
def simulate_cmd(s: Session, netlist: str, assignments):
    circuit = s.kernel.parse_netlist(_read(netlist if netlist == "-" else "@" + netlist))
    values = {}
    for item in assignments:
        name, sep, value = item.partition("=")
        if not sep or value not in ("0", "1"):
            raise click.BadParameter(f"expected NAME=0|1, found {item!r}")
        values[name] = value == "1"
    outputs = s.kernel.simulate(circuit, values)
    s.emit("\n".join(f"{name}={int(v)}" for name, v in outputs.items()),
           {name: int(v) for name, v in outputs.items()})


@main.command("circuit-equiv")
@click.argument("first")
@click.argument("second")
@click.pass_context
def circuit_equiv_cmd(ctx: click.Context, first: str, second: str):
    s: Session = ctx.obj
    n1 = s.kernel.parse_netlist(_read("@" + first))
    n2 = s.kernel.parse_netlist(_read("@" + second))
    same = s.kernel.equivalent_netlists(n1, n2)
    s.emit("equivalent" if same else "not equivalent", {"equivalent": same})
    if not same:
        ctx.exit(NEGATIVE)


if __name__ == "__main__":
    main()
