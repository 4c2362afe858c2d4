"""
Syntax of Pd: size, free and bound occurrences, congruence, substitution,
universal closure, rectification and prenex form
"""

import itertools
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterator, List, Optional, Set, Tuple, Union

from logickernel.core.models import And, Binary, Formula, Iff, Implies, Not, Or
from logickernel.core.syntax import Position
from logickernel.fol.models import Const, Exists, Forall, Pred, Quantified, Term, Var, make_term

VariableLike = Union[Var, str]
TermLike = Union[Var, Const, str]

# Fresh names for renamed binders are tried in this order.
FRESH_LETTERS = ("x", "y", "z", "w", "v", "u")


def variable_name(x: VariableLike) -> str:
    return x.name if isinstance(x, Var) else x


def as_term(t: TermLike) -> Term:
    return make_term(t) if isinstance(t, str) else t


def variable_key(name: str) -> Tuple[str, int]:
    """Canonical order: letter first (w < x < y < z), then subscript, bare letter before 1"""
    return (name[0], int(name[1:]) if name[1:] else -1)


def pd_size(f: Formula) -> int:
    """Least level Pd_n holding f: predicates 0, ~ and quantifiers add 1, binaries 1 + max"""
    children = f.children()
    if not children:
        return 0
    return 1 + max(pd_size(child) for child in children)


def is_pd_prime(f: Formula) -> bool:
    return not any(isinstance(node, Exists) for node in f.walk())


def to_pd_prime(f: Formula) -> Formula:
    """Every exists x A written as ~(forall x (~A))"""
    children = f.children()
    if not children:
        return f
    parts = tuple(to_pd_prime(child) for child in children)
    if isinstance(f, Exists):
        return Not(Forall(f.var, Not(parts[0])))
    return f.rebuild(parts)


@dataclass(frozen=True)
class Occurrence:
    """
    One occurrence of a variable or constant. argument is the index among
    the predicate's terms, or None for the variable written after a quantifier.
    """
    name: str
    position: Position
    argument: Optional[int]
    free: bool
    binder: Optional[Position] = None
    constant: bool = False


@dataclass(frozen=True)
class Scope:
    position: Position
    var: str
    body: Formula


@dataclass
class OccurrenceReport:
    occurrences: List[Occurrence] = field(default_factory=list)
    scopes: List[Scope] = field(default_factory=list)

    def of(self, name: str) -> List[Occurrence]:
        return [o for o in self.occurrences if o.name == name]

    def free_names(self) -> List[str]:
        return sorted({o.name for o in self.occurrences if o.free}, key=variable_key)

    def bound_names(self) -> List[str]:
        names = {o.name for o in self.occurrences if not o.free and not o.constant}
        return sorted(names, key=variable_key)


def occurrences(f: Formula) -> OccurrenceReport:
    """
    Mark every term occurrence. Constants are never free; the variable after a
    quantifier and the unmarked occurrences of it inside the scope are bound
    to that quantifier; everything else is free.
    """
    report = OccurrenceReport()

    def visit(node: Formula, path: Position, env: Dict[str, Position]) -> None:
        if isinstance(node, Quantified):
            name = node.var.name
            report.occurrences.append(Occurrence(name, path, None, False, binder=path))
            report.scopes.append(Scope(path, name, node.body))
            visit(node.body, path + (0,), {**env, name: path})
            return
        if isinstance(node, Pred):
            for k, t in enumerate(node.args):
                if isinstance(t, Const):
                    report.occurrences.append(Occurrence(t.name, path, k, False, constant=True))
                elif t.name in env:
                    report.occurrences.append(Occurrence(t.name, path, k, False, binder=env[t.name]))
                else:
                    report.occurrences.append(Occurrence(t.name, path, k, True))
            return
        for k, child in enumerate(node.children()):
            visit(child, path + (k,), env)

    visit(f, (), {})
    return report


def free_vars(f: Formula) -> List[str]:
    return occurrences(f).free_names()


def bound_vars(f: Formula) -> List[str]:
    return occurrences(f).bound_names()


def is_sentence(f: Formula) -> bool:
    return not free_vars(f)


def variable_names(f: Formula) -> Set[str]:
    """Every variable name written in f, free or bound"""
    return {o.name for o in occurrences(f).occurrences if not o.constant}


def constants(f: Formula) -> List[str]:
    found: Dict[str, None] = {}
    for node in f.walk():
        if isinstance(node, Pred):
            for t in node.args:
                if isinstance(t, Const):
                    found.setdefault(t.name, None)
    return list(found)


def predicates(f: Formula) -> List[Tuple[str, int]]:
    """(name, arity) of every predicate in f, in first-occurrence order"""
    found: Dict[Tuple[str, int], None] = {}
    for node in f.walk():
        if isinstance(node, Pred):
            found.setdefault(node.key, None)
    return list(found)


def _canonical(f: Formula, env: Dict[str, str], depth: int) -> Formula:
    if isinstance(f, Quantified):
        index = f"#{depth}"
        return type(f)(Var(index), _canonical(f.body, {**env, f.var.name: index}, depth + 1))
    if isinstance(f, Pred):
        return Pred(f.name, tuple(
            Var(env[t.name]) if isinstance(t, Var) and t.name in env else t for t in f.args
        ))
    children = f.children()
    if not children:
        return f
    return f.rebuild(tuple(_canonical(child, env, depth) for child in children))


def congruent(a: Formula, b: Formula) -> bool:
    """Same tree once bound variables are named by binder depth; free occurrences must agree"""
    return _canonical(a, {}, 0) == _canonical(b, {}, 0)


def subst_free(f: Formula, x: VariableLike, lam: TermLike) -> Formula:
    """S^x_lam: lam written at every free occurrence of x"""
    name = variable_name(x)
    image = as_term(lam)

    def go(node: Formula) -> Formula:
        if isinstance(node, Quantified):
            if node.var.name == name:
                return node
            return type(node)(node.var, go(node.body))
        if isinstance(node, Pred):
            return Pred(node.name, tuple(
                image if isinstance(t, Var) and t.name == name else t for t in node.args
            ))
        children = node.children()
        if not children:
            return node
        return node.rebuild(tuple(go(child) for child in children))

    return go(f)


def free_for(f: Formula, x: VariableLike, v: TermLike) -> bool:
    """v is free for x in f: no free occurrence of x lies in the scope of a quantifier on v"""
    name = variable_name(x)
    target = as_term(v)
    if isinstance(target, Const) or target.name == name:
        return True

    def go(node: Formula, binders: FrozenSet[str]) -> bool:
        if isinstance(node, Quantified):
            if node.var.name == name:
                return True
            return go(node.body, binders | {node.var.name})
        if isinstance(node, Pred):
            mentions = any(isinstance(t, Var) and t.name == name for t in node.args)
            return not (mentions and target.name in binders)
        return all(go(child, binders) for child in node.children())

    return go(f, frozenset())


def universal_closure(f: Formula) -> Formula:
    """forall over the free variables in canonical order, outermost first; sentences unchanged"""
    for name in reversed(free_vars(f)):
        f = Forall(Var(name), f)
    return f


def fresh_variables(used: Set[str]) -> Iterator[str]:
    """Unused names: x, y, z, w, v, u, then x1, y1, ... and so on"""
    for k in itertools.count():
        suffix = "" if k == 0 else str(k)
        for letter in FRESH_LETTERS:
            name = letter + suffix
            if name not in used:
                yield name


def rectify(f: Formula) -> Formula:
    """
    Congruent copy of f in which every quantifier binds its own variable,
    distinct from the free variables. The leftmost binder of a name keeps it;
    later ones take fresh names.
    """
    used = variable_names(f)
    claimed = set(free_vars(f))
    fresh = fresh_variables(used)

    def go(node: Formula) -> Formula:
        if isinstance(node, Quantified):
            name = node.var.name
            body = node.body
            if name in claimed:
                new = next(fresh)
                used.add(new)
                body = subst_free(body, name, Var(new))
                name = new
            claimed.add(name)
            return type(node)(Var(name), go(body))
        children = node.children()
        if not children:
            return node
        return node.rebuild(tuple(go(child) for child in children))

    return go(f)


def _has_quantifier(f: Formula) -> bool:
    return any(isinstance(node, Quantified) for node in f.walk())


def _without_iff(f: Formula) -> Formula:
    children = f.children()
    if not children or not _has_quantifier(f):
        return f
    parts = tuple(_without_iff(child) for child in children)
    if isinstance(f, Iff):
        a, b = parts
        return And(Implies(a, b), Implies(b, a))
    return f.rebuild(parts)


Prefix = List[Tuple[type, Var]]


def _dual(prefix: Prefix) -> Prefix:
    return [(Exists if kind is Forall else Forall, var) for kind, var in prefix]


def _pull(f: Formula) -> Tuple[Prefix, Formula]:
    if not _has_quantifier(f):
        return [], f
    if isinstance(f, Quantified):
        prefix, matrix = _pull(f.body)
        return [(type(f), f.var)] + prefix, matrix
    if isinstance(f, Not):
        prefix, matrix = _pull(f.child)
        return _dual(prefix), Not(matrix)
    if isinstance(f, Implies):
        return _pull(Or(f.right, Not(f.left)))
    if isinstance(f, Binary):
        left_prefix, left = _pull(f.left)
        right_prefix, right = _pull(f.right)
        return left_prefix + right_prefix, f.rebuild((left, right))
    raise TypeError(f"unexpected node {type(f).__name__}")


def prenex(f: Formula) -> Formula:
    """
    Equivalent formula with every quantifier in front of a quantifier-free matrix.
    Quantified implications A -> B are read as B | (~A); the prefix of the left
    operand of a binary connective comes first.
    """
    rectified = rectify(_without_iff(f))
    prefix, matrix = _pull(rectified)
    for kind, var in reversed(prefix):
        matrix = kind(var, matrix)
    return matrix
