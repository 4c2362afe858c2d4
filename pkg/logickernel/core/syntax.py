"""
Structural operations on formulas: size, common pairs, subformulas, substitution
"""

from dataclasses import dataclass
from typing import Dict, List, Mapping, Tuple, Union

from logickernel.core.models import And, Atom, Formula, Iff, Implies, Not, Or
from logickernel.errors import BadPosition, MissingImage, SelfCheckFailed, UnbalancedParentheses

Position = Tuple[int, ...]


@dataclass(frozen=True)
class SpanPair:
    """A matched parenthesis pair, as 0-based character offsets"""
    open_index: int
    close_index: int


def size(f: Formula, verify: bool = False) -> int:
    """
    Least n with f in L_n: leaves are 0, each connective adds one level.

    With verify set, the result is compared against the deepest parenthesis
    nesting of the fully parenthesized text.
    """
    n = _tree_size(f)
    if verify:
        from logickernel.core.printer import print_full

        text = print_full(f)
        depth = cpr_depth(text)
        if depth != n:
            raise SelfCheckFailed(f"size of {text}", f"tree {n}, parenthesis depth {depth}")
    return n


def _tree_size(f: Formula) -> int:
    children = f.children()
    if not children:
        return 0
    return 1 + max(_tree_size(child) for child in children)


def connective_count(f: Formula) -> int:
    return sum(1 for node in f.walk() if node.children())


def atoms(f: Formula) -> List[str]:
    """Atom names in first-occurrence order"""
    seen: Dict[str, None] = {}
    for node in f.walk():
        if isinstance(node, Atom):
            seen.setdefault(node.name, None)
    return list(seen)


def atoms_of(formulas: List[Formula]) -> List[str]:
    seen: Dict[str, None] = {}
    for f in formulas:
        for name in atoms(f):
            seen.setdefault(name, None)
    return list(seen)


def common_pairs(text: str) -> List[SpanPair]:
    """
    Common pair rule: each left parenthesis pairs with the first
    parenthesis at which the running +1/-1 count returns to zero.

    Returns:
        Pairs ordered by their left parenthesis
    """
    open_stack: List[int] = []
    pairs: List[SpanPair] = []
    for i, ch in enumerate(text):
        if ch == "(":
            open_stack.append(i)
        elif ch == ")":
            if not open_stack:
                raise UnbalancedParentheses(i)
            pairs.append(SpanPair(open_stack.pop(), i))
    if open_stack:
        raise UnbalancedParentheses(open_stack[-1])
    pairs.sort(key=lambda p: p.open_index)
    return pairs


def paren_label(k: int) -> str:
    """a, b, ..., z, aa, ab, ..."""
    label = ""
    k += 1
    while k:
        k, rem = divmod(k - 1, 26)
        label = chr(ord("a") + rem) + label
    return label


def cpr_labels(text: str) -> List[Tuple[str, str]]:
    """Common pairs named by the letters of their parentheses, counted left to right"""
    label_of: Dict[int, str] = {}
    for i, ch in enumerate(text):
        if ch in "()":
            label_of[i] = paren_label(len(label_of))
    return [(label_of[p.open_index], label_of[p.close_index]) for p in common_pairs(text)]


def cpr_depth(text: str) -> int:
    """Largest value reached by the running parenthesis counter"""
    common_pairs(text)
    depth = best = 0
    for ch in text:
        if ch == "(":
            depth += 1
            best = max(best, depth)
        elif ch == ")":
            depth -= 1
    return best


def subformulas(f: Formula) -> List[Formula]:
    """Every compound subtree in preorder, with multiplicity; an atom is its own sole subformula"""
    if not f.children():
        return [f]
    return [node for node in f.walk() if node.children()]


def positions(f: Formula) -> List[Position]:
    """Child-index paths of every node in preorder, the root being ()"""
    result: List[Position] = []

    def visit(node: Formula, path: Position) -> None:
        result.append(path)
        for k, child in enumerate(node.children()):
            visit(child, path + (k,))

    visit(f, ())
    return result


def subformula_at(f: Formula, position: Position) -> Formula:
    node = f
    for k in position:
        children = node.children()
        if not 0 <= k < len(children):
            raise BadPosition(position)
        node = children[k]
    return node


def find_position(f: Formula, target: Formula) -> Position:
    """First preorder position of an occurrence of target"""
    for path in positions(f):
        if subformula_at(f, path) == target:
            return path
    raise BadPosition(target)


def substitute_subformula(c: Formula, occurrence: Union[Position, Formula], b: Formula) -> Formula:
    """C_B: c with exactly the addressed occurrence replaced by b"""
    if isinstance(occurrence, Formula):
        occurrence = find_position(c, occurrence)
    subformula_at(c, occurrence)

    def replace(node: Formula, path: Position) -> Formula:
        if not path:
            return b
        children = list(node.children())
        children[path[0]] = replace(children[path[0]], path[1:])
        return node.rebuild(tuple(children))

    return replace(c, tuple(occurrence))


def substitute_atoms(f: Formula, mapping: Mapping[Union[str, Atom], Formula]) -> Formula:
    """Simultaneous replacement of every atom occurrence by its image"""
    images: Dict[str, Formula] = {
        (key.name if isinstance(key, Atom) else key): value for key, value in mapping.items()
    }
    for name in atoms(f):
        if name not in images:
            raise MissingImage(name)
    return _replace_atoms(f, images)


def instantiate(f: Formula, mapping: Mapping[str, Formula]) -> Formula:
    """Partial atom substitution: atoms without an image stay put"""
    if not mapping:
        return f
    return _replace_atoms(f, mapping)


def _replace_atoms(f: Formula, images: Mapping[str, Formula]) -> Formula:
    if isinstance(f, Atom):
        return images.get(f.name, f)
    children = f.children()
    if not children:
        return f
    return f.rebuild(tuple(_replace_atoms(child, images) for child in children))


def to_Lprime(f: Formula) -> Formula:
    """Rewrite into ~ and -> only: A|B as (~A)->B, A&B as ~(A->(~B)), A<->B via (A->B)&(B->A)"""
    children = f.children()
    if not children:
        return f
    parts = tuple(to_Lprime(child) for child in children)
    if isinstance(f, Or):
        return Implies(Not(parts[0]), parts[1])
    if isinstance(f, And):
        return _and_prime(parts[0], parts[1])
    if isinstance(f, Iff):
        return _and_prime(Implies(parts[0], parts[1]), Implies(parts[1], parts[0]))
    return f.rebuild(parts)


def _and_prime(a: Formula, b: Formula) -> Formula:
    return Not(Implies(a, Not(b)))


def is_Lprime(f: Formula) -> bool:
    return all(isinstance(node, (Atom, Not, Implies)) for node in f.walk())
