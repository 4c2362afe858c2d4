"""
Formula printers: atomic form, fully parenthesized form and flat n-ary form
"""

from typing import List

from logickernel.core.models import Formula


class FormulaPrinter:
    """
    Renders formulas in atomic form: every compound subformula is
    parenthesized except the outermost one.
    """

    def render(self, f: Formula, outer: bool = False) -> str:
        text = self._render(f)
        if outer and f.children():
            return f"({text})"
        return text

    def _render(self, f: Formula) -> str:
        children = f.children()
        if not children:
            return f.token()
        if len(children) == 1:
            return f.prefix() + self._nested(children[0])
        return self._binary(f)

    def _binary(self, f: Formula) -> str:
        left, right = f.children()
        return f"{self._nested(left)} {f.SYMBOL} {self._nested(right)}"

    def _nested(self, f: Formula) -> str:
        if not f.children():
            return f.token()
        return f"({self._render(f)})"


class FlatPrinter(FormulaPrinter):
    """Atomic form, but chains of one associative connective print without inner parentheses"""

    FLAT = ("&", "|")

    def _binary(self, f: Formula) -> str:
        if f.SYMBOL not in self.FLAT:
            return super()._binary(f)
        operands: List[Formula] = []
        self._collect(f, type(f), operands)
        return f" {f.SYMBOL} ".join(self._nested(op) for op in operands)

    def _collect(self, f: Formula, kind: type, out: List[Formula]) -> None:
        if type(f) is kind:
            for child in f.children():
                self._collect(child, kind, out)
        else:
            out.append(f)


_atomic = FormulaPrinter()
_flat = FlatPrinter()


def print_atomic(f: Formula) -> str:
    """The atomic form: "P -> (Q -> P)", "~(~P)" """
    return _atomic.render(f)


def print_full(f: Formula) -> str:
    """Atomic form with the outermost parentheses restored"""
    return _atomic.render(f, outer=True)


def print_flat(f: Formula) -> str:
    """Flat display for n-ary conjunctions and disjunctions"""
    return _flat.render(f)
