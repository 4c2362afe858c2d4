"""
Exception hierarchy for the logic kernel
"""

from typing import Any, Optional


class KernelError(ValueError):
    """Base class for every error raised by the kernel"""


class ParseError(KernelError):
    """Malformed formula, proof script or netlist text"""

    def __init__(self, position: int, message: str):
        self.position = position
        self.message = message
        super().__init__(f"parse error at {position}: {message}")


class UnbalancedParentheses(KernelError):
    def __init__(self, position: int):
        self.position = position
        super().__init__(f"unbalanced parenthesis at {position}")


class MissingImage(KernelError):
    def __init__(self, atom: str):
        self.atom = atom
        super().__init__(f"no image given for atom {atom}")


class BadPosition(KernelError):
    def __init__(self, position: Any):
        self.position = position
        super().__init__(f"no subformula at position {position}")


class CapExceeded(KernelError):
    """A configured enumeration cap was hit; `partial` carries what was computed"""

    def __init__(self, requested: int, cap: int, partial: Optional[Any] = None):
        self.requested = requested
        self.cap = cap
        self.partial = partial
        super().__init__(f"request of {requested:,} exceeds cap {cap:,}")


class DuplicateAtom(KernelError):
    def __init__(self, atom: str):
        self.atom = atom
        super().__init__(f"atom {atom} listed twice")


class UncoveredAtom(KernelError):
    def __init__(self, atom: str):
        self.atom = atom
        super().__init__(f"assignment does not cover atom {atom}")


class InputUnsatisfiable(KernelError):
    def __init__(self):
        super().__init__("input set is not satisfiable")


class NotInNormalForm(KernelError):
    def __init__(self, formula: Any):
        self.formula = formula
        super().__init__(f"not in negation normal form: {formula}")


class IsContradiction(KernelError):
    def __init__(self, formula: Any):
        self.formula = formula
        super().__init__(f"contradiction has no fdnf: {formula}")


class ArityMismatch(KernelError):
    def __init__(self, name: str, expected: int, found: int):
        self.name = name
        self.expected = expected
        self.found = found
        super().__init__(f"{name} expects {expected} arguments, found {found}")


class UnknownLemma(KernelError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"unknown lemma {name}")


class InputRejected(KernelError):
    """A proof handed to a transformer did not pass the checker"""

    def __init__(self, step: int, reason: str):
        self.step = step
        self.reason = reason
        super().__init__(f"input proof rejected at step {step}: {reason}")


class NotInLPrime(KernelError):
    def __init__(self, formula: Any):
        self.formula = formula
        super().__init__(f"formula uses connectives outside ~ and ->: {formula}")


class NotATautology(KernelError):
    def __init__(self, formula: Any):
        self.formula = formula
        super().__init__(f"not a tautology: {formula}")


class NotInUniverse(KernelError):
    def __init__(self, formula: Any):
        self.formula = formula
        super().__init__(f"formula outside the universe: {formula}")


class QuantifierOverConstant(KernelError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"cannot quantify over constant {name}")


class SchemaError(KernelError):
    """Structure document does not follow structure-v1"""


class DomainViolation(KernelError):
    """Empty domain, or a constant/tuple outside the domain"""


class UnknownSymbol(KernelError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"symbol {name} is not interpreted")


class GeneralizationOnFreeVariable(KernelError):
    def __init__(self, step: int, variable: str):
        self.step = step
        self.variable = variable
        super().__init__(
            f"step {step} generalizes {variable}, which is free in the discharged premise"
        )


class UnsupportedConnective(KernelError):
    def __init__(self, connective: str):
        self.connective = connective
        super().__init__(f"connective {connective} has no gate")


class MissingInput(KernelError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"no value for input {name}")


class PortMismatch(KernelError):
    """Two netlists do not share the same ports"""


class NotFreeFor(KernelError):
    def __init__(self, term: str, variable: str):
        self.term = term
        self.variable = variable
        super().__init__(f"{term} is not free for {variable}")


class SelfCheckFailed(KernelError):
    """Two independent computations of the same result disagree"""

    def __init__(self, what: str, detail: str):
        self.what = what
        self.detail = detail
        super().__init__(f"{what}: {detail}")


class BadNetlist(KernelError):
    """Unresolved reference, wrong gate arity or duplicate name in a netlist"""
