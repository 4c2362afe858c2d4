"""
Logickernel - propositional and first-order logic on finite means
"""

from .system import LogicKernel, KernelConfig
from .core.models import Formula, Atom, Not, And, Or, Implies, Iff, Connective
from .core.parser import parse
from .fol.parser import parse_pd
from .errors import KernelError

__version__ = "0.1.0"
__all__ = [
    "LogicKernel",
    "KernelConfig",
    "Formula",
    "Atom",
    "Not",
    "And",
    "Or",
    "Implies",
    "Iff",
    "Connective",
    "parse",
    "parse_pd",
    "KernelError",
]
