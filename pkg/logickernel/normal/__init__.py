"""
Normal form components
"""

from .forms import (
    reduce_nf, is_nnf, denial, FundamentalConjunction, fundamental_conjunctions, fdnf, right_nested,
)

__all__ = [
    "reduce_nf",
    "is_nnf",
    "denial",
    "FundamentalConjunction",
    "fundamental_conjunctions",
    "fdnf",
    "right_nested",
]
