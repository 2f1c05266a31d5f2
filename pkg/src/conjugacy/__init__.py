"""Decide conjugacy of rational relations over pairs of words."""

from .expr import (
    Concat,
    EmptySet,
    ExprSyntaxError,
    Literal,
    SnfResult,
    SnfSizeError,
    Star,
    Sum,
    SumfreeMonomial,
    UnknownSymbolError,
    parse,
    render,
    simplify_monomial,
    to_snf,
)
from .witness import (
    AllOf,
    ConjugacyReport,
    Empty,
    Unique,
    Universal,
    decide,
    intersect,
    membership,
    monomial_witnesses,
    pair_witnesses,
)
from .words import INNER, OUTER, Cut, WordPair, cuts, is_conjugate, is_witness, primitive_root

__version__ = "0.1.0"

__all__ = [
    "AllOf",
    "Concat",
    "ConjugacyReport",
    "Cut",
    "Empty",
    "EmptySet",
    "ExprSyntaxError",
    "INNER",
    "Literal",
    "OUTER",
    "SnfResult",
    "SnfSizeError",
    "Star",
    "Sum",
    "SumfreeMonomial",
    "Unique",
    "Universal",
    "UnknownSymbolError",
    "WordPair",
    "cuts",
    "decide",
    "intersect",
    "is_conjugate",
    "is_witness",
    "membership",
    "monomial_witnesses",
    "pair_witnesses",
    "parse",
    "primitive_root",
    "render",
    "simplify_monomial",
    "to_snf",
]
