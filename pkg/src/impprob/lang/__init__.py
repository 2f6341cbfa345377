"""A small first-order language with fair coins and named Knightian choices."""

from .checker import TypedTerm, infer
from .elaborate import elaborate_cp, elaborate_imp, right_first
from .parser import parse
from .syntax import (BOOL, THREE, UNIT, Bernoulli, Choose, Ctor, Fin, If, Knight, Let, Pair, Prod,
                     Regrade, Sum, Term, Type, Var, flip, free_vars, knight_choice, pretty,
                     prob_choice, sum_type)


def denote(source, context=()):
    """Parse, check and elaborate ``source`` (text or a term) to a graded morphism."""
    term = parse(source) if isinstance(source, str) else source
    return elaborate_imp(infer(term, context))


__all__ = [
    "BOOL", "THREE", "UNIT", "Bernoulli", "Choose", "Ctor", "Fin", "If", "Knight", "Let", "Pair",
    "Prod", "Regrade", "Sum", "Term", "Type", "TypedTerm", "Var", "denote", "elaborate_cp",
    "elaborate_imp", "flip", "free_vars", "infer", "knight_choice", "parse", "pretty",
    "prob_choice", "right_first", "sum_type",
]
