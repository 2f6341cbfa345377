"""Exact imprecise probability: graded stochastic maps, credal sets and a small language."""

from .bridge import R, check_oplax, encode, kan_witness, phi, recover, star_compose
from .credal import CredalSet, KlMorphism, extreme_points, kl_compose, kleisli_extend
from .errors import ImpError
from .finstoch import FinSet, ProbVector, StochMatrix
from .imp import Grade, GradeMap, GradedMorphism, gcompose, gtensor, weaken
from .lang import denote, elaborate_cp, elaborate_imp, infer, parse

__all__ = [
    "CredalSet", "FinSet", "Grade", "GradeMap", "GradedMorphism", "ImpError", "KlMorphism",
    "ProbVector", "R", "StochMatrix", "check_oplax", "denote", "elaborate_cp", "elaborate_imp",
    "encode", "extreme_points", "gcompose", "gtensor", "infer", "kan_witness", "kl_compose",
    "kleisli_extend", "parse", "phi", "recover", "star_compose", "weaken",
]
