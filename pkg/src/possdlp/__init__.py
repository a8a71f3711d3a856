"""Possibilistic disjunctive logic programs over finite certainty lattices.

Two independent engines compute possibilistic answer sets: possibilistic
resolution (:func:`poss_answer_sets_resolution`) and the partial-evaluation
fixed point (:func:`poss_t_answer_sets`).  :mod:`possdlp.consistency`
measures and repairs inconsistency.
"""
from .asp import answer_sets, entails, gl_reduct, is_minimal_model
from .consistency import (
    analyze,
    cons_cut_degree,
    inc_program_degree,
    incons_degree,
    more_consistent,
    repair,
)
from .errors import *  # noqa: F401,F403
from .lattice import Lattice, build_lattice, decimal_chain, glb, leq, lub, modality_lattice, strictly_less
from .model import (
    PossAtomSet,
    PossClause,
    PossProgram,
    Rule,
    alpha_cut,
    complement,
    i_greatest,
    project,
    pset_join,
    pset_leq,
    pset_meet,
    strict_alpha_cut,
    strong_neg,
)
from .parser import parse, parse_file, unparse
from .parteval import g_gppe, pi_fixpoint, poss_t_answer_sets, sem_min, t_operator
from .reduct import poss_reduct
from .resolution import optimal_necessity, poss_answer_sets_resolution, resolve, to_clausal

__version__ = "0.1.0"


def solve(program: PossProgram, engine: str = "resolution") -> list[PossAtomSet]:
    """Possibilistic answer sets with the chosen engine (``resolution`` or ``gppe``)."""
    if engine == "resolution":
        return poss_answer_sets_resolution(program)
    if engine == "gppe":
        return poss_t_answer_sets(program)
    raise ValueError(f"unknown engine {engine!r}")
