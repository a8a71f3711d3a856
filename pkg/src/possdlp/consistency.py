"""Inconsistency degrees, preference between models, and cut-based repair."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Literal, Sequence

from .asp import answer_sets
from .model import PossAtomSet, PossProgram, complement, project, strict_alpha_cut
from .resolution import poss_answer_sets_resolution

__all__ = [
    "is_consistent_set",
    "incons_degree",
    "more_consistent",
    "is_consistent_program",
    "cons_cut_degree",
    "inc_program_degree",
    "repair",
    "Repair",
    "ConsistencyReport",
    "analyze",
]


def is_consistent_set(atoms, complement: Callable[[str], str] = complement) -> bool:
    """No atom occurs together with its strong-negation counterpart."""
    atoms = frozenset(atoms)
    return not any(complement(a) in atoms for a in atoms)


def incons_degree(S: PossAtomSet, literal: bool = False, complement=complement) -> str:
    """Lowest cut level at which ``S`` becomes consistent; bottom if it already is.

    The cut at ``alpha`` keeps every entry whose value is not strictly below
    ``alpha``, so entries incomparable to ``alpha`` stay in.  ``literal=True``
    keeps only entries ``>= alpha`` instead; the two agree on chains.
    """
    L = S.lattice
    if is_consistent_set(S, complement):
        return L.bottom
    levels = []
    for alpha in L:
        if literal:
            kept = [a for a, v in S.items() if L.leq(alpha, v)]
        else:
            kept = [a for a, v in S.items() if not L.lt(v, alpha)]
        if is_consistent_set(kept, complement):
            levels.append(alpha)
    return L.glb(levels)


Preference = Literal["first", "second", "neither"]


def more_consistent(M1: PossAtomSet, M2: PossAtomSet, **kwargs) -> Preference:
    L = M1.lattice
    d1, d2 = incons_degree(M1, **kwargs), incons_degree(M2, **kwargs)
    if L.lt(d1, d2):
        return "first"
    if L.lt(d2, d1):
        return "second"
    return "neither"


def is_consistent_program(program: PossProgram) -> bool:
    """A program is consistent when it has a possibilistic answer set.

    Every classical answer set of the projection carries one, so this is
    decided on the projection alone.
    """
    return bool(answer_sets(project(program)))


def cons_cut_degree(program: PossProgram) -> str:
    """GLB of the levels whose strict cut is consistent; bottom if already consistent."""
    L = program.lattice
    if is_consistent_program(program):
        return L.bottom
    levels = [a for a in L if is_consistent_program(strict_alpha_cut(program, a))]
    return L.glb(levels)


inc_program_degree = cons_cut_degree


@dataclass
class Repair:
    degree: str
    program: PossProgram
    models: list[PossAtomSet]
    # no strict cut below top restores consistency
    irreparable: bool = False


def repair(program: PossProgram, solver=poss_answer_sets_resolution) -> Repair:
    """Strict cut at the consistency cut degree, with its answer sets."""
    L = program.lattice
    if is_consistent_program(program):
        return Repair(L.bottom, program, solver(program))
    degree = cons_cut_degree(program)
    cut = strict_alpha_cut(program, degree)
    return Repair(degree, cut, solver(cut), irreparable=degree == L.top)


@dataclass
class ConsistencyReport:
    program_consistent: bool
    cons_cut_degree: str
    per_model_degrees: dict[int, str] = field(default_factory=dict)
    preferred_models: set[int] = field(default_factory=set)
    irreparable: bool = False


def preferred(models: Sequence[PossAtomSet], **kwargs) -> set[int]:
    """Indices of models that no other model is more consistent than."""
    if not models:
        return set()
    L = models[0].lattice
    degrees = [incons_degree(M, **kwargs) for M in models]
    return {
        i for i, d in enumerate(degrees) if not any(L.lt(e, d) for e in degrees)
    }


def analyze(program: PossProgram, models: Sequence[PossAtomSet] | None = None, **kwargs) -> ConsistencyReport:
    L = program.lattice
    if models is None:
        models = poss_answer_sets_resolution(program)
    degree = cons_cut_degree(program)
    return ConsistencyReport(
        program_consistent=bool(models),
        cons_cut_degree=degree,
        per_model_degrees={i: incons_degree(M, **kwargs) for i, M in enumerate(models)},
        preferred_models=preferred(models, **kwargs),
        irreparable=not models and degree == L.top,
    )
