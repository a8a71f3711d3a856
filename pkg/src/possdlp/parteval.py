"""Graded partial evaluation of positive possibilistic programs.

``g_gppe`` unfolds one body atom of a rule against a (possibly disjunctive)
fact and grades the result by the GLB of both necessities.  ``t_operator``
adds every single-step unfolding; ``pi_fixpoint`` iterates it until nothing
new appears.  ``sem_min`` then reads each atom's value as the LUB over its
singleton facts.
"""
from __future__ import annotations

import logging

from .asp import answer_sets
from .errors import NotApplicable, ProjectionMismatch
from .model import PossAtomSet, PossClause, PossProgram, project
from .reduct import poss_reduct

__all__ = ["g_gppe", "t_operator", "pi_fixpoint", "sem_min", "poss_t_answer_sets"]

log = logging.getLogger(__name__)


def _check_positive(program: PossProgram):
    for c in program.clauses:
        if c.neg:
            raise ValueError(f"expected a positive program, found {c}")


def g_gppe(r1: PossClause, r2: PossClause, atom: str, lattice) -> PossClause:
    """Unfold ``atom`` in the body of ``r1`` with the fact ``r2``."""
    if r1.neg or r2.neg or r2.pos:
        raise NotApplicable("both clauses must be positive and the second must be a fact")
    if atom not in r1.pos or atom not in r2.head:
        raise NotApplicable(f"{atom!r} must occur in the body of {r1} and the head of {r2}")
    return PossClause(
        lattice.meet(r1.necessity, r2.necessity),
        r1.head | (r2.head - {atom}),
        r1.pos - {atom},
    )


def _unfoldings(rules, facts, lattice):
    for r1 in rules:
        for atom in r1.pos:
            for r2 in facts.get(atom, ()):
                yield g_gppe(r1, r2, atom, lattice)


def _facts_by_atom(clauses) -> dict[str, list[PossClause]]:
    out: dict[str, list[PossClause]] = {}
    for c in clauses:
        if not c.pos and c.head:
            for a in c.head:
                out.setdefault(a, []).append(c)
    return out


def _sort_key(c: PossClause):
    return (sorted(c.head), sorted(c.pos), c.necessity)


def t_operator(program: PossProgram) -> PossProgram:
    """The program plus every single G-GPPE step between two of its clauses."""
    _check_positive(program)
    L = program.lattice
    out = dict.fromkeys(program.clauses)
    rules = [c for c in program.clauses if c.pos]
    for c in _unfoldings(rules, _facts_by_atom(program.clauses), L):
        out.setdefault(c, None)
    return program.replace(out)


def pi_fixpoint(program: PossProgram, trace: list | None = None) -> PossProgram:
    """Iterate ``t_operator`` to its fixed point.

    Runs semi-naively: a round only unfolds pairs involving a clause that
    appeared in the previous round, which yields the same sequence of
    programs as applying ``t_operator`` directly.  New clauses per round are
    appended to ``trace`` when given.
    """
    _check_positive(program)
    L = program.lattice
    seen = dict.fromkeys(program.clauses)
    rules = [c for c in seen if c.pos]
    facts = _facts_by_atom(seen)
    new = list(seen)
    rounds = 0
    while new:
        rounds += 1
        new_rules = [c for c in new if c.pos]
        new_facts = _facts_by_atom(new)
        produced = {}
        for c in _unfoldings(new_rules, facts, L):
            produced.setdefault(c, None)
        for c in _unfoldings(rules, new_facts, L):
            produced.setdefault(c, None)
        new = sorted((c for c in produced if c not in seen), key=_sort_key)
        for c in new:
            seen[c] = None
        rules += [c for c in new if c.pos]
        for a, cs in _facts_by_atom(new).items():
            facts.setdefault(a, []).extend(cs)
        if trace is not None and new:
            trace.append(new)
    log.debug("fixpoint reached after %d rounds, %d clauses", rounds, len(seen))
    return program.replace(seen)


def sem_min(program: PossProgram) -> PossAtomSet:
    """Each atom with a singleton fact, valued by the LUB of those facts."""
    L = program.lattice
    values: dict[str, list[str]] = {}
    for c in program.clauses:
        if not c.pos and not c.neg and len(c.head) == 1:
            (a,) = c.head
            values.setdefault(a, []).append(c.necessity)
    return PossAtomSet(L, {a: L.lub(vs) for a, vs in values.items()})


def poss_t_answer_sets(program: PossProgram, trace: dict | None = None) -> list[PossAtomSet]:
    """Possibilistic-T answer sets: ``Sem_min(Pi(P_S))`` for each answer set ``S``."""
    out = []
    for S in answer_sets(project(program)):
        rounds = [] if trace is not None else None
        M = sem_min(pi_fixpoint(poss_reduct(program, S), rounds))
        if M.star != S:
            raise ProjectionMismatch(f"fixpoint values {M} do not cover answer set {sorted(S)}")
        if trace is not None:
            trace[S] = rounds
        out.append(M)
    return out
