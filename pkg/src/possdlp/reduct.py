"""The possibilistic reduction of a program by a set of atoms.

Unlike the Gelfond-Lifschitz reduct, heads are cut down to ``M`` and clauses
whose positive body leaves ``M`` are dropped, so the result only ever
mentions atoms of ``M``.  Constraints never survive (their head is empty).
"""
from __future__ import annotations

from .model import PossClause, PossProgram


def poss_reduct(program: PossProgram, M) -> PossProgram:
    M = frozenset(M)
    out: dict[PossClause, None] = {}
    for r in program.clauses:
        head = r.head & M
        if head and not (r.neg & M) and r.pos <= M:
            out.setdefault(PossClause(r.necessity, head, r.pos), None)
    return program.replace(out)
