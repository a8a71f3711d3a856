"""Classical answer sets of extended disjunctive programs.

Desk-scale brute force: candidate sets range over subsets of the atoms that
occur in some head (an answer set can contain nothing else).  A candidate is
kept when it is a model of its Gelfond-Lifschitz reduct and no strictly
smaller model exists; the latter is decided by a tiny DPLL search.

Complementary pairs ``a``/``a'`` are allowed in answer sets; add an explicit
constraint to exclude them.
"""
from __future__ import annotations

from itertools import product
from typing import Iterable, Sequence

from .errors import SignatureTooLarge
from .model import Rule

__all__ = [
    "gl_reduct",
    "is_model",
    "is_minimal_model",
    "answer_sets",
    "models",
    "entails",
    "signature",
    "MAX_ATOMS",
]

MAX_ATOMS = 24


def signature(program: Iterable[Rule]) -> list[str]:
    out: set[str] = set()
    for r in program:
        out |= r.atoms()
    return sorted(out)


def gl_reduct(program: Sequence[Rule], S) -> tuple[Rule, ...]:
    """Drop rules blocked by ``S``, then strip the remaining ``not`` literals."""
    S = frozenset(S)
    return tuple(Rule(r.head, r.pos) for r in program if not (r.neg & S))


def _satisfied(r: Rule, I: frozenset) -> bool:
    if r.pos <= I and not (r.neg & I):
        return bool(r.head & I)
    return True


def is_model(program: Iterable[Rule], I) -> bool:
    I = frozenset(I)
    return all(_satisfied(r, I) for r in program)


class _Compiled:
    """Rules over bit positions; a set of atoms is an int mask."""

    def __init__(self, program: Iterable[Rule], atoms: Sequence[str]):
        self.atoms = list(atoms)
        self.bit = {a: 1 << k for k, a in enumerate(self.atoms)}
        self.rules = [(self.mask(r.head), self.mask(r.pos), self.mask(r.neg)) for r in program]

    def mask(self, xs) -> int:
        m = 0
        for a in xs:
            m |= self.bit[a]
        return m

    def unmask(self, m: int) -> frozenset[str]:
        return frozenset(a for a, b in self.bit.items() if m & b)


def _holds(rules, m: int) -> bool:
    for h, p, n in rules:
        if p & m == p and not n & m and not h & m:
            return False
    return True


def _smaller_model(rules, m: int) -> bool:
    """Is there a model of the positive ``rules`` strictly inside ``m``?

    Atoms outside ``m`` are fixed false; each rule becomes the clause
    ``head & m  or  some body atom false``, plus "some atom of m is false".
    """
    clauses = []
    for h, p, _ in rules:
        if p & ~m:
            continue  # body can never hold inside m
        clauses.append((h & m, p))
    clauses.append((0, m))
    return _dpll(clauses, m, 0, 0)


def _dpll(clauses, free: int, true: int, false: int) -> bool:
    # clauses are (positive mask, negative mask); satisfied if some pos atom
    # is true or some neg atom is false
    while True:
        unit = None
        for pos, neg in clauses:
            if pos & true or neg & false:
                continue
            open_pos = pos & ~false
            open_neg = neg & ~true
            if not open_pos and not open_neg:
                return False
            if (open_pos & (open_pos - 1)) == 0 and not open_neg:
                unit = (open_pos, True)
                break
            if (open_neg & (open_neg - 1)) == 0 and not open_pos:
                unit = (open_neg, False)
                break
        if unit is None:
            break
        bit, value = unit
        if value:
            true |= bit
        else:
            false |= bit
        free &= ~bit
    for pos, neg in clauses:
        if not (pos & true or neg & false):
            choice = (pos | neg) & free
            bit = choice & -choice
            return _dpll(clauses, free & ~bit, true | bit, false) or _dpll(
                clauses, free & ~bit, true, false | bit
            )
    return True


def is_minimal_model(program: Iterable[Rule], S) -> bool:
    """``S`` is a model of the positive ``program`` with no model strictly inside."""
    program = list(program)
    S = frozenset(S)
    atoms = sorted(set(signature(program)) | S)
    comp = _Compiled(program, atoms)
    m = comp.mask(S)
    return _holds(comp.rules, m) and not _smaller_model(comp.rules, m)


def answer_sets(program: Iterable[Rule], max_atoms: int = MAX_ATOMS) -> list[frozenset[str]]:
    """All answer sets, sorted by their sorted atom lists."""
    program = list(program)
    candidates = sorted({a for r in program for a in r.head})
    if len(candidates) > max_atoms:
        raise SignatureTooLarge(f"{len(candidates)} head atoms exceed the bound of {max_atoms}")
    comp = _Compiled(program, candidates + sorted(set(signature(program)) - set(candidates)))
    # rules whose positive body mentions a non-head atom can never fire
    full = (1 << len(candidates)) - 1
    rules = [(h, p, n & full) for h, p, n in comp.rules if not p & ~full]
    found = []
    for m in range(1 << len(candidates)):
        if not _holds(rules, m):
            continue
        reduct = [(h, p, 0) for h, p, n in rules if not n & m]
        if not _smaller_model(reduct, m):
            found.append(comp.unmask(m))
    return sorted(found, key=sorted)


def models(program: Iterable[Rule], atoms: Iterable[str] | None = None, max_atoms: int = MAX_ATOMS):
    """Every 2-valued model over ``atoms`` (default: the program signature)."""
    program = list(program)
    atoms = sorted(set(signature(program)) | set(atoms or ()))
    if len(atoms) > max_atoms:
        raise SignatureTooLarge(f"{len(atoms)} atoms exceed the bound of {max_atoms}")
    for bits in product((False, True), repeat=len(atoms)):
        I = frozenset(a for a, b in zip(atoms, bits) if b)
        if is_model(program, I):
            yield I


def entails(program: Iterable[Rule], atom: str, max_atoms: int = MAX_ATOMS) -> bool:
    """Classical consequence by exhaustive enumeration of interpretations."""
    return all(atom in I for I in models(program, [atom], max_atoms))
