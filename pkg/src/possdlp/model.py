"""Programs, clauses and possibilistic atom sets.

Atoms are plain strings.  A strongly negated atom ``-a`` is renamed to the
fresh atom ``a'`` (the reserved suffix cannot occur in user-written names),
so the pairing between ``a`` and its rename is recoverable from the name
alone via :func:`complement`.
"""
from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import EmptyRule, LatticeMismatch, NonTopConstraintLabel
from .lattice import Lattice

RENAME_SUFFIX = "'"


def strong_neg(atom: str) -> str:
    """Fresh atom standing for the strong negation of ``atom``."""
    if atom.endswith(RENAME_SUFFIX):
        raise ValueError(f"{atom!r} is already a strong-negation rename")
    return atom + RENAME_SUFFIX


def is_strong_neg(atom: str) -> bool:
    return atom.endswith(RENAME_SUFFIX)


def strong_neg_of(atom: str) -> str | None:
    """The atom that ``atom`` renames, or None for ordinary atoms."""
    return atom[: -len(RENAME_SUFFIX)] if is_strong_neg(atom) else None


def complement(atom: str) -> str:
    base = strong_neg_of(atom)
    return base if base is not None else strong_neg(atom)


def _atoms(xs) -> frozenset[str]:
    if isinstance(xs, str):
        xs = [xs]
    return frozenset(xs)


@dataclass(frozen=True)
class Rule:
    """Classical extended disjunctive clause ``head <- pos, not neg``."""

    head: frozenset[str] = frozenset()
    pos: frozenset[str] = frozenset()
    neg: frozenset[str] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "head", _atoms(self.head))
        object.__setattr__(self, "pos", _atoms(self.pos))
        object.__setattr__(self, "neg", _atoms(self.neg))

    @property
    def is_constraint(self) -> bool:
        return not self.head

    @property
    def is_positive(self) -> bool:
        return not self.neg

    @property
    def is_fact(self) -> bool:
        return not self.pos and not self.neg

    def atoms(self) -> frozenset[str]:
        return self.head | self.pos | self.neg

    def __str__(self):
        head = " | ".join(sorted(self.head))
        body = sorted(self.pos) + [f"not {b}" for b in sorted(self.neg)]
        if not body:
            return f"{head}."
        return f"{head} :- {', '.join(body)}." if head else f":- {', '.join(body)}."


@dataclass(frozen=True)
class PossClause:
    """Necessity-annotated clause ``necessity: head <- pos, not neg``."""

    necessity: str
    head: frozenset[str] = frozenset()
    pos: frozenset[str] = frozenset()
    neg: frozenset[str] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "necessity", str(self.necessity))
        object.__setattr__(self, "head", _atoms(self.head))
        object.__setattr__(self, "pos", _atoms(self.pos))
        object.__setattr__(self, "neg", _atoms(self.neg))
        if not (self.head or self.pos or self.neg):
            raise EmptyRule("a clause needs a head or a body")

    @property
    def star(self) -> Rule:
        return Rule(self.head, self.pos, self.neg)

    is_constraint = Rule.is_constraint
    is_positive = Rule.is_positive
    is_fact = Rule.is_fact
    atoms = Rule.atoms

    def with_necessity(self, necessity: str) -> "PossClause":
        return PossClause(necessity, self.head, self.pos, self.neg)

    def __str__(self):
        return f"{self.necessity}: {self.star}"


@dataclass(frozen=True)
class PossProgram:
    lattice: Lattice
    clauses: tuple[PossClause, ...] = ()

    def __post_init__(self):
        clauses = tuple(self.clauses)
        fixed = []
        for c in clauses:
            label = self.lattice.canonical(c.necessity)
            if c.is_constraint and label != self.lattice.top:
                raise NonTopConstraintLabel(f"constraint labelled {label!r}, expected top")
            fixed.append(c if label == c.necessity else c.with_necessity(label))
        object.__setattr__(self, "clauses", tuple(fixed))

    def __iter__(self) -> Iterator[PossClause]:
        return iter(self.clauses)

    def __len__(self) -> int:
        return len(self.clauses)

    def atoms(self) -> frozenset[str]:
        out: set[str] = set()
        for c in self.clauses:
            out |= c.atoms()
        return frozenset(out)

    def replace(self, clauses: Iterable[PossClause]) -> "PossProgram":
        return PossProgram(self.lattice, tuple(clauses))

    def __str__(self):
        return "\n".join(str(c) for c in self.clauses)


def project(program: PossProgram) -> tuple[Rule, ...]:
    """Strip necessities, keeping clause order."""
    return tuple(c.star for c in program.clauses)


def alpha_cut(program: PossProgram, alpha) -> PossProgram:
    """Clauses whose necessity is ``>= alpha``; incomparable ones are dropped."""
    L = program.lattice
    alpha = L.canonical(alpha)
    return program.replace(c for c in program.clauses if L.leq(alpha, c.necessity))


def strict_alpha_cut(program: PossProgram, alpha) -> PossProgram:
    """Clauses whose necessity is ``> alpha``; incomparable ones are dropped."""
    L = program.lattice
    alpha = L.canonical(alpha)
    return program.replace(c for c in program.clauses if L.lt(alpha, c.necessity))


class PossAtomSet(Mapping):
    """Set of possibilistic atoms: each atom carries exactly one label."""

    __slots__ = ("lattice", "_entries", "_hash")

    def __init__(self, lattice: Lattice, entries=()):
        self.lattice = lattice
        if isinstance(entries, Mapping):
            entries = entries.items()
        self._entries = {str(a): lattice.canonical(v) for a, v in entries}
        self._hash = None

    def __getitem__(self, atom):
        return self._entries[atom]

    def __iter__(self):
        return iter(self._entries)

    def __len__(self):
        return len(self._entries)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._entries.items()))
        return self._hash

    def __eq__(self, other):
        if isinstance(other, PossAtomSet):
            return self._entries == other._entries and self.lattice == other.lattice
        return NotImplemented

    @property
    def star(self) -> frozenset[str]:
        return frozenset(self._entries)

    def sorted_items(self) -> list[tuple[str, str]]:
        return sorted(self._entries.items())

    def __repr__(self):
        body = ", ".join(f"({a}, {v})" for a, v in self.sorted_items())
        return "{" + body + "}"


def _shared(A: PossAtomSet, B: PossAtomSet) -> Lattice:
    if A.lattice != B.lattice:
        raise LatticeMismatch("possibilistic sets live on different lattices")
    return A.lattice


def pset_meet(A: PossAtomSet, B: PossAtomSet) -> PossAtomSet:
    L = _shared(A, B)
    return PossAtomSet(L, {x: L.meet(A[x], B[x]) for x in A if x in B})


def pset_join(A: PossAtomSet, B: PossAtomSet) -> PossAtomSet:
    L = _shared(A, B)
    out = dict(A)
    for x, beta in B.items():
        out[x] = L.join(out[x], beta) if x in out else beta
    return PossAtomSet(L, out)


def pset_leq(A: PossAtomSet, B: PossAtomSet) -> bool:
    L = _shared(A, B)
    return A.star <= B.star and all(L.leq(A[x], B[x]) for x in A)


def i_greatest(family: Iterable[PossAtomSet]) -> list[PossAtomSet]:
    """Members of ``family`` not strictly below another member with the same atoms.

    Dominance only counts between sets over the same atoms: possibilistic
    answer sets compete only with candidates for the same classical answer
    set, and a larger domain is a different candidate rather than a better one.
    So ``{(a, 2)}`` survives next to ``{(a, 2), (b, 2)}``.
    """
    members = list(dict.fromkeys(family))
    return [
        M
        for M in members
        if not any(N != M and N.star == M.star and pset_leq(M, N) for N in members)
    ]
