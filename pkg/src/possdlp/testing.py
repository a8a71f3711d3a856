"""Random programs, random lattices and a brute-force necessity oracle.

Used by the property tests; kept in the package so the demos can reuse it.
"""
from __future__ import annotations

import random
from itertools import combinations

from .asp import entails
from .errors import LatticeError
from .lattice import Lattice, decimal_chain, modality_lattice
from .model import PossAtomSet, PossClause, PossProgram, alpha_cut, project, strong_neg
from .reduct import poss_reduct

ATOMS = ("a", "b", "c", "d", "e", "f")


def ten_chain() -> Lattice:
    """The 10-element chain 0.1 < 0.2 < ... < 1."""
    return decimal_chain("0.1", "1", "0.1")


def random_clause(rng: random.Random, lattice: Lattice, atoms=ATOMS, max_head=2, max_body=3,
                  uniform: str | None = None, p_constraint=0.1) -> PossClause:
    labels = lattice.elements
    while True:
        n_head = 0 if rng.random() < p_constraint else rng.randint(1, max_head)
        head = rng.sample(atoms, min(n_head, len(atoms)))
        body = rng.sample(atoms, rng.randint(0, min(max_body, len(atoms))))
        cut = rng.randint(0, len(body))
        pos, neg = body[:cut], body[cut:]
        if not head and not body:
            continue
        if not head:
            label = lattice.top
        else:
            label = uniform if uniform is not None else rng.choice(labels)
        return PossClause(label, head, pos, neg)


def random_program(rng: random.Random, lattice: Lattice, n_atoms=6, max_clauses=8, **kwargs) -> PossProgram:
    atoms = ATOMS[: rng.randint(1, n_atoms)]
    n = rng.randint(1, max_clauses)
    return PossProgram(lattice, tuple(random_clause(rng, lattice, atoms, **kwargs) for _ in range(n)))


def with_strong_negation(rng: random.Random, program: PossProgram, p=0.3) -> PossProgram:
    """Rename some atom occurrences to their strong-negation counterpart."""
    def flip(xs):
        return frozenset(strong_neg(a) if rng.random() < p else a for a in xs)
    return program.replace(
        PossClause(c.necessity, flip(c.head), flip(c.pos), flip(c.neg)) for c in program.clauses
    )


def random_lattice(rng: random.Random, max_size=8, p_edge=0.35, max_tries=10_000) -> Lattice:
    """Random lattice by rejection: random DAG between a bottom and a top."""
    for _ in range(max_tries):
        n = rng.randint(1, max_size)
        names = [f"q{i}" for i in range(n)]
        # index order is a linear extension; q0 bottom, q{n-1} top
        edges = [(names[i], names[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < p_edge]
        edges += [(names[0], x) for x in names[1:]] + [(x, names[-1]) for x in names[:-1]]
        try:
            return Lattice(names, edges)
        except LatticeError:
            continue
    raise RuntimeError("no lattice found")


def builtin_lattices() -> dict[str, Lattice]:
    return {
        "ten_chain": ten_chain(),
        "unit_chain": decimal_chain("0", "1", "0.1"),
        "modality": modality_lattice(),
        "singleton": Lattice(["only"]),
    }


def oracle_value(program: PossProgram, S, atom: str) -> str | None:
    """LUB of the levels whose cut of the reduct classically entails ``atom``.

    Exhaustive: every level is tried and entailment enumerates all
    interpretations.  None when no level works.
    """
    L = program.lattice
    reduct = poss_reduct(program, S)
    good = [b for b in L if entails(project(alpha_cut(reduct, b)), atom)]
    return L.lub(good) if good else None


def oracle_model(program: PossProgram, S) -> PossAtomSet:
    return PossAtomSet(program.lattice, {a: oracle_value(program, S, a) for a in S})


def all_psets(lattice: Lattice, atoms) -> list[PossAtomSet]:
    """Every possibilistic atom set over ``atoms`` and ``lattice``."""
    out = [PossAtomSet(lattice)]
    for k in range(1, len(atoms) + 1):
        for chosen in combinations(atoms, k):
            partial = [{}]
            for a in chosen:
                partial = [dict(p, **{a: v}) for p in partial for v in lattice]
            out += [PossAtomSet(lattice, p) for p in partial]
    return out
