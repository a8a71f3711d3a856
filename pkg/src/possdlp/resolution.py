"""Possibilistic resolution.

Each program clause becomes a necessity-valued disjunction of literals.  Two
disjunctions resolve into their classical resolvent, valued by the GLB of the
parents' valuations.  Because the lattice may be partially ordered, one
clause can be derivable at several incomparable levels, so the store keeps,
per clause, the antichain of maximal valuations derived so far.  Saturation
terminates because both the clause space and the lattice are finite.

The necessity of an atom ``a`` is read off by adding ``(~a, top)`` and
saturating: the LUB of all valuations reached by the empty clause.
"""
from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass
from typing import Iterable

from .asp import answer_sets
from .errors import NoPivot, NotEntailed
from .lattice import Lattice
from .model import PossAtomSet, PossProgram, project
from .reduct import poss_reduct

__all__ = [
    "PossDisjunction",
    "RefutationResult",
    "ClauseStore",
    "to_clausal",
    "resolve",
    "refute",
    "optimal_necessity",
    "necessities",
    "poss_answer_sets_resolution",
]

Key = tuple  # (frozenset pos, frozenset neg)


@dataclass(frozen=True)
class PossDisjunction:
    pos: frozenset[str]
    neg: frozenset[str]
    valuations: frozenset[str]

    @property
    def key(self) -> Key:
        return (self.pos, self.neg)

    @property
    def is_empty(self) -> bool:
        return not self.pos and not self.neg

    def __str__(self):
        return f"({show_clause(self.key)} {'/'.join(sorted(self.valuations))})"


def show_clause(key: Key) -> str:
    pos, neg = key
    lits = sorted(pos) + ["~" + a for a in sorted(neg)]
    return " | ".join(lits) if lits else "[]"


def to_clausal(program: PossProgram) -> list[PossDisjunction]:
    """``n: A <- B+, not B-`` becomes ``(A | ~B+ | B-, n)``, one per clause."""
    return [
        PossDisjunction(c.head | c.neg, c.pos, frozenset([c.necessity]))
        for c in program.clauses
    ]


def _resolvent(k1: Key, k2: Key, pivot: str) -> Key | None:
    (p1, n1), (p2, n2) = k1, k2
    if pivot in p1 and pivot in n2:
        pos, neg = (p1 - {pivot}) | p2, n1 | (n2 - {pivot})
    elif pivot in n1 and pivot in p2:
        pos, neg = p1 | (p2 - {pivot}), (n1 - {pivot}) | n2
    else:
        raise NoPivot(f"{pivot!r} does not clash between {show_clause(k1)} and {show_clause(k2)}")
    if pos & neg:
        return None
    return (pos, neg)


def resolve(c1: PossDisjunction, c2: PossDisjunction, pivot: str, lattice: Lattice):
    """Resolvent of ``c1`` and ``c2`` on ``pivot``, or None when tautological."""
    key = _resolvent(c1.key, c2.key, pivot)
    if key is None:
        return None
    vals = {lattice.meet(a, b) for a in c1.valuations for b in c2.valuations}
    return PossDisjunction(key[0], key[1], lattice.maximal(vals))


@dataclass
class RefutationResult:
    atom: str
    optimal_value: str
    refutations: frozenset[str]
    derivation_trace: list[str] | None = None


class ClauseStore:
    """Saturating store of valued clauses (given-clause loop)."""

    def __init__(self, lattice: Lattice, trace: bool = False):
        self.lattice = lattice
        self.trace = trace
        self.vals: dict[Key, set[str]] = {}
        self.origin: dict[tuple[Key, str], tuple | None] = {}
        self.queue: deque[tuple[Key, str]] = deque()
        self.by_pos: dict[str, list[tuple[Key, str]]] = defaultdict(list)
        self.by_neg: dict[str, list[tuple[Key, str]]] = defaultdict(list)

    def copy(self) -> "ClauseStore":
        new = ClauseStore(self.lattice, self.trace)
        new.vals = {k: set(v) for k, v in self.vals.items()}
        new.origin = dict(self.origin)
        new.queue = deque(self.queue)
        new.by_pos = defaultdict(list, {a: list(v) for a, v in self.by_pos.items()})
        new.by_neg = defaultdict(list, {a: list(v) for a, v in self.by_neg.items()})
        return new

    def add(self, key: Key, value: str, origin=None) -> bool:
        """Record ``key`` at ``value`` unless an equal or stronger valuation exists."""
        L = self.lattice
        held = self.vals.setdefault(key, set())
        if any(L.leq(value, v) for v in held):
            return False
        held.difference_update([v for v in held if L.leq(v, value)])
        held.add(value)
        if self.trace:
            self.origin[(key, value)] = origin
        self.queue.append((key, value))
        return True

    def add_disjunction(self, d: PossDisjunction):
        for v in d.valuations:
            self.add(d.key, v)

    def _alive(self, item) -> bool:
        key, value = item
        return value in self.vals.get(key, ())

    def saturate(self) -> "ClauseStore":
        L = self.lattice
        while self.queue:
            given = self.queue.popleft()
            if not self._alive(given):
                continue
            key, value = given
            pos, neg = key
            partners = [(a, q) for a in pos for q in self.by_neg.get(a, ())]
            partners += [(a, q) for a in neg for q in self.by_pos.get(a, ())]
            for pivot, other in partners:
                if not self._alive(other):
                    continue
                res = _resolvent(key, other[0], pivot)
                if res is not None:
                    self.add(res, L.meet(value, other[1]), (given, other, pivot))
            # self-resolution is always tautological for propositional clauses
            for a in pos:
                self.by_pos[a].append(given)
            for a in neg:
                self.by_neg[a].append(given)
        return self

    def empty_valuations(self) -> frozenset[str]:
        return frozenset(self.vals.get((frozenset(), frozenset()), ()))

    def derivation(self, key: Key, value: str) -> list[str]:
        """Resolution steps leading to ``(key, value)``, premises first."""
        steps: list[str] = []
        seen = set()

        def walk(item):
            if item in seen:
                return
            seen.add(item)
            origin = self.origin.get(item)
            if origin is None:
                return
            left, right, pivot = origin
            walk(left)
            walk(right)
            steps.append(
                f"({show_clause(left[0])} {left[1]}) + ({show_clause(right[0])} {right[1]})"
                f" on {pivot} => ({show_clause(item[0])} {item[1]})"
            )

        walk((key, value))
        return steps


def _base_store(clauses: Iterable[PossDisjunction], lattice: Lattice, trace: bool) -> ClauseStore:
    store = ClauseStore(lattice, trace)
    for d in clauses:
        store.add_disjunction(d)
    return store.saturate()


def refute(clauses, atom: str, lattice: Lattice, trace: bool = False, _base=None) -> RefutationResult:
    """Saturate ``clauses + (~atom, top)`` and report the optimal refutation."""
    store = (_base or _base_store(clauses, lattice, trace)).copy()
    store.add((frozenset(), frozenset([atom])), lattice.top)
    store.saturate()
    values = store.empty_valuations()
    if not values:
        raise NotEntailed(f"no refutation of ~{atom}")
    best = lattice.lub(values)
    result = RefutationResult(atom, best, values)
    if trace:
        # with a partial order the LUB need not be reached by a single refutation
        result.derivation_trace = []
        for v in lattice.sorted(values):
            result.derivation_trace += store.derivation((frozenset(), frozenset()), v)
    return result


def optimal_necessity(clauses, atom: str, lattice: Lattice) -> str:
    return refute(clauses, atom, lattice).optimal_value


def necessities(program: PossProgram, S, trace: bool = False):
    """Optimal necessity of every atom of ``S`` from the reduct of ``program`` by ``S``.

    Returns the possibilistic set and the per-atom refutation results.
    """
    L = program.lattice
    clauses = to_clausal(poss_reduct(program, S))
    base = _base_store(clauses, L, trace)
    results = {a: refute(clauses, a, L, trace, _base=base) for a in sorted(S)}
    return PossAtomSet(L, {a: r.optimal_value for a, r in results.items()}), results


def poss_answer_sets_resolution(program: PossProgram) -> list[PossAtomSet]:
    """Possibilistic answer sets, one per classical answer set of the projection."""
    return [necessities(program, S)[0] for S in answer_sets(project(program))]
