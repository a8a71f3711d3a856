"""Finite certainty lattices.

A :class:`Lattice` is built from declared labels and a Hasse-style list of
``(lower, upper)`` pairs.  The reflexive-transitive closure is computed once
at construction and the structure is validated eagerly, so every later
``glb``/``lub`` call is a table lookup that cannot fail for structural
reasons.

Labels are strings.  Labels that spell decimal numbers (``"0.5"``) are also
identified by exact value, so ``"0.50"`` resolves to ``"0.5"`` when the
latter is declared.
"""
from __future__ import annotations

from decimal import Decimal, InvalidOperation
from typing import Iterable, Sequence

import numpy as np

from .errors import CycleError, DuplicateElement, NotALattice, UnknownElement

__all__ = [
    "Lattice",
    "build_lattice",
    "glb",
    "lub",
    "leq",
    "strictly_less",
    "decimal_value",
    "decimal_chain",
    "modality_lattice",
]


def decimal_value(label: str) -> Decimal | None:
    """Exact numeric value of a label, or None for symbolic labels."""
    try:
        value = Decimal(label)
    except (InvalidOperation, TypeError, ValueError):
        return None
    return value if value.is_finite() else None


class Lattice:
    """Immutable finite lattice over string labels."""

    def __init__(self, elements: Iterable[str], edges: Iterable[tuple[str, str]] = ()):
        elements = [str(e) for e in elements]
        if not elements:
            raise NotALattice("a lattice needs at least one element")
        index: dict[str, int] = {}
        by_value: dict[Decimal, str] = {}
        for i, e in enumerate(elements):
            if e in index:
                raise DuplicateElement(f"duplicate element {e!r}")
            value = decimal_value(e)
            if value is not None:
                if value in by_value:
                    raise DuplicateElement(f"{e!r} and {by_value[value]!r} denote the same value")
                by_value[value] = e
            index[e] = i
        self._elements = tuple(elements)
        self._index = index
        self._by_value = by_value

        n = len(elements)
        order = np.eye(n, dtype=bool)
        for lo, hi in edges:
            order[self._idx(lo), self._idx(hi)] = True
        for k in range(n):
            order |= order[:, k, None] & order[None, k, :]
        both = order & order.T
        np.fill_diagonal(both, False)
        if both.any():
            i, j = np.argwhere(both)[0]
            raise CycleError(f"{elements[i]!r} and {elements[j]!r} are mutually ordered")
        self._leq = order
        self._leq.setflags(write=False)
        self._meet = self._bound_table(order, greatest=True)
        self._join = self._bound_table(order.T, greatest=True)

        tops = np.flatnonzero(order.all(axis=0))
        bottoms = np.flatnonzero(order.all(axis=1))
        # pairwise bounds exist and the set is finite, so both are unique
        self._top = int(tops[0])
        self._bottom = int(bottoms[0])

    def _bound_table(self, order: np.ndarray, greatest: bool) -> np.ndarray:
        # order[x, y] means x <= y; with order.T this computes joins instead
        n = order.shape[0]
        table = np.empty((n, n), dtype=np.intp)
        for i in range(n):
            for j in range(i, n):
                lower = np.flatnonzero(order[:, i] & order[:, j])
                best = [g for g in lower if order[lower, g].all()]
                if not best:
                    kind = "GLB" if order is self._leq else "LUB"
                    raise NotALattice(
                        f"{self._elements[i]!r} and {self._elements[j]!r} have no {kind}"
                    )
                table[i, j] = table[j, i] = best[0]
        table.setflags(write=False)
        return table

    # -- element handling ------------------------------------------------
    def canonical(self, label) -> str:
        """Return the declared spelling of ``label``; raise UnknownElement."""
        label = str(label)
        if label in self._index:
            return label
        value = decimal_value(label)
        if value is not None and value in self._by_value:
            return self._by_value[value]
        raise UnknownElement(f"unknown lattice element {label!r}")

    def _idx(self, label) -> int:
        return self._index[self.canonical(label)]

    def __contains__(self, label) -> bool:
        try:
            self.canonical(label)
        except UnknownElement:
            return False
        return True

    def __len__(self) -> int:
        return len(self._elements)

    def __iter__(self):
        return iter(self._elements)

    @property
    def elements(self) -> tuple[str, ...]:
        return self._elements

    @property
    def top(self) -> str:
        return self._elements[self._top]

    @property
    def bottom(self) -> str:
        return self._elements[self._bottom]

    # -- order queries ---------------------------------------------------
    def leq(self, a, b) -> bool:
        return bool(self._leq[self._idx(a), self._idx(b)])

    def lt(self, a, b) -> bool:
        i, j = self._idx(a), self._idx(b)
        return i != j and bool(self._leq[i, j])

    def comparable(self, a, b) -> bool:
        i, j = self._idx(a), self._idx(b)
        return bool(self._leq[i, j] or self._leq[j, i])

    def meet(self, a, b) -> str:
        return self._elements[self._meet[self._idx(a), self._idx(b)]]

    def join(self, a, b) -> str:
        return self._elements[self._join[self._idx(a), self._idx(b)]]

    def glb(self, labels: Iterable) -> str:
        """Greatest lower bound; the empty set yields top."""
        k = self._top
        for a in labels:
            k = self._meet[k, self._idx(a)]
        return self._elements[k]

    def lub(self, labels: Iterable) -> str:
        """Least upper bound; the empty set yields bottom."""
        k = self._bottom
        for a in labels:
            k = self._join[k, self._idx(a)]
        return self._elements[k]

    def maximal(self, labels: Iterable) -> frozenset[str]:
        """The antichain of maximal members of ``labels``."""
        idx = {self._idx(a) for a in labels}
        keep = [i for i in idx if not any(j != i and self._leq[i, j] for j in idx)]
        return frozenset(self._elements[i] for i in keep)

    def upset(self, label) -> frozenset[str]:
        i = self._idx(label)
        return frozenset(self._elements[j] for j in np.flatnonzero(self._leq[i]))

    @property
    def is_chain(self) -> bool:
        return bool((self._leq | self._leq.T).all())

    def sorted(self, labels: Iterable | None = None) -> list[str]:
        """Labels in a linear extension of the order (bottom first)."""
        labels = self._elements if labels is None else [self.canonical(a) for a in labels]
        return sorted(labels, key=lambda a: (int(self._leq[:, self._index[a]].sum()), self._index[a]))

    def order_pairs(self) -> frozenset[tuple[str, str]]:
        """The closed order as a set of ``(a, b)`` pairs with ``a <= b``."""
        e = self._elements
        return frozenset((e[i], e[j]) for i, j in np.argwhere(self._leq))

    def hasse_edges(self) -> list[tuple[str, str]]:
        """Covering pairs ``(a, b)``: ``a < b`` with nothing strictly between."""
        strict = self._leq.copy()
        np.fill_diagonal(strict, False)
        cover = strict & ~((strict.astype(np.uint8) @ strict.astype(np.uint8)) > 0)
        order = {a: k for k, a in enumerate(self.sorted())}
        edges = [(self._elements[i], self._elements[j]) for i, j in np.argwhere(cover)]
        return sorted(edges, key=lambda ab: (order[ab[0]], order[ab[1]]))

    # -- identity --------------------------------------------------------
    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, Lattice):
            return NotImplemented
        return (
            frozenset(self._elements) == frozenset(other._elements)
            and self.order_pairs() == other.order_pairs()
        )

    def __hash__(self) -> int:
        return hash(frozenset(self._elements))

    def __repr__(self) -> str:
        if self.is_chain:
            return f"Lattice.chain({self.sorted()!r})"
        return f"Lattice({list(self._elements)!r}, {self.hasse_edges()!r})"

    @classmethod
    def chain(cls, labels: Sequence[str]) -> "Lattice":
        """Total order with ``labels`` given bottom first."""
        labels = [str(a) for a in labels]
        return cls(labels, zip(labels, labels[1:]))


def build_lattice(elements: Iterable[str], edges: Iterable[tuple[str, str]] = ()) -> Lattice:
    return Lattice(elements, edges)


def glb(lattice: Lattice, labels: Iterable) -> str:
    return lattice.glb(labels)


def lub(lattice: Lattice, labels: Iterable) -> str:
    return lattice.lub(labels)


def leq(lattice: Lattice, a, b) -> bool:
    return lattice.leq(a, b)


def strictly_less(lattice: Lattice, a, b) -> bool:
    return lattice.lt(a, b)


def _spell(value: Decimal) -> str:
    text = format(value.normalize(), "f")
    return text


def decimal_chain(start="0", stop="1", step="0.1") -> Lattice:
    """Chain of exact decimals ``start, start+step, ..., stop``.

    >>> decimal_chain("0.1", "0.9").elements[:3]
    ('0.1', '0.2', '0.3')
    """
    lo, hi, d = Decimal(str(start)), Decimal(str(stop)), Decimal(str(step))
    if d <= 0 or hi < lo or (hi - lo) % d:
        raise ValueError(f"{stop} is not reachable from {start} in steps of {step}")
    count = int((hi - lo) / d)
    return Lattice.chain([_spell(lo + k * d) for k in range(count + 1)])


MODALITY_EDGES = [
    ("open", "supported"),
    ("supported", "plausible"),
    ("supported", "probable"),
    ("probable", "confirmed"),
    ("plausible", "confirmed"),
    ("confirmed", "certain"),
]


def modality_lattice() -> Lattice:
    """Six qualitative certainty labels; probable and plausible are incomparable."""
    return Lattice(
        ["certain", "confirmed", "probable", "plausible", "supported", "open"],
        MODALITY_EDGES,
    )
