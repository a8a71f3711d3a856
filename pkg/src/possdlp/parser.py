"""Reader and writer for ``.pasp`` program text.

Grammar (whitespace and ``%`` comments are insignificant)::

    program    := lattice clause*
    lattice    := "lattice" "chain" "{" labels "}"
                | "lattice" "{" "elements" ":" label ("," label)* ";"
                               ["order" ":" relation (";" relation)* [";"]] "}"
    relation   := label ("<" label)+
    labels     := label ("," (label | "..."))*
    clause     := label ":" head [":-" body] "."
                | [label ":"] ":-" body "."
    head       := atom ("|" atom)*
    body       := literal ("," literal)*
    literal    := ["not"] atom
    atom       := ["-"] NAME ["(" ... ")"]

``-a`` is strong negation and is renamed to the fresh atom ``a'``.  In a chain,
``...`` expands an arithmetic run of decimals: ``{0, 0.1, ..., 1}`` steps by
the difference of the two labels before it, ``{0.1, ..., 0.9}`` by one unit
of the finest decimal place of its endpoints.
"""
from __future__ import annotations

import re
from decimal import Decimal

from .errors import EmptyRule, NonTopConstraintLabel, ParseError, UnknownElement, UnknownLabel
from .lattice import Lattice, decimal_value
from .model import PossClause, PossProgram, is_strong_neg, strong_neg, strong_neg_of

__all__ = ["parse", "parse_file", "unparse"]

TOKEN = re.compile(
    r"""
    (?P<ws>\s+|%[^\n]*)
  | (?P<if>:-)
  | (?P<ellipsis>\.\.\.)
  | (?P<number>\d+(?:\.\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*(?:\((?:[^()]|\([^()]*\))*\))?)
  | (?P<punct>[{}:;,|<.\-])
    """,
    re.VERBOSE,
)
KEYWORDS = {"not", "lattice", "chain", "elements", "order"}


class _Tokens:
    def __init__(self, text: str):
        self.text = text
        self.toks: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            m = TOKEN.match(text, pos)
            if not m:
                raise ParseError(f"unexpected character {text[pos]!r}", *self.where(pos))
            if m.lastgroup != "ws":
                kind = "punct" if m.lastgroup in ("if", "ellipsis") else m.lastgroup
                self.toks.append((kind, m.group(), pos))
            pos = m.end()
        self.i = 0

    def where(self, pos: int) -> tuple[int, int]:
        line = self.text.count("\n", 0, pos) + 1
        return line, pos - (self.text.rfind("\n", 0, pos) + 1) + 1

    def peek(self, k: int = 0):
        j = self.i + k
        return self.toks[j] if j < len(self.toks) else ("eof", "", len(self.text))

    def at(self, value: str, k: int = 0) -> bool:
        kind, text, _ = self.peek(k)
        return text == value and kind in ("punct", "name")

    def next(self):
        tok = self.peek()
        self.i += 1
        return tok

    def error(self, message: str, cls=ParseError, tok=None):
        tok = tok or self.peek()
        return cls(message, *self.where(tok[2]))

    def expect(self, value: str):
        if not self.at(value):
            got = self.peek()[1] or "end of input"
            raise self.error(f"expected {value!r}, got {got!r}")
        return self.next()

    def label(self) -> str:
        kind, text, pos = self.peek()
        if kind not in ("number", "name") or text in KEYWORDS:
            raise self.error(f"expected a lattice label, got {text or 'end of input'!r}")
        self.i += 1
        return text


def _parse_lattice(ts: _Tokens) -> Lattice:
    start = ts.peek()
    ts.expect("lattice")
    try:
        if ts.at("chain"):
            ts.next()
            ts.expect("{")
            labels = _chain_labels(ts)
            ts.expect("}")
            return Lattice.chain(labels)
        ts.expect("{")
        ts.expect("elements")
        ts.expect(":")
        elements = [ts.label()]
        while ts.at(","):
            ts.next()
            elements.append(ts.label())
        edges = []
        if ts.at(";"):
            ts.next()
        if ts.at("order"):
            ts.next()
            ts.expect(":")
            while not ts.at("}"):
                lo = ts.label()
                ts.expect("<")
                hi = ts.label()
                edges.append((lo, hi))
                while ts.at("<"):
                    ts.next()
                    lo, hi = hi, ts.label()
                    edges.append((lo, hi))
                if not ts.at("}"):
                    ts.expect(";")
        ts.expect("}")
        return Lattice(elements, edges)
    except ParseError:
        raise
    except ValueError as exc:
        raise ts.error(f"invalid lattice: {exc}", tok=start) from exc


def _chain_labels(ts: _Tokens) -> list[str]:
    items: list[str | None] = [ts.label()]
    while ts.at(","):
        ts.next()
        if ts.at("..."):
            tok = ts.next()
            items.append(None)
        else:
            items.append(ts.label())
    out: list[str] = []
    for k, item in enumerate(items):
        if item is not None:
            out.append(item)
            continue
        if k + 1 >= len(items) or items[k + 1] is None or not out:
            raise ts.error("'...' must sit between two decimal labels", tok=tok)
        lo, hi = decimal_value(out[-1]), decimal_value(items[k + 1])
        if lo is None or hi is None:
            raise ts.error("'...' only expands decimal labels", tok=tok)
        if len(out) >= 2 and decimal_value(out[-2]) is not None:
            step = lo - decimal_value(out[-2])
        else:
            places = max(-lo.as_tuple().exponent, -hi.as_tuple().exponent, 0)
            step = Decimal(1).scaleb(-places)
        if step <= 0 or (hi - lo) % step:
            raise ts.error(f"cannot step from {out[-1]} to {items[k + 1]} by {step}", tok=tok)
        value = lo + step
        while value < hi:
            out.append(format(value.normalize(), "f"))
            value += step
    return out


def _atom(ts: _Tokens) -> str:
    negated = ts.at("-")
    if negated:
        ts.next()
    kind, name, _ = ts.peek()
    if kind != "name" or name in KEYWORDS:
        raise ts.error(f"expected an atom, got {name or 'end of input'!r}")
    ts.next()
    # ground arguments are opaque: cs(stable, 0) is the flat atom "cs(stable,0)"
    name = re.sub(r"\s+", "", name)
    return strong_neg(name) if negated else name


def _clause(ts: _Tokens, lattice: Lattice) -> PossClause:
    start = ts.peek()
    label = None
    if not ts.at(":-"):
        if ts.peek(1)[1] == ":" and ts.peek()[0] in ("number", "name"):
            label_tok = ts.peek()
            label = ts.label()
            ts.expect(":")
            try:
                label = lattice.canonical(label)
            except UnknownElement:
                raise ts.error(f"unknown necessity label {label!r}", UnknownLabel, label_tok) from None
    head: list[str] = []
    if not ts.at(":-") and not ts.at("."):
        head.append(_atom(ts))
        while ts.at("|"):
            ts.next()
            head.append(_atom(ts))
    pos: list[str] = []
    neg: list[str] = []
    if ts.at(":-"):
        ts.next()
        if not ts.at("."):
            while True:
                if ts.at("not"):
                    ts.next()
                    neg.append(_atom(ts))
                else:
                    pos.append(_atom(ts))
                if not ts.at(","):
                    break
                ts.next()
    ts.expect(".")
    if not (head or pos or neg):
        raise ts.error("empty rule", EmptyRule, start)
    if not head:
        if label is not None and label != lattice.top:
            raise ts.error(
                f"constraint labelled {label!r}; constraints always carry the top label {lattice.top!r}",
                NonTopConstraintLabel,
                start,
            )
        label = lattice.top
    elif label is None:
        raise ts.error("missing necessity label", tok=start)
    return PossClause(label, head, pos, neg)


def parse(text: str) -> PossProgram:
    """Parse program text into a validated :class:`PossProgram`."""
    ts = _Tokens(text)
    if not ts.at("lattice"):
        raise ts.error("a program must start with a lattice declaration")
    lattice = _parse_lattice(ts)
    clauses = []
    while ts.peek()[0] != "eof":
        if ts.at("lattice"):
            raise ts.error("only one lattice declaration is allowed")
        clauses.append(_clause(ts, lattice))
    return PossProgram(lattice, tuple(clauses))


def parse_file(path) -> PossProgram:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def _show_atom(atom: str) -> str:
    return "-" + strong_neg_of(atom) if is_strong_neg(atom) else atom


def _atom_key(atom: str):
    base = strong_neg_of(atom) or atom
    return (base, is_strong_neg(atom))


def unparse_lattice(lattice: Lattice) -> str:
    if lattice.is_chain:
        return "lattice chain { " + ", ".join(lattice.sorted()) + " }"
    elems = ", ".join(lattice.sorted())
    edges = "; ".join(f"{a} < {b}" for a, b in lattice.hasse_edges())
    if not edges:
        return f"lattice {{ elements: {elems}; }}"
    return f"lattice {{ elements: {elems}; order: {edges}; }}"


def unparse_clause(clause: PossClause, lattice: Lattice | None = None) -> str:
    head = " | ".join(_show_atom(a) for a in sorted(clause.head, key=_atom_key))
    body = [_show_atom(a) for a in sorted(clause.pos, key=_atom_key)]
    body += ["not " + _show_atom(a) for a in sorted(clause.neg, key=_atom_key)]
    if not head:
        return ":- " + ", ".join(body) + "."
    text = f"{clause.necessity}: {head}"
    if body:
        text += " :- " + ", ".join(body)
    return text + "."


def unparse(program: PossProgram) -> str:
    lines = [unparse_lattice(program.lattice)]
    lines += [unparse_clause(c, program.lattice) for c in program.clauses]
    return "\n".join(lines) + "\n"
