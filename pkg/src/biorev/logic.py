"""Finite propositional logic: atoms, valuations, formulas and model sets.

A valuation over ``n`` atoms is an int in ``range(2**n)`` whose bit ``i`` is the
truth value of atom ``i``.  A set of valuations (a *world set*) is an int mask
of width ``2**n``: bit ``v`` is set iff valuation ``v`` is a member.  Formulas
are kept as an AST for parsing and printing, but all semantics go through world
sets, so logically equivalent sentences are indistinguishable downstream.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence, Union

from .errors import FormulaSyntaxError, UnknownAtomError

Valuation = int
WorldSet = int

MAX_ATOMS = 16
EXHAUSTIVE_MAX_ATOMS = 3

_ATOM_RE = re.compile(r"[a-z][a-zA-Z0-9_]*")


@dataclass(frozen=True)
class AtomTable:
    """Ordered atom names; atom ``i`` is bit ``i`` of every valuation.

    An open table (``closed=False``) lets the parser accept unknown atoms;
    :meth:`register` then returns the extended table.
    """

    atoms: tuple[str, ...]
    closed: bool = True

    def __post_init__(self):
        atoms = tuple(self.atoms)
        object.__setattr__(self, "atoms", atoms)
        lo = 1 if self.closed else 0
        if not lo <= len(atoms) <= MAX_ATOMS:
            raise ValueError(f"need between 1 and {MAX_ATOMS} atoms, got {len(atoms)}")
        if len(set(atoms)) != len(atoms):
            raise ValueError(f"duplicate atom names in {atoms}")
        for a in atoms:
            if not _ATOM_RE.fullmatch(a):
                raise ValueError(f"bad atom name {a!r}")

    @classmethod
    def default(cls, n: int) -> "AtomTable":
        names = "pqrstuvwxyzabcde"
        return cls(tuple(names[:n]))

    @classmethod
    def parse(cls, text: str) -> "AtomTable":
        return cls(tuple(a.strip() for a in text.split(",") if a.strip()))

    @property
    def n(self) -> int:
        return len(self.atoms)

    @property
    def n_worlds(self) -> int:
        return 1 << len(self.atoms)

    @property
    def full(self) -> WorldSet:
        return (1 << self.n_worlds) - 1

    def index(self, name: str) -> int:
        return self.atoms.index(name)

    def register(self, formula: "Formula") -> "AtomTable":
        new = [a for a in formula_atoms(formula) if a not in self.atoms]
        if not new:
            return self
        if self.closed:
            raise UnknownAtomError(new[0], -1)
        return AtomTable(self.atoms + tuple(new), closed=False)


# ---------------------------------------------------------------------------
# AST


@dataclass(frozen=True)
class Const:
    value: bool


@dataclass(frozen=True)
class Atom:
    name: str


@dataclass(frozen=True)
class Not:
    arg: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Iff:
    left: "Formula"
    right: "Formula"


Formula = Union[Const, Atom, Not, And, Or, Implies, Iff]
TOP = Const(True)
BOTTOM = Const(False)

_BINARY = {And: "&", Or: "|", Implies: "->", Iff: "<->"}
_PREC = {Iff: 1, Implies: 2, Or: 3, And: 4, Not: 5, Atom: 6, Const: 6}


def formula_atoms(f: Formula) -> list[str]:
    """Atom names in order of first occurrence."""
    seen: dict[str, None] = {}

    def walk(g):
        if isinstance(g, Atom):
            seen.setdefault(g.name)
        elif isinstance(g, Not):
            walk(g.arg)
        elif not isinstance(g, Const):
            walk(g.left)
            walk(g.right)

    walk(f)
    return list(seen)


def format_formula(f: Formula) -> str:
    """Print ``f`` in the input grammar.

    Nested binary connectives of a different kind are always parenthesised,
    which keeps DNF output readable and parses back to the same tree.
    """
    if isinstance(f, Const):
        return "T" if f.value else "F"
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Not):
        inner = format_formula(f.arg)
        return "!" + (inner if isinstance(f.arg, (Atom, Const, Not)) else f"({inner})")
    op = _BINARY[type(f)]
    left = format_formula(f.left)
    right = format_formula(f.right)
    if _needs_parens(f, f.left, is_right=False):
        left = f"({left})"
    if _needs_parens(f, f.right, is_right=True):
        right = f"({right})"
    return f"{left} {op} {right}"


def _needs_parens(parent, child, is_right: bool) -> bool:
    if type(child) not in _BINARY:
        return False
    if type(child) is not type(parent):
        return True
    # same connective: respect associativity so the tree survives a round trip
    if isinstance(parent, Implies):
        return not is_right
    return is_right


# ---------------------------------------------------------------------------
# Parser

_TOKEN_RE = re.compile(r"\s*(?:(<->)|(->)|([!&|()])|([a-zA-Z][a-zA-Z0-9_]*))")


def _tokenize(text: str) -> list[tuple[str, int]]:
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise FormulaSyntaxError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastindex)
        tokens.append((m.group(m.lastindex), start))
        pos = m.end()
    tokens.append(("<eof>", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, table: AtomTable):
        self.tokens = _tokenize(text)
        self.i = 0
        self.table = table

    def peek(self) -> str:
        return self.tokens[self.i][0]

    def take(self) -> tuple[str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, what: str):
        tok, pos = self.tokens[self.i]
        found = "end of input" if tok == "<eof>" else repr(tok)
        raise FormulaSyntaxError(f"expected {what}, found {found}", pos)

    def parse(self) -> Formula:
        f = self.iff()
        if self.peek() != "<eof>":
            self.fail("end of input")
        return f

    def iff(self) -> Formula:
        f = self.implies()
        while self.peek() == "<->":
            self.take()
            f = Iff(f, self.implies())
        return f

    def implies(self) -> Formula:
        f = self.disj()
        if self.peek() == "->":
            self.take()
            return Implies(f, self.implies())
        return f

    def disj(self) -> Formula:
        f = self.conj()
        while self.peek() == "|":
            self.take()
            f = Or(f, self.conj())
        return f

    def conj(self) -> Formula:
        f = self.unary()
        while self.peek() == "&":
            self.take()
            f = And(f, self.unary())
        return f

    def unary(self) -> Formula:
        if self.peek() == "!":
            self.take()
            return Not(self.unary())
        return self.primary()

    def primary(self) -> Formula:
        tok, pos = self.tokens[self.i]
        if tok == "(":
            self.take()
            f = self.iff()
            if self.peek() != ")":
                self.fail("')'")
            self.take()
            return f
        if tok == "T":
            self.take()
            return TOP
        if tok == "F":
            self.take()
            return BOTTOM
        if tok != "<eof>" and _ATOM_RE.fullmatch(tok):
            self.take()
            if self.table.closed and tok not in self.table.atoms:
                raise UnknownAtomError(tok, pos)
            return Atom(tok)
        self.fail("atom, constant or '('")


def parse_formula(text: str, table: AtomTable) -> Formula:
    """Parse ``text``; precedence ``!`` > ``&`` > ``|`` > ``->`` (right) > ``<->``."""
    return _Parser(text, table).parse()


# ---------------------------------------------------------------------------
# Semantics


@lru_cache(maxsize=None)
def atom_mask(i: int, n: int) -> WorldSet:
    """World set of valuations over ``n`` atoms making atom ``i`` true."""
    mask = 0
    for v in range(1 << n):
        if v >> i & 1:
            mask |= 1 << v
    return mask


def full_set(n: int) -> WorldSet:
    return (1 << (1 << n)) - 1


def models(f: Formula, table: AtomTable) -> WorldSet:
    n = table.n
    full = full_set(n)

    def ev(g) -> int:
        if isinstance(g, Const):
            return full if g.value else 0
        if isinstance(g, Atom):
            try:
                return atom_mask(table.index(g.name), n)
            except ValueError:
                raise UnknownAtomError(g.name, -1) from None
        if isinstance(g, Not):
            return full & ~ev(g.arg)
        a, b = ev(g.left), ev(g.right)
        if isinstance(g, And):
            return a & b
        if isinstance(g, Or):
            return a | b
        if isinstance(g, Implies):
            return (full & ~a) | b
        return full & ~(a ^ b)

    return ev(f)


def mod(text: str, table: AtomTable) -> WorldSet:
    """Shorthand: model set of a formula given as text."""
    return models(parse_formula(text, table), table)


def holds_in_theory(k: WorldSet, a: WorldSet) -> bool:
    """``alpha in Cn(K)`` at the model level: Mod(K) is a subset of Mod(alpha)."""
    return k & ~a == 0


def is_subset(a: WorldSet, b: WorldSet) -> bool:
    return a & ~b == 0


def members(ws: WorldSet) -> Iterator[Valuation]:
    v = 0
    while ws:
        if ws & 1:
            yield v
        ws >>= 1
        v += 1


def worldset_of(valuations: Iterable[Valuation]) -> WorldSet:
    mask = 0
    for v in valuations:
        mask |= 1 << v
    return mask


def submasks(mask: WorldSet) -> Iterator[WorldSet]:
    """All subsets of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def literal(table: AtomTable, i: int, value: bool) -> Formula:
    a = Atom(table.atoms[i])
    return a if value else Not(a)


def minterm(v: Valuation, table: AtomTable) -> Formula:
    f = literal(table, 0, bool(v & 1))
    for i in range(1, table.n):
        f = And(f, literal(table, i, bool(v >> i & 1)))
    return f


def canonical_formula(ws: WorldSet, table: AtomTable) -> Formula:
    """Full DNF with exactly ``ws`` as model set; minterms in truth-table order."""
    if ws == 0:
        return BOTTOM
    if ws == table.full:
        return TOP
    order = sorted(members(ws), key=lambda v: format_valuation(v, table.n), reverse=True)
    f = minterm(order[0], table)
    for v in order[1:]:
        f = Or(f, minterm(v, table))
    return f


# ---------------------------------------------------------------------------
# Printing and serialisation of valuations and world sets


def format_valuation(v: Valuation, n: int) -> str:
    """Bitstring in atom order: ``10`` is p true, q false."""
    return "".join("1" if v >> i & 1 else "0" for i in range(n))


def pretty_valuation(v: Valuation, table: AtomTable) -> str:
    """Barred style with ``-`` marking a false atom, e.g. ``p-q``."""
    return "".join(a if v >> i & 1 else "-" + a for i, a in enumerate(table.atoms))


def parse_valuation(bits: str, n: int) -> Valuation:
    bits = bits.strip()
    if len(bits) != n or any(c not in "01" for c in bits):
        raise ValueError(f"bad valuation {bits!r} for {n} atoms")
    return sum(1 << i for i, c in enumerate(bits) if c == "1")


def format_worldset(ws: WorldSet, n: int) -> list[str]:
    return sorted((format_valuation(v, n) for v in members(ws)), reverse=True)


def worldset_hex(ws: WorldSet) -> str:
    return hex(ws)


def parse_worldset(spec: Union[str, Sequence[str]], n: int) -> WorldSet:
    """Accepts a hex mask (``0x..``) or a list/comma string of bitstrings."""
    if isinstance(spec, str):
        spec = spec.strip().strip("{}[]")
        if spec.startswith("0x"):
            ws = int(spec, 16)
            if ws >> (1 << n):
                raise ValueError(f"mask {spec} too wide for {n} atoms")
            return ws
        spec = [s for s in re.split(r"[\s,]+", spec) if s]
    return worldset_of(parse_valuation(s, n) for s in spec)


def show_worldset(ws: WorldSet, table: AtomTable, pretty: bool = False) -> str:
    if pretty:
        items = [pretty_valuation(v, table) for v in sorted(
            members(ws), key=lambda v: format_valuation(v, table.n), reverse=True)]
    else:
        items = format_worldset(ws, table.n)
    return "{" + ", ".join(items) + "}"
