"""Postulate catalogue and exhaustive/sampled checking over sentence classes.

Every operator is treated as a black box mapping Mod(alpha) to Mod(K op alpha).
Postulates are evaluated through fixed model-level forms, vectorised over all
class pairs with numpy.  A slower sentence-level oracle that works with whole
theories (sets of sentence classes) is kept for auditing those forms.
"""
from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .errors import SizeGuardError
from .logic import EXHAUSTIVE_MAX_ATOMS, AtomTable, WorldSet, canonical_formula, format_formula, format_worldset


class Postulate(str, enum.Enum):
    P0 = "P0"
    P1 = "P1"
    P2 = "P2"
    P2_PRIME = "P2'"
    P3 = "P3"
    P4 = "P4"
    P5 = "P5"
    P6 = "P6"
    P6_PRIME = "P6'"
    P7 = "P7"
    P8 = "P8"
    SUPEREXPANSION = "Superexpansion"
    P9 = "P9"
    P10 = "P10"
    DM = "DM"
    P11 = "P11"
    P12 = "P12"
    P12_PLUS = "P12+"
    P13 = "P13"
    P14 = "P14"
    ENDOGENOUS_INCLUSION = "EndogenousInclusion"
    POSITIVE_VACUITY = "PositiveVacuity"

    @property
    def arity(self) -> int:
        return _CATALOG[self].arity

    @property
    def title(self) -> str:
        return _CATALOG[self].title

    @classmethod
    def lookup(cls, name) -> "Postulate":
        if isinstance(name, cls):
            return name
        for p in cls:
            if name in (p.value, p.name, p.title):
                return p
        raise KeyError(f"unknown postulate {name!r}")


HOLDS = "holds"
FAILS = "fails"
BY_CONSTRUCTION = "holds-by-construction"
NOT_APPLICABLE = "not-applicable"


@dataclass(frozen=True)
class OperatorUnderTest:
    """Black-box revision-like operator: ``eval`` maps Mod(alpha) to Mod(K op alpha)."""

    k_models: WorldSet
    eval: Callable[[WorldSet], WorldSet]
    table: AtomTable
    name: str = "operator"

    @property
    def n_worlds(self) -> int:
        return self.table.n_worlds

    @property
    def full(self) -> WorldSet:
        return self.table.full

    @classmethod
    def of_state(cls, state, table: Optional[AtomTable] = None, name: str = "revise") -> "OperatorUnderTest":
        from .revision import revise_models
        table = table or _default_table(state.n_worlds)
        return cls(state.k_models, lambda a: revise_models(state, a), table, name)

    @classmethod
    def of_npr(cls, s, table: Optional[AtomTable] = None, name: str = "npr") -> "OperatorUnderTest":
        from .npr import npr_revise
        table = table or _default_table(s.n_worlds)
        return cls(s.k_models, lambda a: npr_revise(s, a), table, name)

    @classmethod
    def of_cl(cls, cl, table: Optional[AtomTable] = None, name: str = "cl") -> "OperatorUnderTest":
        from .npr import cl_revise
        table = table or _default_table(cl.star.n_worlds)
        return cls(cl.k_models, lambda a: cl_revise(cl, a), table, name)


def _default_table(n_worlds: int) -> AtomTable:
    return AtomTable.default(n_worlds.bit_length() - 1)


@dataclass
class Witness:
    alpha: WorldSet
    beta: Optional[WorldSet]
    lhs_models: WorldSet
    rhs_models: WorldSet
    table: AtomTable = field(repr=False)

    def to_json(self) -> dict:
        t = self.table
        return {
            "alpha": format_formula(canonical_formula(self.alpha, t)),
            "beta": None if self.beta is None else format_formula(canonical_formula(self.beta, t)),
            "lhs_models": format_worldset(self.lhs_models, t.n),
            "rhs_models": format_worldset(self.rhs_models, t.n),
        }


@dataclass
class CheckReport:
    postulate: str
    verdict: str
    witness: Optional[Witness] = None
    coverage: object = "exhaustive"

    @property
    def holds(self) -> bool:
        return self.verdict in (HOLDS, BY_CONSTRUCTION)

    def to_json(self) -> dict:
        return {
            "postulate": self.postulate,
            "verdict": self.verdict,
            "witness": None if self.witness is None else self.witness.to_json(),
            "coverage": self.coverage,
        }

    def __str__(self) -> str:
        s = f"{self.postulate}: {self.verdict}"
        if self.witness is not None:
            w = self.witness.to_json()
            s += f" (alpha={w['alpha']}" + ("" if w["beta"] is None else f", beta={w['beta']}") + ")"
        return s


_WORLDS = {"type": "array", "items": {"type": "string", "pattern": "^[01]+$"}}

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["postulate", "verdict", "witness", "coverage"],
    "additionalProperties": False,
    "properties": {
        "postulate": {"type": "string"},
        "verdict": {"enum": [HOLDS, FAILS, BY_CONSTRUCTION, NOT_APPLICABLE]},
        "witness": {
            "oneOf": [
                {"type": "null"},
                {
                    "type": "object",
                    "required": ["alpha", "beta", "lhs_models", "rhs_models"],
                    "additionalProperties": False,
                    "properties": {
                        "alpha": {"type": "string"},
                        "beta": {"type": ["string", "null"]},
                        "lhs_models": _WORLDS,
                        "rhs_models": _WORLDS,
                    },
                },
            ]
        },
        "coverage": {
            "oneOf": [
                {"const": "exhaustive"},
                {
                    "type": "object",
                    "required": ["sampled"],
                    "properties": {
                        "sampled": {
                            "type": "object",
                            "required": ["seed", "count"],
                            "properties": {"seed": {"type": "integer"}, "count": {"type": "integer"}},
                        }
                    },
                },
            ]
        },
    },
    "if": {"properties": {"verdict": {"const": FAILS}}},
    "then": {"properties": {"witness": {"type": "object"}}},
}


# ---------------------------------------------------------------------------
# Model-level forms.  Arguments are arrays over class tuples:
# A, B inputs; MA = M(A), MB = M(B), MU = M(A|B), MI = M(A&B); m = Mod(K).


def _sub(x, y):
    return np.asarray((x & ~y) == 0, dtype=bool)


def _nz(x):
    return np.asarray(x != 0, dtype=bool)


def _eq(x, y):
    return np.asarray(x == y, dtype=bool)


@dataclass(frozen=True)
class _Entry:
    arity: int
    title: str
    holds: Optional[Callable] = None
    sides: Optional[Callable] = None


def _p12_antecedent(A, B, MB, MU):
    return _sub(MU, A | B) & ~_sub(MB, B)


_CATALOG: dict[Postulate, _Entry] = {
    Postulate.P0: _Entry(0, "Tautology"),
    Postulate.P1: _Entry(0, "Closure"),
    Postulate.P5: _Entry(0, "Extensionality"),
    Postulate.P2: _Entry(
        1, "Success",
        lambda A, MA, m: _sub(MA, A),
        lambda A, MA, m: (MA, A)),
    Postulate.P2_PRIME: _Entry(
        1, "RelativeSuccess",
        lambda A, MA, m: _sub(MA, A) | _eq(MA, m),
        lambda A, MA, m: (MA, A)),
    Postulate.P3: _Entry(
        1, "Inclusion",
        lambda A, MA, m: _sub(m & A, MA),
        lambda A, MA, m: (MA, m & A)),
    Postulate.P4: _Entry(
        1, "Vacuity",
        lambda A, MA, m: ~_nz(m & A) | _sub(MA, m & A),
        lambda A, MA, m: (m & A, MA)),
    Postulate.P6: _Entry(
        1, "Consistency",
        lambda A, MA, m: ~_nz(A) | _nz(MA),
        lambda A, MA, m: (A, MA)),
    Postulate.P6_PRIME: _Entry(
        1, "RelativeConsistency",
        lambda A, MA, m: ~_sub(m, A) | _nz(MA),
        lambda A, MA, m: (A, MA)),
    Postulate.ENDOGENOUS_INCLUSION: _Entry(
        1, "EndogenousInclusion",
        lambda A, MA, m: ~_sub(m, A) | _sub(m, MA),
        lambda A, MA, m: (MA, m)),
    Postulate.POSITIVE_VACUITY: _Entry(
        1, "PositiveVacuity",
        lambda A, MA, m: ~_sub(m, A) | _sub(MA, m),
        lambda A, MA, m: (m, MA)),
    Postulate.P7: _Entry(
        2, "DisjunctiveOverlap",
        lambda A, B, MA, MB, MU, MI, m: _sub(MU, MA | MB),
        lambda A, B, MA, MB, MU, MI, m: (MA | MB, MU)),
    Postulate.P8: _Entry(
        2, "Subexpansion",
        lambda A, B, MA, MB, MU, MI, m: ~_nz(MB & A) | _sub(MI, MB & A),
        lambda A, B, MA, MB, MU, MI, m: (MB & A, MI)),
    Postulate.SUPEREXPANSION: _Entry(
        2, "Superexpansion",
        lambda A, B, MA, MB, MU, MI, m: _sub(MA & B, MI),
        lambda A, B, MA, MB, MU, MI, m: (MI, MA & B)),
    Postulate.P9: _Entry(
        2, "DisjunctiveRationality",
        lambda A, B, MA, MB, MU, MI, m: _sub(MA, MU) | _sub(MB, MU),
        lambda A, B, MA, MB, MU, MI, m: (MU, MA & MB)),
    Postulate.P10: _Entry(
        2, "CCM",
        lambda A, B, MA, MB, MU, MI, m: ~(_nz(MA) & _sub(MA, B)) | _sub(MI, MA),
        lambda A, B, MA, MB, MU, MI, m: (MA, MI)),
    Postulate.DM: _Entry(
        2, "DisjunctiveMonotony",
        lambda A, B, MA, MB, MU, MI, m: ~_nz(MA & B) | _sub(MB, MU),
        lambda A, B, MA, MB, MU, MI, m: (MU, MB)),
    Postulate.P11: _Entry(
        2, "P11",
        lambda A, B, MA, MB, MU, MI, m: ~_sub(MU, A | B) | _sub(MA, A) | _sub(MB, B),
        lambda A, B, MA, MB, MU, MI, m: (MU, A | B)),
    Postulate.P12: _Entry(
        2, "P12",
        lambda A, B, MA, MB, MU, MI, m: ~_p12_antecedent(A, B, MB, MU) | _sub(MU, MA),
        lambda A, B, MA, MB, MU, MI, m: (MA, MU)),
    Postulate.P12_PLUS: _Entry(
        2, "P12+",
        lambda A, B, MA, MB, MU, MI, m: ~_p12_antecedent(A, B, MB, MU) | _eq(MA, MU),
        lambda A, B, MA, MB, MU, MI, m: (MA, MU)),
    Postulate.P13: _Entry(
        2, "P13",
        lambda A, B, MA, MB, MU, MI, m: ~(_sub(MA, A) & _sub(MB, B)) | _sub(MA, MU) | _sub(MB, MU),
        lambda A, B, MA, MB, MU, MI, m: (MU, MA & MB)),
    Postulate.P14: _Entry(
        2, "P14",
        lambda A, B, MA, MB, MU, MI, m: ~(_sub(MA, A) & _sub(MB, B)) | _sub(MU, A | B),
        lambda A, B, MA, MB, MU, MI, m: (MU, A | B)),
}

P = Postulate
SUITES: dict[str, tuple[Postulate, ...]] = {
    "AGM": (P.P0, P.P1, P.P2, P.P3, P.P4, P.P5, P.P6, P.P7, P.P8),
    "IOB": (P.P0, P.P1, P.P2, P.P3, P.P5, P.P6, P.P7, P.P9),
    "BOB": (P.P0, P.P1, P.P2, P.P3, P.P5, P.P7, P.P9),
    "ZTBOB": (P.P0, P.P1, P.P2, P.P3, P.P5, P.P7, P.P9, P.P10),
    "TBOB": (P.P0, P.P1, P.P2, P.P3, P.P5, P.P7, P.P9, P.P8),
    "BOB-NPR": (P.P0, P.P1, P.P3, P.P5, P.P6, P.P7, P.P2_PRIME, P.P11, P.P12, P.P13),
    "ZTBOB-NPR": (P.P0, P.P1, P.P2_PRIME, P.P3, P.P5, P.P6, P.P7, P.P9, P.P11, P.P12_PLUS, P.P13),
    "TBOB-NPR": (P.P0, P.P1, P.P2_PRIME, P.P3, P.P5, P.P6, P.P7, P.P9, P.P11, P.P12_PLUS, P.P13, P.DM),
}
del P


# ---------------------------------------------------------------------------
# Evaluation


def _dtype(n_worlds: int):
    return np.uint64 if n_worlds <= 64 else object


class _Table:
    """Operator results for the class tuples one check run needs."""

    def __init__(self, op: OperatorUnderTest, mode: str, seed: int, count: int):
        self.op = op
        self.mode = mode
        n_worlds = op.n_worlds
        dt = _dtype(n_worlds)
        self.dt = dt
        self.m = dt(op.k_models) if dt is not object else op.k_models
        self._cache: dict[WorldSet, WorldSet] = {}
        if mode == "exhaustive":
            if op.table.n > EXHAUSTIVE_MAX_ATOMS:
                raise SizeGuardError(f"exhaustive checking is limited to {EXHAUSTIVE_MAX_ATOMS} atoms")
            size = 1 << n_worlds
            self.results = np.array([op.eval(a) for a in range(size)], dtype=dt)
            self.singles = np.arange(size, dtype=dt)
            a, b = np.meshgrid(self.singles, self.singles, indexing="ij")
            self.pair_a, self.pair_b = a.ravel(), b.ravel()
            self.coverage = "exhaustive"
        elif mode == "sampled":
            rng = random.Random(seed)
            self.singles = np.array([rng.getrandbits(n_worlds) for _ in range(count)], dtype=dt)
            self.pair_a = np.array([rng.getrandbits(n_worlds) for _ in range(count)], dtype=dt)
            self.pair_b = np.array([rng.getrandbits(n_worlds) for _ in range(count)], dtype=dt)
            self.coverage = {"sampled": {"seed": seed, "count": count}}
        else:
            raise ValueError(f"unknown mode {mode!r}")

    def M(self, xs):
        if self.mode == "exhaustive":
            return self.results[xs.astype(np.int64)]
        out = []
        for x in xs:
            x = int(x)
            if x not in self._cache:
                self._cache[x] = self.op.eval(x)
            out.append(self._cache[x])
        return np.array(out, dtype=self.dt)

    def full_result(self) -> WorldSet:
        return int(self.op.eval(self.op.full))


def _violations_arrays(tab: _Table, pid: Postulate):
    """Return (inputs, holds-mask, sides) for one postulate."""
    entry = _CATALOG[pid]
    m = tab.m
    if entry.arity == 1:
        A = tab.singles
        MA = tab.M(A)
        return (A, None), entry.holds(A, MA, m), lambda i: entry.sides(A[i], MA[i], m)
    A, B = tab.pair_a, tab.pair_b
    MA, MB, MU, MI = tab.M(A), tab.M(B), tab.M(A | B), tab.M(A & B)
    ok = entry.holds(A, B, MA, MB, MU, MI, m)
    return (A, B), ok, lambda i: entry.sides(A[i], B[i], MA[i], MB[i], MU[i], MI[i], m)


def _check_on(tab: _Table, pid: Postulate) -> CheckReport:
    op = tab.op
    if pid in (Postulate.P1, Postulate.P5):
        return CheckReport(pid.value, BY_CONSTRUCTION, None, tab.coverage)
    if pid is Postulate.P0:
        got = tab.full_result()
        if got == op.k_models:
            return CheckReport(pid.value, HOLDS, None, tab.coverage)
        return CheckReport(pid.value, FAILS, Witness(op.full, None, got, op.k_models, op.table), tab.coverage)
    (A, B), ok, sides = _violations_arrays(tab, pid)
    bad = np.flatnonzero(~ok)
    if bad.size == 0:
        return CheckReport(pid.value, HOLDS, None, tab.coverage)
    if tab.mode == "sampled":
        # smallest failing tuple among those sampled
        keys = [(int(A[i]), int(B[i]) if B is not None else -1) for i in bad]
        i = int(bad[min(range(len(keys)), key=keys.__getitem__)])
    else:
        i = int(bad[0])
    lhs, rhs = sides(i)
    w = Witness(int(A[i]), None if B is None else int(B[i]), int(lhs), int(rhs), op.table)
    return CheckReport(pid.value, FAILS, w, tab.coverage)


def check(op: OperatorUnderTest, pid, mode: str = "exhaustive", seed: int = 0, count: int = 2000) -> CheckReport:
    pid = Postulate.lookup(pid)
    return _check_on(_Table(op, mode, seed, count), pid)


def check_suite(op: OperatorUnderTest, suite: str, mode: str = "exhaustive",
                seed: int = 0, count: int = 2000) -> list[CheckReport]:
    try:
        ids = SUITES[suite]
    except KeyError:
        raise KeyError(f"unknown suite {suite!r}; choose from {sorted(SUITES)}") from None
    tab = _Table(op, mode, seed, count)
    return [_check_on(tab, pid) for pid in ids]


def violations(op: OperatorUnderTest, pid) -> set[tuple]:
    """All failing input tuples (exhaustive).  Tuples are (A,) or (A, B)."""
    pid = Postulate.lookup(pid)
    tab = _Table(op, "exhaustive", 0, 0)
    if pid in (Postulate.P1, Postulate.P5):
        return set()
    if pid is Postulate.P0:
        return set() if tab.full_result() == op.k_models else {()}
    (A, B), ok, _ = _violations_arrays(tab, pid)
    bad = np.flatnonzero(~ok)
    if B is None:
        return {(int(A[i]),) for i in bad}
    return {(int(A[i]), int(B[i])) for i in bad}


def replay_witness(op: OperatorUnderTest, report: CheckReport) -> bool:
    """True iff the report's witness really violates its postulate on ``op``."""
    if report.witness is None:
        return False
    pid = Postulate.lookup(report.postulate)
    w = report.witness
    dt = _dtype(op.n_worlds)
    m = np.array([op.k_models], dtype=dt)
    if pid is Postulate.P0:
        return op.eval(op.full) != op.k_models
    A = np.array([w.alpha], dtype=dt)
    MA = np.array([op.eval(w.alpha)], dtype=dt)
    entry = _CATALOG[pid]
    if entry.arity == 1:
        return not bool(entry.holds(A, MA, m)[0])
    B = np.array([w.beta], dtype=dt)
    MB = np.array([op.eval(w.beta)], dtype=dt)
    MU = np.array([op.eval(w.alpha | w.beta)], dtype=dt)
    MI = np.array([op.eval(w.alpha & w.beta)], dtype=dt)
    return not bool(entry.holds(A, B, MA, MB, MU, MI, m)[0])


# ---------------------------------------------------------------------------
# Derived rules


DERIVED_RULES = ("P7_implies_P14", "DM_equiv_P8_under_TBOB")


def derived_rule_check(op: OperatorUnderTest, rule: str, mode: str = "exhaustive",
                       seed: int = 0, count: int = 2000) -> CheckReport:
    tab = _Table(op, mode, seed, count)
    if rule == "P7_implies_P14":
        if not _check_on(tab, Postulate.P7).holds:
            return CheckReport(rule, NOT_APPLICABLE, None, tab.coverage)
        r = _check_on(tab, Postulate.P14)
        return CheckReport(rule, r.verdict, r.witness, tab.coverage)
    if rule == "DM_equiv_P8_under_TBOB":
        # the equivalence is claimed relative to the remaining TBOB postulates
        if not all(_check_on(tab, pid).holds for pid in SUITES["BOB"]):
            return CheckReport(rule, NOT_APPLICABLE, None, tab.coverage)
        p8, dm = _check_on(tab, Postulate.P8), _check_on(tab, Postulate.DM)
        if p8.holds == dm.holds:
            return CheckReport(rule, HOLDS, None, tab.coverage)
        return CheckReport(rule, FAILS, p8.witness or dm.witness, tab.coverage)
    raise KeyError(f"unknown rule {rule!r}")


# ---------------------------------------------------------------------------
# Sentence-level oracle: theories are bitmasks over sentence classes.


class TheoryOracle:
    """Evaluates postulates literally on theories, quantifying over every sentence class.

    A theory with models ``X`` is the set ``{gamma : X <= Mod(gamma)}``, encoded
    as a bitmask whose bit ``g`` says class ``g`` belongs to it.
    """

    def __init__(self, op: OperatorUnderTest):
        if op.table.n > EXHAUSTIVE_MAX_ATOMS:
            raise SizeGuardError("theory oracle is limited to small languages")
        self.op = op
        self.n_classes = 1 << op.n_worlds
        self.full = op.full
        self._th = [self._theory(x) for x in range(self.n_classes)]
        self._res = [op.eval(a) for a in range(self.n_classes)]
        self._rule_table = self._rules()

    def _theory(self, x: WorldSet) -> int:
        return sum(1 << g for g in range(self.n_classes) if x & ~g == 0)

    def th(self, x: WorldSet) -> int:
        return self._th[x]

    def models_of(self, theory: int) -> WorldSet:
        out = self.full
        g = 0
        t = theory
        while t:
            if t & 1:
                out &= g
            t >>= 1
            g += 1
        return out

    def expand(self, theory: int, a: WorldSet) -> int:
        """Cn(T + {alpha})."""
        return self.th(self.models_of(theory) & a)

    def revised(self, a: WorldSet) -> int:
        return self._th[self._res[a]]

    @staticmethod
    def member(a: WorldSet, theory: int) -> bool:
        return bool(theory >> a & 1)

    @staticmethod
    def included(t1: int, t2: int) -> bool:
        return t1 & ~t2 == 0

    @staticmethod
    def consistent(theory: int) -> bool:
        return not theory & 1

    def _rules(self) -> dict:
        mem, inc, con, ex, rv = self.member, self.included, self.consistent, self.expand, self.revised
        K = self.th(self.op.k_models)
        full = self.full
        P = Postulate
        return {
            P.P0: lambda a, b: rv(full) == K,
            P.P1: lambda a, b: True,
            P.P5: lambda a, b: True,
            P.P2: lambda a, b: mem(a, rv(a)),
            P.P2_PRIME: lambda a, b: mem(a, rv(a)) or rv(a) == K,
            P.P3: lambda a, b: inc(rv(a), ex(K, a)),
            P.P4: lambda a, b: mem(full & ~a, K) or inc(ex(K, a), rv(a)),
            P.P6: lambda a, b: a == 0 or con(rv(a)),
            P.P6_PRIME: lambda a, b: not mem(a, K) or con(rv(a)),
            P.P7: lambda a, b: inc(rv(a) & rv(b), rv(a | b)),
            P.P8: lambda a, b: mem(full & ~a, rv(b)) or inc(ex(rv(b), a), rv(a & b)),
            P.SUPEREXPANSION: lambda a, b: inc(rv(a & b), ex(rv(a), b)),
            P.P9: lambda a, b: inc(rv(a | b), rv(a) | rv(b)),
            P.P10: lambda a, b: not (mem(b, rv(a)) and con(rv(a))) or inc(rv(a), rv(a & b)),
            P.DM: lambda a, b: mem(full & ~b, rv(a)) or inc(rv(a | b), rv(b)),
            P.P11: lambda a, b: not mem(a | b, rv(a | b)) or mem(a, rv(a)) or mem(b, rv(b)),
            P.P12: lambda a, b: not (mem(a | b, rv(a | b)) and not mem(b, rv(b))) or inc(rv(a), rv(a | b)),
            P.P12_PLUS: lambda a, b: not (mem(a | b, rv(a | b)) and not mem(b, rv(b))) or rv(a) == rv(a | b),
            P.P13: lambda a, b: not (mem(a, rv(a)) and mem(b, rv(b))) or inc(rv(a | b), rv(a) | rv(b)),
            P.P14: lambda a, b: not (mem(a, rv(a)) and mem(b, rv(b))) or mem(a | b, rv(a | b)),
            P.ENDOGENOUS_INCLUSION: lambda a, b: not mem(a, K) or inc(rv(a), K),
            P.POSITIVE_VACUITY: lambda a, b: not mem(a, K) or inc(K, rv(a)),
        }

    def holds_at(self, pid: Postulate, a: WorldSet = 0, b: WorldSet = 0) -> bool:
        return self._rule_table[Postulate.lookup(pid)](a, b)

    def violations(self, pid) -> set[tuple]:
        pid = Postulate.lookup(pid)
        arity = pid.arity
        if arity == 0:
            return set() if self.holds_at(pid) else {()}
        if arity == 1:
            return {(a,) for a in range(self.n_classes) if not self.holds_at(pid, a)}
        rule = self._rule_table[pid]
        return {(a, b) for a in range(self.n_classes) for b in range(self.n_classes) if not rule(a, b)}
