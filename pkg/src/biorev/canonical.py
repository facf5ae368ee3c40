"""Canonical interpretation of a black-box operator, and classification built on it.

Two nested sequences are grown from the operator's outputs alone:
``U[i+1] = U[i] | op(V[i])`` and ``V[i+1]`` is the union of every class ``Y``
whose revision escapes ``U[i+1]``.  Ranks are read off from where each
valuation enters ``U`` and leaves ``V``.  When the operator really is a
biorder-based revision, revising with these ranks reproduces it exactly.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from .errors import InvariantError, SizeGuardError
from .logic import EXHAUSTIVE_MAX_ATOMS, WorldSet, format_valuation, format_worldset, is_subset, members
from .orders import (
    RankedInterpretation,
    dissonant_set,
    is_compressed,
    relation_of,
    satisfies_bt,
    satisfies_bzt,
    satisfies_property8,
)
from .postulates import FAILS, HOLDS, CheckReport, OperatorUnderTest, Witness
from .revision import select


@dataclass
class CanonicalTrace:
    """``u_seq[0]``/``v_seq[0]`` are the seeds at index -1; ``u_seq[i + 1]`` is ``U[i]``."""

    n_worlds: int
    u_seq: list[WorldSet]
    v_seq: list[WorldSet]
    n: int
    result: RankedInterpretation
    padded: bool = False

    def U(self, i: int) -> WorldSet:
        return self.u_seq[i + 1]

    def V(self, i: int) -> WorldSet:
        return self.v_seq[i + 1]

    @property
    def collapsed(self) -> bool:
        """U[0] is already the fixpoint, so the forced n = 1 leaves rank 1 empty."""
        return self.n == 1 and self.U(0) == self.U(1)

    def invariants(self) -> dict[str, bool]:
        full = (1 << self.n_worlds) - 1
        rel = relation_of(self.result)
        return {
            "u_increasing": all(is_subset(a, b) for a, b in zip(self.u_seq, self.u_seq[1:])),
            "v_decreasing": all(is_subset(b, a) for a, b in zip(self.v_seq, self.v_seq[1:])),
            "normal": self.result.is_normal,
            # the collapsed case has a lone gap at lower rank 1; compression is exempted there
            "compressed": is_compressed(self.result) or self.collapsed,
            "property8": satisfies_property8(rel),
            "consonant_is_U_n": dissonant_set(rel) == full & ~self.U(self.n),
            "consonance_lemma": _consonance_lemma(self.result),
        }

    def check_invariants(self) -> None:
        bad = [k for k, ok in self.invariants().items() if not ok]
        if bad:
            raise InvariantError("canonical trace invariants fail: " + ", ".join(bad))

    def to_json(self) -> dict:
        k = self.n_worlds.bit_length() - 1
        return {
            "n": self.n,
            "collapsed": self.collapsed,
            "padded": self.padded,
            "u_seq": [format_worldset(x, k) for x in self.u_seq],
            "v_seq": [format_worldset(x, k) for x in self.v_seq],
            "lower": {format_valuation(v, k): r for v, r in enumerate(self.result.lower)},
            "upper": {format_valuation(v, k): r for v, r in enumerate(self.result.upper)},
        }


def _consonance_lemma(bm: RankedInterpretation) -> bool:
    lo, up = bm.lower, bm.upper
    return all(lo[w] <= up[w] for w in range(bm.n_worlds)
               if any(lo[w] <= up[u] for u in range(bm.n_worlds)))


def extract_canonical(op: OperatorUnderTest) -> CanonicalTrace:
    if op.table.n > EXHAUSTIVE_MAX_ATOMS:
        raise SizeGuardError(f"canonical extraction is limited to {EXHAUSTIVE_MAX_ATOMS} atoms")
    n_worlds, full = op.n_worlds, op.full
    classes = range(1 << n_worlds)
    ev = lru_cache(maxsize=None)(op.eval)
    results = [ev(y) for y in classes]

    u_seq, v_seq = [0], [full]
    i = -1
    while True:
        nxt_u = u_seq[-1] | ev(v_seq[-1])
        if i >= 1 and nxt_u == u_seq[-1]:
            n = i
            break
        if len(u_seq) > n_worlds + 3:
            raise InvariantError("canonical U sequence failed to reach a fixpoint")
        nxt_v = 0
        for y in classes:
            if not is_subset(results[y], nxt_u):
                nxt_v |= y
        u_seq.append(nxt_u)
        v_seq.append(nxt_v)
        i += 1
    padded = u_seq[-1] != full
    if padded:
        u_seq.append(full)

    u_idx = u_seq[1:]
    v_idx = v_seq[1:]
    lower, upper = [], []
    for u in range(n_worlds):
        lower.append(next(j for j, x in enumerate(u_idx) if x >> u & 1))
        upper.append(next((j for j, x in enumerate(v_idx) if not x >> u & 1), n + 1))
    return CanonicalTrace(n_worlds, u_seq, v_seq, n, RankedInterpretation(tuple(lower), tuple(upper)), padded)


def roundtrip_verify(op: OperatorUnderTest, trace: CanonicalTrace) -> CheckReport:
    """Does revising with the canonical ranks reproduce ``op`` on every class?"""
    for a in range(1 << op.n_worlds):
        got, want = select(trace.result, a), op.eval(a)
        if got != want:
            return CheckReport("roundtrip", FAILS, Witness(a, None, want, got, op.table))
    return CheckReport("roundtrip", HOLDS)


@dataclass
class Classification:
    classes: frozenset[str]
    trace: CanonicalTrace
    roundtrip: CheckReport
    evidence: dict[str, object] = field(default_factory=dict)

    def __contains__(self, name: str) -> bool:
        return name in self.classes


def classify_black_box(op: OperatorUnderTest, trace: Optional[CanonicalTrace] = None) -> Classification:
    trace = trace or extract_canonical(op)
    rt = roundtrip_verify(op, trace)
    bm = trace.result
    ev: dict[str, object] = {"roundtrip": rt.verdict}
    out = set()
    if rt.verdict == HOLDS:
        out.add("BOB")
        ev["interval"] = bm.is_interval
        ev["bzt"] = satisfies_bzt(bm)
        ev["bt"] = satisfies_bt(bm)
        if bm.is_interval:
            out.add("IOB")
        if ev["bzt"]:
            out.add("ZTBOB")
        if ev["bt"]:
            out.add("TBOB")
    else:
        ev["mismatch"] = rt.witness.to_json()
    return Classification(frozenset(out), trace, rt, ev)


def dissonant_worlds(trace: CanonicalTrace) -> list[int]:
    return list(members(dissonant_set(relation_of(trace.result))))
