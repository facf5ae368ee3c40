"""Prioritised revision by interval orders and biorders.

All four operator families share one selection rule: revising by ``a`` keeps
the members of ``a`` whose lower rank does not exceed the least upper rank in
``a``.  The families differ only in the conditions imposed on the ranks.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import InvariantError
from .logic import WorldSet, is_subset, members, submasks
from .orders import (
    RankedInterpretation,
    Relation,
    compress,
    dissonant_set,
    is_anchored_on,
    opt,
    relation_of,
    satisfies_bt,
    satisfies_bzt,
    satisfies_positive_vacuity_condition,
    satisfies_vacuity_condition,
)

OPERATOR_CLASSES = ("IOB", "BOB", "ZTBOB", "TBOB", "AGM")

# generator class name -> operator class tag
CLASS_OF_INTERPRETATION = {
    "biorder": "BOB",
    "z-transitive": "ZTBOB",
    "transitive": "TBOB",
    "interval": "IOB",
    "total-preorder": "AGM",
}


def _class_holds(clazz: str, bm: RankedInterpretation) -> bool:
    if clazz == "BOB":
        return True
    if clazz == "IOB":
        return bm.is_interval
    c = compress(bm)
    if clazz == "ZTBOB":
        return satisfies_bzt(c)
    if clazz == "TBOB":
        return satisfies_bt(c)
    if clazz == "AGM":
        return bm.is_interval and satisfies_bt(c)
    raise ValueError(f"unknown operator class {clazz!r}")


@dataclass(frozen=True)
class BeliefState:
    """A consistent belief set (by its models) with an anchored interpretation.

    ``clazz`` is validated on construction; the two vacuity flags turn on
    optional checks that raise rather than repair.
    """

    k_models: WorldSet
    interp: RankedInterpretation
    clazz: str = "BOB"
    check_vacuity: bool = False
    check_positive_vacuity: bool = False
    relation: Relation = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.k_models == 0:
            raise InvariantError("belief set must be consistent")
        if not self.interp.is_normal:
            raise InvariantError("interpretation is not normal (no valuation at lower rank 0)")
        rel = relation_of(self.interp)
        object.__setattr__(self, "relation", rel)
        if not is_anchored_on(rel, self.k_models):
            raise InvariantError("ordering is not anchored on the models of K")
        if self.clazz not in OPERATOR_CLASSES:
            raise InvariantError(f"unknown operator class {self.clazz!r}")
        if not _class_holds(self.clazz, self.interp):
            raise InvariantError(f"interpretation does not satisfy the {self.clazz} condition")
        if self.check_vacuity and not satisfies_vacuity_condition(rel, self.k_models):
            raise InvariantError("vacuity condition fails: some model of K is not strictly preferred")
        if self.check_positive_vacuity and not satisfies_positive_vacuity_condition(self.interp):
            raise InvariantError("no valuation has lower and upper rank 0")

    @classmethod
    def from_interpretation(cls, interp: RankedInterpretation, clazz: str = "BOB", **kw) -> "BeliefState":
        """Build a state whose K is read off as the globally optimal valuations."""
        rel = relation_of(interp)
        return cls(opt(rel.full, rel), interp, clazz, **kw)

    @property
    def n_worlds(self) -> int:
        return self.interp.n_worlds

    @property
    def full(self) -> WorldSet:
        return (1 << self.n_worlds) - 1


@dataclass(frozen=True)
class RevisionOutcome:
    models: WorldSet

    @property
    def consistent(self) -> bool:
        return self.models != 0


def sentence_ranks(state: BeliefState, a: WorldSet) -> tuple[Optional[int], Optional[int]]:
    """Least lower and least upper rank over the models of ``a``."""
    if a == 0:
        return None, None
    vs = list(members(a))
    return min(state.interp.lower[v] for v in vs), min(state.interp.upper[v] for v in vs)


def select(interp: RankedInterpretation, a: WorldSet) -> WorldSet:
    """Members of ``a`` whose lower rank is at most the least upper rank in ``a``."""
    if a == 0:
        return 0
    lower, upper = interp.lower, interp.upper
    vs = list(members(a))
    bound = min(upper[v] for v in vs)
    return sum(1 << v for v in vs if lower[v] <= bound)


def revise_models(state: BeliefState, a: WorldSet) -> WorldSet:
    return select(state.interp, a)


def revise(state: BeliefState, a: WorldSet) -> RevisionOutcome:
    return RevisionOutcome(revise_models(state, a))


def revise_by_opt(state: BeliefState, a: WorldSet) -> WorldSet:
    """Optimal members of ``a`` under the induced relation (reference form)."""
    return opt(a, state.relation)


def is_destabilising(state: BeliefState, a: WorldSet) -> bool:
    return revise_models(state, a) == 0


def is_irreconcilable(state: BeliefState, a: WorldSet) -> bool:
    # a strengthening survives iff it contains a consonant valuation
    return is_subset(a, dissonant_set(state.relation))


def is_irreconcilable_bruteforce(state: BeliefState, a: WorldSet) -> bool:
    return all(revise_models(state, b) == 0 for b in submasks(a) if b)


def is_precarious(state: BeliefState, a: WorldSet) -> bool:
    """Some ``b`` with ``K*a |= b`` whose strengthening ``a & b`` loses part of ``K*a``.

    Formally: exists b with revise(a) <= b and not revise(a & b) <= revise(a).
    Only ``c = a & b`` matters and it ranges over sets between revise(a) and a.
    """
    base = revise_models(state, a)
    for extra in submasks(a & ~base):
        if not is_subset(revise_models(state, base | extra), base):
            return True
    return False


precarious_wedge = is_precarious


def precarious_vee(state: BeliefState, a: WorldSet) -> bool:
    """Variant with the weakening ``a | b`` in place of ``a & b``."""
    base = revise_models(state, a)
    for extra in submasks(state.full & ~base):
        if not is_subset(revise_models(state, a | base | extra), base):
            return True
    return False


def classify_operator_class(state: BeliefState) -> frozenset[str]:
    """Which of IOB/BOB/ZTBOB/TBOB the state's ordering inhabits (checked on its compressed form)."""
    c = compress(state.interp)
    out = {"BOB"}
    if c.is_interval:
        out.add("IOB")
    if satisfies_bzt(c):
        out.add("ZTBOB")
    if satisfies_bt(c):
        out.add("TBOB")
    return frozenset(out)
