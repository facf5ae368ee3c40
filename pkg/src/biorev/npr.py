"""Non-prioritised revision and credibility-limited structures.

The non-prioritised operator keeps K whenever the underlying biorder revision
would collapse to inconsistency.  For z-transitive bases it factors as a
credibility-limited operator: an interval-order revision applied only to
credible inputs.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import InvariantError, SizeGuardError
from .logic import EXHAUSTIVE_MAX_ATOMS, WorldSet, is_subset
from .orders import interpretation_of, is_total_preorder, is_z_transitive, relation_of, to_interval_order
from .revision import BeliefState, revise_models


@dataclass(frozen=True)
class NprState:
    base: BeliefState

    @property
    def k_models(self) -> WorldSet:
        return self.base.k_models

    @property
    def n_worlds(self) -> int:
        return self.base.n_worlds


def npr_revise(s: NprState, a: WorldSet) -> WorldSet:
    out = revise_models(s.base, a)
    return out if out else s.base.k_models


def is_credible(s: NprState, a: WorldSet) -> bool:
    return is_subset(npr_revise(s, a), a)


@dataclass(frozen=True)
class CredibleSet:
    """Credible sentence classes for a fixed K, stored extensionally."""

    n_worlds: int
    members: frozenset[WorldSet]

    def __contains__(self, a: WorldSet) -> bool:
        return a in self.members

    def __len__(self) -> int:
        return len(self.members)


def _all_classes(n_worlds: int) -> range:
    if n_worlds > 1 << EXHAUSTIVE_MAX_ATOMS:
        raise SizeGuardError(f"exhaustive enumeration is limited to {EXHAUSTIVE_MAX_ATOMS} atoms")
    return range(1 << n_worlds)


def credible_set(s: NprState) -> CredibleSet:
    return CredibleSet(s.n_worlds, frozenset(a for a in _all_classes(s.n_worlds) if is_credible(s, a)))


@dataclass
class ConditionResult:
    name: str
    holds: bool
    witness: Optional[tuple] = None


@dataclass
class CredSetReport:
    results: dict[str, ConditionResult] = field(default_factory=dict)

    def __getitem__(self, name: str) -> ConditionResult:
        return self.results[name]

    @property
    def ok(self) -> bool:
        return all(r.holds for r in self.results.values())


def check_credset(c: CredibleSet, k: WorldSet) -> CredSetReport:
    """C1, C3, C4, C4' and the split rule, each with the lexicographically first witness."""
    classes = _all_classes(c.n_worlds)
    full = (1 << c.n_worlds) - 1
    mem = c.members
    rep = CredSetReport()

    def first(gen):
        return next(gen, None)

    w = first(a for a in classes if is_subset(k, a) and a not in mem)
    rep.results["C1"] = ConditionResult("C1", w is None, None if w is None else (w,))
    w = first((a, b) for a in classes for b in classes
              if (a | b) in mem and a not in mem and b not in mem)
    rep.results["C3"] = ConditionResult("C3", w is None, w)
    w = first((a, b) for a in sorted(mem) for b in sorted(mem) if (a | b) not in mem)
    rep.results["C4'"] = ConditionResult("C4'", w is None, w)
    w = first((a, b) for a in sorted(mem) for b in classes if is_subset(a, b) and b not in mem)
    rep.results["C4"] = ConditionResult("C4", w is None, w)
    # a&b and a&~b credible => a credible
    w = first((a, b) for a in classes for b in classes
              if (a & b) in mem and (a & (full & ~b)) in mem and a not in mem)
    rep.results["split"] = ConditionResult("split", w is None, w)
    return rep


@dataclass(frozen=True)
class CLStructure:
    """A successful and consistent revision paired with a credible set.

    Construction does not validate; call :meth:`validate` (``cl_structure_of``
    always does).
    """

    star: BeliefState
    cred: CredibleSet

    @property
    def k_models(self) -> WorldSet:
        return self.star.k_models

    def validate(self) -> None:
        if not self.star.interp.is_interval:
            raise InvariantError("star revision is not consistent (interval condition fails)")
        rep = check_credset(self.cred, self.star.k_models)
        for name in ("C1", "C3", "C4'"):
            if not rep[name].holds:
                raise InvariantError(f"credible set violates {name}: witness {rep[name].witness}")
        joint = check_joint_condition(self)
        if not joint.holds:
            raise InvariantError(f"joint condition fails: witness {joint.witness}")


def cl_revise(cl: CLStructure, a: WorldSet) -> WorldSet:
    if a in cl.cred:
        return revise_models(cl.star, a)
    return cl.star.k_models


def check_joint_condition(cl: CLStructure) -> ConditionResult:
    """a credible and a&b incredible must force revise(a) to exclude b."""
    for a in sorted(cl.cred.members):
        star_a = revise_models(cl.star, a)
        for b in _all_classes(cl.cred.n_worlds):
            if (a & b) not in cl.cred and star_a & b:
                return ConditionResult("joint", False, (a, b))
    return ConditionResult("joint", True)


def cl_structure_of(s: NprState) -> CLStructure:
    """Factor a z-transitive (or transitive) NPR state as a CL structure."""
    rel = s.base.relation
    if not is_z_transitive(rel):
        raise InvariantError("CL factoring needs a z-transitive biorder")
    star_rel = to_interval_order(rel)
    clazz = "AGM" if is_total_preorder(star_rel) else "IOB"
    star = BeliefState(s.k_models, interpretation_of(star_rel), clazz)
    assert relation_of(star.interp) == star_rel
    cl = CLStructure(star, credible_set(s))
    cl.validate()
    return cl
