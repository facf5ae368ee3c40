"""Relations and ranked interpretations over valuations.

A :class:`Relation` is a square bit matrix stored row-wise: ``rows[v]`` is the
world set of all ``u`` with ``v <= u``.  A :class:`RankedInterpretation` holds
a lower and an upper rank per valuation and induces the relation
``v <= u  iff  lower[v] <= upper[u]``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .errors import InvariantError
from .logic import AtomTable, Valuation, WorldSet, is_subset, members

INTERPRETATION_CLASSES = ("biorder", "z-transitive", "transitive", "interval", "total-preorder")


@dataclass(frozen=True)
class Relation:
    n_worlds: int
    rows: tuple[WorldSet, ...]

    def __post_init__(self):
        rows = tuple(self.rows)
        object.__setattr__(self, "rows", rows)
        if len(rows) != self.n_worlds:
            raise ValueError("relation must be square over the valuation space")
        full = (1 << self.n_worlds) - 1
        if any(r & ~full for r in rows):
            raise ValueError("row mask out of range")

    @classmethod
    def from_pairs(cls, n_worlds: int, pairs: Iterable[tuple[Valuation, Valuation]]) -> "Relation":
        rows = [0] * n_worlds
        for v, u in pairs:
            rows[v] |= 1 << u
        return cls(n_worlds, tuple(rows))

    @classmethod
    def complete(cls, n_worlds: int) -> "Relation":
        full = (1 << n_worlds) - 1
        return cls(n_worlds, (full,) * n_worlds)

    @classmethod
    def identity(cls, n_worlds: int) -> "Relation":
        return cls(n_worlds, tuple(1 << v for v in range(n_worlds)))

    @property
    def full(self) -> WorldSet:
        return (1 << self.n_worlds) - 1

    def holds(self, v: Valuation, u: Valuation) -> bool:
        return bool(self.rows[v] >> u & 1)

    def strictly(self, v: Valuation, u: Valuation) -> bool:
        return self.holds(v, u) and not self.holds(u, v)

    def down(self, u: Valuation) -> WorldSet:
        return sum(1 << v for v in range(self.n_worlds) if self.rows[v] >> u & 1)

    def pairs(self) -> Iterator[tuple[Valuation, Valuation]]:
        for v, row in enumerate(self.rows):
            for u in members(row):
                yield v, u

    def __len__(self) -> int:
        return sum(bin(r).count("1") for r in self.rows)


@dataclass(frozen=True)
class RankedInterpretation:
    """Pair of rank functions; ``lower[v]``/``upper[v]`` for every valuation ``v``."""

    lower: tuple[int, ...]
    upper: tuple[int, ...]

    def __post_init__(self):
        lower, upper = tuple(self.lower), tuple(self.upper)
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)
        n = len(lower)
        if n != len(upper) or n == 0 or n & (n - 1):
            raise ValueError("rank functions must cover a full valuation space")
        if min(lower) < 0 or min(upper) < 0:
            raise ValueError("ranks are natural numbers")

    @property
    def n_worlds(self) -> int:
        return len(self.lower)

    @property
    def is_normal(self) -> bool:
        return min(self.lower) == 0

    @property
    def is_interval(self) -> bool:
        return all(lo <= up for lo, up in zip(self.lower, self.upper))

    @property
    def dissonant(self) -> WorldSet:
        return sum(1 << v for v, (lo, up) in enumerate(zip(self.lower, self.upper)) if up < lo)


@dataclass(frozen=True)
class SphereRanking:
    """Single ranking with some ranks flagged impossible (inputs bottoming out there collapse)."""

    rank: tuple[int, ...]
    impossible: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "rank", tuple(self.rank))
        object.__setattr__(self, "impossible", frozenset(self.impossible))
        used = set(self.rank)
        if used != set(range(len(used))):
            raise ValueError("ranks must be contiguous from 0")
        if not self.impossible <= used:
            raise ValueError("impossible ranks must occur")

    def strata(self) -> list[WorldSet]:
        out = [0] * (max(self.rank) + 1)
        for v, r in enumerate(self.rank):
            out[r] |= 1 << v
        return out


def sphere_revise(sr: SphereRanking, a: WorldSet) -> WorldSet:
    if a == 0:
        return 0
    best = min(sr.rank[v] for v in members(a))
    if best in sr.impossible:
        return 0
    return sum(1 << v for v in members(a) if sr.rank[v] <= best)


# ---------------------------------------------------------------------------
# Interpretation -> relation


def relation_of(bm: RankedInterpretation) -> Relation:
    n = bm.n_worlds
    rows = []
    for v in range(n):
        lo = bm.lower[v]
        rows.append(sum(1 << u for u in range(n) if lo <= bm.upper[u]))
    return Relation(n, tuple(rows))


# ---------------------------------------------------------------------------
# Order properties, by direct quantification


def is_ferrers(r: Relation) -> bool:
    # v<=u and v'<=u'  =>  v<=u' or v'<=u
    rows = r.rows
    for v in range(r.n_worlds):
        for v2 in range(r.n_worlds):
            for u in members(rows[v]):
                for u2 in members(rows[v2]):
                    if not (rows[v] >> u2 & 1 or rows[v2] >> u & 1):
                        return False
    return True


def is_reflexive(r: Relation) -> bool:
    return all(r.rows[v] >> v & 1 for v in range(r.n_worlds))


def is_transitive(r: Relation) -> bool:
    rows = r.rows
    for v in range(r.n_worlds):
        for u in members(rows[v]):
            if not is_subset(rows[u], rows[v]):
                return False
    return True


def is_z_transitive(r: Relation) -> bool:
    """u<=v, v<=z and z not<= z imply u<=z."""
    return z_transitivity_witness(r) is None


def z_transitivity_witness(r: Relation) -> Optional[tuple[Valuation, Valuation, Valuation]]:
    rows = r.rows
    diss = dissonant_set(r)
    for u in range(r.n_worlds):
        for v in members(rows[u]):
            for z in members(rows[v] & diss):
                if not rows[u] >> z & 1:
                    return u, v, z
    return None


def is_complete(r: Relation) -> bool:
    return all(r.holds(v, u) or r.holds(u, v)
               for v in range(r.n_worlds) for u in range(v, r.n_worlds))


def is_total_preorder(r: Relation) -> bool:
    return is_complete(r) and is_transitive(r)


def is_biorder(r: Relation) -> bool:
    return is_ferrers(r)


def is_interval_order(r: Relation) -> bool:
    return is_ferrers(r) and is_reflexive(r)


def dissonant_set(r: Relation) -> WorldSet:
    return sum(1 << z for z in range(r.n_worlds) if not r.rows[z] >> z & 1)


def opt(ws: WorldSet, r: Relation) -> WorldSet:
    """Members of ``ws`` that are below-or-equal every member of ``ws``."""
    return sum(1 << x for x in members(ws) if is_subset(ws, r.rows[x]))


def is_anchored_on(r: Relation, m: WorldSet) -> bool:
    return m != 0 and opt(r.full, r) == m


# ---------------------------------------------------------------------------
# Relation -> interpretation


def interpretation_of(r: Relation) -> RankedInterpretation:
    """Compressed interpretation of a Ferrers relation via nested up/down sets.

    ``U[i+1] = U[i] + {u : complement(V[i]) <= up(u)}`` and
    ``V[i+1] = {u : down(u) <= U[i+1]}``, starting from empty sets; the lower
    rank of ``u`` is the first ``i`` with ``u`` in ``U[i]``, the upper rank the
    first ``i`` with ``u`` in ``V[i]``.
    """
    if not is_ferrers(r):
        raise InvariantError("relation is not a biorder (Ferrers condition fails)")
    n, full = r.n_worlds, r.full
    downs = [r.down(u) for u in range(n)]
    lower: list[Optional[int]] = [None] * n
    upper: list[Optional[int]] = [None] * n
    big_u = big_v = 0
    i = 0
    while big_u != full or big_v != full:
        if i > 2 * n + 2:
            raise InvariantError("rank construction did not terminate")
        outside_v = full & ~big_v
        big_u |= sum(1 << u for u in range(n) if is_subset(outside_v, r.rows[u]))
        big_v = sum(1 << u for u in range(n) if is_subset(downs[u], big_u))
        for u in members(big_u):
            if lower[u] is None:
                lower[u] = i
        for u in members(big_v):
            if upper[u] is None:
                upper[u] = i
        i += 1
    return RankedInterpretation(tuple(lower), tuple(upper))


def compress(bm: RankedInterpretation) -> RankedInterpretation:
    return interpretation_of(relation_of(bm))


def is_compressed(bm: RankedInterpretation) -> bool:
    lows, ups = set(bm.lower), set(bm.upper)
    max_l, max_u = max(lows), max(ups)
    return (all(i in lows for i in range(1, max_l + 1))
            and all(i in ups for i in range(0, max_u + 1))
            and 0 <= max_l - max_u <= 1)


# ---------------------------------------------------------------------------
# Rank-level conditions


def bzt_witness(bm: RankedInterpretation) -> Optional[tuple[Valuation, Valuation]]:
    """First (u, z) with lower(u) <= upper(z) < upper(u) and z dissonant."""
    lo, up = bm.lower, bm.upper
    for u in range(bm.n_worlds):
        for z in range(bm.n_worlds):
            if lo[u] <= up[z] < up[u] and not lo[z] <= up[z]:
                return u, z
    return None


def satisfies_bzt(bm: RankedInterpretation) -> bool:
    return bzt_witness(bm) is None


def satisfies_bt(bm: RankedInterpretation) -> bool:
    return all(up <= lo for lo, up in zip(bm.lower, bm.upper))


def satisfies_vacuity_condition(r: Relation, m: WorldSet) -> bool:
    """Every model of K is strictly better than every non-model."""
    outside = r.full & ~m
    return all(r.strictly(v, u) for v in members(m) for u in members(outside))


def satisfies_property8(r: Relation) -> bool:
    """``v <= v'`` implies ``v <= v``: dissonant valuations have no out-edges."""
    return all(r.rows[v] == 0 or r.rows[v] >> v & 1 for v in range(r.n_worlds))


def satisfies_positive_vacuity_condition(bm: RankedInterpretation) -> bool:
    return any(lo == 0 and up == 0 for lo, up in zip(bm.lower, bm.upper))


# ---------------------------------------------------------------------------
# Transforms


def trim_dissonant_outedges(r: Relation) -> Relation:
    if not is_ferrers(r):
        raise InvariantError("relation is not a biorder")
    diss = dissonant_set(r)
    return Relation(r.n_worlds, tuple(0 if diss >> v & 1 else row for v, row in enumerate(r.rows)))


def to_interval_order(r: Relation, *, permissive: bool = False) -> Relation:
    """Send dissonant valuations to the top of an interval order.

    ``u <= v`` iff (u, v consonant and u <= v in ``r``) or v is dissonant.
    Non-empty optimal sets are preserved only for z-transitive input, so that
    is required unless ``permissive`` is set.
    """
    if not is_ferrers(r):
        raise InvariantError("relation is not a biorder")
    if not permissive and not is_z_transitive(r):
        raise InvariantError("relation is not z-transitive")
    diss = dissonant_set(r)
    rows = []
    for u, row in enumerate(r.rows):
        if diss >> u & 1:
            rows.append(diss)
        else:
            rows.append((row & ~diss) | diss)
    return Relation(r.n_worlds, tuple(rows))


def to_total_preorder(r: Relation) -> Relation:
    if not is_transitive(r):
        raise InvariantError("relation is not transitive")
    return to_interval_order(r)


def to_sphere_ranking(bm: RankedInterpretation) -> SphereRanking:
    """Collapse a BT interpretation to one ranking with impossible ranks.

    Consonant valuations sit at position ``2*upper``; dissonant ones at
    ``2*upper + 1``, a fresh rank just above the consonant rank they share an
    upper rank with.  Positions are then renumbered contiguously.
    """
    if not satisfies_bt(bm):
        bm = compress(bm)
        if not satisfies_bt(bm):
            raise InvariantError("interpretation does not satisfy BT")
    pos = [2 * up + (1 if up < lo else 0) for lo, up in zip(bm.lower, bm.upper)]
    levels = sorted(set(pos))
    renumber = {p: i for i, p in enumerate(levels)}
    rank = tuple(renumber[p] for p in pos)
    impossible = frozenset(renumber[p] for p in levels if p % 2)
    return SphereRanking(rank, impossible)


# ---------------------------------------------------------------------------
# Random generation


def _rank_condition(bm: RankedInterpretation, clazz: str) -> bool:
    if clazz == "biorder":
        return True
    if clazz == "interval":
        return bm.is_interval
    if clazz == "total-preorder":
        return bm.is_interval and satisfies_bt(compress(bm))
    c = compress(bm)
    if clazz == "z-transitive":
        return satisfies_bzt(c)
    if clazz == "transitive":
        return satisfies_bt(c)
    raise ValueError(f"unknown interpretation class {clazz!r}")


def _repair_bzt(lower: list[int], upper: list[int]) -> None:
    # lower upper(u) to upper(z) whenever a dissonant z sits strictly inside u's reach
    changed = True
    while changed:
        changed = False
        diss = sorted((z for z in range(len(lower)) if upper[z] < lower[z]), key=lambda z: upper[z])
        for z in diss:
            for u in range(len(lower)):
                if lower[u] <= upper[z] < upper[u]:
                    upper[u] = upper[z]
                    changed = True


def _sample(rng: random.Random, n_worlds: int, anchor: WorldSet, clazz: str, max_rank: int):
    inside = [v for v in range(n_worlds) if anchor >> v & 1]
    outside = [v for v in range(n_worlds) if not anchor >> v & 1]
    lower = [0] * n_worlds
    upper = [0] * n_worlds
    if clazz in ("transitive", "total-preorder"):
        # anchor at rank 0 with U = L; elsewhere U <= L (equal for total preorders)
        for v in outside:
            lower[v] = rng.randint(1, max_rank)
            upper[v] = lower[v] if clazz == "total-preorder" else rng.randint(0, lower[v])
        return lower, upper
    m = rng.randint(0, max_rank - 1) if max_rank > 0 else 0
    for v in inside:
        lower[v] = rng.randint(0, m)
        upper[v] = rng.randint(m, max_rank)
    lower[rng.choice(inside)] = 0
    for v in outside:
        lower[v] = rng.randint(m + 1, max_rank + 1)
        if clazz == "interval":
            upper[v] = rng.randint(lower[v], max_rank + 1)
        else:
            upper[v] = rng.randint(m, max_rank + 1)
    upper[rng.choice(inside)] = m
    if clazz == "z-transitive":
        _repair_bzt(lower, upper)
    return lower, upper


def random_interpretation(table, anchor: WorldSet, clazz: str = "biorder",
                          max_rank: int = 3, seed: Optional[int] = None,
                          retries: int = 50) -> RankedInterpretation:
    """Seeded random interpretation of ``clazz`` whose relation is anchored on ``anchor``.

    ``table`` is an :class:`AtomTable` or an atom count.
    """
    n = table.n if isinstance(table, AtomTable) else int(table)
    n_worlds = 1 << n
    if anchor == 0 or anchor >> n_worlds:
        raise ValueError("anchor must be a non-empty world set")
    if clazz not in INTERPRETATION_CLASSES:
        raise ValueError(f"unknown interpretation class {clazz!r}")
    max_rank = max(1, max_rank)
    rng = random.Random(seed)
    for _ in range(retries):
        lower, upper = _sample(rng, n_worlds, anchor, clazz, max_rank)
        bm = RankedInterpretation(tuple(lower), tuple(upper))
        if bm.is_normal and is_anchored_on(relation_of(bm), anchor) and _rank_condition(bm, clazz):
            return bm
    # fallback: K at rank 0, everything else one consonant rank above
    lower = tuple(0 if anchor >> v & 1 else 1 for v in range(n_worlds))
    return RankedInterpretation(lower, lower)
