"""Seeded corpora of belief states shared by the test modules."""
from __future__ import annotations

import random
from functools import lru_cache
from pathlib import Path

from biorev import AtomTable, BeliefState, OperatorUnderTest, RankedInterpretation, random_interpretation
from biorev.problem import load_problem

DATA = Path(__file__).parent / "data"
P2 = AtomTable(("p", "q"))

GENERATOR_CLASS = {"IOB": "interval", "BOB": "biorder", "ZTBOB": "z-transitive", "TBOB": "transitive"}


def rank_state(lower, upper, k=None, clazz="BOB", table=P2):
    """State from ranks listed in the order pq, pq-, p-q, p-q- (two atoms)."""
    # valuation index: bit0 = p, bit1 = q
    order = (3, 1, 2, 0)
    lo, up = [0] * 4, [0] * 4
    for v, a, b in zip(order, lower, upper):
        lo[v], up[v] = a, b
    bm = RankedInterpretation(tuple(lo), tuple(up))
    if k is None:
        return BeliefState.from_interpretation(bm, clazz)
    from biorev import mod
    return BeliefState(mod(k, table), bm, clazz)


def interval_state():
    return rank_state((0, 2, 1, 0), (1, 3, 1, 3), "p -> q", "IOB")


def dissonant_state():
    return rank_state((2, 3, 4, 0), (3, 1, 0, 4), "!p & !q")


def nonzt_state():
    return rank_state((0, 1, 2, 0), (2, 1, 0, 0), "p <-> q")


def load(name):
    return load_problem(str(DATA / name))


@lru_cache(maxsize=None)
def states(tag: str, n: int, count: int) -> tuple[BeliefState, ...]:
    out = []
    for s in range(count):
        rng = random.Random(f"{tag}-{n}-{s}")
        anchor = rng.randrange(1, 1 << (1 << n))
        bm = random_interpretation(n, anchor, GENERATOR_CLASS[tag], max_rank=rng.randint(1, 4),
                                  seed=rng.getrandbits(32))
        out.append(BeliefState(anchor, bm, tag))
    return tuple(out)


def op(state) -> OperatorUnderTest:
    return OperatorUnderTest.of_state(state)
