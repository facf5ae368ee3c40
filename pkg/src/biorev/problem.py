"""Problem files: one belief state per file.

::

    # comment
    atoms: p,q
    belief: !p & !q
    class: BOB
    L: 11=2, 10=3, 01=4, 00=0
    U: 11=3, 10=1, 01=0, 00=4
    command: revise p

A sphere ranking is written ``S: 11=2, ...`` with ``impossible: 1`` naming
ranks.

``L``/``U`` may be replaced by a ``relation:`` line listing pairs ``v<=u`` of
bitstrings; ranks are then recovered from the relation.  ``belief`` is
optional and defaults to the globally optimal valuations.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import BiorevError, ProblemFileError
from .logic import AtomTable, canonical_formula, format_formula, format_valuation, mod, parse_valuation
from .orders import RankedInterpretation, Relation, SphereRanking, interpretation_of, opt, relation_of
from .revision import OPERATOR_CLASSES, BeliefState


@dataclass
class ProblemFile:
    table: AtomTable
    lower: Optional[tuple[int, ...]] = None
    upper: Optional[tuple[int, ...]] = None
    belief: Optional[str] = None
    clazz: Optional[str] = None
    relation: Optional[Relation] = None
    sphere: Optional[SphereRanking] = None
    commands: list[str] = field(default_factory=list)

    def interpretation(self) -> RankedInterpretation:
        if self.lower is not None:
            return RankedInterpretation(self.lower, self.upper)
        if self.relation is not None:
            return interpretation_of(self.relation)
        raise ProblemFileError("file has no L/U ranks or relation")

    def k_models(self) -> int:
        if self.belief is not None:
            return mod(self.belief, self.table)
        rel = self.relation if self.relation is not None else relation_of(self.interpretation())
        return opt(rel.full, rel)

    def state(self, **kw) -> BeliefState:
        return BeliefState(self.k_models(), self.interpretation(), self.clazz or "BOB", **kw)


def _parse_ranks(text: str, table: AtomTable, lineno: int) -> tuple[int, ...]:
    ranks: dict[int, int] = {}
    for item in filter(None, (s.strip() for s in text.split(","))):
        key, sep, val = item.partition("=")
        if not sep:
            raise ProblemFileError(f"line {lineno}: expected valuation=rank, got {item!r}")
        try:
            v = parse_valuation(key.strip(), table.n)
            r = int(val)
        except (ValueError, BiorevError) as e:
            raise ProblemFileError(f"line {lineno}: {e}") from None
        if r < 0:
            raise ProblemFileError(f"line {lineno}: negative rank {r}")
        if v in ranks:
            raise ProblemFileError(f"line {lineno}: valuation {key.strip()} listed twice")
        ranks[v] = r
    if len(ranks) != table.n_worlds:
        raise ProblemFileError(f"line {lineno}: expected {table.n_worlds} valuations, got {len(ranks)}")
    return tuple(ranks[v] for v in range(table.n_worlds))


def _parse_pairs(text: str, table: AtomTable, lineno: int) -> Relation:
    pairs = []
    for item in filter(None, (s.strip() for s in text.split(","))):
        left, sep, right = item.partition("<=")
        if not sep:
            raise ProblemFileError(f"line {lineno}: expected v<=u, got {item!r}")
        try:
            pairs.append((parse_valuation(left.strip(), table.n), parse_valuation(right.strip(), table.n)))
        except (ValueError, BiorevError) as e:
            raise ProblemFileError(f"line {lineno}: {e}") from None
    return Relation.from_pairs(table.n_worlds, pairs)


def parse_problem(text: str) -> ProblemFile:
    fields: dict[str, tuple[str, int]] = {}
    commands = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        key = key.strip().lower()
        if not sep:
            raise ProblemFileError(f"line {lineno}: expected 'key: value'")
        if key == "command":
            commands.append(value.strip())
            continue
        if key not in ("atoms", "belief", "class", "l", "u", "relation", "s", "impossible"):
            raise ProblemFileError(f"line {lineno}: unknown key {key!r}")
        if key in fields:
            raise ProblemFileError(f"line {lineno}: duplicate key {key!r}")
        fields[key] = (value.strip(), lineno)

    if "atoms" not in fields:
        raise ProblemFileError("missing 'atoms:' line")
    try:
        table = AtomTable.parse(fields["atoms"][0])
    except (ValueError, BiorevError) as e:
        raise ProblemFileError(f"line {fields['atoms'][1]}: {e}") from None
    pf = ProblemFile(table, commands=commands)
    if ("l" in fields) != ("u" in fields):
        raise ProblemFileError("L and U lines must appear together")
    if "l" in fields:
        pf.lower = _parse_ranks(fields["l"][0], table, fields["l"][1])
        pf.upper = _parse_ranks(fields["u"][0], table, fields["u"][1])
    if "relation" in fields:
        pf.relation = _parse_pairs(fields["relation"][0], table, fields["relation"][1])
    if "s" in fields:
        rank = _parse_ranks(fields["s"][0], table, fields["s"][1])
        imp = set()
        if "impossible" in fields:
            text_imp, ln = fields["impossible"]
            try:
                imp = {int(x) for x in text_imp.split(",") if x.strip()}
            except ValueError as e:
                raise ProblemFileError(f"line {ln}: {e}") from None
        try:
            pf.sphere = SphereRanking(rank, frozenset(imp))
        except ValueError as e:
            raise ProblemFileError(str(e)) from None
    if pf.lower is None and pf.relation is None and pf.sphere is None:
        raise ProblemFileError("file needs L/U lines or a relation line")
    if "belief" in fields:
        pf.belief = fields["belief"][0]
    if "class" in fields:
        c = fields["class"][0].upper()
        if c not in OPERATOR_CLASSES:
            raise ProblemFileError(f"line {fields['class'][1]}: unknown class {c!r}")
        pf.clazz = c
    return pf


def load_problem(path: str) -> ProblemFile:
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_problem(fh.read())
    except OSError as e:
        raise ProblemFileError(f"cannot read {path}: {e.strerror}") from None


def _rank_line(ranks, n: int) -> str:
    order = sorted(range(len(ranks)), key=lambda v: format_valuation(v, n), reverse=True)
    return ", ".join(f"{format_valuation(v, n)}={ranks[v]}" for v in order)


def emit_problem(table: AtomTable, interp: Optional[RankedInterpretation] = None, *,
                 k_models: Optional[int] = None, clazz: Optional[str] = None,
                 relation: Optional[Relation] = None, sphere: Optional[SphereRanking] = None,
                 comments: tuple[str, ...] = ()) -> str:
    n = table.n
    out = [f"# {c}" for c in comments]
    out.append("atoms: " + ",".join(table.atoms))
    if k_models is not None:
        out.append("belief: " + format_formula(canonical_formula(k_models, table)))
    if clazz is not None:
        out.append(f"class: {clazz}")
    if interp is not None:
        out.append("L: " + _rank_line(interp.lower, n))
        out.append("U: " + _rank_line(interp.upper, n))
    if relation is not None:
        pairs = sorted(((format_valuation(v, n), format_valuation(u, n)) for v, u in relation.pairs()), reverse=True)
        out.append("relation: " + ", ".join(f"{v}<={u}" for v, u in pairs))
    if sphere is not None:
        out.append("S: " + _rank_line(sphere.rank, n))
        out.append("impossible: " + ", ".join(str(r) for r in sorted(sphere.impossible)))
    return "\n".join(out) + "\n"
