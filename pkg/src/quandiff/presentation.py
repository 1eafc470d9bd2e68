"""Upper and lower quandle presentations read off a Gauss code.

Cutting the code at every under-pass splits it into arcs. Number the
under-passes h_1..h_n in order from the first symbol; arc ``k`` is the
segment that ends at h_k. If crossing ``c`` has its under-pass at h_k and
its over-pass on arc ``j``, it contributes ``k |> j = k+1`` when positive
and ``k+1 |> j = k`` when negative (indices mod n, 1-based).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Union

from .gauss import UNDER, GaussCode, flip, insert_kink
from .quandle import parse_table, serialize_table


class Relation(NamedTuple):
    left: int
    right: int
    result: int

    def __str__(self):
        return f"{self.left}|>{self.right}={self.result}"


@dataclass(frozen=True)
class RelationList:
    """Generators ``1..generators`` and relations ``x_i |> x_j = x_k``.

    ``crossings`` records, when known, which crossing label produced each
    relation. Conflicting relations (same ``(i, j)``, different ``k``) are
    allowed; they are simply more constraints.
    """

    generators: int
    relations: tuple[Relation, ...]
    crossings: tuple[int, ...] = field(default=(), compare=False)

    def __post_init__(self):
        rels = tuple(Relation(*r) for r in self.relations)
        object.__setattr__(self, "relations", rels)
        if self.generators < 1:
            raise ValueError("need at least one generator")
        for r in rels:
            if not all(1 <= v <= self.generators for v in r):
                raise ValueError(f"relation {r} out of range 1..{self.generators}")

    def as_set(self) -> frozenset:
        return frozenset(self.relations)

    def __str__(self):
        gens = ",".join(str(i) for i in range(1, self.generators + 1))
        return f"<{gens} | " + ", ".join(str(r) for r in self.relations) + ">"


class ConflictReport(NamedTuple):
    """Two relations demanding different values at one matrix position."""

    position: tuple[int, int]
    values: tuple[int, int]
    crossings: tuple[Optional[int], Optional[int]]


@dataclass(frozen=True)
class PresentationMatrix:
    """``g x g`` matrix, entry ``(i, j) = k`` for ``x_i |> x_j = x_k``, 0 if free."""

    entries: tuple[tuple[int, ...], ...]

    @property
    def generators(self) -> int:
        return len(self.entries)

    def relations(self) -> RelationList:
        rels = tuple(Relation(i, j, k)
                     for i, row in enumerate(self.entries, 1)
                     for j, k in enumerate(row, 1) if k)
        return RelationList(self.generators, rels)

    def __str__(self):
        return serialize_table(self.entries)


def parse_matrix(text: str) -> PresentationMatrix:
    return PresentationMatrix(parse_table(text, allow_zero=True))


def _arcs(symbols) -> tuple[list[int], list[int]]:
    """Return (head positions, arc index of every position)."""
    heads = [i for i, s in enumerate(symbols) if s.role == UNDER]
    arc_of = [0] * len(symbols)
    k = 0
    for i in range(len(symbols)):
        if k < len(heads) and i > heads[k]:
            k += 1
        # positions after the last head wrap onto arc 1
        arc_of[i] = k + 1 if k < len(heads) else 1
    return heads, arc_of


def upper_relations(code: GaussCode) -> RelationList:
    sy = code.symbols
    heads, arc_of = _arcs(sy)
    over_pos = {s.label: i for i, s in enumerate(sy) if s.role != UNDER}
    n = len(heads)
    rels = []
    labels = []
    for k, h in enumerate(heads, 1):
        s = sy[h]
        j = arc_of[over_pos[s.label]]
        nxt = k % n + 1
        rels.append(Relation(k, j, nxt) if s.sign > 0 else Relation(nxt, j, k))
        labels.append(s.label)
    return RelationList(n, tuple(rels), tuple(labels))


def lower_relations(code: GaussCode) -> RelationList:
    return upper_relations(flip(code))


def relations_for(code: GaussCode, side: str) -> RelationList:
    if side == "upper":
        return upper_relations(code)
    if side == "lower":
        return lower_relations(code)
    raise ValueError(f"side must be 'upper' or 'lower', not {side!r}")


def find_conflicts(rel: RelationList) -> list[ConflictReport]:
    seen: dict[tuple[int, int], tuple[int, Optional[int]]] = {}
    out = []
    labels = rel.crossings or (None,) * len(rel.relations)
    for r, lab in zip(rel.relations, labels):
        key = (r.left, r.right)
        if key in seen and seen[key][0] != r.result:
            out.append(ConflictReport(key, (seen[key][0], r.result),
                                      (seen[key][1], lab)))
        else:
            seen.setdefault(key, (r.result, lab))
    return out


def relations_to_matrix(rel: RelationList) -> Union[PresentationMatrix, ConflictReport]:
    """Build the presentation matrix, or report the first conflicting entry."""
    conflicts = find_conflicts(rel)
    if conflicts:
        return conflicts[0]
    g = rel.generators
    m = [[0] * g for _ in range(g)]
    for i, j, k in rel.relations:
        m[i - 1][j - 1] = k
    return PresentationMatrix(tuple(tuple(row) for row in m))


class GfixError(RuntimeError):
    pass


def gfix(code: GaussCode) -> GaussCode:
    """Remove matrix conflicts by inserting positive Reidemeister I kinks.

    A conflict comes from a negative under-pass followed by a positive one
    whose over-passes share an arc. A kink placed right after the negative
    under-pass splits the arc between them. Hom counts are unchanged.
    """
    cap = 2 * code.crossings
    for _ in range(cap + 1):
        rel = upper_relations(code)
        conflicts = find_conflicts(rel)
        if not conflicts:
            return code
        c = min(conflicts, key=lambda c: c.position)
        negative = [lab for lab in c.crossings if code.sign(lab) < 0]
        target = negative[0] if negative else c.crossings[0]
        pos = next(i for i, s in enumerate(code.symbols)
                   if s.label == target and s.role == UNDER)
        code = insert_kink(code, pos)
    raise GfixError(f"conflicts remain after {cap} kink insertions")


def presentation_matrix(code: GaussCode, side: str = "upper") -> PresentationMatrix:
    """Conflict-free presentation matrix of the upper or lower quandle."""
    if side == "lower":
        code = flip(code)
    elif side != "upper":
        raise ValueError(f"side must be 'upper' or 'lower', not {side!r}")
    result = relations_to_matrix(upper_relations(gfix(code)))
    assert isinstance(result, PresentationMatrix)
    return result
