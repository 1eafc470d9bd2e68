"""Counting quandle homomorphisms and the two derived knot invariants."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .gauss import GaussCode
from .presentation import PresentationMatrix, RelationList, lower_relations, upper_relations
from .quandle import QuandleTable


def _plan(rel: RelationList):
    """Assignment order plus, per step, the relations it completes.

    Generators touching the most relations go first. A relation whose two
    left-hand generators are already assigned when its result generator is
    reached forces that generator's value.
    """
    g = rel.generators
    cover = [0] * (g + 1)
    for r in rel.relations:
        for v in set(r):
            cover[v] += 1
    order = sorted(range(1, g + 1), key=lambda v: (-cover[v], v))
    rank = {v: i for i, v in enumerate(order)}
    forcing = [[] for _ in order]
    checks = [[] for _ in order]
    for i, j, k in rel.relations:
        step = max(rank[i], rank[j], rank[k])
        if rank[k] == step and rank[i] < step and rank[j] < step:
            forcing[step].append((rank[i], rank[j]))
        else:
            checks[step].append((rank[i], rank[j], rank[k]))
    return order, forcing, checks


def count_homs(rel: Union[RelationList, PresentationMatrix], t: QuandleTable) -> int:
    """Number of maps ``f`` on generators with ``t(f(i), f(j)) = f(k)`` for
    every relation ``(i, j, k)``.
    """
    if isinstance(rel, PresentationMatrix):
        rel = rel.relations()
    op = t.zero_based
    m = t.order
    order, forcing, checks = _plan(rel)
    g = len(order)
    f = [0] * g

    def ok(step):
        for a, b, c in checks[step]:
            if op[f[a]][f[b]] != f[c]:
                return False
        return True

    def rec(step):
        if step == g:
            return 1
        if forcing[step]:
            a, b = forcing[step][0]
            v = op[f[a]][f[b]]
            for a, b in forcing[step][1:]:
                if op[f[a]][f[b]] != v:
                    return 0
            f[step] = v
            return rec(step + 1) if ok(step) else 0
        total = 0
        for v in range(m):
            f[step] = v
            if ok(step):
                total += rec(step + 1)
        return total

    return rec(0)


def is_trivial_count(count: int, t: QuandleTable) -> bool:
    """Only the constant maps: the count equals the target's order."""
    return count == t.order


@dataclass(frozen=True)
class InvariantReport:
    upper: int
    lower: int

    order: int

    @property
    def difference(self) -> int:
        return self.upper - self.lower

    @property
    def trivial_upper(self) -> bool:
        return self.upper == self.order

    @property
    def trivial_lower(self) -> bool:
        return self.lower == self.order

    def as_dict(self) -> dict:
        return {"upper": self.upper, "lower": self.lower, "qd": self.difference,
                "trivialUpper": self.trivial_upper,
                "trivialLower": self.trivial_lower}


def q2(code: GaussCode, t: QuandleTable) -> tuple[int, int]:
    """Two-component counting invariant ``(|Hom(U,T)|, |Hom(L,T)|)``."""
    return count_homs(upper_relations(code), t), count_homs(lower_relations(code), t)


def qdiff(code: GaussCode, t: QuandleTable) -> int:
    """Quandle difference invariant ``|Hom(U,T)| - |Hom(L,T)|``."""
    up, low = q2(code, t)
    return up - low


def invariant_report(code: GaussCode, t: QuandleTable) -> InvariantReport:
    up, low = q2(code, t)
    return InvariantReport(up, low, t.order)
