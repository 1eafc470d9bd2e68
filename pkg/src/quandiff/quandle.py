"""Finite quandles as operation tables.

A quandle of order ``n`` is stored as its operation matrix with 1-based
entries: ``table[i-1][j-1] == k`` means ``x_i |> x_j = x_k``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence


class MalformedTableError(ValueError):
    """Raised for input that is not an n x n matrix over 1..n."""


class UnknownQuandleError(KeyError):
    pass


@dataclass(frozen=True)
class QuandleTable:
    """An ``n x n`` operation table with entries in ``1..n``.

    Construction only checks the shape and entry range. Use
    :func:`check_axioms` to verify that the table is a quandle.
    """

    table: tuple[tuple[int, ...], ...]
    name: Optional[str] = None

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.table)
        _check_shape(rows)
        object.__setattr__(self, "table", rows)
        # 0-based copy, used by the counting inner loops
        object.__setattr__(
            self, "_zero", tuple(tuple(v - 1 for v in row) for row in rows)
        )

    @property
    def order(self) -> int:
        return len(self.table)

    def __len__(self):
        return len(self.table)

    def op(self, a: int, b: int) -> int:
        """Return ``a |> b`` for 1-based elements."""
        return self.table[a - 1][b - 1]

    @property
    def zero_based(self) -> tuple[tuple[int, ...], ...]:
        return self._zero

    def column(self, j: int) -> tuple[int, ...]:
        """The right translation ``x -> x |> j`` as a tuple of images."""
        return tuple(row[j - 1] for row in self.table)

    def __str__(self):
        return serialize_table(self)


def _check_shape(rows: Sequence[Sequence[int]]) -> None:
    n = len(rows)
    if n == 0:
        raise MalformedTableError("empty table")
    for r, row in enumerate(rows, 1):
        if len(row) != n:
            raise MalformedTableError(
                f"row {r} has {len(row)} entries, expected {n}")
        for c, v in enumerate(row, 1):
            if not 1 <= v <= n:
                raise MalformedTableError(
                    f"entry ({r},{c}) = {v} outside 1..{n}")


class AxiomReport(NamedTuple):
    """Result of :func:`check_axioms`.

    Each ``*_counterexample`` is ``None`` when the axiom holds, otherwise a
    1-based witness: ``(i,)`` for idempotency, ``(a, b)`` for right
    invertibility (no unique ``c`` with ``c |> b = a``) and ``(i, j, k)``
    for self-distributivity.
    """

    idempotent: Optional[tuple[int]]
    right_invertible: Optional[tuple[int, int]]
    self_distributive: Optional[tuple[int, int, int]]

    @property
    def ok(self) -> bool:
        return (self.idempotent is None and self.right_invertible is None
                and self.self_distributive is None)

    def failures(self) -> list[str]:
        out = []
        if self.idempotent is not None:
            out.append(f"axiom i fails at {self.idempotent[0]}")
        if self.right_invertible is not None:
            a, b = self.right_invertible
            out.append(f"axiom ii fails at a={a}, b={b}")
        if self.self_distributive is not None:
            out.append("axiom iii fails at (i,j,k)=(%d,%d,%d)"
                       % self.self_distributive)
        return out


def check_axioms(table) -> AxiomReport:
    """Check the three quandle axioms on a square 1-based table.

    ``table`` may be a :class:`QuandleTable` or any nested sequence.
    Raises :class:`MalformedTableError` when the input is not square or has
    entries outside ``1..n``.
    """
    if isinstance(table, QuandleTable):
        t = table.table
    else:
        t = tuple(tuple(int(v) for v in row) for row in table)
        _check_shape(t)
    n = len(t)
    idem = next(((i,) for i in range(1, n + 1) if t[i - 1][i - 1] != i), None)

    inv = None
    for b in range(n):
        seen = [0] * n
        for c in range(n):
            seen[t[c][b] - 1] += 1
        for a in range(n):
            if seen[a] != 1:
                inv = (a + 1, b + 1)
                break
        if inv:
            break

    dist = None
    for i in range(n):
        for j in range(n):
            ij = t[i][j] - 1
            for k in range(n):
                if t[ij][k] != t[t[i][k] - 1][t[j][k] - 1]:
                    dist = (i + 1, j + 1, k + 1)
                    break
            if dist:
                break
        if dist:
            break
    return AxiomReport(idem, inv, dist)


def is_connected(q: QuandleTable) -> bool:
    """True iff the right translations act transitively on the elements.

    Orbit of element 1 under the group generated by the columns; since the
    set is finite, closing under the generators alone suffices.
    """
    n = q.order
    cols = [q.column(j) for j in range(1, n + 1)]
    seen = {1}
    frontier = [1]
    while frontier:
        x = frontier.pop()
        for col in cols:
            y = col[x - 1]
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return len(seen) == n


def trivial(n: int) -> QuandleTable:
    """The trivial quandle ``x |> y = x`` of order ``n``."""
    if n < 1:
        raise ValueError("order must be positive")
    return QuandleTable(tuple((i,) * n for i in range(1, n + 1)),
                        name=f"T{n}-trivial")


_BUILTINS = {
    "T3": ((1, 3, 2),
           (3, 2, 1),
           (2, 1, 3)),
    "T4": ((1, 3, 4, 2),
           (4, 2, 1, 3),
           (2, 4, 3, 1),
           (3, 1, 2, 4)),
    "T5a": ((1, 3, 4, 5, 2),
            (3, 2, 5, 1, 4),
            (4, 5, 3, 2, 1),
            (5, 1, 2, 4, 3),
            (2, 4, 1, 3, 5)),
    "T5b": ((1, 4, 5, 3, 2),
            (3, 2, 4, 5, 1),
            (2, 5, 3, 1, 4),
            (5, 1, 2, 4, 3),
            (4, 3, 1, 2, 5)),
    "T5c": ((1, 4, 5, 2, 3),
            (3, 2, 1, 5, 4),
            (4, 5, 3, 1, 2),
            (5, 3, 2, 4, 1),
            (2, 1, 4, 3, 5)),
    "T6": ((1, 4, 5, 2, 3, 1),
           (4, 2, 6, 1, 2, 3),
           (5, 6, 3, 3, 1, 2),
           (2, 1, 4, 4, 6, 5),
           (3, 5, 1, 6, 5, 4),
           (6, 3, 2, 5, 4, 6)),
}

#: The six connected target quandles, in the order of the detection table.
BUILTIN_NAMES = tuple(_BUILTINS)


def builtin(name: str) -> QuandleTable:
    """Look up a built-in quandle.

    Accepts ``T3``, ``T4``, ``T5a``, ``T5b``, ``T5c``, ``T6`` and
    ``T<n>-trivial`` for ``1 <= n <= 9``.
    """
    if name in _BUILTINS:
        return QuandleTable(_BUILTINS[name], name=name)
    if name.endswith("-trivial") and name.startswith("T"):
        digits = name[1:-len("-trivial")]
        if digits.isdigit() and 1 <= int(digits) <= 9:
            return trivial(int(digits))
    raise UnknownQuandleError(name)


def parse_table(text: str, *, allow_zero: bool = False) -> tuple[tuple[int, ...], ...]:
    """Parse whitespace-separated integer rows into a tuple of tuples.

    With ``allow_zero`` entries may be 0 (presentation matrices); the
    range check is otherwise ``1..n``.
    """
    rows = []
    for lineno, line in enumerate(text.strip().splitlines(), 1):
        if not line.strip():
            continue
        try:
            rows.append(tuple(int(tok) for tok in line.split()))
        except ValueError:
            raise MalformedTableError(
                f"line {lineno}: non-integer token in {line!r}") from None
    n = len(rows)
    if n == 0:
        raise MalformedTableError("empty table")
    lo = 0 if allow_zero else 1
    for r, row in enumerate(rows, 1):
        if len(row) != n:
            raise MalformedTableError(
                f"row {r} has {len(row)} entries, expected {n}")
        for c, v in enumerate(row, 1):
            if not lo <= v <= n:
                raise MalformedTableError(
                    f"entry ({r},{c}) = {v} outside {lo}..{n}")
    return tuple(rows)


def parse_quandle(text: str, name: Optional[str] = None) -> QuandleTable:
    return QuandleTable(parse_table(text), name=name)


def serialize_table(q) -> str:
    """Canonical text form: one row per line, single spaces, no trailing newline."""
    rows = q.table if hasattr(q, "table") else q
    return "\n".join(" ".join(str(v) for v in row) for row in rows)


def load_quandle(spec: str) -> QuandleTable:
    """Resolve a built-in name, or read a matrix file from disk."""
    try:
        return builtin(spec)
    except UnknownQuandleError:
        pass
    try:
        with open(spec) as fh:
            text = fh.read()
    except OSError:
        raise UnknownQuandleError(spec) from None
    return parse_quandle(text, name=spec)
