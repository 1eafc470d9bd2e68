"""Gauss codes: parsing, the Gaussian-integer vector notation, flipping,
interstice parity, obvious Reidemeister I/II reductions and enumeration.

A code is a tuple of components, each a tuple of :class:`GaussSymbol`.
Letters in the text notation are read as integers (``A`` -> 1); output
always uses integers.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional, Sequence

OVER = "O"
UNDER = "U"

MAX_ENUMERATION_CROSSINGS = 6


class GaussCodeError(ValueError):
    """Malformed or inconsistent Gauss code."""


class UnsupportedOperationError(GaussCodeError):
    """Operation is only defined for single-component codes."""


class GaussSymbol(NamedTuple):
    label: int
    role: str  # "O" or "U"
    sign: int  # +1 or -1

    @property
    def over(self) -> bool:
        return self.role == OVER

    def toggled(self) -> "GaussSymbol":
        return GaussSymbol(self.label, UNDER if self.role == OVER else OVER,
                           self.sign)

    def __str__(self):
        return f"{self.role}{self.label}{'+' if self.sign > 0 else '-'}"


@dataclass(frozen=True)
class GaussCode:
    components: tuple[tuple[GaussSymbol, ...], ...]

    def __post_init__(self):
        comps = tuple(tuple(GaussSymbol(*s) for s in c) for c in self.components)
        object.__setattr__(self, "components", comps)
        _validate(comps)

    @classmethod
    def knot(cls, symbols: Sequence) -> "GaussCode":
        return cls((tuple(symbols),))

    @property
    def is_knot(self) -> bool:
        return len(self.components) == 1

    @property
    def symbols(self) -> tuple[GaussSymbol, ...]:
        """The symbol sequence of a single-component code."""
        _require_knot(self, "symbols")
        return self.components[0]

    @property
    def labels(self) -> list[int]:
        return sorted({s.label for c in self.components for s in c})

    @property
    def crossings(self) -> int:
        return sum(len(c) for c in self.components) // 2

    def sign(self, label: int) -> int:
        for c in self.components:
            for s in c:
                if s.label == label:
                    return s.sign
        raise KeyError(label)

    def __str__(self):
        return to_text(self)

    def __repr__(self):
        return f"GaussCode({to_text(self)!r})"


def _validate(comps) -> None:
    if not comps:
        raise GaussCodeError("code has no components")
    seen: dict[int, list[GaussSymbol]] = {}
    for c in comps:
        if not c:
            raise GaussCodeError("empty component")
        for s in c:
            if not isinstance(s.label, int) or s.label < 1:
                raise GaussCodeError(f"bad crossing label {s.label!r}")
            if s.role not in (OVER, UNDER):
                raise GaussCodeError(f"bad role {s.role!r}")
            if s.sign not in (1, -1):
                raise GaussCodeError(f"bad sign {s.sign!r}")
            seen.setdefault(s.label, []).append(s)
    for label, occ in sorted(seen.items()):
        if len(occ) != 2:
            raise GaussCodeError(
                f"crossing {label} appears {len(occ)} time(s), expected 2")
        if occ[0].role == occ[1].role:
            raise GaussCodeError(
                f"crossing {label} has both occurrences marked {occ[0].role}")
        if occ[0].sign != occ[1].sign:
            raise GaussCodeError(f"crossing {label} has inconsistent signs")


def _require_knot(code: GaussCode, what: str) -> None:
    if not code.is_knot:
        raise UnsupportedOperationError(
            f"{what} is only defined for single-component codes")


# --- text notation -------------------------------------------------------

_TOKEN = re.compile(r"([OU])([A-Z]|[1-9][0-9]*)([+-])")
_SEPARATORS = re.compile(r"[\s,/]+")


def parse_text(s: str) -> GaussCode:
    """Parse ``UA+OB-UC+...``; components split on whitespace, ``,`` or ``/``."""
    comps = []
    for chunk in _SEPARATORS.split(s.strip()):
        if not chunk:
            continue
        pos = 0
        comp = []
        while pos < len(chunk):
            m = _TOKEN.match(chunk, pos)
            if not m:
                raise GaussCodeError(
                    f"malformed token at {chunk[pos:pos + 6]!r} in {chunk!r}")
            role, label, sign = m.groups()
            lab = ord(label) - ord("A") + 1 if label.isalpha() else int(label)
            comp.append(GaussSymbol(lab, role, 1 if sign == "+" else -1))
            pos = m.end()
        comps.append(tuple(comp))
    if not comps:
        raise GaussCodeError("empty code")
    return GaussCode(tuple(comps))


def to_text(code: GaussCode) -> str:
    return ", ".join("".join(str(s) for s in c) for c in code.components)


# --- Gaussian-integer vector notation ------------------------------------
#   OX+ -> X     UX+ -> -X     OX- -> X+I     UX- -> -X-I

_ENTRY = re.compile(r"^(-?)([1-9][0-9]*)(?:([+-])I)?$")


def parse_vector(s: str) -> GaussCode:
    body = s.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise GaussCodeError("vector must be enclosed in brackets")
    entries = [e.strip() for e in body[1:-1].split(",")]
    if entries == [""]:
        raise GaussCodeError("empty vector")
    comps = []
    current: list[GaussSymbol] = []
    for e in entries:
        e = e.replace(" ", "")
        if e == "0":
            if not current:
                raise GaussCodeError("empty component in vector")
            comps.append(tuple(current))
            current = []
            continue
        m = _ENTRY.match(e)
        if not m:
            raise GaussCodeError(f"malformed vector entry {e!r}")
        neg, num, isign = m.groups()
        if isign is not None and (isign == "-") != bool(neg):
            raise GaussCodeError(f"mixed-sign entry {e!r}")
        role = UNDER if neg else OVER
        current.append(GaussSymbol(int(num), role, -1 if isign else 1))
    if current:
        raise GaussCodeError("vector must end each component with 0")
    return GaussCode(tuple(comps))


def _entry(s: GaussSymbol) -> str:
    base = str(s.label) if s.over else f"-{s.label}"
    if s.sign < 0:
        base += "+I" if s.over else "-I"
    return base


def to_vector(code: GaussCode) -> str:
    parts = []
    for c in code.components:
        parts.extend(_entry(s) for s in c)
        parts.append("0")
    return "[" + ",".join(parts) + "]"


def parse_code(s: str) -> GaussCode:
    """Dispatch on notation: bracketed input is a vector, else text."""
    return parse_vector(s) if s.strip().startswith("[") else parse_text(s)


# --- single-component operations ----------------------------------------

def rotate(code: GaussCode, k: int) -> GaussCode:
    """Cyclically rotate a knot code so that position ``k`` comes first."""
    sy = code.symbols
    k %= len(sy)
    return GaussCode.knot(sy[k:] + sy[:k])


def rotate_to(code: GaussCode, label: int, role: str) -> GaussCode:
    sy = code.symbols
    for i, s in enumerate(sy):
        if s.label == label and s.role == role:
            return rotate(code, i)
    raise KeyError((label, role))


def flip(code: GaussCode) -> GaussCode:
    """View the diagram from the other side of its surface.

    Every over/under role is toggled, signs are kept, and the result is
    rotated so the under-pass of the smallest label comes first.
    """
    _require_knot(code, "flip")
    toggled = GaussCode.knot(s.toggled() for s in code.symbols)
    return rotate_to(toggled, min(code.labels), UNDER)


def positions(symbols: Sequence[GaussSymbol]) -> dict[int, tuple[int, int]]:
    """Map each label to the indices of its two occurrences."""
    pos: dict[int, list[int]] = {}
    for i, s in enumerate(symbols):
        pos.setdefault(s.label, []).append(i)
    return {k: (v[0], v[1]) for k, v in pos.items()}


def is_evenly_intersticed(code: GaussCode) -> bool:
    _require_knot(code, "is_evenly_intersticed")
    return all((q - p - 1) % 2 == 0 for p, q in positions(code.symbols).values())


def _adjacent_pairs(length: int, cyclic: bool):
    stop = length if cyclic else length - 1
    return [(i, (i + 1) % length) for i in range(stop)]


def is_r1_reducible(code: GaussCode, cyclic: bool = True) -> bool:
    """Some crossing's two passes are adjacent in the code."""
    _require_knot(code, "is_r1_reducible")
    sy = code.symbols
    return any(sy[i].label == sy[j].label
               for i, j in _adjacent_pairs(len(sy), cyclic))


def is_r2_reducible(code: GaussCode, cyclic: bool = True, nested: bool = True,
                    interleaved: bool = True) -> bool:
    """Look for an obvious bigon.

    Two crossings ``a``, ``b`` of opposite sign whose passes form two
    adjacent pairs, one pair with both over-passes and the other with both
    under-passes. ``nested`` matches ``..ab..ba..``, ``interleaved`` matches
    ``..ab..ab..``.
    """
    _require_knot(code, "is_r2_reducible")
    return _r2(code.symbols, cyclic, nested, interleaved)


def _r2(sy, cyclic, nested, interleaved) -> bool:
    n = len(sy)
    pos = positions(sy)

    def adjacent(p, q):
        # q immediately follows p
        return q == p + 1 or (cyclic and p == n - 1 and q == 0)

    for i, j in _adjacent_pairs(n, cyclic):
        a, b = sy[i], sy[j]
        if a.label == b.label or a.role != b.role or a.sign == b.sign:
            continue
        pa = pos[a.label][1] if pos[a.label][0] == i else pos[a.label][0]
        pb = pos[b.label][1] if pos[b.label][0] == j else pos[b.label][0]
        if nested and adjacent(pb, pa):
            return True
        if interleaved and adjacent(pa, pb):
            return True
    return False


def insert_kink(code: GaussCode, after: int, label: Optional[int] = None,
                sign: int = 1) -> GaussCode:
    """Insert a Reidemeister I kink ``O<label> U<label>`` after position ``after``.

    ``after = -1`` inserts at the front. The new label defaults to one more
    than the largest existing label.
    """
    sy = code.symbols
    if label is None:
        label = max(code.labels) + 1
    kink = (GaussSymbol(label, OVER, sign), GaussSymbol(label, UNDER, sign))
    return GaussCode.knot(sy[:after + 1] + kink + sy[after + 1:])


def relabel(code: GaussCode) -> GaussCode:
    """Relabel crossings 1, 2, ... in order of first occurrence."""
    mapping: dict[int, int] = {}
    comps = []
    for c in code.components:
        out = []
        for s in c:
            if s.label not in mapping:
                mapping[s.label] = len(mapping) + 1
            out.append(GaussSymbol(mapping[s.label], s.role, s.sign))
        comps.append(tuple(out))
    return GaussCode(tuple(comps))


def _canonical_rotation(sy: tuple) -> tuple:
    best = None
    for k in range(len(sy)):
        mapping: dict[int, int] = {}
        word = []
        for s in sy[k:] + sy[:k]:
            if s.label not in mapping:
                mapping[s.label] = len(mapping) + 1
            word.append((mapping[s.label], s.role, s.sign))
        word = tuple(word)
        if best is None or word < best:
            best = word
    return best


# --- enumeration ---------------------------------------------------------

FREE = "free"
FIRST_OCCURRENCE = "first-occurrence"


@dataclass(frozen=True)
class EnumerationConfig:
    """Conventions for listing single-component codes.

    ``labeling=FREE`` lists every assignment of labels ``1..n`` with the
    rotation fixed by putting ``U1`` first (equivalently: labeled codes up
    to rotation). ``labeling=FIRST_OCCURRENCE`` numbers crossings in order
    of first appearance from a fixed basepoint; ``cyclic_canonical`` then
    keeps one representative per rotation class.

    The defaults reproduce the published 172 (n=3) and 17040 (n=4) totals.
    """

    labeling: str = FREE
    cyclic_canonical: bool = False
    require_non_even: bool = False
    r1_cyclic: bool = True
    r2_cyclic: bool = True
    r2_nested: bool = True
    r2_interleaved: bool = True

    def __post_init__(self):
        if self.labeling not in (FREE, FIRST_OCCURRENCE):
            raise ValueError(f"unknown labeling {self.labeling!r}")

    def accepts(self, code: GaussCode) -> bool:
        """Whether ``code`` passes the interstice and R1/R2 filters."""
        if self.require_non_even and is_evenly_intersticed(code):
            return False
        if is_r1_reducible(code, self.r1_cyclic):
            return False
        return not is_r2_reducible(code, self.r2_cyclic, self.r2_nested,
                                   self.r2_interleaved)


def _label_words_free(n: int):
    rest = sorted([(l, r) for l in range(1, n + 1) for r in (OVER, UNDER)
                   if (l, r) != (1, UNDER)])
    for perm in itertools.permutations(rest):
        yield ((1, UNDER),) + perm


def _label_words_first_occurrence(n: int):
    # canonical label words in lexicographic order, then O/U choice per chord
    def rec(word, open_labels, next_label):
        if len(word) == 2 * n:
            yield tuple(word)
            return
        choices = sorted(open_labels)
        if next_label <= n:
            choices.append(next_label)
        for lab in choices:
            word.append(lab)
            if lab == next_label:
                yield from rec(word, open_labels | {lab}, next_label + 1)
            else:
                yield from rec(word, open_labels - {lab}, next_label)
            word.pop()

    for word in rec([], frozenset(), 1):
        for roles in itertools.product((OVER, UNDER), repeat=n):
            seen = set()
            out = []
            for lab in word:
                first = roles[lab - 1]
                if lab in seen:
                    out.append((lab, UNDER if first == OVER else OVER))
                else:
                    seen.add(lab)
                    out.append((lab, first))
            yield tuple(out)


def enumerate_codes(n: int, cfg: Optional[EnumerationConfig] = None
                    ) -> Iterator[GaussCode]:
    """Yield every filtered single-component code with ``n`` crossings."""
    if cfg is None:
        cfg = EnumerationConfig()
    if not 1 <= n <= MAX_ENUMERATION_CROSSINGS:
        raise ValueError(
            f"crossing count must be in 1..{MAX_ENUMERATION_CROSSINGS}")
    words = (_label_words_free(n) if cfg.labeling == FREE
             else _label_words_first_occurrence(n))
    length = 2 * n
    pairs = _adjacent_pairs(length, cfg.r1_cyclic)
    for word in words:
        # filters that ignore signs run once per word
        if any(word[i][0] == word[j][0] for i, j in pairs):
            continue
        if cfg.require_non_even:
            first: dict[int, int] = {}
            odd = False
            for i, (lab, _) in enumerate(word):
                if lab in first:
                    odd = odd or (i - first[lab] - 1) % 2 == 1
                else:
                    first[lab] = i
            if not odd:
                continue
        for signs in itertools.product((1, -1), repeat=n):
            sy = tuple(GaussSymbol(lab, role, signs[lab - 1])
                       for lab, role in word)
            if _r2(sy, cfg.r2_cyclic, cfg.r2_nested, cfg.r2_interleaved):
                continue
            if (cfg.cyclic_canonical and cfg.labeling == FIRST_OCCURRENCE
                    and _canonical_rotation(sy) != sy):
                continue
            yield GaussCode((sy,))
