"""Census over enumerated Gauss codes: how often each target quandle's
difference invariant is nonzero.
"""
from __future__ import annotations

import csv
import io
import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, fields
from typing import Iterable, Optional

from .gauss import EnumerationConfig, GaussCode, enumerate_codes, flip
from .homcount import count_homs
from .presentation import upper_relations
from .quandle import BUILTIN_NAMES, QuandleTable, check_axioms, load_quandle

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class CensusConfig(EnumerationConfig):
    crossings: int = 4
    quandles: tuple = BUILTIN_NAMES
    jobs: int = 1

    def __post_init__(self):
        super().__post_init__()
        object.__setattr__(self, "quandles", tuple(self.quandles))
        if not 1 <= self.crossings <= 6:
            raise ValueError("crossings must be in 1..6")
        if not self.quandles:
            raise ValueError("at least one quandle is required")
        if self.jobs < 1:
            raise ValueError("jobs must be positive")

    def enumeration(self) -> EnumerationConfig:
        names = {f.name for f in fields(EnumerationConfig)}
        return EnumerationConfig(**{k: getattr(self, k) for k in names})


@dataclass
class CensusResult:
    crossings: int
    quandles: tuple
    total_codes: int = 0
    per_quandle: dict = field(default_factory=dict)
    nontrivial_codes: int = 0
    detected_among_nontrivial: int = 0

    @property
    def percent_detected(self) -> float:
        if not self.nontrivial_codes:
            return 0.0
        return 100.0 * self.detected_among_nontrivial / self.nontrivial_codes

    def merge(self, other: "CensusResult") -> None:
        self.total_codes += other.total_codes
        for q, v in other.per_quandle.items():
            self.per_quandle[q] = self.per_quandle.get(q, 0) + v
        self.nontrivial_codes += other.nontrivial_codes
        self.detected_among_nontrivial += other.detected_among_nontrivial

    def as_dict(self) -> dict:
        return {
            "crossings": self.crossings,
            "quandles": list(self.quandles),
            "totalCodes": self.total_codes,
            "perQuandle": {q: self.per_quandle.get(q, 0) for q in self.quandles},
            "nontrivialCodes": self.nontrivial_codes,
            "detectedAmongNontrivial": self.detected_among_nontrivial,
            "percentDetected": self.percent_detected,
        }


class CodeEvaluator:
    """Upper/lower counts per code against a fixed list of targets.

    Relabeled copies of a code share presentations, so counts are cached
    by relation set.
    """

    def __init__(self, targets: list[QuandleTable]):
        self.targets = targets
        self._cache: dict = {}

    def _count(self, rel, idx):
        key = (rel.generators, tuple(sorted(rel.relations)), idx)
        hit = self._cache.get(key)
        if hit is None:
            hit = self._cache[key] = count_homs(rel, self.targets[idx])
        return hit

    def pairs(self, code: GaussCode) -> list[tuple[int, int]]:
        up = upper_relations(code)
        low = upper_relations(flip(code))
        return [(self._count(up, i), self._count(low, i))
                for i in range(len(self.targets))]


def _tally(codes: Iterable[GaussCode], cfg: CensusConfig,
           targets: list[QuandleTable]) -> CensusResult:
    ev = CodeEvaluator(targets)
    res = CensusResult(cfg.crossings, cfg.quandles,
                       per_quandle={q: 0 for q in cfg.quandles})
    for code in codes:
        res.total_codes += 1
        nontrivial = detected = False
        for name, t, (up, low) in zip(cfg.quandles, targets, ev.pairs(code)):
            if up != t.order or low != t.order:
                nontrivial = True
            if up != low:
                res.per_quandle[name] += 1
                detected = True
        res.nontrivial_codes += nontrivial
        res.detected_among_nontrivial += nontrivial and detected
    return res


def _worker(args) -> CensusResult:
    cfg, targets, part = args
    codes = (c for i, c in enumerate(enumerate_codes(cfg.crossings, cfg.enumeration()))
             if i % cfg.jobs == part)
    return _tally(codes, cfg, targets)


def resolve_quandles(names) -> list[QuandleTable]:
    targets = [load_quandle(q) for q in names]
    for name, t in zip(names, targets):
        report = check_axioms(t)
        if not report.ok:
            raise ValueError(f"{name} is not a quandle: {'; '.join(report.failures())}")
    return targets


def run_census(cfg: CensusConfig, targets: Optional[list[QuandleTable]] = None
               ) -> CensusResult:
    """Enumerate codes under ``cfg`` and tabulate detection counts.

    With ``jobs > 1`` the code stream is split round-robin across worker
    processes; the reduction is a sum, so the result does not depend on
    the number of workers.
    """
    if targets is None:
        targets = resolve_quandles(cfg.quandles)
    if cfg.jobs == 1:
        return _tally(enumerate_codes(cfg.crossings, cfg.enumeration()), cfg, targets)
    res = CensusResult(cfg.crossings, cfg.quandles,
                       per_quandle={q: 0 for q in cfg.quandles})
    with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
        for part in pool.map(_worker, [(cfg, targets, p) for p in range(cfg.jobs)]):
            res.merge(part)
    log.info("census n=%d: %d codes", cfg.crossings, res.total_codes)
    return res


def export_csv(result: CensusResult) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["quandle", "detected", "total"])
    if result.total_codes:
        for q in result.quandles:
            w.writerow([q, result.per_quandle.get(q, 0), result.total_codes])
    return buf.getvalue()


def export_json(result: CensusResult) -> str:
    return json.dumps(result.as_dict(), indent=2)


def result_from_json(text: str) -> CensusResult:
    d = json.loads(text)
    return CensusResult(
        crossings=d["crossings"],
        quandles=tuple(d["quandles"]),
        total_codes=d["totalCodes"],
        per_quandle=dict(d["perQuandle"]),
        nontrivial_codes=d["nontrivialCodes"],
        detected_among_nontrivial=d["detectedAmongNontrivial"],
    )


def table1(jobs: int = 1) -> CensusResult:
    """The 4-crossing census against all six built-in quandles."""
    return run_census(CensusConfig(crossings=4, quandles=BUILTIN_NAMES, jobs=jobs))
