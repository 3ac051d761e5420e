"""Parameter sweeps comparing closed forms with the direct-summation oracle."""
from __future__ import annotations

import csv
import io
import json
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Iterable, Sequence

from . import closed_forms
from .closed_forms import MINIMUMS, ErratumEntry, Family, FamilySpec, case_id
from .errors import DomainError
from .indices import IndexKind, index_exact

__all__ = [
    "VerificationRecord",
    "ErrataHit",
    "SweepReport",
    "grid",
    "run_sweep",
    "worker_count",
    "CSV_COLUMNS",
]

log = logging.getLogger(__name__)

CSV_COLUMNS = ("family", "kind", "r", "s", "exact_equal", "float_delta", "oracle", "closed")


def _fmt(x: float) -> str:
    return f"{x:.9e}"


@dataclass(frozen=True)
class VerificationRecord:
    family: str
    kind: str
    r: int
    s: int
    oracle: str
    closed: str
    exact_equal: bool
    float_delta: float


@dataclass(frozen=True)
class ErrataHit:
    family: str
    kind: str
    r: int
    s: int
    case: str
    statement_value: float
    normative_value: float
    delta: float
    known_discrepancy: bool


@dataclass
class SweepReport:
    records: list[VerificationRecord] = field(default_factory=list)
    errata_hits: list[ErrataHit] = field(default_factory=list)
    audited: bool = False

    @property
    def summary(self) -> dict[str, dict[str, dict[str, int]]]:
        out: dict[str, dict[str, dict[str, int]]] = {}
        for rec in self.records:
            cell = out.setdefault(rec.family, {}).setdefault(rec.kind, {"pass": 0, "fail": 0})
            cell["pass" if rec.exact_equal else "fail"] += 1
        return out

    @property
    def unexpected_discrepancies(self) -> list[ErrataHit]:
        return [h for h in self.errata_hits if not h.known_discrepancy]

    @property
    def ok(self) -> bool:
        """True iff every record is exactly equal and every audit hit is on the errata list."""
        return all(r.exact_equal for r in self.records) and not self.unexpected_discrepancies

    @property
    def exit_status(self) -> int:
        return 0 if self.ok else 1

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for rec in self.records:
            w.writerow([
                rec.family, rec.kind, rec.r, rec.s,
                "true" if rec.exact_equal else "false",
                _fmt(rec.float_delta), rec.oracle, rec.closed,
            ])
        return buf.getvalue()

    def to_json(self) -> str:
        def rounded(d: dict) -> dict:
            return {k: float(_fmt(v)) if isinstance(v, float) else v for k, v in d.items()}

        doc = {
            "records": [rounded(asdict(r)) for r in self.records],
            "summary": self.summary,
            "errata_hits": [rounded(asdict(h)) for h in self.errata_hits],
            "ok": self.ok,
        }
        return json.dumps(doc, indent=2, sort_keys=False) + "\n"


def grid(family: Family, r_max: int, s_max: int) -> list[tuple[int, int]]:
    """Sweep points for a family: both parameters from max(minimum, 2) upward."""
    r_min, s_min = MINIMUMS[family]
    return [
        (r, s)
        for r in range(max(r_min, 2), r_max + 1)
        for s in range(max(s_min, 2), s_max + 1)
    ]


def worker_count() -> int:
    raw = os.environ.get("TOPOLAB_THREADS", "").strip()
    if not raw:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        log.warning("ignoring non-integer TOPOLAB_THREADS=%r", raw)
        return 1


def _check_point(
    family: Family, r: int, s: int, kinds: Sequence[IndexKind],
    audit: bool, errata: list[ErratumEntry],
) -> tuple[list[VerificationRecord], list[ErrataHit]]:
    spec = FamilySpec(family, r, s)
    g = closed_forms.build(spec)
    records, hits = [], []
    for kind in kinds:
        oracle = index_exact(g, kind)
        # looked up through the module so tests can inject faults
        closed = closed_forms.closed_index(spec, kind)
        fo, fc = float(oracle), float(closed)
        delta = abs(fo - fc) / max(1.0, abs(fo))
        records.append(VerificationRecord(
            family.value, kind.value, r, s, str(oracle), str(closed), oracle == closed, delta,
        ))
        if audit and kind is not IndexKind.SO:
            a = closed_forms.audit_statement(spec, kind, errata)
            if a.diverges:
                hits.append(ErrataHit(
                    family.value, kind.value, r, s, case_id(spec),
                    a.statement_value, a.normative_value, a.delta, a.known_discrepancy,
                ))
    return records, hits


def run_sweep(
    families: Iterable[Family | str],
    r_max: int,
    s_max: int,
    kinds: Iterable[IndexKind | str] = (IndexKind.ESO, IndexKind.EU),
    audit: bool = False,
    workers: int | None = None,
) -> SweepReport:
    """Verify every (family, r, s) grid point for the requested index kinds.

    Output order is (family, kind, r, s) no matter how many workers run.
    Raises DomainError if a requested family has no grid point below the
    given maxima.
    """
    fams = [Family(f) for f in families]
    kinds = sorted({IndexKind(k) for k in kinds}, key=list(IndexKind).index)
    errata = closed_forms.load_errata() if audit else []
    jobs = []
    for fam in fams:
        points = grid(fam, r_max, s_max)
        if not points:
            r_min, s_min = MINIMUMS[fam]
            raise DomainError(
                f"{fam.value} needs r_max >= {max(r_min, 2)} and s_max >= {max(s_min, 2)}"
            )
        jobs.extend((fam, r, s) for r, s in points)

    workers = worker_count() if workers is None else max(1, workers)
    if workers == 1:
        results = [_check_point(f, r, s, kinds, audit, errata) for f, r, s in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_check_point, f, r, s, kinds, audit, errata) for f, r, s in jobs]
            results = [fut.result() for fut in futures]

    fam_rank = {f: i for i, f in enumerate(fams)}
    kind_rank = {k.value: i for i, k in enumerate(kinds)}

    def key(x):
        return (fam_rank[Family(x.family)], kind_rank[x.kind], x.r, x.s)

    report = SweepReport(audited=audit)
    for recs, hits in results:
        report.records.extend(recs)
        report.errata_hits.extend(hits)
    report.records.sort(key=key)
    report.errata_hits.sort(key=key)
    bad = sum(not r.exact_equal for r in report.records)
    log.info("swept %d records, %d mismatches, %d audit hits",
             len(report.records), bad, len(report.errata_hits))
    return report
