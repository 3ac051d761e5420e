"""Parametric edge partitions and closed-form index values for six product families.

Each family's edge partition is written as a table of degree pairs and
counts that are integer functions of ``(r, s)``; the closed-form index is
that table pushed through the exact edge weights. A second, independent
layer (:func:`statement_value`) evaluates the published theorem statements
verbatim, typos included, so they can be audited against the partitions.
"""
from __future__ import annotations

import csv
import enum
import io
import math
from collections import Counter
from dataclasses import dataclass
from importlib import resources
from math import comb, sqrt
from typing import Callable

from .errors import DomainError
from .graph import Graph, make_complete, make_cycle, make_path
from .indices import EdgeClassPartition, IndexKind, index_from_partition
from .ops import corona, join
from .radical import RadicalSum

__all__ = [
    "Family",
    "FamilySpec",
    "symbolic_partition",
    "closed_index",
    "build",
    "expected_order",
    "expected_size",
    "case_id",
    "statement_value",
    "AuditRecord",
    "ErratumEntry",
    "load_errata",
    "audit_statement",
    "AUDIT_RTOL",
]

AUDIT_RTOL = 1e-9


class Family(str, enum.Enum):
    JOIN_PATHS = "join-paths"
    JOIN_CYCLES = "join-cycles"
    JOIN_COMPLETE = "join-complete"
    JOIN_CYCLE_COMPLETE = "cycle-complete"
    CORONA_PATHS = "corona-paths"
    CORONA_CYCLES = "corona-cycles"

    @classmethod
    def parse(cls, name: str) -> Family:
        try:
            return cls(name.lower())
        except ValueError:
            names = ", ".join(f.value for f in cls)
            raise ValueError(f"unknown family {name!r}; expected one of {names}") from None


# smallest admissible (r, s) per family
MINIMUMS: dict[Family, tuple[int, int]] = {
    Family.JOIN_PATHS: (2, 2),
    Family.JOIN_CYCLES: (3, 3),
    Family.JOIN_COMPLETE: (1, 1),
    Family.JOIN_CYCLE_COMPLETE: (3, 1),
    Family.CORONA_PATHS: (2, 2),
    Family.CORONA_CYCLES: (3, 3),
}


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    r: int
    s: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "family", Family(self.family))
        r_min, s_min = MINIMUMS[self.family]
        if self.r < r_min or self.s < s_min:
            raise DomainError(
                f"{self.family.value} requires r >= {r_min} and s >= {s_min}, "
                f"got r={self.r}, s={self.s}"
            )


@dataclass(frozen=True)
class _Entry:
    a: Callable[[int, int], int]
    b: Callable[[int, int], int]
    count: Callable[[int, int], int]
    when: Callable[[int, int], bool] = lambda r, s: True


_R2 = lambda r, s: r == 2  # noqa: E731
_RGT2 = lambda r, s: r > 2  # noqa: E731
_S2 = lambda r, s: s == 2  # noqa: E731
_SGT2 = lambda r, s: s > 2  # noqa: E731

# Counts on the path families switch on whether a path has interior vertices.
# Rows whose count formula already vanishes at the boundary (e.g. 2(s-2) at
# s=2) need no condition.
_TABLES: dict[Family, list[_Entry]] = {
    Family.JOIN_PATHS: [
        _Entry(lambda r, s: s + 1, lambda r, s: s + 1, lambda r, s: 1, _R2),
        _Entry(lambda r, s: s + 1, lambda r, s: s + 2, lambda r, s: 2, _RGT2),
        _Entry(lambda r, s: s + 2, lambda r, s: s + 2, lambda r, s: r - 3, _RGT2),
        _Entry(lambda r, s: r + 1, lambda r, s: r + 1, lambda r, s: 1, _S2),
        _Entry(lambda r, s: r + 1, lambda r, s: r + 2, lambda r, s: 2, _SGT2),
        _Entry(lambda r, s: r + 2, lambda r, s: r + 2, lambda r, s: s - 3, _SGT2),
        _Entry(lambda r, s: s + 1, lambda r, s: r + 1, lambda r, s: 4),
        _Entry(lambda r, s: s + 1, lambda r, s: r + 2, lambda r, s: 2 * (s - 2)),
        _Entry(lambda r, s: s + 2, lambda r, s: r + 1, lambda r, s: 2 * (r - 2)),
        _Entry(lambda r, s: s + 2, lambda r, s: r + 2, lambda r, s: (r - 2) * (s - 2)),
    ],
    Family.JOIN_CYCLES: [
        _Entry(lambda r, s: s + 2, lambda r, s: s + 2, lambda r, s: r),
        _Entry(lambda r, s: s + 2, lambda r, s: r + 2, lambda r, s: r * s),
        _Entry(lambda r, s: r + 2, lambda r, s: r + 2, lambda r, s: s),
    ],
    Family.JOIN_COMPLETE: [
        _Entry(lambda r, s: r + s - 1, lambda r, s: r + s - 1, lambda r, s: (r + s) * (r + s - 1) // 2),
    ],
    Family.JOIN_CYCLE_COMPLETE: [
        _Entry(lambda r, s: s + 2, lambda r, s: s + 2, lambda r, s: r),
        _Entry(lambda r, s: s + 2, lambda r, s: r + s - 1, lambda r, s: r * s),
        _Entry(lambda r, s: r + s - 1, lambda r, s: r + s - 1, lambda r, s: comb(s, 2)),
    ],
    Family.CORONA_PATHS: [
        _Entry(lambda r, s: 2, lambda r, s: 2, lambda r, s: r, _S2),
        _Entry(lambda r, s: 2, lambda r, s: 3, lambda r, s: 2 * r, _SGT2),
        _Entry(lambda r, s: 3, lambda r, s: 3, lambda r, s: r * (s - 3), _SGT2),
        _Entry(lambda r, s: s + 1, lambda r, s: s + 1, lambda r, s: 1, _R2),
        _Entry(lambda r, s: s + 1, lambda r, s: s + 2, lambda r, s: 2, _RGT2),
        _Entry(lambda r, s: s + 2, lambda r, s: s + 2, lambda r, s: r - 3, _RGT2),
        _Entry(lambda r, s: 2, lambda r, s: s + 1, lambda r, s: 4),
        _Entry(lambda r, s: 2, lambda r, s: s + 2, lambda r, s: 2 * (r - 2)),
        _Entry(lambda r, s: 3, lambda r, s: s + 1, lambda r, s: 2 * (s - 2)),
        _Entry(lambda r, s: 3, lambda r, s: s + 2, lambda r, s: (r - 2) * (s - 2)),
    ],
    Family.CORONA_CYCLES: [
        _Entry(lambda r, s: 3, lambda r, s: 3, lambda r, s: r * s),
        _Entry(lambda r, s: 3, lambda r, s: s + 2, lambda r, s: r * s),
        _Entry(lambda r, s: s + 2, lambda r, s: s + 2, lambda r, s: r),
    ],
}


def symbolic_partition(spec: FamilySpec) -> EdgeClassPartition:
    """Evaluate the family's degree-pair table at ``(spec.r, spec.s)``.

    Rows with the same degree pair (e.g. both cycle classes when r == s)
    are merged and zero counts dropped.
    """
    r, s = spec.r, spec.s
    counts: Counter[tuple[int, int]] = Counter()
    for e in _TABLES[spec.family]:
        if not e.when(r, s):
            continue
        c = e.count(r, s)
        if c < 0:
            raise AssertionError(f"negative count {c} in {spec}")
        a, b = e.a(r, s), e.b(r, s)
        counts[(min(a, b), max(a, b))] += c
    return {k: v for k, v in sorted(counts.items()) if v}


def closed_index(spec: FamilySpec, kind: IndexKind) -> RadicalSum:
    return index_from_partition(symbolic_partition(spec), kind)


_BUILDERS: dict[Family, Callable[[int, int], Graph]] = {
    Family.JOIN_PATHS: lambda r, s: join(make_path(r), make_path(s)),
    Family.JOIN_CYCLES: lambda r, s: join(make_cycle(r), make_cycle(s)),
    Family.JOIN_COMPLETE: lambda r, s: join(make_complete(r), make_complete(s)),
    Family.JOIN_CYCLE_COMPLETE: lambda r, s: join(make_cycle(r), make_complete(s)),
    Family.CORONA_PATHS: lambda r, s: corona(make_path(r), make_path(s)),
    Family.CORONA_CYCLES: lambda r, s: corona(make_cycle(r), make_cycle(s)),
}


def build(spec: FamilySpec) -> Graph:
    """Construct the product graph the family describes."""
    return _BUILDERS[spec.family](spec.r, spec.s)


def expected_order(spec: FamilySpec) -> int:
    r, s = spec.r, spec.s
    if spec.family in (Family.CORONA_PATHS, Family.CORONA_CYCLES):
        return r * s + r
    return r + s


def expected_size(spec: FamilySpec) -> int:
    r, s = spec.r, spec.s
    return {
        Family.JOIN_PATHS: r + s + r * s - 2,
        Family.JOIN_CYCLES: r + s + r * s,
        Family.JOIN_COMPLETE: (r + s) * (r + s - 1) // 2,
        Family.JOIN_CYCLE_COMPLETE: r + r * s + s * (s - 1) // 2,
        Family.CORONA_PATHS: 2 * r * s - 1,
        Family.CORONA_CYCLES: 2 * r * s + r,
    }[spec.family]


# ---------------------------------------------------------------------------
# Statement transcriptions.
#
# These reproduce the printed theorem statements term for term, including
# their misprints. Unbalanced brackets are read as documented next to each
# formula. Nothing here may be "fixed"; fixes belong in _TABLES.
# ---------------------------------------------------------------------------

S2, S3 = sqrt(2), sqrt(3)


def case_id(spec: FamilySpec) -> str:
    """Which printed case of the family's statement applies at ``(r, s)``."""
    if spec.family not in (Family.JOIN_PATHS, Family.CORONA_PATHS):
        return "all"
    r, s = spec.r, spec.s
    if r == 2 and s == 2:
        return "r=s=2"
    if r == 2:
        return "r=2,s>2"
    if s == 2:
        return "r>2,s=2"
    return "r,s>2"


def _join_paths_eso(r: int, s: int, case: str) -> float:
    if case == "r=s=2":
        return 108 * S2
    if case == "r=2,s>2":
        return (70 + 2 * S2 * (s + 1) ** 2 + 32 * S2 * (s - 3)
                + 4 * (s + 4) * sqrt(9 + (s + 1) ** 2)
                + 2 * (s - 2) * (s + 5) * sqrt(16 + (s + 1) ** 2))
    if case == "r>2,s=2":
        # printed with (s+5) in the last term
        return (70 + 2 * S2 * (r + 1) ** 2 + 32 * S2 * (r - 3)
                + 4 * (r + 4) * sqrt(9 + (r + 1) ** 2)
                + 2 * (r - 2) * (s + 5) * sqrt(16 + (r + 1) ** 2))
    # printed "(r-3)(2s+4(s+2)\sqrt{2}" with one paren missing; read as
    # (r-3)(2s+4)(s+2)sqrt2. The three cross-degree terms after the
    # (r+1, s+1) term are absent from the statement.
    return (2 * (2 * s + 3) * sqrt((s + 1) ** 2 + (s + 2) ** 2)
            + (r - 3) * (2 * s + 4) * (s + 2) * S2
            + 2 * (2 * r + 3) * sqrt((r + 1) ** 2 + (r + 2) ** 2)
            + (s - 3) * (2 * r + 4) * (r + 2) * S2
            + 4 * (r + s + 2) * sqrt((r + 1) ** 2 + (s + 1) ** 2))


def _join_paths_eu(r: int, s: int, case: str) -> float:
    if case == "r=s=2":
        return 18 * S3
    if case == "r=2,s>2":
        return (2 * sqrt(37) + (5 * s - 11) * S3 + 4 * sqrt((s + 1) ** 2 + 3 * s + 12)
                + 2 * (s - 2) * sqrt((s + 1) ** 2 + 4 * s + 20))
    if case == "r>2,s=2":
        # printed with (5s-11), not (5r-11)
        return (2 * sqrt(37) + (5 * s - 11) * S3 + 4 * sqrt((r + 1) ** 2 + 3 * r + 12)
                + 2 * (r - 2) * sqrt((r + 1) ** 2 + 4 * r + 20))

    def eu(a: int, b: int) -> float:
        return sqrt(a * a + b * b + a * b)

    return (2 * eu(s + 1, s + 2) + (r - 3) * sqrt(3 * (s + 2) ** 2)
            + 2 * eu(r + 1, r + 2) + (s - 3) * sqrt(3 * (r + 2) ** 2)
            + 4 * eu(r + 1, s + 1)
            + 2 * (s - 2) * eu(r + 2, s + 1)
            + (r - 2) * (s - 2) * eu(r + 2, s + 2)
            + 2 * (r - 2) * eu(r + 1, s + 2))


def _join_cycles_eso(r: int, s: int, case: str) -> float:
    # printed "2\sqrt{2}(s+2)^2+s(r+2)^2]+..." with an orphan bracket; read
    # left to right, so the sqrt2 and the factor r cover only the first term
    return (2 * S2 * (s + 2) ** 2 + s * (r + 2) ** 2
            + r * s * (r + s + 4) * sqrt((r + 2) ** 2 + (s + 2) ** 2))


def _join_cycles_eu(r: int, s: int, case: str) -> float:
    return (2 * S3 * (r + s + r * s)
            + r * s * sqrt((r + 2) ** 2 + (s + 2) ** 2 + (r + 2) * (s + 2)))


def _join_complete_eso(r: int, s: int, case: str) -> float:
    return S2 * (r + s) * (r + s - 1) ** 3


def _join_complete_eu(r: int, s: int, case: str) -> float:
    return S3 / 2 * (r + s) * (r + s - 1) ** 2


def _cycle_complete_eso(r: int, s: int, case: str) -> float:
    return (2 * S2 * r * (s + 2) ** 2
            + r * s * (r + 2 * s + 1) * sqrt((s + 2) ** 2 + (r + s - 1) ** 2)
            + comb(s, 2) * (r + s - 1) * S2)


def _cycle_complete_eu(r: int, s: int, case: str) -> float:
    return (r * (s + 2) * S3
            + r * s * sqrt((s + 2) ** 2 + (r + s - 1) ** 2 + (s + 2) * (r + s - 1))
            + comb(s, 2) * (r + s - 1) * S3)


def _corona_paths_eso(r: int, s: int, case: str) -> float:
    if case == "r=s=2":
        return 34 * S2 + 20 * sqrt(13)
    if case == "r=2,s>2":
        return (20 * sqrt(13) + 2 * S2 * (s + 1) ** 2 + 4 * (s + 3) * sqrt(4 + (s + 1) ** 2)
                + 2 * (s - 2) * (s + 4) * sqrt(9 + (s + 1) ** 2))
    if case == "r>2,s=2":
        return 70 + 20 * sqrt(13) + 8 * S2 * r + 32 * S2 * (r - 3) + 24 * (r - 2) * sqrt(5)
    return (18 * S2 * r * (s - 3) + 2 * S2 * (r - 3) * (s + 2) ** 2 + 10 * sqrt(13) * r
            + 4 * (s + 3) * sqrt(4 + (s + 1) ** 2)
            + 2 * (r - 1) * (s + 4) * sqrt(4 + (s + 2) ** 2)
            + 2 * (s - 2) * (s + 4) * sqrt(9 + (s + 1) ** 2)
            + (r - 2) * (s - 2) * (s + 5) * sqrt(9 + (s + 2) ** 2)
            + 2 * (2 * s + 3) * sqrt((s + 1) ** 2 + (s + 2) ** 2))


def _corona_paths_eu(r: int, s: int, case: str) -> float:
    if case == "r=s=2":
        return 7 * S3 + 4 * sqrt(19)
    if case == "r=2,s>2":
        return (4 * sqrt(19) + (s + 1) * S3 + 4 * sqrt(4 + (s + 1) ** 2 + 2 * (s + 1))
                + 2 * (s - 2) * sqrt(9 + (s + 1) ** 2 + 3 * (s + 1)))
    if case == "r>2,s=2":
        # printed with the elliptic-Sombor terms repeated
        return 4 * sqrt(19) + 2 * S3 * r + 8 * S2 * r + 32 * S2 * (r - 3) + 24 * (r - 2) * sqrt(5)
    return (3 * S3 * r * (s - 3) + S3 * (r - 3) * (s + 2) + 2 * sqrt(19) * r
            + 4 * sqrt(4 + (s + 1) ** 2 + 2 * (s + 1))
            + 2 * (r - 1) * sqrt(4 + (s + 2) ** 2 + 2 * (s + 2))
            + 2 * (s - 2) * sqrt(9 + (s + 1) ** 2 + 3 * (s + 1))
            + (r - 2) * (s - 2) * sqrt(9 + (s + 2) ** 2 + 3 * (s + 2))
            + 2 * sqrt((s + 1) ** 2 + (s + 2) ** 2 + (s + 1) * (s + 2)))


def _corona_cycles_eso(r: int, s: int, case: str) -> float:
    return 18 * r * s * S2 + r * s * (s + 5) * sqrt(9 + (s + 2) ** 2) + 2 * S2 * r * (s + 2) ** 2


def _corona_cycles_eu(r: int, s: int, case: str) -> float:
    return 3 * S3 + r * s * sqrt(9 + (s + 2) ** 2 + 3 * (s + 2)) + S3 * r * (s + 2)


_STATEMENTS: dict[tuple[Family, IndexKind], Callable[[int, int, str], float]] = {
    (Family.JOIN_PATHS, IndexKind.ESO): _join_paths_eso,
    (Family.JOIN_PATHS, IndexKind.EU): _join_paths_eu,
    (Family.JOIN_CYCLES, IndexKind.ESO): _join_cycles_eso,
    (Family.JOIN_CYCLES, IndexKind.EU): _join_cycles_eu,
    (Family.JOIN_COMPLETE, IndexKind.ESO): _join_complete_eso,
    (Family.JOIN_COMPLETE, IndexKind.EU): _join_complete_eu,
    (Family.JOIN_CYCLE_COMPLETE, IndexKind.ESO): _cycle_complete_eso,
    (Family.JOIN_CYCLE_COMPLETE, IndexKind.EU): _cycle_complete_eu,
    (Family.CORONA_PATHS, IndexKind.ESO): _corona_paths_eso,
    (Family.CORONA_PATHS, IndexKind.EU): _corona_paths_eu,
    (Family.CORONA_CYCLES, IndexKind.ESO): _corona_cycles_eso,
    (Family.CORONA_CYCLES, IndexKind.EU): _corona_cycles_eu,
}


def statement_value(spec: FamilySpec, kind: IndexKind) -> float:
    """Floating-point value of the printed statement formula at ``(r, s)``.

    Only elliptic and Euler Sombor have printed statements.
    """
    kind = IndexKind(kind)
    try:
        fn = _STATEMENTS[(spec.family, kind)]
    except KeyError:
        raise ValueError(f"no printed statement for {kind.value} on {spec.family.value}") from None
    return fn(spec.r, spec.s, case_id(spec))


@dataclass(frozen=True)
class ErratumEntry:
    family: Family
    kind: IndexKind
    case: str
    description: str
    first_divergent_example: str


def load_errata() -> list[ErratumEntry]:
    """Read the curated list of printed statements known to disagree with the graphs."""
    text = resources.files("topolab").joinpath("data/errata.csv").read_text(encoding="utf-8")
    rows = csv.DictReader(io.StringIO(text))
    return [
        ErratumEntry(
            Family(row["family"]),
            IndexKind(row["kind"]),
            row["case"],
            row["description"],
            row["first_divergent_example"],
        )
        for row in rows
    ]


@dataclass(frozen=True)
class AuditRecord:
    statement_value: float
    normative_value: float
    delta: float
    known_discrepancy: bool

    @property
    def diverges(self) -> bool:
        return self.delta > AUDIT_RTOL


def audit_statement(
    spec: FamilySpec, kind: IndexKind, errata: list[ErratumEntry] | None = None
) -> AuditRecord:
    """Compare the printed statement with the partition-derived value.

    ``delta`` is relative to ``max(1, |normative|)``. ``known_discrepancy``
    says whether the (family, kind, case) cell is on the errata list; it is
    not derived from ``delta``.
    """
    kind = IndexKind(kind)
    if errata is None:
        errata = load_errata()
    stated = statement_value(spec, kind)
    normative = float(closed_index(spec, kind))
    delta = abs(stated - normative) / max(1.0, abs(normative))
    case = case_id(spec)
    known = any(e.family is spec.family and e.kind is kind and e.case == case for e in errata)
    if math.isnan(delta):
        delta = math.inf
    return AuditRecord(stated, normative, delta, known)
