"""Enumeration of representation types and predicate search over them.

Representations of total dimension d over a fixed prime are exactly the
partitions of d with parts at most p.  Enumeration order is reverse
lexicographic on the sorted part tuple ([4], [3,1], [2,2], [2,1,1], [1^4]),
which keeps table output stable across runs.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterator

from .discrepancy import (
    KLASSES,
    Discrepancy,
    SingularityReport,
    classify,
)
from .errors import EnumerationCapError, ValidationError
from .rep import Representation, check_prime

DEFAULT_PARTITION_CAP = 10**6
PARTITION_CAP_ENV = "PSING_MAX_PARTITIONS"


def resolve_partition_cap(cap: int | None = None) -> int:
    """Explicit cap, else the PSING_MAX_PARTITIONS env var, else the default."""
    if cap is not None:
        return cap
    raw = os.environ.get(PARTITION_CAP_ENV)
    if raw is not None:
        try:
            return int(raw)
        except ValueError:
            raise ValidationError(
                f"{PARTITION_CAP_ENV} must be an integer (got {raw!r})"
            )
    return DEFAULT_PARTITION_CAP


def count_partitions(n: int, max_part: int) -> int:
    """Number of partitions of n with all parts <= max_part (DP recurrence)."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    k = min(max_part, n)
    if k <= 0:
        return 0
    ways = [1] + [0] * n
    for part in range(1, k + 1):
        for total in range(part, n + 1):
            ways[total] += ways[total - part]
    return ways[n]


def enumerate_reps(p: int, d: int, cap: int | None = None) -> Iterator[Representation]:
    """Yield every representation of dimension d over p exactly once.

    Order is reverse lexicographic on the sorted part tuple.  The restricted
    partition count is checked against the cap before anything is yielded,
    so an oversized cell fails loudly instead of truncating.
    """
    check_prime(p)
    if d < 1:
        raise ValidationError(f"dimension must be >= 1 (got {d})")
    limit = resolve_partition_cap(cap)
    total = count_partitions(d, min(p, d))
    if total > limit:
        raise EnumerationCapError(
            f"(p={p}, d={d}) has {total} partitions, more than the cap {limit}"
        )
    return _generate(p, d)


def _generate(p: int, d: int) -> Iterator[Representation]:
    prefix: list[int] = []

    def rec(remaining: int, largest: int) -> Iterator[Representation]:
        if remaining == 0:
            yield Representation(p, tuple(prefix))
            return
        for part in range(min(largest, remaining), 0, -1):
            prefix.append(part)
            yield from rec(remaining - part, part)
            prefix.pop()

    yield from rec(d, min(p, d))


@dataclass(frozen=True)
class Predicate:
    """Conjunction of filter atoms; None fields are unconstrained.

    Delta range atoms match finite discrepancies only: neither "-inf" nor
    "smooth" satisfies a range test.
    """

    klass_in: frozenset[str] | None = None
    cm: bool | None = None
    D_min: int | None = None
    D_max: int | None = None
    delta_min: int | None = None
    delta_max: int | None = None

    def __post_init__(self):
        if self.klass_in is not None:
            object.__setattr__(self, "klass_in", frozenset(self.klass_in))
            unknown = self.klass_in - set(KLASSES)
            if unknown:
                raise ValidationError(f"unknown class names: {sorted(unknown)}")

    def matches(self, row: "TableRow") -> bool:
        if self.klass_in is not None and row.klass not in self.klass_in:
            return False
        if self.cm is not None and row.cm != self.cm:
            return False
        if self.D_min is not None and row.D < self.D_min:
            return False
        if self.D_max is not None and row.D > self.D_max:
            return False
        if self.delta_min is not None or self.delta_max is not None:
            if not row.delta.is_finite:
                return False
            if self.delta_min is not None and row.delta.value < self.delta_min:
                return False
            if self.delta_max is not None and row.delta.value > self.delta_max:
                return False
        return True


@dataclass(frozen=True)
class SearchQuery:
    """A declarative enumeration sweep: primes, a dimension range, a
    predicate, and optionally the minimize-d objective.

    With minimize_d set, only rows at the smallest matching dimension are
    returned, separately for each prime.
    """

    primes: tuple[int, ...]
    d_max: int
    d_min: int = 1
    predicate: Predicate = field(default_factory=Predicate)
    minimize_d: bool = False

    def __post_init__(self):
        object.__setattr__(self, "primes", tuple(self.primes))
        if not self.primes:
            raise ValidationError("primes must be non-empty")
        for p in self.primes:
            check_prime(p)
        if self.d_min < 1:
            raise ValidationError(f"d_min must be >= 1 (got {self.d_min})")
        if self.d_max < self.d_min:
            raise ValidationError(
                f"d_max must be >= d_min (got d_max={self.d_max}, d_min={self.d_min})"
            )


@dataclass(frozen=True)
class TableRow:
    """One classified representation, flattened for tables."""

    rep: Representation
    d: int
    l: int
    codim: int
    D: int
    delta: Discrepancy
    klass: str
    cm: bool
    maximizers: tuple[int, ...]

    @classmethod
    def from_report(cls, report: SingularityReport) -> "TableRow":
        return cls(
            rep=report.rep,
            d=report.inv.d,
            l=report.inv.l,
            codim=report.inv.codim,
            D=report.inv.D,
            delta=report.delta,
            klass=report.klass,
            cm=report.cm,
            maximizers=report.maximizers,
        )


def run_search(query: SearchQuery, cap: int | None = None) -> list[TableRow]:
    """All rows matching the query, ordered by p, then d, then enumeration
    order within the cell."""
    rows: list[TableRow] = []
    for p in sorted(set(query.primes)):
        for d in range(query.d_min, query.d_max + 1):
            hit = False
            for rep in enumerate_reps(p, d, cap=cap):
                row = TableRow.from_report(classify(rep))
                if query.predicate.matches(row):
                    rows.append(row)
                    hit = True
            if query.minimize_d and hit:
                break
    return rows


def build_table(primes, d_max: int, cap: int | None = None) -> list[TableRow]:
    """Classify every representation up to d_max for every prime."""
    return run_search(SearchQuery(primes=tuple(primes), d_max=d_max), cap=cap)
