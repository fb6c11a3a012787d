"""Cross-checking property suite, runnable over any enumeration sweep.

Each property pits two independent computation routes against each other
(identity vs direct evaluation, closed form vs stratum scan, discrepancy
class vs weight thresholds).  All must agree everywhere; the first
counterexample per property is kept for reporting.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .discrepancy import (
    Discrepancy,
    discrepancy,
    discrepancy_bounds,
    discrepancy_via_strata,
    klass_from_discrepancy,
    klass_from_weight,
)
from .explorer import enumerate_reps
from .rep import invariants
from .shift import shift_profile, shift_reflection_holds, shift_upper_bound_holds

PROPERTY_NAMES = (
    "shift-reflection-identity",
    "shift-upper-bound",
    "dual-formula-agreement",
    "stratum-scan-agreement",
    "bound-sandwich",
    "threshold-consistency",
)


@dataclass
class PropertyResult:
    name: str
    instances: int = 0
    counterexample: dict | None = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None


def run_property_suite(
    primes, d_max: int, n_max: int = 3, cap: int | None = None
) -> list[PropertyResult]:
    """Run every property over all representations with d <= d_max.

    Properties that only apply above a weight threshold skip the
    representations below it; their instance counts reflect that.
    """
    results = {name: PropertyResult(name) for name in PROPERTY_NAMES}

    def check(name: str, ok: bool, **ctx) -> None:
        r = results[name]
        r.instances += 1
        if not ok and r.counterexample is None:
            r.counterexample = {"property": name, **ctx}

    for p in sorted(set(primes)):
        for d in range(1, d_max + 1):
            for rep in enumerate_reps(p, d, cap=cap):
                inv = invariants(rep)
                where = {"p": p, "rep": rep.to_text()}
                for s in range(1, p):
                    check(
                        "shift-reflection-identity",
                        shift_reflection_holds(rep, s),
                        s=s,
                        **where,
                    )
                    check(
                        "shift-upper-bound",
                        shift_upper_bound_holds(rep, s),
                        s=s,
                        **where,
                    )
                if inv.D < 2:
                    continue
                delta = discrepancy(rep)
                if inv.D >= p - 1:
                    prof = shift_profile(rep)
                    via_jump = inv.d - 1 - inv.l - max(prof.jump)
                    via_weight = inv.D - 1 - max(
                        prof.sht[p - s - 1] + s for s in range(1, p)
                    )
                    check(
                        "dual-formula-agreement",
                        via_jump == via_weight == delta.value,
                        via_jump=via_jump,
                        via_weight=via_weight,
                        **where,
                    )
                for n in range(1, n_max + 1):
                    scanned = discrepancy_via_strata(rep, n)
                    check(
                        "stratum-scan-agreement",
                        scanned == delta,
                        n_max=n,
                        scanned=str(scanned),
                        delta=str(delta),
                        **where,
                    )
                upper, lower = discrepancy_bounds(rep)
                sandwich = True
                if delta.is_finite:
                    sandwich = delta.value <= upper and (
                        lower is None or Fraction(delta.value) >= lower
                    )
                check(
                    "bound-sandwich",
                    sandwich,
                    delta=str(delta),
                    upper=upper,
                    lower=None if lower is None else str(lower),
                    **where,
                )
                check(
                    "threshold-consistency",
                    klass_from_discrepancy(delta) == klass_from_weight(inv.D, p),
                    delta=str(delta),
                    D=inv.D,
                    **where,
                )
    return [results[name] for name in PROPERTY_NAMES]
