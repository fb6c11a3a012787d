"""Discrepancy of the quotient singularity and its classification.

The minimal discrepancy over the singular locus is an extended integer:
smooth quotients (weight D <= 1) fall outside the formula, weights
2 <= D < p-1 give minus infinity, and weights D >= p-1 give a finite value
computed here by two closed forms at once.  The classification thresholds
(terminal / canonical / log canonical at D > p / >= p / >= p-1) are kept as
an independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InternalInconsistencyError
from .rep import Invariants, Representation, invariants
from .shift import ShiftProfile, shift_profile, stratum_dim

KLASS_SMOOTH = "smooth"
KLASS_TERMINAL = "terminal"
KLASS_CANONICAL_STRICT = "canonical-strict"
KLASS_LOG_CANONICAL_STRICT = "log-canonical-strict"
KLASS_NOT_LOG_CANONICAL = "not-log-canonical"

KLASSES = (
    KLASS_SMOOTH,
    KLASS_TERMINAL,
    KLASS_CANONICAL_STRICT,
    KLASS_LOG_CANONICAL_STRICT,
    KLASS_NOT_LOG_CANONICAL,
)


@dataclass(frozen=True)
class Discrepancy:
    """Extended-integer discrepancy: a finite integer, "-inf", or "smooth"."""

    kind: str
    value: int | None = None

    @staticmethod
    def finite(v: int) -> "Discrepancy":
        return Discrepancy("finite", v)

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"

    def serialize(self) -> int | str:
        """The wire form: an integer, the string "-inf", or "smooth"."""
        return self.value if self.is_finite else self.kind

    def __str__(self) -> str:
        return str(self.serialize())


NEG_INF = Discrepancy("-inf")
SMOOTH = Discrepancy("smooth")


def klass_from_weight(D: int, p: int) -> str:
    """Classification read off the weight thresholds alone."""
    if D <= 1:
        return KLASS_SMOOTH
    if D > p:
        return KLASS_TERMINAL
    if D == p:
        return KLASS_CANONICAL_STRICT
    if D == p - 1:
        return KLASS_LOG_CANONICAL_STRICT
    return KLASS_NOT_LOG_CANONICAL


def klass_from_discrepancy(delta: Discrepancy) -> str:
    """Classification read off the discrepancy value alone."""
    if delta.kind == "smooth":
        return KLASS_SMOOTH
    if delta.kind == "-inf":
        return KLASS_NOT_LOG_CANONICAL
    v = delta.value
    if v > 0:
        return KLASS_TERMINAL
    if v == 0:
        return KLASS_CANONICAL_STRICT
    if v == -1:
        return KLASS_LOG_CANONICAL_STRICT
    raise InternalInconsistencyError(f"finite discrepancy below -1: {v}")


def _finite_value(inv: Invariants, prof: ShiftProfile) -> int:
    """Evaluate both closed forms for the finite case and assert agreement."""
    p = prof.rep.p
    via_jump = inv.d - 1 - inv.l - max(prof.jump)
    via_weight = inv.D - 1 - max(prof.sht[p - s - 1] + s for s in range(1, p))
    if via_jump != via_weight:
        raise InternalInconsistencyError(
            f"closed forms disagree at {prof.rep}: "
            f"{via_jump} (jump form) vs {via_weight} (weight form)"
        )
    return via_jump


def discrepancy(rep: Representation, max_p: int | None = None) -> Discrepancy:
    """Minimal discrepancy over the singular locus.

    Smooth when D <= 1; minus infinity when 2 <= D < p-1; otherwise finite,
    with the two equivalent closed forms evaluated and compared on every call.
    """
    inv = invariants(rep)
    if inv.D <= 1:
        return SMOOTH
    if inv.D < rep.p - 1:
        return NEG_INF
    prof = shift_profile(rep) if max_p is None else shift_profile(rep, max_p)
    return Discrepancy.finite(_finite_value(inv, prof))


def discrepancy_via_strata(rep: Representation, n_max: int) -> Discrepancy:
    """Independent evaluation: d - 1 minus the best stratum dimension.

    Scans j in {0} union {1..n_max*p, p not | j}.  Stratum dimensions grow
    linearly in the period count with coefficient p-1-D, so minus infinity
    is detected exactly by comparing the best first-period stratum against
    the best zero-period one; the window size never affects that test.
    """
    inv = invariants(rep)
    if inv.D < 2:
        raise ValueError(f"stratum scan needs D >= 2 (got D={inv.D})")
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1 (got {n_max})")
    p = rep.p
    best_n0 = max(stratum_dim(rep, s) for s in range(1, p))
    best_n1 = max(stratum_dim(rep, p + s) for s in range(1, p))
    if best_n1 > best_n0:
        return NEG_INF
    best = max(inv.l, best_n0)
    for j in range(p + 1, n_max * p + 1):
        if j % p:
            best = max(best, stratum_dim(rep, j))
    return Discrepancy.finite(inv.d - 1 - best)


def _lower_bound(inv: Invariants, p: int, remark_literal: bool) -> tuple[Fraction | None, bool]:
    """The rational lower bound 2D/p - 2 and the hypothesis-gap flag.

    The bound is proved for D >= p.  The remark-literal policy extends it to
    D = p-1, where it can actually fail; that contested case is flagged
    rather than silently resolved.
    """
    gap = inv.D == p - 1
    threshold = p - 1 if remark_literal else p
    if inv.D >= threshold:
        return Fraction(2 * inv.D, p) - 2, gap
    return None, gap


def discrepancy_bounds(
    rep: Representation, remark_literal: bool = False
) -> tuple[int, Fraction | None]:
    """Return (upper, lower): D - p always, 2D/p - 2 when its hypothesis holds."""
    inv = invariants(rep)
    if inv.D < 2:
        raise ValueError(f"bounds need D >= 2 (got D={inv.D})")
    lower, _ = _lower_bound(inv, rep.p, remark_literal)
    return inv.D - rep.p, lower


@dataclass(frozen=True)
class CenterBounds:
    """Bounds on discrepancies over divisors centered in a fixed closed subset.

    hypothesis_gap marks D == p-1, where the lower bound's stated and proved
    hypotheses differ (see discrepancy_bounds); lower is None whenever the
    active policy does not grant it.
    """

    dim_center: int
    lower: Fraction | None
    upper: int
    hypothesis_gap: bool


def center_discrepancy_bounds(
    rep: Representation, dim_center: int, remark_literal: bool = False
) -> CenterBounds:
    """Bounds for centers inside a dim_center-dimensional closed subset of
    the singular locus: the plain bounds shifted by l - dim_center."""
    inv = invariants(rep)
    if inv.D < 2:
        raise ValueError(f"center bounds need D >= 2 (got D={inv.D})")
    if inv.D < rep.p - 1:
        raise ValueError(
            f"center bounds need D >= p-1 (got D={inv.D}, p={rep.p})"
        )
    if not 0 <= dim_center <= inv.l:
        raise ValueError(
            f"dim_center must lie in [0, l] = [0, {inv.l}] (got {dim_center})"
        )
    shift = inv.l - dim_center
    lower, gap = _lower_bound(inv, rep.p, remark_literal)
    return CenterBounds(
        dim_center=dim_center,
        lower=None if lower is None else lower + shift,
        upper=inv.D - rep.p + shift,
        hypothesis_gap=gap,
    )


@dataclass(frozen=True)
class SingularityReport:
    """Full classification bundle for one representation."""

    rep: Representation
    inv: Invariants
    delta: Discrepancy
    klass: str
    maximizers: tuple[int, ...]
    upper_bound: int | None
    lower_bound: Fraction | None
    lower_bound_hypothesis_gap: bool

    @property
    def cm(self) -> bool:
        return self.inv.cm


def classify(
    rep: Representation,
    remark_literal: bool = False,
    max_p: int | None = None,
) -> SingularityReport:
    """Classify the quotient singularity of a representation.

    The class derived from the discrepancy is cross-checked against the
    weight thresholds; a mismatch would be an internal bug and raises.
    """
    inv = invariants(rep)
    threshold_klass = klass_from_weight(inv.D, rep.p)
    if inv.D <= 1:
        return SingularityReport(
            rep=rep,
            inv=inv,
            delta=SMOOTH,
            klass=KLASS_SMOOTH,
            maximizers=(),
            upper_bound=None,
            lower_bound=None,
            lower_bound_hypothesis_gap=False,
        )
    if inv.D < rep.p - 1:
        delta = NEG_INF
        maximizers: tuple[int, ...] = ()
    else:
        prof = shift_profile(rep) if max_p is None else shift_profile(rep, max_p)
        delta = Discrepancy.finite(_finite_value(inv, prof))
        maximizers = prof.maximizers()
    klass = klass_from_discrepancy(delta)
    if klass != threshold_klass:
        raise InternalInconsistencyError(
            f"classification mismatch at {rep}: delta gives {klass}, "
            f"thresholds give {threshold_klass}"
        )
    lower, gap = _lower_bound(inv, rep.p, remark_literal)
    return SingularityReport(
        rep=rep,
        inv=inv,
        delta=delta,
        klass=klass,
        maximizers=maximizers,
        upper_bound=inv.D - rep.p,
        lower_bound=lower,
        lower_bound_hypothesis_gap=gap,
    )
