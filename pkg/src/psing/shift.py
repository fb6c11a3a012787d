"""Shift numbers of ramification jumps and the floor-sum kernel behind them.

The shift number of a jump j (not divisible by p) is
sum over parts of sum_{i=1}^{size-1} floor(i*j/p).  The inner sum is
evaluated by a logarithmic Euclidean reduction, so single-jump queries stay
cheap even for enormous j and p; only the full profile over all residues
scales with p and is therefore guarded.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import NamedTuple

from .errors import DivisibleJumpError, InternalInconsistencyError, ProfileCapError
from .rep import Representation, invariants

# shift_profile materializes p-1 entries; refuse pathological p by default.
PROFILE_MAX_P = 10_000_000


def floor_sum(m: int, a: int, p: int) -> int:
    """Sum of floor(i*a/p) for i = 1..m, in O(log max(m, a, p)) time.

    Euclidean-style reduction: whole multiples of p are peeled off a, then
    the lattice-point count under the line is transposed, swapping the roles
    of a and p the way gcd contracts its arguments.
    """
    if m < 0 or a < 0:
        raise ValueError(f"m and a must be non-negative (got m={m}, a={a})")
    if p < 1:
        raise ValueError(f"p must be positive (got {p})")
    # computes sum_{i=0}^{n-1} (a*i + b) // p with n = m+1, b = 0
    n, b, total = m + 1, 0, 0
    while True:
        if a >= p:
            total += (n - 1) * n // 2 * (a // p)
            a %= p
        if b >= p:
            total += n * (b // p)
            b %= p
        y_max = a * n + b
        if y_max < p:
            return total
        n, b = divmod(y_max, p)
        p, a = a, p


class JumpIndex(NamedTuple):
    """A positive jump j split as j = n*p + s with 1 <= s <= p-1."""

    j: int
    n: int
    s: int


def split_jump(p: int, j: int) -> JumpIndex:
    """Split a valid jump into its period count n and residue s."""
    if j < 1:
        raise ValueError(f"jump must be positive (got {j})")
    if j % p == 0:
        raise DivisibleJumpError(f"jump {j} is divisible by p={p}")
    n, s = divmod(j, p)
    return JumpIndex(j, n, s)


def shift_number(rep: Representation, j: int) -> int:
    """The shift number of jump j for this representation (requires p not | j)."""
    if j < 0:
        raise ValueError(f"jump must be positive (got {j})")
    if j % rep.p == 0:
        raise DivisibleJumpError(f"jump {j} is divisible by p={rep.p}")
    return sum(
        mult * floor_sum(size - 1, j, rep.p)
        for size, mult in Counter(rep.parts).items()
    )


@dataclass(frozen=True)
class ShiftProfile:
    """Shift numbers over every residue s = 1..p-1, plus the jump values s - sht(s).

    Both vectors are indexed by s-1.  The maximum of `jump` is the quantity
    the finite discrepancy formula subtracts.
    """

    rep: Representation
    sht: tuple[int, ...]
    jump: tuple[int, ...]

    def max_jump(self) -> int:
        return max(self.jump)

    def maximizers(self) -> tuple[int, ...]:
        """Residues s attaining max(jump), ascending."""
        best = max(self.jump)
        return tuple(s for s, v in enumerate(self.jump, start=1) if v == best)


def shift_profile(rep: Representation, max_p: int = PROFILE_MAX_P) -> ShiftProfile:
    """Materialize shift numbers for all residues s = 1..p-1.

    Rejects p > max_p: the profile genuinely needs p-1 entries, and callers
    that only need single jumps should use shift_number instead.
    """
    if rep.p > max_p:
        raise ProfileCapError(
            f"p={rep.p} exceeds the profile guard {max_p}; "
            f"raise max_p to override"
        )
    sht = tuple(shift_number(rep, s) for s in range(1, rep.p))
    jump = tuple(s - v for s, v in enumerate(sht, start=1))
    return ShiftProfile(rep=rep, sht=sht, jump=jump)


def stratum_dim(rep: Representation, j: int) -> int:
    """Dimension of the arc stratum with ramification jump j (j = 0 allowed).

    For j = 0 this is the fixed-locus dimension l.  For j > 0 the value is
    computed two ways, from the direct exponent l + j - floor(j/p) - sht(j)
    and from the split form l + (p-1-D)*n + (s - sht(s)); disagreement would
    mean an arithmetic bug and raises.
    """
    inv = invariants(rep)
    if j == 0:
        return inv.l
    p = rep.p
    direct = inv.l + j - j // p - shift_number(rep, j)
    n, s = split_jump(p, j)[1:]
    split = inv.l + (p - 1 - inv.D) * n + (s - shift_number(rep, s))
    if direct != split:
        raise InternalInconsistencyError(
            f"stratum dimension mismatch at {rep}, j={j}: "
            f"direct={direct}, split={split}"
        )
    return direct


def _check_residue(rep: Representation, s: int) -> None:
    if not 1 <= s <= rep.p - 1:
        raise ValueError(f"s must lie in [1, p-1] = [1, {rep.p - 1}] (got {s})")


def shift_reflection_holds(rep: Representation, s: int) -> bool:
    """Check s - sht(s) == sht(p-s) + s + d - l - D.

    The identity holds for every representation and residue; this evaluates
    both sides independently so tests and sweeps can use it as an oracle.
    """
    _check_residue(rep, s)
    inv = invariants(rep)
    lhs = s - shift_number(rep, s)
    rhs = shift_number(rep, rep.p - s) + s + inv.d - inv.l - inv.D
    return lhs == rhs


def shift_upper_bound_holds(rep: Representation, s: int) -> bool:
    """Check p * sht(s) <= (s-1) * D, the integer form of sht(s) <= (s-1)D/p."""
    _check_residue(rep, s)
    inv = invariants(rep)
    return rep.p * shift_number(rep, s) <= (s - 1) * inv.D
