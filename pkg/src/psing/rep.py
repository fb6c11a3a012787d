"""Representation model: a prime p plus a multiset of indecomposable part sizes.

A linear action of the cyclic group of order p on affine d-space in
characteristic p is determined, up to isomorphism, by the sizes of its
indecomposable summands, each between 1 and p.  Everything downstream is
exact integer combinatorics on that multiset.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .errors import (
    EmptyPartsError,
    NotPrimeError,
    PartExceedsPrimeError,
    PartNotPositiveError,
    PrimeRangeError,
    RepSyntaxError,
    ValidationError,
)

# Miller-Rabin with this witness set is deterministic below this bound
# (Sorenson & Webster).  Larger inputs are rejected rather than answered
# probabilistically.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_DETERMINISTIC_BELOW = 3_317_044_064_679_887_385_961_981


@lru_cache(maxsize=512)
def is_prime(n: int) -> bool:
    """Deterministic primality check for 0 <= n < ~3.3e24."""
    if n >= _MR_DETERMINISTIC_BELOW:
        raise PrimeRangeError(
            f"primality check is deterministic only below "
            f"{_MR_DETERMINISTIC_BELOW}; got {n}"
        )
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n % q == 0:
            return n == q
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def check_prime(p: int) -> int:
    """Return p if prime, else raise NotPrimeError."""
    if not isinstance(p, int) or isinstance(p, bool):
        raise NotPrimeError(f"p must be a prime integer (got {p!r})")
    if not is_prime(p):
        raise NotPrimeError(f"p must be prime (got {p})")
    return p


@dataclass(frozen=True)
class Representation:
    """The characteristic p and the part sizes, kept sorted non-increasing.

    Two representations are equal iff p and the sorted parts agree, so the
    canonical order doubles as the equality and hashing contract.
    """

    p: int
    parts: tuple[int, ...]

    def __post_init__(self):
        check_prime(self.p)
        try:
            parts = tuple(sorted(self.parts, reverse=True))
        except TypeError:
            raise ValidationError(f"parts must be integers (got {self.parts!r})")
        if not parts:
            raise EmptyPartsError("parts must be a non-empty multiset")
        for x in parts:
            if not isinstance(x, int) or isinstance(x, bool):
                raise ValidationError(f"parts must be integers (got {x!r})")
        if parts[-1] < 1:
            raise PartNotPositiveError(f"every part must be >= 1 (got {parts[-1]})")
        if parts[0] > self.p:
            raise PartExceedsPrimeError(
                f"every part must be <= p={self.p} (got {parts[0]})"
            )
        object.__setattr__(self, "parts", parts)

    def to_text(self) -> str:
        """Canonical compact string, e.g. "4" or "2^3,1^2"."""
        return format_parts(self.parts)

    def __str__(self) -> str:
        return f"p={self.p}:{self.to_text()}"


@dataclass(frozen=True)
class Invariants:
    """Elementary derived invariants of a representation.

    d: total dimension (sum of parts); l: dimension of the fixed locus
    (number of parts); codim = d - l; D: the classification weight
    sum((size-1)*size/2) over parts; cm: Cohen-Macaulay flag, codim <= 2.
    """

    d: int
    l: int
    codim: int
    D: int
    cm: bool


def parse_representation(p: int, parts: Iterable[int]) -> Representation:
    """Validate and canonicalize (p, parts) into a Representation."""
    return Representation(p, tuple(parts))


def invariants(rep: Representation) -> Invariants:
    """Compute d, l, codim, D and the Cohen-Macaulay flag."""
    d = sum(rep.parts)
    l = len(rep.parts)
    D = sum((x - 1) * x // 2 for x in rep.parts)
    return Invariants(d=d, l=l, codim=d - l, D=D, cm=d - l <= 2)


def parse_parts_text(text: str) -> list[int]:
    """Parse a part list from the grammar ``term ("," term)*`` where a term
    is ``size`` or ``size^multiplicity``; whitespace is ignored.

    "4" -> [4]; "2^3,1^2" -> [2, 2, 2, 1, 1].
    """
    compact = "".join(text.split())
    if not compact:
        raise EmptyPartsError("empty representation string")
    parts: list[int] = []
    for term in compact.split(","):
        if not term:
            raise RepSyntaxError(f"empty term in {text!r}")
        size_s, caret, mult_s = term.partition("^")
        if not size_s.isdigit():
            raise RepSyntaxError(f"bad part size {size_s!r} in {text!r}")
        size = int(size_s)
        if caret:
            if not mult_s.isdigit():
                raise RepSyntaxError(f"bad multiplicity {mult_s!r} in {text!r}")
            mult = int(mult_s)
            if mult < 1:
                raise RepSyntaxError(f"multiplicity must be >= 1 in {text!r}")
        else:
            mult = 1
        parts.extend([size] * mult)
    return parts


def format_parts(parts: Iterable[int]) -> str:
    """Render parts in the canonical compact form, e.g. "3,2^2,1"."""
    counts = Counter(parts)
    terms = []
    for size in sorted(counts, reverse=True):
        mult = counts[size]
        terms.append(f"{size}^{mult}" if mult > 1 else f"{size}")
    return ",".join(terms)


def rep_from_text(p: int, text: str) -> Representation:
    """Parse a representation string for characteristic p."""
    return parse_representation(p, parse_parts_text(text))
