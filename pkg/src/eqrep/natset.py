"""Bounded sets of nonnegative integers on bit-vector storage.

Also hosts the even/odd split of the nonnegative integers by binary digit
sum, since every construction in this package assembles its sets from finite
prefixes of those two classes.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator


class TmClass(enum.Enum):
    """Parity of the number of 1 digits in the binary expansion."""

    EVEN_ONES = "even_ones"
    ODD_ONES = "odd_ones"

    @property
    def complement(self) -> "TmClass":
        return TmClass.ODD_ONES if self is TmClass.EVEN_ONES else TmClass.EVEN_ONES


@dataclass(frozen=True, eq=False)
class NatSet:
    """Immutable finite set of nonnegative integers with an explicit bound.

    ``bits`` holds membership (bit n set iff n is a member); ``bound`` is the
    largest representable element.  The bound is storage capacity, not part
    of the set's identity: equality and hashing compare members only, and
    ``chi(n)`` is 0 for every n outside [0, bound].
    """

    bits: int
    bound: int

    def __post_init__(self) -> None:
        if self.bound < 0:
            raise ValueError(f"bound must be nonnegative, got {self.bound}")
        if self.bits < 0:
            raise ValueError("membership bit-vector must be nonnegative")
        if self.bits >> (self.bound + 1):
            raise ValueError(
                f"member {self.bits.bit_length() - 1} exceeds bound {self.bound}"
            )

    @classmethod
    def from_iter(cls, elems: Iterable[int], bound: int | None = None) -> "NatSet":
        bits = 0
        top = -1
        for e in elems:
            if e < 0:
                raise ValueError(f"negative element {e}")
            bits |= 1 << e
            if e > top:
                top = e
        if bound is None:
            bound = max(top, 0)
        return cls(bits, bound)

    @classmethod
    def empty(cls, bound: int = 0) -> "NatSet":
        return cls(0, bound)

    @classmethod
    def full(cls, m: int) -> "NatSet":
        """The interval [0, m]."""
        return cls((1 << (m + 1)) - 1, m)

    def chi(self, n: int) -> int:
        """Characteristic function: 1 if n is a member, else 0."""
        if n < 0 or n > self.bound:
            return 0
        return (self.bits >> n) & 1

    def __contains__(self, n: int) -> bool:
        return bool(self.chi(n))

    def __iter__(self) -> Iterator[int]:
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NatSet):
            return NotImplemented
        return self.bits == other.bits

    def __hash__(self) -> int:
        return hash(self.bits)

    def __or__(self, other: "NatSet") -> "NatSet":
        return NatSet(self.bits | other.bits, max(self.bound, other.bound))

    def __and__(self, other: "NatSet") -> "NatSet":
        return NatSet(self.bits & other.bits, min(self.bound, other.bound))

    def __repr__(self) -> str:
        return f"NatSet({{{', '.join(map(str, self))}}}, bound={self.bound})"

    @property
    def max_element(self) -> int | None:
        return self.bits.bit_length() - 1 if self.bits else None

    @property
    def is_empty(self) -> bool:
        return self.bits == 0

    def restrict(self, hi: int) -> "NatSet":
        """Members up to hi, with bound hi."""
        if hi < 0:
            raise ValueError(f"restriction bound must be nonnegative, got {hi}")
        return NatSet(self.bits & ((1 << (hi + 1)) - 1), hi)

    def rebound(self, bound: int) -> "NatSet":
        """Same members, new capacity (must not cut members off)."""
        return NatSet(self.bits, bound)

    def to_list(self) -> list[int]:
        return list(self)


def shift(s: NatSet, t: int) -> NatSet:
    """Translate every member by t; the bound grows by t, never truncates."""
    if t < 0:
        raise ValueError(f"shift must be nonnegative, got {t}")
    return NatSet(s.bits << t, s.bound + t)


def reflect(s: NatSet, m: int) -> NatSet:
    """Map each member e to m - e.  Requires every member <= m."""
    if m < 0:
        raise ValueError(f"reflection point must be nonnegative, got {m}")
    top = s.max_element
    if top is not None and top > m:
        raise ValueError(f"member {top} exceeds reflection point {m}")
    if s.bits == 0:
        return NatSet(0, m)
    mirrored = int(format(s.bits, "b").zfill(m + 1)[::-1], 2)
    return NatSet(mirrored, m)


def tm_class(n: int) -> TmClass:
    """Classify n by the parity of its binary digit sum."""
    if n < 0:
        raise ValueError(f"expected a nonnegative integer, got {n}")
    return TmClass.EVEN_ONES if n.bit_count() % 2 == 0 else TmClass.ODD_ONES


@lru_cache(maxsize=None)
def _even_ones_bits(l: int) -> int:
    # Doubling step: the top half of [0, 2^(l+1)) mirrors the bottom half
    # with parities flipped.  Verified against the digit-sum definition in
    # the test suite.
    bits = 1  # within [0, 1]: only 0 has an even digit sum
    width = 1
    for _ in range(l - 1):
        mask = (1 << width) - 1
        bits |= ((~bits) & mask) << width
        width <<= 1
    return bits


def tm_prefix(l: int, cls: TmClass) -> NatSet:
    """The even-ones (or odd-ones) members of [0, 2^l - 1], bound 2^l - 1."""
    if l < 1:
        raise ValueError(f"prefix exponent must be positive, got {l}")
    bound = (1 << l) - 1
    bits = _even_ones_bits(l)
    if cls is TmClass.ODD_ONES:
        bits = (~bits) & ((1 << (bound + 1)) - 1)
    return NatSet(bits, bound)
