"""Exact pair-sum counting.

Two counting modes: same-set counts over unordered pairs of distinct
elements (s + s' = n with s < s'), and ordered cross counts between two sets
(c + d = n with c in C, d in D).  Batch profiles come in two routes that
must agree: a transparent double loop, and a fast path that packs the
membership bit-vector into one big integer so that a single squaring
performs the whole convolution word-parallel.  Correctness is defined by
the double loop; the fast path is held to it in the test suite.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .natset import NatSet


class ProfileKind(enum.Enum):
    SAME = "SAME"
    CROSS = "CROSS"


@dataclass(frozen=True)
class RepProfile:
    """Counts indexed by target sum n = 0..n_max."""

    kind: ProfileKind
    n_max: int
    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n_max < 0:
            raise ValueError(f"n_max must be nonnegative, got {self.n_max}")
        if len(self.counts) != self.n_max + 1:
            raise ValueError(
                f"expected {self.n_max + 1} counts, got {len(self.counts)}"
            )
        for n, c in enumerate(self.counts):
            cap = (n + 1) // 2 if self.kind is ProfileKind.SAME else n + 1
            if not 0 <= c <= cap:
                raise ValueError(f"count {c} at n={n} outside [0, {cap}]")

    def __getitem__(self, n: int) -> int:
        return self.counts[n]

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "n_max": self.n_max,
            "counts": list(self.counts),
        }


def rep_same(s: NatSet, n: int) -> int:
    """Number of ways n = a + b with a < b, both members of s."""
    if n < 0:
        raise ValueError(f"target sum must be nonnegative, got {n}")
    count = 0
    for a in s:
        if 2 * a >= n:
            break
        if (n - a) in s:
            count += 1
    return count


def rep_cross(c: NatSet, d: NatSet, n: int) -> int:
    """Ordered count of n = a + b with a in c, b in d (a = b allowed)."""
    if n < 0:
        raise ValueError(f"target sum must be nonnegative, got {n}")
    count = 0
    for a in c:
        if a > n:
            break
        if (n - a) in d:
            count += 1
    return count


def _stride_for(max_count: int) -> int:
    # Digit width such that no convolution entry can carry into the next.
    return max(max_count, 1).bit_length() + 1


def _spread(bits: int, stride: int) -> int:
    packed = 0
    while bits:
        low = bits & -bits
        packed |= 1 << (stride * (low.bit_length() - 1))
        bits ^= low
    return packed


def _ordered_same_counts(s: NatSet, n_max: int) -> list[int]:
    """Ordered self-convolution counts of s through n_max, by one squaring."""
    if s.is_empty:
        return [0] * (n_max + 1)
    stride = _stride_for(len(s))
    packed = _spread(s.bits, stride)
    square = packed * packed
    mask = (1 << stride) - 1
    return [(square >> (stride * n)) & mask for n in range(n_max + 1)]


def rep_profile(s: NatSet, n_max: int) -> RepProfile:
    """Same-set profile through n_max (word-parallel fast path)."""
    ordered = _ordered_same_counts(s, n_max)
    counts = [
        (ordered[n] - (s.chi(n // 2) if n % 2 == 0 else 0)) // 2
        for n in range(n_max + 1)
    ]
    return RepProfile(ProfileKind.SAME, n_max, tuple(counts))


def rep_profile_naive(s: NatSet, n_max: int) -> RepProfile:
    """Same-set profile by the definition: a plain double loop over pairs."""
    counts = [0] * (n_max + 1)
    elems = s.to_list()
    for i in range(len(elems)):
        for j in range(i + 1, len(elems)):
            n = elems[i] + elems[j]
            if n <= n_max:
                counts[n] += 1
    return RepProfile(ProfileKind.SAME, n_max, tuple(counts))


def cross_profile(c: NatSet, d: NatSet, n_max: int) -> RepProfile:
    """Ordered cross profile through n_max."""
    if c.is_empty or d.is_empty:
        return RepProfile(ProfileKind.CROSS, n_max, (0,) * (n_max + 1))
    stride = _stride_for(min(len(c), len(d)))
    product = _spread(c.bits, stride) * _spread(d.bits, stride)
    mask = (1 << stride) - 1
    counts = tuple((product >> (stride * n)) & mask for n in range(n_max + 1))
    return RepProfile(ProfileKind.CROSS, n_max, counts)


def first_divergence(c: NatSet, d: NatSet, n_max: int) -> int | None:
    """Least n <= n_max where the same-set counts of c and d differ."""
    pc = rep_profile(c, n_max).counts
    pd = rep_profile(d, n_max).counts
    for n in range(n_max + 1):
        if pc[n] != pd[n]:
            return n
    return None
