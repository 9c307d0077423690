"""Partition pairs of [0, m] and the explicit families with equal profiles.

Four builders: the two-point-intersection family and its odd-first variant
(both at m = 2^(2l+2) - 3), the one-point family (m = 2^(2l+1) - 2), and the
disjoint split into the two digit-sum classes (m = 2^l - 1).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .natset import NatSet, TmClass, shift, tm_prefix

# Memory guard for the builders: l = 12 already means m close to 7e7.
MAX_LEVEL = 12


def _check_level(l: int) -> None:
    if not 1 <= l <= MAX_LEVEL:
        raise ValueError(f"level must be in [1, {MAX_LEVEL}], got {l}")


@dataclass(frozen=True)
class PartitionPair:
    """Two sets covering [0, m], with their overlap cached.

    Structural invariants only: C union D = [0, m], the cached intersection
    equals C & D, and orientation is canonical (0 in C; when 0 sits in the
    intersection, the least element outside it sits in C).  Whether the two
    pair-sum profiles agree is a property to be tested, never assumed.
    """

    m: int
    C: NatSet
    D: NatSet
    intersection: NatSet = field(repr=False)

    def __post_init__(self) -> None:
        full = (1 << (self.m + 1)) - 1
        if self.m < 0:
            raise ValueError(f"m must be nonnegative, got {self.m}")
        for name, s in (("C", self.C), ("D", self.D)):
            top = s.max_element
            if top is not None and top > self.m:
                raise ValueError(f"{name} contains {top} > m = {self.m}")
        if (self.C.bits | self.D.bits) != full:
            missing = (full & ~(self.C.bits | self.D.bits)).bit_length() - 1
            raise ValueError(f"union gap: {missing} is in neither set")
        if self.intersection.bits != (self.C.bits & self.D.bits):
            raise ValueError("cached intersection does not match C & D")
        if 0 not in self.C:
            raise ValueError("canonical orientation requires 0 in C")
        if 0 in self.intersection:
            outside = full & ~self.intersection.bits
            if outside:
                least = (outside & -outside).bit_length() - 1
                if least not in self.C:
                    raise ValueError(
                        "canonical orientation requires the least element "
                        f"outside the intersection ({least}) in C"
                    )

    @classmethod
    def build(cls, m: int, c: NatSet, d: NatSet) -> "PartitionPair":
        """Validate and assemble, normalizing both bounds to m."""
        c = c.rebound(m)
        d = d.rebound(m)
        return cls(m, c, d, NatSet(c.bits & d.bits, m))

    @classmethod
    def oriented(cls, m: int, c: NatSet, d: NatSet) -> "PartitionPair":
        """Like build, but swaps the two sets first if the canon demands it."""
        inter = c.bits & d.bits
        if inter & 1:
            outside = ((1 << (m + 1)) - 1) & ~inter
            if outside:
                least = (outside & -outside).bit_length() - 1
                if not (c.bits >> least) & 1:
                    c, d = d, c
        elif not c.bits & 1:
            c, d = d, c
        return cls.build(m, c, d)

    @property
    def intersection_size(self) -> int:
        return len(self.intersection)

    def two_points(self) -> tuple[int, int]:
        """The intersection as (r1, r2); requires exactly two points."""
        pts = self.intersection.to_list()
        if len(pts) != 2:
            raise ValueError(
                f"expected a two-point intersection, got {len(pts)} points"
            )
        return pts[0], pts[1]

    def to_json_dict(self) -> dict:
        return {"m": self.m, "C": self.C.to_list(), "D": self.D.to_list()}

    @classmethod
    def from_json_dict(cls, payload: dict) -> "PartitionPair":
        """Parse the interchange form; the intersection is recomputed."""
        try:
            m = payload["m"]
            c_list = payload["C"]
            d_list = payload["D"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"pair object must carry m, C and D: {exc}") from None
        if not isinstance(m, int) or isinstance(m, bool):
            raise ValueError("m must be an integer")
        sets = []
        for name, arr in (("C", c_list), ("D", d_list)):
            if not isinstance(arr, list) or any(
                not isinstance(e, int) or isinstance(e, bool) for e in arr
            ):
                raise ValueError(f"{name} must be a list of integers")
            if any(b <= a for a, b in zip(arr, arr[1:])):
                raise ValueError(f"{name} must be strictly ascending")
            sets.append(NatSet.from_iter(arr, bound=max(m, 0)))
        return cls.build(m, sets[0], sets[1])


def theorem11_pair(l: int) -> PartitionPair:
    """Two-point family: prefixes of length 2l+1 glued at offset 2^(2l+1)-2.

    m = 2^(2l+2) - 3; the overlap is {2^(2l+1)-2, 2^(2l+1)-1}.
    """
    _check_level(l)
    a = tm_prefix(2 * l + 1, TmClass.EVEN_ONES)
    b = tm_prefix(2 * l + 1, TmClass.ODD_ONES)
    t = (1 << (2 * l + 1)) - 2
    return PartitionPair.build((1 << (2 * l + 2)) - 3, a | shift(b, t), b | shift(a, t))


def remark12_pair(l: int) -> PartitionPair:
    """Odd-first two-point family at the same m = 2^(2l+2) - 3.

    Built by gluing the one-point pair to its own mirror image at offset
    2^(2l+1) - 1; the overlap is {2^(2l)-1, 2^(2l+1)+2^(2l)-2}.
    """
    _check_level(l)
    inner = theoremC_pair(l)
    t = (1 << (2 * l + 1)) - 1
    c = inner.C | shift(inner.D, t)
    d = inner.D | shift(inner.C, t)
    return PartitionPair.build((1 << (2 * l + 2)) - 3, c, d)


def theoremC_pair(l: int) -> PartitionPair:
    """One-point family: prefixes of length 2l glued at offset 2^(2l) - 1.

    m = 2^(2l+1) - 2; the overlap is the single point 2^(2l) - 1.
    """
    _check_level(l)
    a = tm_prefix(2 * l, TmClass.EVEN_ONES)
    b = tm_prefix(2 * l, TmClass.ODD_ONES)
    t = (1 << (2 * l)) - 1
    return PartitionPair.build((1 << (2 * l + 1)) - 2, a | shift(b, t), b | shift(a, t))


def dombi_pair(l: int) -> PartitionPair:
    """Disjoint split of [0, 2^l - 1] into the two digit-sum classes."""
    _check_level(l)
    return PartitionPair.build(
        (1 << l) - 1,
        tm_prefix(l, TmClass.EVEN_ONES),
        tm_prefix(l, TmClass.ODD_ONES),
    )
