"""Exact integer polynomials and the generating-function checks.

The characteristic polynomial of a set S is p_S(x) = sum of x^i over members
i.  Squaring it encodes pair counts: p(x)^2 - p(x^2) = 2 * sum_n R(n) x^n,
which is an algebraic identity for every finite S.  For a partition pair
with a two-point overlap {r1, r2} there are two further identities, checked
coefficientwise here with no division anywhere:

  linear     p_D = (1 + x + ... + x^m) - p_C + x^r1 + x^r2
             (holds for every structurally valid pair), and
  quadratic  2 p_C(x^2) = (1 + x^2 + ... + x^2m) + 2 p_C x^r1 + 2 p_C x^r2
             + 2 p_C g - g^2 - 2 x^r1 g - 2 x^r2 g - 2 x^(r1+r2),
             with g = 1 + x + ... + x^m
             (holds exactly when the two profiles agree everywhere).

Window recurrences on the characteristic function of C, derived from
coefficient comparisons in the quadratic identity, are exposed as probes
that report HOLDS / FAILS inside their validity window and NOT_APPLICABLE
outside it (the window can be empty for genuine solutions).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from .constructions import PartitionPair
from .natset import NatSet
from .repfn import first_divergence, rep_profile


class IntPoly:
    """Dense univariate polynomial with exact integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[int, ...] = tuple(cs)

    @property
    def degree(self) -> int:
        """Highest exponent with a nonzero coefficient; -1 for the zero poly."""
        return len(self.coeffs) - 1

    def coefficient(self, i: int) -> int:
        if i < 0:
            raise ValueError(f"exponent must be nonnegative, got {i}")
        return self.coeffs[i] if i < len(self.coeffs) else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __neg__(self) -> "IntPoly":
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other: "IntPoly | int") -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        if not (self.coeffs and other.coeffs):
            return IntPoly()
        return IntPoly(_convolve(self.coeffs, other.coeffs))

    def __rmul__(self, other: int) -> "IntPoly":
        return self * other

    def stretch(self, k: int) -> "IntPoly":
        """Substitute x^k for x (exponents multiplied by k)."""
        if k < 1:
            raise ValueError(f"stretch factor must be positive, got {k}")
        if not self.coeffs:
            return IntPoly()
        out = [0] * ((len(self.coeffs) - 1) * k + 1)
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return IntPoly(out)

    @staticmethod
    def x_pow(k: int) -> "IntPoly":
        return IntPoly([0] * k + [1])

    @staticmethod
    def geometric(terms: int, step: int = 1) -> "IntPoly":
        """1 + x^step + ... + x^(step*(terms-1))."""
        if terms < 0:
            raise ValueError(f"term count must be nonnegative, got {terms}")
        out = [0] * (max(terms - 1, 0) * step + 1)
        for i in range(terms):
            out[i * step] = 1
        return IntPoly(out) if terms else IntPoly()


def _pack_mul(a: list[int], b: list[int], width: int) -> list[int]:
    """Convolve two nonnegative coefficient lists via one big-int product."""
    pa = 0
    for i, c in enumerate(a):
        pa |= c << (i * width)
    pb = 0
    for i, c in enumerate(b):
        pb |= c << (i * width)
    prod = pa * pb
    mask = (1 << width) - 1
    return [(prod >> (i * width)) & mask for i in range(len(a) + len(b) - 1)]


def _convolve(a: tuple[int, ...], b: tuple[int, ...]) -> list[int]:
    # Split signs so each packed product stays carry-free, then recombine.
    ap = [max(c, 0) for c in a]
    an = [max(-c, 0) for c in a]
    bp = [max(c, 0) for c in b]
    bn = [max(-c, 0) for c in b]
    bound = max(map(abs, a)) * max(map(abs, b)) * min(len(a), len(b)) + 1
    width = bound.bit_length()
    out = [0] * (len(a) + len(b) - 1)
    for xs, ys, sign in ((ap, bp, 1), (an, bn, 1), (ap, bn, -1), (an, bp, -1)):
        if any(xs) and any(ys):
            for i, c in enumerate(_pack_mul(xs, ys, width)):
                out[i] += sign * c
    return out


def char_poly(s: NatSet) -> IntPoly:
    """0/1 polynomial whose exponent-i coefficient marks membership of i."""
    if s.is_empty:
        return IntPoly()
    return IntPoly(((s.bits >> i) & 1) for i in range(s.bits.bit_length()))


def check_identity_33(s: NatSet, degree: int) -> bool:
    """Universal self-convolution identity, coefficientwise through degree.

    p(x)^2 - p(x^2) must equal twice the pair-count series of s; degree has
    to cover both sides, i.e. be at least twice the largest member.
    """
    if degree < 1:
        raise ValueError(f"degree must be positive, got {degree}")
    top = s.max_element or 0
    if degree < 2 * top:
        raise ValueError(f"degree {degree} below 2 * max(S) = {2 * top}")
    p = char_poly(s)
    lhs = p * p - p.stretch(2)
    rhs = IntPoly(2 * c for c in rep_profile(s, degree).counts)
    return lhs == rhs


def _first_mismatch(p: IntPoly, q: IntPoly, through: int) -> int | None:
    for i in range(through + 1):
        if p.coefficient(i) != q.coefficient(i):
            return i
    return None


@dataclass(frozen=True)
class PairIdentityReport:
    """Outcome of both two-point-pair identities, with first failing exponent."""

    m: int
    intersection: tuple[int, int]
    linear_ok: bool
    linear_fail_at: int | None
    quadratic_ok: bool
    quadratic_fail_at: int | None

    @property
    def all_hold(self) -> bool:
        return self.linear_ok and self.quadratic_ok

    def to_json_dict(self) -> dict:
        return {
            "m": self.m,
            "intersection": list(self.intersection),
            "linear": {"holds": self.linear_ok, "fail_at": self.linear_fail_at},
            "quadratic": {
                "holds": self.quadratic_ok,
                "fail_at": self.quadratic_fail_at,
            },
        }


def check_pair_identities(pair: PartitionPair) -> PairIdentityReport:
    """Check the linear and quadratic identities for a two-point pair.

    Rational expressions are expanded as finite geometric sums up front, so
    the whole comparison runs in integer coefficients through 2m + 2.
    """
    r1, r2 = pair.two_points()
    m = pair.m
    through = 2 * m + 2
    p_c = char_poly(pair.C)
    p_d = char_poly(pair.D)
    geo = IntPoly.geometric(m + 1)
    geo2 = IntPoly.geometric(m + 1, step=2)
    xr1 = IntPoly.x_pow(r1)
    xr2 = IntPoly.x_pow(r2)

    lin_rhs = geo - p_c + xr1 + xr2
    lin_fail = _first_mismatch(p_d, lin_rhs, through)

    quad_lhs = 2 * p_c.stretch(2)
    quad_rhs = (
        geo2
        + 2 * (p_c * xr1)
        + 2 * (p_c * xr2)
        + 2 * (p_c * geo)
        - geo * geo
        - 2 * (xr1 * geo)
        - 2 * (xr2 * geo)
        - 2 * IntPoly.x_pow(r1 + r2)
    )
    quad_fail = _first_mismatch(quad_lhs, quad_rhs, through)

    return PairIdentityReport(
        m=m,
        intersection=(r1, r2),
        linear_ok=lin_fail is None,
        linear_fail_at=lin_fail,
        quadratic_ok=quad_fail is None,
        quadratic_fail_at=quad_fail,
    )


class ChiRecurrence(enum.Enum):
    """The three coefficient-comparison recurrences on chi_C at even k."""

    R37 = "R37"
    R39 = "R39"
    R310 = "R310"


class ProbeOutcome(enum.Enum):
    HOLDS = "HOLDS"
    FAILS = "FAILS"
    NOT_APPLICABLE = "NOT_APPLICABLE"


def _require_equal_profiles(pair: PartitionPair) -> None:
    bad = first_divergence(pair.C, pair.D, 2 * pair.m)
    if bad is not None:
        raise ValueError(f"pair profiles diverge at n = {bad}")


def chi_probe(pair: PartitionPair, which: ChiRecurrence, k: int) -> ProbeOutcome:
    """Evaluate one chi recurrence at even k, if k is inside its window.

    R37 needs r1 <= k < k+1 < min(r2, 2 r1) <= m; R39 and R310 need
    r2 < k < k+1 < 2 r1 together with r1 + r2 <= m.  Outside the window the
    probe is NOT_APPLICABLE rather than an error, because the window is
    legitimately empty when r2 = r1 + 1.
    """
    if k % 2 != 0:
        raise ValueError(f"probe point must be even, got {k}")
    _require_equal_profiles(pair)
    r1, r2 = pair.two_points()
    m = pair.m
    chi = pair.C.chi
    if which is ChiRecurrence.R37:
        lo = min(r2, 2 * r1)
        if not (r1 <= k and k + 1 < lo and lo <= m):
            return ProbeOutcome.NOT_APPLICABLE
        rhs = chi(k - r1) - chi(k + 1 - r1) - chi(k + 1) + 1
    else:
        if not (r2 < k and k + 1 < 2 * r1 and r1 + r2 <= m):
            return ProbeOutcome.NOT_APPLICABLE
        if which is ChiRecurrence.R39:
            rhs = chi(k - r1) - chi(k - 1 - r2) + chi(k)
        else:
            rhs = chi(k - r2) - chi(k + 1 - r1) - chi(k + 1) + 1
    return ProbeOutcome.HOLDS if chi(k // 2) == rhs else ProbeOutcome.FAILS


def chi_probe_window(pair: PartitionPair, which: ChiRecurrence) -> list[int]:
    """All even k for which chi_probe would actually evaluate."""
    r1, r2 = pair.two_points()
    m = pair.m
    if which is ChiRecurrence.R37:
        lo = min(r2, 2 * r1)
        if lo > m:
            return []
        lo_k, hi_k = r1, lo - 2
    else:
        if r1 + r2 > m:
            return []
        lo_k, hi_k = r2 + 1, 2 * r1 - 2
    return [k for k in range(lo_k, hi_k + 1) if k % 2 == 0]


def check_half_r1(pair: PartitionPair) -> bool:
    """Whether r1/2 belongs to C; needs equal profiles, even r1, r1+r2 <= m."""
    _require_equal_profiles(pair)
    r1, r2 = pair.two_points()
    if r1 % 2 != 0:
        raise ValueError(f"r1 must be even, got {r1}")
    if r1 + r2 > pair.m:
        raise ValueError(f"r1 + r2 = {r1 + r2} exceeds m = {pair.m}")
    return (r1 // 2) in pair.C
