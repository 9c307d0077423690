"""Element-by-element reconstruction of the unique pair for (m, R).

Process n = 1..m keeping the running imbalance delta(n): pairs of already
placed elements summing to n, counted in C minus counted in D.  Because 0
always sits in C and never in D, the count for n gains exactly chi_C(n)
from the pair (0, n), so equality of the two counts at n forces the
placement of n outright:

  n in R         feasible only when delta(n) = -1 (n joins both sets)
  delta(n) = -1  n joins C
  delta(n) =  0  n joins D
  anything else  no pair exists for this (m, R)

The resulting candidate matches counts for every n <= m by construction;
the verifying wrapper then scans up to 2m and flags a tail failure at the
least diverging n beyond m.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from .constructions import PartitionPair
from .natset import NatSet
from .repfn import first_divergence


class SolveStatus(enum.Enum):
    SOLVED = "SOLVED"
    INFEASIBLE_AT = "INFEASIBLE_AT"
    TAIL_FAILURE = "TAIL_FAILURE"


@dataclass(frozen=True)
class TraceStep:
    n: int
    delta: int
    placed: str  # "C", "D" or "both"


@dataclass(frozen=True)
class SolveOutcome:
    status: SolveStatus
    pair: PartitionPair | None
    fail_at: int | None = None
    reason: str | None = None
    trace: tuple[TraceStep, ...] | None = None

    def to_json_dict(self, include_trace: bool = False) -> dict:
        out = {
            "status": self.status.value,
            "fail_at": self.fail_at,
            "reason": self.reason,
            "pair": self.pair.to_json_dict() if self.pair is not None else None,
        }
        if include_trace:
            out["trace"] = [
                {"n": t.n, "delta": t.delta, "placed": t.placed}
                for t in (self.trace or ())
            ]
        return out


def _as_natset(r: NatSet | Iterable[int], m: int) -> NatSet:
    if isinstance(r, NatSet):
        return r.rebound(max(m, r.bound))
    return NatSet.from_iter(r, bound=m)


def determinize(
    m: int, r: NatSet | Iterable[int], record_trace: bool = False
) -> SolveOutcome:
    """Force the unique candidate for intersection r, checking n <= m only."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    rset = _as_natset(r, m)
    if 0 in rset:
        raise ValueError("0 cannot be an intersection element (0 is in C only)")
    top = rset.max_element
    if top is not None and top > m:
        raise ValueError(f"intersection element {top} exceeds m = {m}")

    chi_c = bytearray(m + 1)
    chi_d = bytearray(m + 1)
    chi_c[0] = 1
    delta = [0] * (m + 1)
    trace: list[TraceStep] = []

    for n in range(1, m + 1):
        d = delta[n]
        if n in rset:
            if d != -1:
                return SolveOutcome(
                    SolveStatus.INFEASIBLE_AT,
                    None,
                    fail_at=n,
                    reason=f"delta {d} at intersection element {n}, need -1",
                    trace=tuple(trace) if record_trace else None,
                )
            chi_c[n] = 1
            chi_d[n] = 1
            placed = "both"
        elif d == -1:
            chi_c[n] = 1
            placed = "C"
        elif d == 0:
            chi_d[n] = 1
            placed = "D"
        else:
            return SolveOutcome(
                SolveStatus.INFEASIBLE_AT,
                None,
                fail_at=n,
                reason=f"delta {d} at {n} admits neither side",
                trace=tuple(trace) if record_trace else None,
            )
        if record_trace:
            trace.append(TraceStep(n, d, placed))
        # Fold the pairs (e, n) into the imbalance of the future sums e + n.
        cc, cd = chi_c[n], chi_d[n]
        for e in range(min(n - 1, m - n) + 1):
            delta[n + e] += cc * chi_c[e] - cd * chi_d[e]

    c_bits = int("".join("1" if chi_c[i] else "0" for i in range(m, -1, -1)), 2)
    d_bits = int("".join("1" if chi_d[i] else "0" for i in range(m, -1, -1)), 2)
    pair = PartitionPair.build(m, NatSet(c_bits, m), NatSet(d_bits, m))
    return SolveOutcome(
        SolveStatus.SOLVED, pair, trace=tuple(trace) if record_trace else None
    )


def solve_and_verify(
    m: int, r: NatSet | Iterable[int], record_trace: bool = False
) -> SolveOutcome:
    """Determinize, then scan the tail: counts must agree through 2m."""
    outcome = determinize(m, r, record_trace=record_trace)
    if outcome.status is not SolveStatus.SOLVED:
        return outcome
    assert outcome.pair is not None
    bad = first_divergence(outcome.pair.C, outcome.pair.D, 2 * m)
    if bad is not None:
        return SolveOutcome(
            SolveStatus.TAIL_FAILURE,
            outcome.pair,
            fail_at=bad,
            reason=f"counts diverge at n = {bad} > m",
            trace=outcome.trace,
        )
    return outcome
