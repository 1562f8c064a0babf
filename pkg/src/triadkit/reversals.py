"""Triadic preference-reversal detection.

A pair (p, q) reverses in a triad when the dominance direction implied by
the triad's eigenvector contradicts the full matrix's eigenvector. The two
derived features are the proportion of reversal events out of 3*C(n,3)
possible and the largest reversal magnitude (ratio-of-ratios, always
expressed >= 1).
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from ._backend import kernels
from .eigen import PriorityResult, principal_eigen
from .errors import ValidationError
from .pcm import PCM


@dataclass(frozen=True)
class TriadRecord:
    triple: tuple[int, int, int]
    eigenvector: tuple[float, float, float]


@dataclass(frozen=True)
class ReversalEvent:
    pair: tuple[int, int]
    triad: tuple[int, int, int]
    full_ratio: float
    triad_ratio: float
    magnitude: float

    def to_json_dict(self) -> dict:
        return {
            "pair": list(self.pair),
            "triad": list(self.triad),
            "fullRatio": self.full_ratio,
            "triadRatio": self.triad_ratio,
            "magnitude": self.magnitude,
        }


@dataclass(frozen=True)
class ReversalReport:
    order: int
    events: tuple[ReversalEvent, ...]
    priorities: PriorityResult

    @property
    def count(self) -> int:
        return len(self.events)

    @property
    def max_possible(self) -> int:
        return 3 * comb(self.order, 3)

    @property
    def prop3rev(self) -> float:
        return self.count / self.max_possible

    @property
    def max3rev(self) -> float:
        if not self.events:
            return 1.0
        return max(e.magnitude for e in self.events)

    def to_json_dict(self) -> dict:
        return {
            "order": self.order,
            "count": self.count,
            "maxPossible": self.max_possible,
            "prop3Rev": self.prop3rev,
            "max3Rev": self.max3rev,
            "events": [e.to_json_dict() for e in self.events],
        }


def enumerate_triads(n: int) -> list[tuple[int, int, int]]:
    """All C(n,3) index triples in lexicographic order."""
    if n < 3:
        raise ValidationError(f"triad enumeration needs order >= 3, got {n}")
    return list(combinations(range(n), 3))


def triad_priority(pcm: PCM, triple: tuple[int, int, int]) -> TriadRecord:
    """Eigenvector of one order-3 submatrix."""
    res = principal_eigen(pcm.submatrix(triple))
    return TriadRecord(tuple(triple), res.eigenvector)


def detect_reversals(pcm: PCM) -> ReversalReport:
    """Scan every triad of the PCM for eigen-dominance reversals.

    Exactly consistent matrices short-circuit to zero events: every triad
    eigenvector is then proportional to the full one, and skipping the
    float path keeps solver noise from inventing events on tied priorities.
    """
    if pcm.is_consistent():
        pri = principal_eigen(pcm)
        return ReversalReport(pcm.order, (), pri)
    vec, lam, triads, pairs, frs, trs, mags = kernels.reversal_scan(pcm.as_float_array())
    pri = PriorityResult(tuple(float(x) for x in vec), float(lam))
    events = tuple(
        ReversalEvent(
            pair=(int(pairs[t, 0]), int(pairs[t, 1])),
            triad=(int(triads[t, 0]), int(triads[t, 1]), int(triads[t, 2])),
            full_ratio=float(frs[t]),
            triad_ratio=float(trs[t]),
            magnitude=float(mags[t]),
        )
        for t in range(len(mags))
    )
    return ReversalReport(pcm.order, events, pri)


def reversal_features(pcm: PCM) -> tuple[int, float, float]:
    """(order, prop3Rev, max3Rev) projection of detect_reversals."""
    report = detect_reversals(pcm)
    return report.order, report.prop3rev, report.max3rev
