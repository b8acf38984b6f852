"""Outcome tallies, crossing estimators, and the exact enumeration oracle.

Pure functions throughout. The enumeration oracle deliberately walks the
full (init, step) grid instead of using a closed form so it stays an
independent check on both the samplers and the estimators.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from statistics import fmean
from typing import Iterable, Sequence

from .model import Outcome, ZoneLayout, check_layout

# Canonical column set of the printed result tables, in printing order.
METRIC_LABELS = (
    "MN_0 overlaps",
    "MN_0 handover",
    "MN_1 overlaps",
    "MN_1 handover",
    "Simultaneous overlap",
    "No overlap",
    "Simultaneous Handover",
)


@dataclass(frozen=True)
class Tally:
    """Aggregated outcome counts for a batch of moves.

    Only the four disjoint outcome counts are stored; the derived totals are
    properties, so the identities

        mn0_handover == mn0_only + simultaneous
        mn1_handover == mn1_only + simultaneous
        trials == mn0_only + mn1_only + simultaneous + no_overlap

    hold for every Tally by construction.
    """

    mn0_only: int = 0
    mn1_only: int = 0
    simultaneous: int = 0
    no_overlap: int = 0

    @property
    def trials(self) -> int:
        return self.mn0_only + self.mn1_only + self.simultaneous + self.no_overlap

    @property
    def mn0_handover(self) -> int:
        """Moves on which MN_0 crossed, alone or simultaneously."""
        return self.mn0_only + self.simultaneous

    @property
    def mn1_handover(self) -> int:
        """Moves on which MN_1 crossed, alone or simultaneously."""
        return self.mn1_only + self.simultaneous

    @property
    def overlap_events(self) -> int:
        """Moves on which at least one node crossed (a simultaneous move counts once)."""
        return self.trials - self.no_overlap

    def __add__(self, other: "Tally") -> "Tally":
        return Tally(
            self.mn0_only + other.mn0_only,
            self.mn1_only + other.mn1_only,
            self.simultaneous + other.simultaneous,
            self.no_overlap + other.no_overlap,
        )

    def columns(self) -> tuple[int, ...]:
        """Counts in METRIC_LABELS order."""
        return (
            self.mn0_only,
            self.mn0_handover,
            self.mn1_only,
            self.mn1_handover,
            self.simultaneous,
            self.no_overlap,
            self.simultaneous,
        )

    def as_dict(self) -> dict:
        return {
            "mn0_only": self.mn0_only,
            "mn1_only": self.mn1_only,
            "simultaneous": self.simultaneous,
            "no_overlap": self.no_overlap,
            "trials": self.trials,
            "mn0_handover": self.mn0_handover,
            "mn1_handover": self.mn1_handover,
        }


def tally(outcomes: Iterable[Outcome]) -> Tally:
    """Count each outcome variant of a batch."""
    counts = Counter(outcomes)
    return Tally(
        mn0_only=counts[Outcome.MN0_OVERLAP],
        mn1_only=counts[Outcome.MN1_OVERLAP],
        simultaneous=counts[Outcome.SIMULTANEOUS_OVERLAP],
        no_overlap=counts[Outcome.NO_OVERLAP],
    )


def average_step_length(steps: Sequence[float]) -> float:
    """Arithmetic mean of a batch of step lengths. Errors on an empty batch."""
    if not steps:
        raise ValueError("average step length of an empty batch is undefined")
    return fmean(steps)


def expected_steps_to_cross(zone_span: float, avg_step: float) -> float:
    """Coarse estimate of the moves a node needs to cross its zone: span / mean step."""
    if avg_step <= 0:
        raise ValueError(f"avg_step must be positive, got {avg_step}")
    return zone_span / avg_step


def expected_crossings(trials: int, zone_span: float, avg_step: float) -> float:
    """Crossings the coarse estimator predicts for a batch.

    trials / (span / mean step), i.e. trials * avg_step / zone_span.
    """
    if zone_span <= 0:
        raise ValueError(f"zone_span must be positive, got {zone_span}")
    if avg_step <= 0:
        raise ValueError(f"avg_step must be positive, got {avg_step}")
    return trials * avg_step / zone_span


def exact_crossing_probability(
    layout: ZoneLayout, max_step: int, node: int
) -> Fraction:
    """Exact per-trial crossing probability by full enumeration.

    Walks every (init, step) pair with init in the node's zone and step in
    [0, max_step], counting the pairs whose move touches or passes the
    brink. Exact rational result; independent of the sampler and estimator
    code paths, so it serves as their oracle.
    """
    check_layout(layout)
    if max_step < 0:
        raise ValueError(f"max_step must be non-negative, got {max_step}")
    if node == 0:
        inits = range(layout.zone0_lo, layout.zone0_hi + 1)
    elif node == 1:
        inits = range(layout.zone1_lo, layout.zone1_hi + 1)
    else:
        raise ValueError(f"node must be 0 or 1, got {node}")
    favorable = 0
    total = 0
    for init in inits:
        for step in range(max_step + 1):
            total += 1
            if node == 0:
                if init + step >= layout.brink:
                    favorable += 1
            else:
                if init - step <= layout.brink:
                    favorable += 1
    return Fraction(favorable, total)


@dataclass(frozen=True)
class EstimateReport:
    """Crossing estimates for one batch, alongside what was observed.

    ``exact_probability`` is the node-0 enumeration value when available
    (the bundled presets are brink-symmetric, so node 1's equals it).
    """

    avg_step: float
    expected_steps_to_cross: float
    expected_crossings: float
    observed_crossings: int
    exact_probability: Fraction | None = None


@dataclass(frozen=True)
class ComparisonReport:
    """Estimated vs observed crossing counts; reporting only, no verdict."""

    expected: float
    observed: int
    absolute_difference: float
    relative_difference: float


def compare(estimate: EstimateReport, batch: Tally) -> ComparisonReport:
    """Set the estimator's crossing count against the batch's overlap events."""
    expected = estimate.expected_crossings
    observed = batch.overlap_events
    absolute = abs(observed - expected)
    if expected != 0:
        relative = absolute / expected
    else:
        relative = 0.0 if absolute == 0 else math.inf
    return ComparisonReport(expected, observed, absolute, relative)
