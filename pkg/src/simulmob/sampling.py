"""Deterministic random sources: step lengths and initial node positions.

Reproducibility contract: every draw sequence is a pure function of
``(seed, stream)``. Batch runners hand sample ``k`` stream ``k``, so samples
reproduce the serial result no matter what order (or how many threads) they
execute in. A sampler instance itself is single-owner: share configs, never
streams.

The generator is a fixed PCG32, implemented here so that sequences survive
interpreter and library upgrades. Golden correctness tests replay recorded
datasets rather than pinning generator output, keeping the data contract
independent of this choice.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import Position, StepLength, ZoneLayout, check_layout

_MASK64 = (1 << 64) - 1
_PCG_MULTIPLIER = 6364136223846793005


class Pcg32:
    """PCG32 (XSH-RR, 64-bit state / 32-bit output) with a selectable stream.

    Port of the pcg_basic reference implementation; ``stream`` picks the
    sequence increment, so different streams from the same seed are
    independent sequences.
    """

    def __init__(self, seed: int, stream: int = 0):
        if not 0 <= seed < 1 << 64:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed}")
        if stream < 0:
            raise ValueError(f"stream must be non-negative, got {stream}")
        self._state = 0
        self._inc = ((stream << 1) | 1) & _MASK64
        self._next_u32()
        self._state = (self._state + seed) & _MASK64
        self._next_u32()

    def _next_u32(self) -> int:
        old = self._state
        self._state = (old * _PCG_MULTIPLIER + self._inc) & _MASK64
        xorshifted = (((old >> 18) ^ old) >> 27) & 0xFFFFFFFF
        rot = old >> 59
        return ((xorshifted >> rot) | (xorshifted << ((-rot) & 31))) & 0xFFFFFFFF

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer on the inclusive range [lo, hi], bias-free.

        Rejection sampling below the largest multiple of the range size, as
        in pcg32_boundedrand_r.
        """
        if hi < lo:
            raise ValueError(f"empty range [{lo}, {hi}]")
        bound = hi - lo + 1
        if bound == 1:
            return lo
        threshold = (1 << 32) % bound
        while True:
            r = self._next_u32()
            if r >= threshold:
                return lo + (r % bound)


@dataclass(frozen=True)
class SamplerConfig:
    """Seed, step bound, and zone geometry that fully determine a sampler."""

    seed: int
    max_step: int
    layout: ZoneLayout


@dataclass(frozen=True)
class ValidationReport:
    """Zero or more warnings about a sampler configuration."""

    warnings: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.warnings


def validate(config: SamplerConfig) -> ValidationReport:
    """Check a sampler configuration.

    Broken zone geometry, a negative step bound, or an out-of-range seed is
    a hard error. A step bound large enough to clear a whole zone in one
    move is only flagged as a warning: the small-range reference experiment
    runs with exactly that configuration, so it must stay legal.
    """
    check_layout(config.layout)
    if not 0 <= config.seed < 1 << 64:
        raise ValueError(f"seed must be a 64-bit unsigned integer, got {config.seed}")
    if config.max_step < 0:
        raise ValueError(f"max_step must be non-negative, got {config.max_step}")
    warnings = []
    narrowest = min(config.layout.zone0_width, config.layout.zone1_width)
    if config.max_step >= narrowest:
        warnings.append(
            f"step range >= zone width: max_step {config.max_step} can cross a "
            f"whole zone in one move (narrowest zone holds {narrowest} positions)"
        )
    return ValidationReport(tuple(warnings))


class Sampler:
    """Draws step lengths and initial positions from one private stream.

    Draw order matters for reproducibility: an independent trial draws the
    init positions first (MN_0, then MN_1), then the step.
    """

    def __init__(self, config: SamplerConfig, stream: int = 0):
        validate(config)
        self.config = config
        self.stream = stream
        self._rng = Pcg32(config.seed, stream)

    def draw_step(self) -> StepLength:
        """Uniform step length on the inclusive range [0, max_step]."""
        return self._rng.randint(0, self.config.max_step)

    def draw_init_positions(self) -> tuple[Position, Position]:
        """Fresh start positions, each uniform over its own zone (MN_0 first)."""
        layout = self.config.layout
        p0 = self._rng.randint(layout.zone0_lo, layout.zone0_hi)
        p1 = self._rng.randint(layout.zone1_lo, layout.zone1_hi)
        return p0, p1
