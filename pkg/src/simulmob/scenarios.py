"""Experiment shapes and preset parameterizations.

Two shapes exist:

* independent trials: every trial draws fresh initial positions and one
  shared step, applies a single simultaneous move, and classifies it;
  a scenario is ``samples`` batches of ``runs_per_sample`` trials.
* sequential runs: both nodes start from fixed positions and keep moving
  with freshly drawn shared steps until the first crossing by either node
  (or a step cap).

Each sample (or run) owns a private substream, so samples may run in any
order, or in parallel, without changing results.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .model import MoveRecord, Outcome, ZoneLayout, check_layout, classify
from .sampling import Sampler, SamplerConfig, validate
from .stats import Tally, tally


@dataclass(frozen=True)
class IndependentTrialConfig:
    """Fresh-inits shape: samples x runs_per_sample one-move trials."""

    sampler: SamplerConfig
    runs_per_sample: int = 30
    samples: int = 30

    def __post_init__(self):
        if self.runs_per_sample < 1:
            raise ValueError(f"runs_per_sample must be >= 1, got {self.runs_per_sample}")
        if self.samples < 1:
            raise ValueError(f"samples must be >= 1, got {self.samples}")


@dataclass(frozen=True)
class SequentialConfig:
    """Chained-moves shape: runs walks from fixed starts to first crossing."""

    sampler: SamplerConfig
    mn0_start: int
    mn1_start: int
    runs: int = 30
    max_steps_cap: int = 10_000

    def __post_init__(self):
        layout = self.sampler.layout
        if not layout.zone0_lo <= self.mn0_start <= layout.zone0_hi:
            raise ValueError(
                f"mn0_start {self.mn0_start} outside zone0 "
                f"{layout.zone0_lo}:{layout.zone0_hi}"
            )
        if not layout.zone1_lo <= self.mn1_start <= layout.zone1_hi:
            raise ValueError(
                f"mn1_start {self.mn1_start} outside zone1 "
                f"{layout.zone1_lo}:{layout.zone1_hi}"
            )
        if self.runs < 1:
            raise ValueError(f"runs must be >= 1, got {self.runs}")
        if self.max_steps_cap < 1:
            raise ValueError(f"max_steps_cap must be >= 1, got {self.max_steps_cap}")


@dataclass(frozen=True)
class SequentialRun:
    """One chained walk: all moves taken, ended by crossing or cap."""

    records: tuple[MoveRecord, ...]
    terminal: Outcome
    steps_taken: int
    timed_out: bool

    @property
    def final_positions(self) -> tuple[int, int]:
        last = self.records[-1]
        return (last.mn0_new, last.mn1_new)


@dataclass(frozen=True)
class SampleResult:
    """One sample of an independent-trial scenario."""

    sample: int
    tally: Tally
    records: tuple[MoveRecord, ...]
    outcomes: tuple[Outcome, ...]


def run_independent_trial(
    sampler: Sampler, layout: ZoneLayout
) -> tuple[MoveRecord, Outcome]:
    """One trial: fresh inits, one shared step, one simultaneous move."""
    mn0_init, mn1_init = sampler.draw_init_positions()
    step = sampler.draw_step()
    rec = MoveRecord.from_inits(mn0_init, mn1_init, step)
    return rec, classify(rec, layout)


def run_independent_scenario(config: IndependentTrialConfig) -> list[SampleResult]:
    """Run all samples; sample k draws from substream k."""
    validate(config.sampler)
    layout = config.sampler.layout
    results = []
    for k in range(config.samples):
        sampler = Sampler(config.sampler, stream=k)
        records = []
        outcomes = []
        for _ in range(config.runs_per_sample):
            rec, outcome = run_independent_trial(sampler, layout)
            records.append(rec)
            outcomes.append(outcome)
        results.append(
            SampleResult(k, tally(outcomes), tuple(records), tuple(outcomes))
        )
    return results


def run_sequential(sampler: Sampler, config: SequentialConfig) -> SequentialRun:
    """Walk from the fixed starts until the first crossing or the cap.

    Timing out is a result (timed_out=True, terminal NoOverlap), not an
    error.
    """
    layout = config.sampler.layout
    mn0, mn1 = config.mn0_start, config.mn1_start
    records: list[MoveRecord] = []
    for _ in range(config.max_steps_cap):
        rec = MoveRecord.from_inits(mn0, mn1, sampler.draw_step())
        records.append(rec)
        outcome = classify(rec, layout)
        if outcome is not Outcome.NO_OVERLAP:
            return SequentialRun(tuple(records), outcome, len(records), False)
        mn0, mn1 = rec.mn0_new, rec.mn1_new
    return SequentialRun(tuple(records), Outcome.NO_OVERLAP, len(records), True)


def run_sequential_scenario(
    config: SequentialConfig,
) -> tuple[Tally, list[SequentialRun]]:
    """Run all walks; run j draws from substream j. Tally terminal outcomes.

    Timed-out runs count as no_overlap in the tally.
    """
    validate(config.sampler)
    runs = [
        run_sequential(Sampler(config.sampler, stream=j), config)
        for j in range(config.runs)
    ]
    return tally(run.terminal for run in runs), runs


def replay_independent(
    records: Sequence[MoveRecord], layout: ZoneLayout
) -> tuple[Tally, list[Outcome]]:
    """Classify pre-recorded independent trials under a layout."""
    check_layout(layout)
    outcomes = [classify(rec, layout) for rec in records]
    return tally(outcomes), outcomes


def replay_sequential(
    records: Sequence[MoveRecord], layout: ZoneLayout
) -> SequentialRun:
    """Re-run a recorded chained walk, validating the chain as it goes.

    Raises ValueError when consecutive rows do not chain or when rows
    continue past the first crossing.
    """
    check_layout(layout)
    if not records:
        raise ValueError("sequential replay needs at least one record")
    seen: list[MoveRecord] = []
    for i, rec in enumerate(records):
        if seen:
            prev = seen[-1]
            if (rec.mn0_init, rec.mn1_init) != (prev.mn0_new, prev.mn1_new):
                raise ValueError(
                    f"row {i + 1} inits ({rec.mn0_init}, {rec.mn1_init}) do not "
                    f"chain from row {i} finals ({prev.mn0_new}, {prev.mn1_new})"
                )
        seen.append(rec)
        outcome = classify(rec, layout)
        if outcome is not Outcome.NO_OVERLAP:
            if i + 1 != len(records):
                raise ValueError(
                    f"rows continue past the first crossing at row {i + 1}"
                )
            return SequentialRun(tuple(seen), outcome, len(seen), False)
    return SequentialRun(tuple(seen), Outcome.NO_OVERLAP, len(seen), True)


def preset(scenario_id: int, seed: int = 0) -> IndependentTrialConfig | SequentialConfig:
    """Compiled-in parameterizations of the three reference scenarios."""
    if scenario_id == 1:
        layout = ZoneLayout(0, 374, 376, 750, 375)
        return IndependentTrialConfig(SamplerConfig(seed, 50, layout), 30, 30)
    if scenario_id == 2:
        layout = ZoneLayout(50, 99, 101, 150, 100)
        return IndependentTrialConfig(SamplerConfig(seed, 50, layout), 30, 30)
    if scenario_id == 3:
        layout = ZoneLayout(0, 249, 251, 500, 250)
        return SequentialConfig(
            SamplerConfig(seed, 50, layout),
            mn0_start=10,
            mn1_start=500,
            runs=30,
            max_steps_cap=10_000,
        )
    raise ValueError(f"unknown scenario id {scenario_id}; known ids are 1, 2, 3")


_SAMPLER_KEYS = {"seed", "max_step", "layout"}
_LAYOUT_KEYS = {"zone0_lo", "zone0_hi", "zone1_lo", "zone1_hi", "brink"}
_INDEPENDENT_KEYS = {"sampler", "runs_per_sample", "samples"}
_SEQUENTIAL_KEYS = {"sampler", "mn0_start", "mn1_start", "runs", "max_steps_cap"}


def _require_int(doc: dict, key: str, what: str) -> int:
    if key not in doc:
        raise ValueError(f"{what} is missing key {key!r}")
    value = doc[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"{what} key {key!r} must be an integer, got {value!r}")
    return value


def _sampler_from_dict(doc: dict) -> SamplerConfig:
    if not isinstance(doc, dict):
        raise ValueError(f"sampler must be an object, got {doc!r}")
    unknown = set(doc) - _SAMPLER_KEYS
    if unknown:
        raise ValueError(f"sampler has unknown keys {sorted(unknown)}")
    layout_doc = doc.get("layout")
    if not isinstance(layout_doc, dict):
        raise ValueError("sampler.layout must be an object")
    unknown = set(layout_doc) - _LAYOUT_KEYS
    if unknown:
        raise ValueError(f"layout has unknown keys {sorted(unknown)}")
    layout = ZoneLayout(
        _require_int(layout_doc, "zone0_lo", "layout"),
        _require_int(layout_doc, "zone0_hi", "layout"),
        _require_int(layout_doc, "zone1_lo", "layout"),
        _require_int(layout_doc, "zone1_hi", "layout"),
        _require_int(layout_doc, "brink", "layout"),
    )
    return SamplerConfig(
        _require_int(doc, "seed", "sampler"),
        _require_int(doc, "max_step", "sampler"),
        layout,
    )


def config_from_dict(doc: dict) -> IndependentTrialConfig | SequentialConfig:
    """Build a scenario config from a JSON-style dict (field names mirror
    the config dataclasses; the shape is inferred from which fields appear).
    """
    if not isinstance(doc, dict):
        raise ValueError(f"config document must be an object, got {doc!r}")
    keys = set(doc)
    sequential_markers = keys & {"mn0_start", "mn1_start"}
    independent_markers = keys & {"runs_per_sample", "samples"}
    if sequential_markers and independent_markers:
        raise ValueError(
            "config mixes independent-trial and sequential fields: "
            f"{sorted(independent_markers | sequential_markers)}"
        )
    if sequential_markers:
        unknown = keys - _SEQUENTIAL_KEYS
        if unknown:
            raise ValueError(f"config has unknown keys {sorted(unknown)}")
        return SequentialConfig(
            _sampler_from_dict(doc.get("sampler", {})),
            mn0_start=_require_int(doc, "mn0_start", "config"),
            mn1_start=_require_int(doc, "mn1_start", "config"),
            runs=_require_int(doc, "runs", "config") if "runs" in doc else 30,
            max_steps_cap=(
                _require_int(doc, "max_steps_cap", "config")
                if "max_steps_cap" in doc
                else 10_000
            ),
        )
    unknown = keys - _INDEPENDENT_KEYS
    if unknown:
        raise ValueError(f"config has unknown keys {sorted(unknown)}")
    return IndependentTrialConfig(
        _sampler_from_dict(doc.get("sampler", {})),
        runs_per_sample=(
            _require_int(doc, "runs_per_sample", "config")
            if "runs_per_sample" in doc
            else 30
        ),
        samples=_require_int(doc, "samples", "config") if "samples" in doc else 30,
    )


def config_to_dict(config: IndependentTrialConfig | SequentialConfig) -> dict:
    """Inverse of config_from_dict (stable key order)."""
    layout = config.sampler.layout
    doc: dict = {
        "sampler": {
            "seed": config.sampler.seed,
            "max_step": config.sampler.max_step,
            "layout": {
                "zone0_lo": layout.zone0_lo,
                "zone0_hi": layout.zone0_hi,
                "zone1_lo": layout.zone1_lo,
                "zone1_hi": layout.zone1_hi,
                "brink": layout.brink,
            },
        }
    }
    if isinstance(config, SequentialConfig):
        doc["mn0_start"] = config.mn0_start
        doc["mn1_start"] = config.mn1_start
        doc["runs"] = config.runs
        doc["max_steps_cap"] = config.max_steps_cap
    else:
        doc["runs_per_sample"] = config.runs_per_sample
        doc["samples"] = config.samples
    return doc
