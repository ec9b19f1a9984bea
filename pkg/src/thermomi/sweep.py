"""Parameter sweeps over temperature and coupling, and the random explorer.

Grid points are independent pure evaluations; records always come back in
ascending axis order, and identical specs produce identical records byte for
byte once serialized.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum
from typing import Sequence

import numpy as np

from .information import thermal_point
from .models import XYParams, random_bipartite, xy_hamiltonian

__all__ = [
    "VIOLATION_TOL",
    "SweepMode",
    "Spacing",
    "SweepSpec",
    "SweepRecord",
    "ExploreSummary",
    "sweep_axis",
    "evaluate_xy_point",
    "run_sweep",
    "fig1_suite",
    "explore_bound",
    "FIG1_FIELDS",
]

# A gap below -VIOLATION_TOL counts as a bound violation (an implementation
# bug: the inequality itself is proven).
VIOLATION_TOL = 1e-10

# Default grids: temperature beta^-1 in [0.1, 10] log-spaced, coupling
# g in [0, 5] linear. Both cover the low-temperature blow-up and the
# high-temperature convergence regime.
DEFAULT_TEMPERATURE_GRID = (0.1, 10.0, 200)
DEFAULT_COUPLING_GRID = (0.0, 5.0, 201)

FIG1_FIELDS = {"a": (0.5, 0.5), "b": (2.0, 2.0), "c": (3.0, 1.0)}


class SweepMode(Enum):
    TEMPERATURE = "temperature"
    COUPLING = "coupling"
    RANDOM_EXPLORE = "random-explore"


class Spacing(Enum):
    LINEAR = "linear"
    LOG = "log"


@dataclass(frozen=True)
class SweepSpec:
    """One-dimensional sweep description.

    In TEMPERATURE mode the axis is beta^-1 and ``params.g`` is held fixed;
    in COUPLING mode the axis is g and ``beta_inv`` is the fixed temperature.
    """

    mode: SweepMode
    params: XYParams
    axis_min: float
    axis_max: float
    points: int
    spacing: Spacing
    beta_inv: float = 1.0


@dataclass(frozen=True)
class SweepRecord:
    """All quantities of one grid point; field order matches the CSV schema."""

    beta_inv: float
    g: float
    b1: float
    b2: float
    mutual_info: float
    upper_bound: float
    gap: float
    s_a: float
    s_b: float
    s_ab: float
    e_total: float
    e_a: float
    e_b: float
    e_int: float
    log_z_a: float
    log_z_b: float
    log_z_ab: float


@dataclass(frozen=True)
class ExploreSummary:
    """Aggregate of the random bound-explorer battery."""

    d_a: int
    d_b: int
    samples: int
    interaction_scale: float
    seed: int
    beta_list: tuple[float, ...]
    violations: int
    gap_min: float
    gap_mean: float
    gap_max: float
    worst_seed: int
    mi_min: float
    mi_max: float


def _validate_spec(spec: SweepSpec) -> None:
    if spec.mode is SweepMode.RANDOM_EXPLORE:
        raise ValueError("random exploration has no grid axis; use explore_bound")
    if not (math.isfinite(spec.axis_min) and math.isfinite(spec.axis_max)):
        raise ValueError("axis bounds must be finite")
    if spec.axis_min >= spec.axis_max:
        raise ValueError(f"axis_min {spec.axis_min!r} must be below axis_max {spec.axis_max!r}")
    if spec.points < 2:
        raise ValueError(f"a sweep needs at least 2 points, got {spec.points}")
    if spec.spacing is Spacing.LOG and spec.axis_min <= 0.0:
        raise ValueError("log spacing requires axis_min > 0")
    if spec.mode is SweepMode.TEMPERATURE and spec.axis_min <= 0.0:
        raise ValueError("temperature sweeps require beta_inv > 0")
    if spec.mode is SweepMode.COUPLING:
        if not math.isfinite(spec.beta_inv) or spec.beta_inv <= 0.0:
            raise ValueError(f"fixed beta_inv must be positive, got {spec.beta_inv!r}")


def sweep_axis(spec: SweepSpec) -> np.ndarray:
    """Grid values for a spec; endpoints are exactly axis_min and axis_max."""
    _validate_spec(spec)
    if spec.spacing is Spacing.LOG:
        return np.geomspace(spec.axis_min, spec.axis_max, spec.points)
    return np.linspace(spec.axis_min, spec.axis_max, spec.points)


def evaluate_xy_point(params: XYParams, beta: float, beta_inv: float | None = None) -> SweepRecord:
    """Full evaluation of one XY-model grid point.

    ``beta_inv`` is recorded as given (so grid values serialize exactly);
    it defaults to 1/beta.
    """
    if beta_inv is None:
        beta_inv = math.inf if beta == 0.0 else 1.0 / beta
    report, eb = thermal_point(xy_hamiltonian(params), beta)
    return SweepRecord(
        beta_inv=float(beta_inv),
        g=params.g,
        b1=params.b1,
        b2=params.b2,
        mutual_info=report.mutual_info,
        upper_bound=report.upper_bound,
        gap=report.upper_bound - report.mutual_info,
        s_a=report.s_a,
        s_b=report.s_b,
        s_ab=report.s_ab,
        e_total=eb.e_total,
        e_a=eb.e_a,
        e_b=eb.e_b,
        e_int=eb.e_int,
        log_z_a=report.log_z_a,
        log_z_b=report.log_z_b,
        log_z_ab=report.log_z_ab,
    )


def run_sweep(spec: SweepSpec) -> list[SweepRecord]:
    """Evaluate a sweep, one record per grid point in ascending axis order."""
    axis = sweep_axis(spec)
    records = []
    if spec.mode is SweepMode.TEMPERATURE:
        for beta_inv in axis:
            records.append(
                evaluate_xy_point(spec.params, beta=1.0 / beta_inv, beta_inv=float(beta_inv))
            )
    else:
        beta = 1.0 / spec.beta_inv
        for g in axis:
            records.append(
                evaluate_xy_point(replace(spec.params, g=float(g)), beta, beta_inv=spec.beta_inv)
            )
    return records


def fig1_suite() -> dict[str, list[SweepRecord]]:
    """The six reference sweeps, labelled a-f.

    Panels a-c: temperature sweeps at g = 1 for fields (1/2, 1/2), (2, 2)
    and (3, 1). Panels d-f: coupling sweeps at beta^-1 = 1 for the same
    field pairs.
    """
    lo, hi, n = DEFAULT_TEMPERATURE_GRID
    glo, ghi, gn = DEFAULT_COUPLING_GRID
    suite: dict[str, list[SweepRecord]] = {}
    for label, (b1, b2) in FIG1_FIELDS.items():
        suite[label] = run_sweep(
            SweepSpec(
                mode=SweepMode.TEMPERATURE,
                params=XYParams(b1=b1, b2=b2, g=1.0),
                axis_min=lo,
                axis_max=hi,
                points=n,
                spacing=Spacing.LOG,
            )
        )
    for label, (b1, b2) in zip("def", FIG1_FIELDS.values()):
        suite[label] = run_sweep(
            SweepSpec(
                mode=SweepMode.COUPLING,
                params=XYParams(b1=b1, b2=b2, g=0.0),
                axis_min=glo,
                axis_max=ghi,
                points=gn,
                spacing=Spacing.LINEAR,
                beta_inv=1.0,
            )
        )
    return suite


def explore_bound(
    d_a: int,
    d_b: int,
    samples: int,
    beta_list: Sequence[float],
    interaction_scale: float,
    seed: int,
) -> ExploreSummary:
    """Stress the bound on random Gaussian-Hermitian models.

    Sample k uses seed ``seed + k``, so the worst case is replayable via
    ``random_bipartite(d_a, d_b, interaction_scale, worst_seed)``. Gap
    statistics run over all (sample, beta) pairs; anything below
    -VIOLATION_TOL counts as a violation.
    """
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")
    betas = tuple(float(b) for b in beta_list)
    if not betas:
        raise ValueError("beta_list must not be empty")
    for b in betas:
        if not math.isfinite(b) or b < 0.0:
            raise ValueError(f"beta values must be finite and >= 0, got {b!r}")

    gaps: list[float] = []
    mi_values: list[float] = []
    violations = 0
    worst_gap = math.inf
    worst_seed = seed
    for k in range(samples):
        sample_seed = seed + k
        bh = random_bipartite(d_a, d_b, interaction_scale, sample_seed)
        for beta in betas:
            report, _ = thermal_point(bh, beta)
            gap = report.upper_bound - report.mutual_info
            gaps.append(gap)
            mi_values.append(report.mutual_info)
            if gap < -VIOLATION_TOL:
                violations += 1
            if gap < worst_gap:
                worst_gap = gap
                worst_seed = sample_seed
    return ExploreSummary(
        d_a=d_a,
        d_b=d_b,
        samples=samples,
        interaction_scale=float(interaction_scale),
        seed=seed,
        beta_list=betas,
        violations=violations,
        gap_min=min(gaps),
        gap_mean=sum(gaps) / len(gaps),
        gap_max=max(gaps),
        worst_seed=worst_seed,
        mi_min=min(mi_values),
        mi_max=max(mi_values),
    )
