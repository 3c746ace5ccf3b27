"""Desk-scale complexity measurements.

Two experiments:

* scaling — time a procedure across a grid of alternative counts at fixed
  criterion count and fit a power law; score rules should come out near
  linear in the alternative count, pairwise-matrix rules near quadratic.
* groups — time representative two-stage rules from each expected runtime
  group (:func:`twostage.catalog.classify_group`) on one large profile and
  compare the groups.

Measurements auto-repeat fast calls until they are long enough to time
reliably and take the median of several trials.  Exceeding a time budget
stops the grid early and flags the result as partial rather than failing.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from .catalog import classify_group, compose
from .procedures import make_procedure
from .profiles import Profile, default_labels

__all__ = [
    "generate_profile",
    "measure_call",
    "BenchPoint",
    "BenchResult",
    "run_scaling",
    "GroupRow",
    "GroupReport",
    "run_groups",
    "GROUP_REPRESENTATIVES",
    "SET_ENUMERATION_LIMIT",
    "scaling_report",
]

# Stable-set enumeration walks subsets; beyond this many alternatives a
# measurement would not finish at desk scale.
SET_ENUMERATION_LIMIT = 60
_SET_ENUMERATION_PROCS = frozenset({14, 21})

# Default size grid for scaling fits.  The floor sits at 1000 alternatives:
# below that, the fixed per-call dispatch cost (~10us) is a large fraction of
# a counting procedure's total time and flattens the fitted exponent.
DEFAULT_M_GRID = (1000, 2000, 3000, 4000, 6000, 8000)


def generate_profile(m: int, n: int, seed: int) -> Profile:
    """Uniform random profile: n independent random orders over m labels."""
    rng = np.random.default_rng(seed)
    labels = default_labels(m)
    ranks = np.stack([rng.permutation(m) for _ in range(n)])
    return Profile.from_ranks(labels, ranks)


def measure_call(fn: Callable[[], object], *, trials: int = 3, min_time: float = 0.01) -> float:
    """Best (minimum) wall time of ``fn`` over ``trials``, after one unmeasured
    warm-up call, auto-repeating calls that finish faster than ``min_time`` so
    the clock resolution cannot dominate.  The minimum is the right estimator
    here: scheduler and frequency-scaling noise only ever add time."""
    fn()
    best = math.inf
    repeat = 1
    for _ in range(trials):
        while True:
            start = time.perf_counter()
            for _ in range(repeat):
                fn()
            elapsed = time.perf_counter() - start
            if elapsed >= min_time or repeat >= 1 << 20:
                best = min(best, elapsed / repeat)
                break
            repeat *= 2
    return best


@dataclass(frozen=True)
class BenchPoint:
    m: int
    n: int
    seconds: float

    def __post_init__(self):
        if self.seconds <= 0:
            raise ValueError("measured times must be positive")


@dataclass(frozen=True)
class BenchResult:
    """A scaling run: measured grid points plus a power-law fit.

    ``exponent`` is the slope of the least-squares line through
    (log m, log t) over points with m > 1; ``residual`` is the root mean
    squared log-error of that line.  A fit requires at least five usable
    points — with fewer (for example after a budget stop) the result is
    ``partial`` and carries no exponent.
    """

    name: str
    points: tuple[BenchPoint, ...]
    exponent: float | None
    residual: float | None
    partial: bool = False
    note: str = ""

    def __post_init__(self):
        usable = [p for p in self.points if p.m > 1]
        if self.exponent is not None:
            if len(usable) < 5:
                raise ValueError("a fitted exponent needs at least five grid points")
            if self.residual is None:
                raise ValueError("a fitted exponent carries its residual")


def _fit_power_law(points: Sequence[BenchPoint]) -> tuple[float | None, float | None]:
    usable = [p for p in points if p.m > 1]
    if len(usable) < 5:
        return None, None
    x = np.log([p.m for p in usable])
    y = np.log([p.seconds for p in usable])
    a = np.column_stack([x, np.ones_like(x)])
    coef, *_ = np.linalg.lstsq(a, y, rcond=None)
    predicted = a @ coef
    residual = float(np.sqrt(np.mean((y - predicted) ** 2)))
    return float(coef[0]), residual


def run_scaling(
    spec: int | str,
    *,
    m_values: Sequence[int] = (1000, 2000, 3000, 4000, 6000, 8000),
    n: int = 10,
    seed: int = 20260818,
    budget_seconds: float | None = None,
    trials: int = 3,
) -> BenchResult:
    """Time one procedure across ``m_values`` and fit the power law."""
    proc = make_procedure(spec)
    points: list[BenchPoint] = []
    partial = False
    note = ""
    started = time.perf_counter()
    for i, m in enumerate(sorted(m_values)):
        if proc.index in _SET_ENUMERATION_PROCS and m > SET_ENUMERATION_LIMIT:
            partial = True
            note = (
                f"stable-set enumeration is capped at {SET_ENUMERATION_LIMIT} "
                f"alternatives; larger sizes skipped"
            )
            break
        if budget_seconds is not None and time.perf_counter() - started > budget_seconds:
            partial = True
            note = f"budget exceeded after {i} of {len(m_values)} grid points"
            break
        p = generate_profile(m, n, seed + i)
        seconds = measure_call(lambda: proc.choose(p), trials=trials)
        points.append(BenchPoint(m, n, seconds))
    exponent, residual = _fit_power_law(points)
    if exponent is None and not partial:
        partial = len(points) < 5
        if partial:
            note = note or "too few grid points for a fit"
    return BenchResult(proc.label(), tuple(points), exponent, residual, partial, note)


GROUP_REPRESENTATIVES: dict[str, tuple[tuple[int, int], ...]] = {
    # Three pairs per group, chosen so the measured cost is carried by the
    # stage that puts the pair in its group: score screens that keep only a
    # handful of alternatives (low), pairwise-matrix rules over all M
    # alternatives (average), and covering/top-cycle solution concepts whose
    # second stage still faces nearly the whole profile (high).
    "low": ((2, 16), (7, 2), (4, 12)),
    "average": ((27, 28), (23, 22), (25, 2)),
    "high": ((16, 7), (18, 7), (12, 27)),
}


@dataclass(frozen=True)
class GroupRow:
    group: str
    first: int
    second: int
    seconds: float


@dataclass(frozen=True)
class GroupReport:
    m: int
    n: int
    rows: tuple[GroupRow, ...]

    def total(self, group: str) -> float:
        return sum(r.seconds for r in self.rows if r.group == group)

    def separation(self, slower: str, faster: str) -> float:
        quick = self.total(faster)
        return self.total(slower) / quick if quick > 0 else float("inf")

    @property
    def ordered(self) -> bool:
        return self.total("low") < self.total("average") < self.total("high")


def run_groups(
    *,
    m: int = 2000,
    n: int = 10,
    seed: int = 20260818,
    representatives: dict[str, tuple[tuple[int, int], ...]] | None = None,
    trials: int = 3,
) -> GroupReport:
    """Time each representative two-stage rule on one shared random profile."""
    reps = representatives or GROUP_REPRESENTATIVES
    p = generate_profile(m, n, seed)
    rows: list[GroupRow] = []
    for group, pairs in reps.items():
        for first, second in pairs:
            expected = classify_group(first, second)
            if expected != group:
                raise ValueError(
                    f"procedure pair ({first}, {second}) belongs to group "
                    f"{expected!r}, not {group!r}"
                )
            rule = compose(first, second)
            seconds = measure_call(lambda: rule.choose(p), trials=trials)
            rows.append(GroupRow(group, first, second, seconds))
    return GroupReport(m, n, tuple(rows))


def scaling_report(results: Iterable[BenchResult]) -> str:
    """Tab-separated summary of scaling runs."""
    lines = ["name\tm\tn\tseconds\texponent\tresidual\tpartial\tnote"]
    for r in results:
        for p in r.points:
            lines.append(
                f"{r.name}\t{p.m}\t{p.n}\t{p.seconds:.6g}\t"
                f"{'' if r.exponent is None else f'{r.exponent:.3f}'}\t"
                f"{'' if r.residual is None else f'{r.residual:.3f}'}\t"
                f"{'yes' if r.partial else 'no'}\t{r.note}"
            )
    return "\n".join(lines) + "\n"
