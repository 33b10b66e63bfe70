"""Closed-form predictions: critical jumping rates, gaps, runtimes.

Each named case has one or two avoided-crossing stages.  Per stage we
record the critical gamma (exact closed form where one exists, a
truncated large-M series otherwise), the predicted energy gap at the
crossing, the transfer time pi/gap, the source and target cell labels,
and the exponent p of the tolerated detuning scale o(1/M^p).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .graphs import CASE_TAGS


@dataclass(frozen=True)
class StagePrediction:
    gamma_c: float
    gap: float
    source_cells: tuple      # reference cell labels
    target_cells: tuple
    gamma_window_exponent: float

    @property
    def runtime(self):
        return np.pi / self.gap


@dataclass(frozen=True)
class CasePrediction:
    case: str
    m: int
    k: int
    stages: tuple  # of StagePrediction

    @property
    def total_runtime(self):
        return sum(s.runtime for s in self.stages)


def _stage1_gamma_exact(m, offset):
    # degeneracy condition gamma = (-M + sqrt(M) sqrt(M + offset)) / (2M)
    return (-m + np.sqrt(m) * np.sqrt(m + offset)) / (2.0 * m)


def predict(case: str, m: int, k: int | None = None) -> CasePrediction:
    """Predicted schedule parameters for a named case."""
    if case not in CASE_TAGS:
        raise ValueError(f"unknown case tag {case!r}")
    if m < 5:
        raise ValueError("predictions need M >= 5")
    sqm = np.sqrt(float(m))

    if case in ("two-a", "k-in-clique"):
        kk = 2 if case == "two-a" else k
        if kk is None:
            raise ValueError("k-in-clique requires k")
        stage1 = StagePrediction(
            gamma_c=_stage1_gamma_exact(m, 4 * kk + 4),
            gap=2.0 * (kk + 1) / m ** 1.5,
            source_cells=("g",), target_cells=("b",),
            gamma_window_exponent=2.5,
        )
        stage2 = StagePrediction(
            gamma_c=1.0 / m,
            gap=2.0 * np.sqrt(kk / float(m)),
            source_cells=("b",), target_cells=("a",),
            gamma_window_exponent=1.5,
        )
        return CasePrediction(case, m, kk, (stage1, stage2))

    if case in ("two-b", "two-c", "two-d", "two-e"):
        if case == "two-b":
            g1 = _stage1_gamma_exact(m, 8)
        elif case == "two-d":
            g1 = 2.0 / m - 8.0 / m**2 + 64.0 / m**3
        else:  # two-c and two-e share the same truncated series
            g1 = 2.0 / m - 6.0 / m**2 + 36.0 / m**3
        if case == "two-e":
            src1, tgt1 = ("m",), ("b", "h")
            src2, tgt2 = ("b", "h"), ("a", "d")
        else:
            src1, tgt1 = ("g",), ("b",)
            src2, tgt2 = ("b",), ("a",)
        stage1 = StagePrediction(
            gamma_c=g1,
            gap=4.0 * np.sqrt(2.0) / m ** 1.5,
            source_cells=src1, target_cells=tgt1,
            gamma_window_exponent=2.5,
        )
        stage2 = StagePrediction(
            gamma_c=1.0 / m,
            gap=2.0 / sqm,
            source_cells=src2, target_cells=tgt2,
            gamma_window_exponent=1.5,
        )
        return CasePrediction(case, m, 2, (stage1, stage2))

    if case == "ring-1":
        stage = StagePrediction(
            gamma_c=1.0 / m, gap=2.0 / sqm,
            source_cells=("b",), target_cells=("a",),
            gamma_window_exponent=1.5,
        )
        return CasePrediction(case, m, m + 1, (stage,))

    if case == "clique-plus-1":
        gc = 2.0 / (sqm * (np.sqrt(m + 8.0) - np.sqrt(m + 4.0)))
        stage = StagePrediction(
            gamma_c=gc, gap=2.0 / sqm,
            source_cells=("g",), target_cells=("b",),
            gamma_window_exponent=1.5,
        )
        return CasePrediction(case, m, m + 1, (stage,))

    # ring-2 and ring-2-shift: identical predictions
    stage = StagePrediction(
        gamma_c=1.0 / m, gap=2.0 * np.sqrt(2.0 / m),
        source_cells=("b",), target_cells=("a",),
        gamma_window_exponent=1.5,
    )
    return CasePrediction(case, m, 2 * (m + 1), (stage,))


def complete_gap(n: int, k: int, gamma: float) -> float:
    """Energy gap of the two-dimensional complete-graph crossing.

    Delta E = sqrt((1 - gamma N)^2 + 4 k gamma); at gamma = 1/N this is
    2 sqrt(k/N).
    """
    if n < 2 or not 1 <= k < n:
        raise ValueError("need N >= 2 and 1 <= k < N")
    if gamma < 0:
        raise ValueError("gamma must be nonnegative")
    return float(np.sqrt((1.0 - gamma * n) ** 2 + 4.0 * k * gamma))


def predict_complete(n: int, k: int):
    """(gamma_c, gap, runtime) for search on the complete graph."""
    gc = 1.0 / n
    gap = 2.0 * np.sqrt(k / float(n))
    return gc, gap, np.pi / gap


def predicted_gap(case: str, stage: int, m: int, k: int | None = None) -> float:
    """Predicted gap of a given stage (1-based)."""
    pred = predict(case, m, k)
    if not 1 <= stage <= len(pred.stages):
        raise ValueError(f"case {case} has {len(pred.stages)} stage(s), not {stage}")
    return pred.stages[stage - 1].gap
