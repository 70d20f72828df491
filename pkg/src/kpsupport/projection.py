"""Euclidean projection onto the (k,inf)-support ball.

The radius-alpha ball is the intersection of the box ``|x_i| <= alpha``
with the l1 ball ``sum|x_i| <= alpha * k``.  The projection has the
soft-threshold-and-clamp form ``x_i = sign(w_i) * clamp(|w_i| - beta, 0,
alpha)``; when the box clamp alone is feasible the multiplier beta is
zero, otherwise beta is located exactly by scanning the breakpoints of
the piecewise-linear map ``beta -> sum|x_i(beta)|``, which is
nonincreasing.  Total cost O(d log d).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class ProjectionResult:
    """Projection output: the point, the l1 multiplier, and whether it bound.

    ``beta > 0`` iff the l1 constraint needed enforcing, in which case
    ``sum|x_i| == alpha * k`` up to round-off.
    """

    x: np.ndarray
    beta: float
    active_l1: bool


def _check_k(k: int, d: int) -> None:
    if int(k) != k or not 1 <= k <= d:
        raise ValueError(f"k={k} out of range for dimension d={d}")


def _tight_multiplier(a: np.ndarray, k: float) -> float:
    """Largest beta with ``sum(clip(a - beta, 0, 1)) >= k``.

    Requires ``sum(clip(a, 0, 1)) > k``.  The sum is piecewise linear and
    nonincreasing in beta; slope changes only where a coordinate enters
    the linear regime (beta = a_i - 1) or hits zero (beta = a_i).
    """
    starts = np.maximum(a - 1.0, 0.0)
    ends = a
    keep_start = starts > 0
    keep_end = ends > 0
    betas = np.concatenate([starts[keep_start], ends[keep_end]])
    dslope = np.concatenate([
        -np.ones(int(keep_start.sum())),
        np.ones(int(keep_end.sum())),
    ])
    order = np.argsort(betas, kind="stable")
    betas, dslope = betas[order], dslope[order]

    cur_b = 0.0
    cur_g = float(np.minimum(a, 1.0).sum())
    cur_slope = -float(np.count_nonzero((starts <= 0) & (ends > 0)))
    for b, ds in zip(betas, dslope):
        seg_g = cur_g + cur_slope * (b - cur_b)
        if seg_g < k:
            return cur_b + (cur_g - k) / (-cur_slope)
        cur_b, cur_g = float(b), float(seg_g)
        cur_slope += ds
    # The sum reaches zero at the largest breakpoint, and k >= 1 > 0, so
    # the crossing is always found inside the sweep.
    raise AssertionError("multiplier crossing not found")


def project_unit_kinf(w, k: int) -> ProjectionResult:
    """Project onto ``{x : |x_i| <= 1, sum|x_i| <= k}``.

    If clamping into the box already satisfies the l1 budget the clamp is
    the projection and beta = 0.  Otherwise the soft threshold beta > 0
    making the budget tight is found exactly; where several beta give the
    same (unique) projection, the largest is reported.
    """
    w = np.asarray(w, dtype=float)
    if w.ndim != 1 or w.size == 0:
        raise ValueError("expected a nonempty 1-d vector")
    _check_k(k, w.size)
    a = np.abs(w)
    clipped = np.minimum(a, 1.0)
    if clipped.sum() <= float(k):
        return ProjectionResult(x=np.sign(w) * clipped, beta=0.0, active_l1=False)
    beta = _tight_multiplier(a, float(k))
    x = np.sign(w) * np.clip(a - beta, 0.0, 1.0)
    return ProjectionResult(x=x, beta=beta, active_l1=True)


def project_kinf(w, k: int, alpha: float) -> ProjectionResult:
    """Project onto the (k,inf)-support ball of radius alpha.

    Reduces to the unit problem by the change of variables x' = x/alpha;
    the reported beta is on the scale of w, i.e.
    ``x_i = sign(w_i) * clamp(|w_i| - beta, 0, alpha)``.
    """
    if not alpha > 0:
        raise ValueError(f"alpha must be positive, got {alpha!r}")
    w = np.asarray(w, dtype=float)
    unit = project_unit_kinf(w / alpha, k)
    return ProjectionResult(x=alpha * unit.x, beta=alpha * unit.beta,
                            active_l1=unit.active_l1)
