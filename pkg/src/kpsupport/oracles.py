"""Definition-level reference computations used to cross-check the fast paths.

These routines work straight from the defining optimization problems
(subset enumeration for the dual norm, projected subgradient descent on
the group decomposition for the primal norm, alternating Dykstra
projections for the (k,inf) ball) and are deliberately kept independent
of the closed-form implementations they validate.  They are only
practical at small sizes; the limits are enforced.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .norms import SupportParams, certificate_candidate, kp_dual_norm


def _lq(x: np.ndarray, q: float) -> float:
    # local scaled lq evaluation, kept separate from the fast path on purpose
    a = np.abs(x)
    m = float(a.max()) if a.size else 0.0
    if m == 0.0:
        return 0.0
    if q == math.inf:
        return m
    return float(m * np.sum((a / m) ** q) ** (1.0 / q))


def _conjugate(p: float) -> float:
    if p == 1.0:
        return math.inf
    if p == math.inf:
        return 1.0
    return p / (p - 1.0)


@dataclass(frozen=True)
class GroupSystem:
    """All supports of size at most k in dimension d, enumerated."""

    d: int
    k: int
    groups: tuple[tuple[int, ...], ...]

    @classmethod
    def enumerate(cls, d: int, k: int) -> "GroupSystem":
        if not 1 <= k <= d:
            raise ValueError(f"k={k} out of range for dimension d={d}")
        groups = tuple(
            g for size in range(1, k + 1)
            for g in itertools.combinations(range(d), size)
        )
        return cls(d=d, k=k, groups=groups)

    def membership(self) -> np.ndarray:
        """Boolean (n_groups, d) matrix: which coordinates each group covers."""
        out = np.zeros((len(self.groups), self.d), dtype=bool)
        for row, g in enumerate(self.groups):
            out[row, list(g)] = True
        return out


def bruteforce_dual(u, k: int, p: float) -> float:
    """Dual norm by enumerating every size-k support.

    Maximizes the lq norm of u restricted to a support over all size-k
    subsets, which is how the dual norm is attained at extreme points of
    the primal ball.  Limited to d <= 20.
    """
    u = np.asarray(u, dtype=float)
    if u.ndim != 1 or u.size == 0:
        raise ValueError("expected a nonempty 1-d vector")
    d = u.size
    if d > 20:
        raise ValueError(f"brute force limited to d <= 20, got d={d}")
    SupportParams(k, p).check_dim(d)
    q = _conjugate(p)
    a = np.abs(u)
    best = 0.0
    for group in itertools.combinations(range(d), k):
        best = max(best, _lq(a[list(group)], q))
    return best


def _row_lp(V: np.ndarray, p: float) -> np.ndarray:
    """Row-wise scaled lp norms of a matrix."""
    a = np.abs(V)
    m = a.max(axis=1)
    out = np.zeros(V.shape[0])
    nz = m > 0
    if not np.any(nz):
        return out
    if p == math.inf:
        out[nz] = m[nz]
        return out
    scaled = a[nz] / m[nz, None]
    out[nz] = m[nz] * np.sum(scaled ** p, axis=1) ** (1.0 / p)
    return out


def _row_subgradient(V: np.ndarray, p: float) -> np.ndarray:
    """Row-wise subgradient of the lp norm (zero rows get the zero row)."""
    grad = np.zeros_like(V)
    if p == math.inf:
        idx = np.argmax(np.abs(V), axis=1)
        rows = np.arange(V.shape[0])
        vals = V[rows, idx]
        grad[rows, idx] = np.sign(vals)
        return grad
    norms = _row_lp(V, p)
    nz = norms > 0
    if np.any(nz):
        ratio = np.abs(V[nz]) / norms[nz, None]
        grad[nz] = np.sign(V[nz]) * ratio ** (p - 1.0)
    return grad


def infconv_upper(w, k: int, p: float, iters: int = 100_000, *,
                  step_scale: float = 0.1, target_lower: float | None = None,
                  rel_gap: float = 1e-3) -> float:
    """Upper bound on the norm from its group-decomposition definition.

    Runs projected subgradient descent on
    ``min sum_g ||v_g||_p  s.t.  sum_g v_g = w, supp(v_g) in g``
    over all supports of size <= k, with diminishing steps c/sqrt(t).
    Every iterate is feasible, so the best objective seen is a certified
    upper bound on the norm.  If ``target_lower`` is supplied, iteration
    stops early once the bound is within ``rel_gap`` of it.  Limited to
    d <= 5, k <= 3 and p in (1, inf].
    """
    w = np.asarray(w, dtype=float)
    if w.ndim != 1 or w.size == 0:
        raise ValueError("expected a nonempty 1-d vector")
    d = w.size
    if d > 5 or k > 3:
        raise ValueError(f"decomposition oracle limited to d <= 5, k <= 3 "
                         f"(got d={d}, k={k})")
    if not p > 1.0:
        raise ValueError("p must exceed 1 (at p = 1 the norm is plainly l1)")
    SupportParams(k, p).check_dim(d)
    if iters < 1:
        raise ValueError("iters must be positive")
    if not np.any(w):
        return 0.0

    system = GroupSystem.enumerate(d, k)
    S = system.membership().astype(float)
    counts = S.sum(axis=0)
    V = S * (w / counts)
    scale = float(np.abs(w).max())
    best = float(_row_lp(V, p).sum())
    for t in range(1, iters + 1):
        step = step_scale * scale / math.sqrt(t)
        V = V - step * _row_subgradient(V, p)
        # exact projection back onto {sum_g v_g = w} within the supports
        V = V + S * ((w - V.sum(axis=0)) / counts)
        f = float(_row_lp(V, p).sum())
        if f < best:
            best = f
        if (target_lower is not None and t % 250 == 0
                and best <= target_lower * (1.0 + rel_gap)):
            break
    return best


def certificate_lower(w, k: int, p: float) -> float:
    """Lower bound on the norm from the family of split certificates.

    Every dual candidate u gives the valid bound <u, w> / dual_norm(u);
    the candidates are the head/tail-split duals at each admissible split,
    and at the critical split the bound is tight.
    """
    w = np.asarray(w, dtype=float)
    if w.ndim != 1 or w.size == 0:
        raise ValueError("expected a nonempty 1-d vector")
    if not np.any(w):
        raise ValueError("certificate undefined at w = 0")
    d = w.size
    params = SupportParams(k, p)
    params.check_dim(d)
    ells = list(range(min(k, d)))
    if k == d:
        ells.append(d)
    best = 0.0
    for ell in ells:
        u = certificate_candidate(w, ell, params)
        denom = kp_dual_norm(u, params)
        if denom > 0:
            best = max(best, float(np.dot(u, w)) / denom)
    return best


def _project_l1_ball(v: np.ndarray, radius: float) -> np.ndarray:
    """Euclidean projection onto the l1 ball by sorted thresholding."""
    a = np.abs(v)
    if a.sum() <= radius:
        return v.copy()
    u = np.sort(a)[::-1]
    css = np.cumsum(u)
    idx = np.arange(1, u.size + 1)
    rho = np.nonzero(u - (css - radius) / idx > 0)[0].max()
    theta = (css[rho] - radius) / (rho + 1.0)
    return np.sign(v) * np.maximum(a - theta, 0.0)


def dykstra_project(w, k: int, alpha: float = 1.0, iters: int = 10_000) -> np.ndarray:
    """Projection onto the (k,inf) ball by Dykstra's alternating method.

    Alternates exact projections onto the box ``|x_i| <= alpha`` and the
    l1 ball ``sum|x_i| <= alpha * k`` with the usual correction terms,
    which converges to the exact projection onto their intersection.
    """
    w = np.asarray(w, dtype=float)
    if w.ndim != 1 or w.size == 0:
        raise ValueError("expected a nonempty 1-d vector")
    if not alpha > 0:
        raise ValueError(f"alpha must be positive, got {alpha!r}")
    SupportParams(k, math.inf, alpha).check_dim(w.size)
    x = w.copy()
    p_inc = np.zeros_like(x)
    q_inc = np.zeros_like(x)
    radius = alpha * k
    stop = 1e-15 * max(1.0, alpha)
    for _ in range(iters):
        y = np.clip(x + p_inc, -alpha, alpha)
        p_inc = x + p_inc - y
        x_new = _project_l1_ball(y + q_inc, radius)
        q_inc = y + q_inc - x_new
        done = np.max(np.abs(x_new - x)) <= stop
        x = x_new
        if done:
            break
    return x
