"""Closed-form evaluation of the (k,p)-support norm family.

The (k,p)-support norm is the norm whose unit ball is the convex hull of
all vectors with at most ``k`` nonzero entries and lp-norm at most one.
It interpolates between the l1 norm (at ``k = 1`` or ``p = 1``) and the
plain lp norm (at ``k = d``).  This module provides the norm, its dual
(the lq norm of the k largest-magnitude components), the vector attaining
the dual pairing, the linear-minimization oracle over the norm ball, and
a dual-feasibility certificate for the computed norm value.

Everything here is a pure function of its inputs; returned arrays are
fresh and safe to share across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

# Below this margin 1/(p - 1) is numerically useless, so such p are
# evaluated through the p = 1 (pure l1) branch.
P_ONE_GUARD = 1e-8


@dataclass(frozen=True)
class SupportParams:
    """Parameters (k, p, alpha) of a (k,p)-support ball of radius alpha.

    ``k`` is the support-size parameter, ``p`` the exponent in [1, inf]
    (``math.inf`` accepted), and ``alpha`` the ball radius used by the
    linear-minimization oracle and the solvers.
    """

    k: int
    p: float
    alpha: float = 1.0

    def __post_init__(self):
        if int(self.k) != self.k or self.k < 1:
            raise ValueError(f"k must be a positive integer, got {self.k!r}")
        if math.isnan(self.p) or self.p < 1.0:
            raise ValueError(f"p must lie in [1, inf], got {self.p!r}")
        if not self.alpha > 0:
            raise ValueError(f"alpha must be positive, got {self.alpha!r}")

    @property
    def q(self) -> float:
        """Conjugate exponent, 1/p + 1/q = 1 (q = inf at p = 1, q = 1 at p = inf)."""
        if self.is_l1:
            return math.inf
        if self.p == math.inf:
            return 1.0
        return self.p / (self.p - 1.0)

    @property
    def is_l1(self) -> bool:
        return self.p <= 1.0 + P_ONE_GUARD

    @property
    def is_linf(self) -> bool:
        return self.p == math.inf

    def check_dim(self, d: int) -> None:
        """Raise if the support size is incompatible with dimension ``d``."""
        if not 1 <= self.k <= d:
            raise ValueError(f"k={self.k} out of range for dimension d={d}")


@dataclass(frozen=True)
class SortedAbsView:
    """A vector together with its nonincreasing absolute-value reordering.

    ``z[i] == abs(original[perm[i]])``, nonincreasing in ``i``; ties in
    magnitude are broken by ascending original index, so the view is
    deterministic.  ``signs[i] * z[i]`` restores the entry at ``perm[i]``.
    """

    original: np.ndarray
    z: np.ndarray
    perm: np.ndarray
    signs: np.ndarray

    def restore(self, sorted_values: np.ndarray) -> np.ndarray:
        """Map a sorted-domain vector back to the original order and signs."""
        sorted_values = np.asarray(sorted_values, dtype=float)
        out = np.zeros_like(sorted_values)
        out[self.perm] = self.signs * sorted_values
        return out


def sort_abs(w) -> SortedAbsView:
    """Sort a vector by decreasing magnitude, keeping permutation and signs."""
    w = np.asarray(w, dtype=float)
    if w.ndim != 1 or w.size == 0:
        raise ValueError("expected a nonempty 1-d vector")
    a = np.abs(w)
    perm = np.argsort(-a, kind="stable")
    return SortedAbsView(original=w, z=a[perm], perm=perm, signs=np.sign(w)[perm])


def _lp_norm(x, p: float) -> float:
    """lp norm with max-rescaling so that very large finite p stays stable."""
    a = np.abs(np.asarray(x, dtype=float))
    if a.size == 0:
        return 0.0
    m = float(a.max())
    if m == 0.0:
        return 0.0
    if p == math.inf:
        return m
    if p == 1.0:
        return float(a.sum())
    return float(m * np.sum((a / m) ** p) ** (1.0 / p))


def _check_sorted_nonneg(z: np.ndarray) -> None:
    if z.ndim != 1 or z.size == 0:
        raise ValueError("expected a nonempty 1-d vector")
    if np.any(z < 0):
        raise ValueError("entries must be nonnegative")
    if np.any(np.diff(z) > 0):
        raise ValueError("entries must be sorted nonincreasing")


def critical_index(z, params: SupportParams) -> int:
    """Largest split index l at which the sorted tail can be averaged.

    For a nonincreasing nonnegative ``z`` the split is the largest
    l in {0, ..., k-1} with ``(k - l) * z[l-1] >= sum(z[l:])`` (1-based
    z index); l = 0 is always admissible.  Returns ``d`` when k = d.
    """
    z = np.asarray(z, dtype=float)
    _check_sorted_nonneg(z)
    d = z.size
    params.check_dim(d)
    k = params.k
    if k == d:
        return d
    prefix = np.cumsum(z)
    total = prefix[-1]
    # The admissibility condition is monotone in l, so the first satisfier
    # scanning downward from k - 1 is the largest one.
    for ell in range(k - 1, 0, -1):
        tail = total - prefix[ell - 1]
        if (k - ell) * z[ell - 1] >= tail:
            return ell
    return 0


def _norm_from_sorted(z: np.ndarray, ell: int, params: SupportParams) -> float:
    """Norm value for presorted magnitudes ``z`` and split index ``ell``."""
    d = z.size
    p = params.p
    if ell == d:
        return _lp_norm(z, p)
    tail = float(z[ell:].sum())
    head = z[:ell]
    y = np.append(head, tail / (params.k - ell) ** (1.0 - 1.0 / p))
    return _lp_norm(y, p)


def kp_norm(w, params: SupportParams) -> float:
    """Evaluate the (k,p)-support norm of a vector.

    Runs in O(d log d): sort the magnitudes, locate the head/tail split,
    then combine the lp norm of the head with the averaged tail.  The
    cases p = 1 (plain l1, independent of k) and p = inf
    (``max(linf, l1 / k)``) are evaluated by their closed forms.
    """
    w = np.asarray(w, dtype=float)
    if w.ndim != 1 or w.size == 0:
        raise ValueError("expected a nonempty 1-d vector")
    params.check_dim(w.size)
    a = np.abs(w)
    if params.is_l1 or params.k == 1:
        return float(a.sum())
    if params.is_linf:
        return float(max(a.max(), a.sum() / params.k))
    view = sort_abs(w)
    ell = critical_index(view.z, params)
    return _norm_from_sorted(view.z, ell, params)


def kp_dual_norm(u, params: SupportParams) -> float:
    """Dual (k,p)-support norm: the lq norm of the k largest magnitudes.

    q is the conjugate exponent of p; at p = inf this is the sum of the
    k largest magnitudes, at p = 1 it degenerates to the linf norm.
    """
    u = np.asarray(u, dtype=float)
    if u.ndim != 1 or u.size == 0:
        raise ValueError("expected a nonempty 1-d vector")
    params.check_dim(u.size)
    a = np.abs(u)
    if params.is_l1:
        return float(a.max())
    top = np.partition(a, a.size - params.k)[a.size - params.k:]
    return _lp_norm(top, params.q)


def dual_maximizer(u, params: SupportParams) -> np.ndarray:
    """Unit-ball vector w attaining ``<u, w> = kp_dual_norm(u)``.

    Defined for p in (1, inf].  Supported on the k largest-magnitude
    components of u (ties broken by ascending index); at p = inf the
    components of u that are zero inside the support get weight 0.
    """
    u = np.asarray(u, dtype=float)
    if u.ndim != 1 or u.size == 0:
        raise ValueError("expected a nonempty 1-d vector")
    params.check_dim(u.size)
    if params.is_l1:
        raise ValueError("dual maximizer is defined for p in (1, inf] only")
    if not np.any(u):
        raise ValueError("dual maximizer is not unique at u = 0")
    view = sort_abs(u)
    k = params.k
    w_sorted = np.zeros(u.size)
    if params.is_linf:
        w_sorted[:k] = np.sign(view.z[:k])
    else:
        dual = kp_dual_norm(u, params)
        w_sorted[:k] = (view.z[:k] / dual) ** (1.0 / (params.p - 1.0))
    return view.restore(w_sorted)


def lmo_vector(g, params: SupportParams) -> np.ndarray:
    """Minimize ``<s, g>`` over the (k,p)-support ball of radius alpha.

    Returns ``-alpha`` times the dual maximizer at g.  At p = 1 the ball
    is the l1 ball of radius alpha and the minimizer concentrates on the
    first largest-magnitude coordinate.  g = 0 returns the zero vector.
    """
    g = np.asarray(g, dtype=float)
    if g.ndim != 1 or g.size == 0:
        raise ValueError("expected a nonempty 1-d vector")
    params.check_dim(g.size)
    if not np.any(g):
        return np.zeros_like(g)
    if params.is_l1:
        i = int(np.argmax(np.abs(g)))
        s = np.zeros_like(g)
        s[i] = -params.alpha * np.sign(g[i])
        return s
    return -params.alpha * dual_maximizer(g, params)


@dataclass(frozen=True)
class NormCertificate:
    """A norm value plus the dual-feasible vector certifying it.

    ``dual_point`` has dual norm exactly one and pairs with the input to
    the claimed value; ``ell`` is the head/tail split it was built from.
    """

    value: float
    dual_point: np.ndarray
    ell: int


def _certificate_sorted(z: np.ndarray, ell: int, params: SupportParams,
                        value: float) -> np.ndarray:
    """Dual vector in the sorted domain for split ``ell`` and norm ``value``.

    Head components are ``(z_i / value)^(p-1)``; the tail is the constant
    ``(sum(z[ell:]) / ((k - ell) * value))^(p-1)``.
    """
    d = z.size
    pm1 = params.p - 1.0
    u = np.zeros(d)
    if ell == d:
        u[:] = (z / value) ** pm1
        return u
    u[:ell] = (z[:ell] / value) ** pm1
    tail = float(z[ell:].sum())
    u[ell:] = (tail / ((params.k - ell) * value)) ** pm1
    return u


def certificate_candidate(w, ell: int, params: SupportParams) -> np.ndarray:
    """Dual vector built from the head/tail split at ``ell``.

    Valid for any ell in {0, ..., k-1} (plus ell = d when k = d); at the
    critical split it is the exact dual maximizer of the norm.  Useful as
    a family of Holder lower bounds.
    """
    view = sort_abs(w)
    if not np.any(view.z):
        raise ValueError("certificate undefined at w = 0")
    m = _norm_from_sorted(view.z, ell, params)
    return view.restore(_certificate_sorted(view.z, ell, params, m))


def norm_certificate(w, params: SupportParams) -> NormCertificate:
    """Norm value together with a dual vector u with ``<u, w> = value``.

    Requires finite p > 1 and w != 0.  The returned dual point has
    dual norm one, so the pairing certifies the value from below while
    the closed form certifies it from above.
    """
    w = np.asarray(w, dtype=float)
    if w.ndim != 1 or w.size == 0:
        raise ValueError("expected a nonempty 1-d vector")
    params.check_dim(w.size)
    if params.is_l1 or params.is_linf:
        raise ValueError("norm certificate requires finite p > 1")
    if not np.any(w):
        raise ValueError("certificate undefined at w = 0")
    view = sort_abs(w)
    ell = critical_index(view.z, params)
    value = _norm_from_sorted(view.z, ell, params)
    u = view.restore(_certificate_sorted(view.z, ell, params, value))
    return NormCertificate(value=value, dual_point=u, ell=ell)
