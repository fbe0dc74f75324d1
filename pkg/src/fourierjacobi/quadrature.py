"""Quadrature engines: composite Gauss-Legendre, adaptive Simpson, graded meshes.

All integrands are expected to be vectorized over a numpy array of nodes and
may return complex values.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .errors import PrecisionError
from .grid import DEFAULT_QUAD, QuadratureSpec


@lru_cache(maxsize=64)
def _leggauss(order):
    return np.polynomial.legendre.leggauss(order)


def gauss_nodes(a, b, order):
    """Gauss-Legendre nodes and weights on [a, b]."""
    x, w = _leggauss(order)
    mid = 0.5 * (a + b)
    half = 0.5 * (b - a)
    return mid + half * x, half * w


def composite_gauss(func, a, b, n_segments=32, order=10):
    """Composite Gauss-Legendre over n_segments equal pieces of [a, b]."""
    if b <= a:
        return 0.0 + 0.0j
    edges = np.linspace(a, b, n_segments + 1)
    nodes, weights = composite_gauss_nodes(edges, order)
    return complex(np.sum(weights * np.asarray(func(nodes), dtype=complex)))


def composite_gauss_nodes(edges, order=10):
    """Flattened Gauss-Legendre node/weight arrays over the given mesh edges."""
    x, w = _leggauss(order)
    edges = np.asarray(edges, dtype=float)
    lo = edges[:-1]
    hi = edges[1:]
    half = 0.5 * (hi - lo)
    mid = 0.5 * (hi + lo)
    nodes = (mid[:, None] + half[:, None] * x[None, :]).ravel()
    weights = (half[:, None] * w[None, :]).ravel()
    return nodes, weights


def adaptive_simpson(func, a, b, tol=1e-10, max_depth=40):
    """Adaptive Simpson on a complex-valued vectorized integrand."""

    def eval1(t):
        return complex(np.asarray(func(np.array([t])), dtype=complex)[0])

    def recurse(x0, x2, f0, f1, f2, whole, depth):
        x1 = 0.5 * (x0 + x2)
        lm = 0.5 * (x0 + x1)
        rm = 0.5 * (x1 + x2)
        flm = eval1(lm)
        frm = eval1(rm)
        left = (x1 - x0) / 6.0 * (f0 + 4.0 * flm + f1)
        right = (x2 - x1) / 6.0 * (f1 + 4.0 * frm + f2)
        if depth <= 0:
            raise PrecisionError("adaptive_simpson: max depth exceeded")
        if abs(left + right - whole) <= 15.0 * tol:
            return left + right + (left + right - whole) / 15.0
        return recurse(x0, x1, f0, flm, f1, left, depth - 1) + recurse(
            x1, x2, f1, frm, f2, right, depth - 1
        )

    if b <= a:
        return 0.0 + 0.0j
    f0 = eval1(a)
    f2 = eval1(b)
    f1 = eval1(0.5 * (a + b))
    whole = (b - a) / 6.0 * (f0 + 4.0 * f1 + f2)
    return recurse(a, b, f0, f1, f2, whole, max_depth)


def integrate(func, a, b, spec: QuadratureSpec = DEFAULT_QUAD):
    """Integrate per the spec's method over [a, b]."""
    if b <= a:
        return 0.0 + 0.0j
    if spec.method == "adaptive-simpson":
        return adaptive_simpson(func, a, b, spec.abs_tol, max_depth=60)
    n_seg = min(max(16, int(np.ceil((b - a) * 8))), spec.max_subdivisions)
    return composite_gauss(func, a, b, n_segments=n_seg, order=10)


def graded_edges(outer=0.5, levels=40, ratio=0.5):
    """Geometric mesh edges on (0, outer] refining toward 0."""
    pts = outer * ratio ** np.arange(levels + 1)
    return np.concatenate(([0.0], pts[::-1]))[1:]  # drop the exact 0 endpoint


def singular_halfline_nodes(cutoff, graded_outer=0.5, levels=40, order=8,
                            seg_len=0.5, smooth_order=10):
    """Node/weight arrays for integrands mildly singular at 0 on (0, cutoff].

    Geometric subdivision (ratio 1/2) of (0, graded_outer] handles t^sigma
    behaviour near the origin; uniform composite Gauss covers the rest.
    The untouched sliver (0, graded_outer * 2^-levels] is dropped (its
    contribution is O(sliver^2) for integrands vanishing linearly at 0).
    """
    cutoff = float(cutoff)
    if cutoff <= graded_outer:
        edges = graded_edges(cutoff, levels)
        return composite_gauss_nodes(edges, order)
    g_nodes, g_weights = composite_gauss_nodes(graded_edges(graded_outer, levels), order)
    n_seg = max(4, int(np.ceil((cutoff - graded_outer) / seg_len)))
    edges = np.linspace(graded_outer, cutoff, n_seg + 1)
    s_nodes, s_weights = composite_gauss_nodes(edges, smooth_order)
    return np.concatenate([g_nodes, s_nodes]), np.concatenate([g_weights, s_weights])


def decay_cutoff(rate, abs_tol, lo=3.0, hi=None):
    """Truncation point for integrands bounded by exp(-rate * t)."""
    if rate <= 0:
        raise PrecisionError(
            f"decay_cutoff: nonpositive decay rate {rate}; integral not certified"
        )
    t = (np.log(1.0 / abs_tol) + 5.0) / rate
    t = max(lo, t)
    if hi is not None:
        t = min(t, hi)
    return t
