"""Decay indicators, strip zero scanning, the two-branch resolvent
transform, and a least-squares density demonstration for span{b_lambda}.

The limsup-type indicators are finite-horizon surrogates: windowed maxima
over the tail of the sampled range.  They are exact on synthetic families
where the expression under the limsup is eventually constant.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .core import JacobiParams, weight_delta
from .errors import DomainError, PrecisionError
from .grid import DEFAULT_QUAD, GridFunction, QuadratureSpec
from .quadrature import decay_cutoff, singular_halfline_nodes
from .resolvent import TLambdaOperator, b_lambda


def delta_inf_plus(t_grid, abs_f, rho):
    """Decay-at-infinity indicator: -limsup e^(-pi t/(2 rho)) log|F(t)|.

    Finite-horizon surrogate: the limsup is replaced by the max over the
    window [T/2, T] where T is the last sampled t.  Returns (estimate,
    (window_lo, window_hi)).  Zeros of F are allowed (log 0 = -inf simply
    never attains the max).
    """
    t_grid = np.asarray(t_grid, dtype=float)
    abs_f = np.asarray(abs_f, dtype=float)
    if t_grid.ndim != 1 or t_grid.size != abs_f.size:
        raise DomainError("delta_inf_plus: t-grid and samples must align")
    if np.any(np.diff(t_grid) <= 0):
        raise DomainError("delta_inf_plus: t-grid must strictly increase")
    horizon = t_grid[-1]
    window = t_grid >= 0.5 * horizon
    if not np.any(window):
        raise DomainError("delta_inf_plus: empty tail window")
    with np.errstate(divide="ignore"):
        logs = np.log(np.maximum(abs_f[window], 0.0))
    expr = np.exp(-np.pi * t_grid[window] / (2.0 * rho)) * logs
    est = -float(np.max(expr[np.isfinite(expr)])) if np.any(np.isfinite(expr)) else np.inf
    return est, (float(0.5 * horizon), float(horizon))


def delta_irho(F, rho, x0=None, n_steps=20, tail=5):
    """Boundary indicator: limsup_{x -> rho-} (rho - x) log|F(ix)|.

    F is a callable on complex lambda, probed on the geometric sequence
    x_k = rho - 2^-k (rho - x0); the limsup surrogate is the max over the
    last `tail` points.
    """
    if x0 is None:
        x0 = 0.5 * rho
    if not (0 <= x0 < rho):
        raise DomainError("delta_irho: need 0 <= x0 < rho")
    ks = np.arange(1, n_steps + 1)
    xs = rho - 0.5**ks * (rho - x0)
    vals = []
    for x in xs:
        with np.errstate(divide="ignore"):
            vals.append((rho - x) * np.log(abs(complex(F(1j * x)))))
    vals = np.asarray(vals)
    return float(np.max(vals[-tail:])), xs, vals


@dataclass(frozen=True)
class StripScanGrid:
    """Rectangular scan grid on the strip plus rails at Im lambda = +-rho."""

    re_max: float
    re_n: int
    im_margin: float
    im_n: int

    def __post_init__(self):
        if self.re_max <= 0 or self.re_n < 2 or self.im_n < 1:
            raise DomainError("StripScanGrid: need re_max > 0, re_n >= 2, im_n >= 1")
        if self.im_margin < 0:
            raise DomainError("StripScanGrid: im_margin must be >= 0")

    def points(self, params: JacobiParams):
        if self.im_margin >= params.rho:
            raise DomainError("StripScanGrid: im_margin must be < rho")
        res = np.linspace(-self.re_max, self.re_max, self.re_n)
        im_top = params.rho - self.im_margin
        ims = np.linspace(-im_top, im_top, self.im_n)
        pts = [complex(r, i) for r in res for i in ims]
        pts += [complex(r, s * params.rho) for r in res for s in (-1.0, 1.0)]
        return pts


def _family_score(transforms, lam):
    # a COMMON zero requires every member to vanish, so the screening
    # value is the worst (largest) |fhat| over the family
    return max(abs(complex(f(lam))) for f in transforms)


def scan_common_zeros(params: JacobiParams, transforms, grid: StripScanGrid,
                      threshold, refine_rounds=3, irho_radius=0.25):
    """Locate candidate common zeros of a transform family on the strip.

    Cells whose center value max_nu |fhat_nu| falls below the threshold are
    refined by `refine_rounds` rounds of 2x2 subdivision; candidates are
    reported as cells (never points — transforms are only known to
    quadrature accuracy).  The report flags whether every candidate sits
    within irho_radius of +-i rho.
    """
    if threshold <= 0:
        raise DomainError("scan_common_zeros: threshold must be positive")
    pts = grid.points(params)
    d_re = 2.0 * grid.re_max / (grid.re_n - 1)
    im_top = params.rho - grid.im_margin
    d_im = 2.0 * im_top / max(grid.im_n - 1, 1)
    cells = [(p, 0.5 * d_re, 0.5 * d_im) for p in pts]
    candidates = [
        (c, hre, him, _family_score(transforms, c)) for c, hre, him in cells
    ]
    candidates = [c for c in candidates if c[3] < threshold]
    for _ in range(refine_rounds):
        refined = []
        for center, hre, him, _ in candidates:
            for sre in (-0.5, 0.5):
                for sim in (-0.5, 0.5):
                    sub = center + complex(sre * hre, sim * him)
                    sub = complex(sub.real, np.clip(sub.imag, -params.rho, params.rho))
                    v = _family_score(transforms, sub)
                    if v < threshold:
                        refined.append((sub, 0.5 * hre, 0.5 * him, v))
        if not refined:
            break
        candidates = refined
    cell_reports = [
        {"re": c.real, "im": c.imag, "half_re": hre, "half_im": him, "min_abs": v}
        for c, hre, him, v in sorted(candidates, key=lambda x: (x[0].imag, x[0].real))
    ]
    only_irho = all(
        min(abs(complex(r["re"], r["im"]) - 1j * params.rho),
            abs(complex(r["re"], r["im"]) + 1j * params.rho)) <= irho_radius
        for r in cell_reports
    )
    return {
        "cells": cell_reports,
        "n_candidates": len(cell_reports),
        "only_pm_irho": bool(cell_reports) and only_irho,
        "no_common_zero": not cell_reports,
        "threshold": float(threshold),
    }


def _pair_exterior(params, g, lam, quad):
    rate = lam.imag - params.rho
    cutoff = decay_cutoff(rate, quad.abs_tol, hi=quad.tail_cutoff * 8)
    g_tmax = getattr(g, "tmax", None)
    if g_tmax is not None:
        cutoff = min(cutoff, g_tmax)
    nodes, weights = singular_halfline_nodes(cutoff)
    vals = (
        b_lambda(params, lam, nodes)
        * np.asarray(g(nodes), dtype=complex)
        * weight_delta(params, nodes)
    )
    return complex(2.0 * np.sum(weights * vals))


def _pair_interior(params, g, f, lam, quad):
    if f is None:
        raise DomainError(
            "resolvent_transform: interior branch needs the generator f"
        )
    op = TLambdaOperator(params, f, lam)
    if abs(op.fhat_lam) <= 1e-10:
        raise PrecisionError(
            f"resolvent_transform: division-unstable, |fhat(lambda)| = "
            f"{abs(op.fhat_lam):.3e} at lambda={lam}",
            achieved=abs(op.fhat_lam),
        )
    nodes, weights = singular_halfline_nodes(f.tmax, seg_len=0.25)
    vals = op(nodes) * np.asarray(g(nodes), dtype=complex) * weight_delta(params, nodes)
    return complex(2.0 * np.sum(weights * vals) / op.fhat_lam)


def resolvent_transform(params: JacobiParams, g, f, lam,
                        quad: QuadratureSpec = DEFAULT_QUAD):
    """Two-branch resolvent transform <h, g> with h chosen by Im lambda.

    Exterior (Im lambda > rho): h = b_lambda, pairing 2 int b g Delta.
    Interior (0 < Im lambda < rho): h = T_lambda f / fhat(lambda).
    The pairing weight is Delta because bounded g is the dual of the
    weighted L^1 algebra.  Im lambda = rho belongs to neither branch.
    """
    lam = complex(lam)
    region = lam.imag - params.rho
    if abs(region) <= 1e-12:
        raise DomainError(
            f"resolvent_transform: Im lambda = rho = {params.rho} is on the "
            "branch seam (neither formula applies)"
        )
    if lam.imag <= 0:
        raise DomainError("resolvent_transform: requires Im lambda > 0")
    if region > 0:
        return _pair_exterior(params, g, lam, quad)
    return _pair_interior(params, g, f, lam, quad)


def cauchy_riemann_residual(func, lam, h=1e-4):
    """Discrete Cauchy-Riemann defect |d/dx F + i d/dy F| on a 4-point stencil."""
    lam = complex(lam)
    dx = (complex(func(lam + h)) - complex(func(lam - h))) / (2.0 * h)
    dy = (complex(func(lam + 1j * h)) - complex(func(lam - 1j * h))) / (2.0 * h)
    return abs(dx + 1j * dy)


def span_density_demo(params: JacobiParams, target, lambdas,
                      quad: QuadratureSpec = DEFAULT_QUAD, cond_limit=1e12):
    """Weighted least-squares approximation of target by span{b_lambda_k}.

    lambdas must all satisfy Im lambda > rho; residuals are reported for
    every nested prefix of the list (so growing the set can only help).
    The merit function is the Delta-weighted L^2 surrogate on a singular-
    aware node set.  Ill-conditioned Gram systems are solved by truncated
    SVD and flagged.
    """
    tmax = getattr(target, "tmax", None)
    if tmax is None:
        raise DomainError(
            "span_density_demo: target must carry a support bound tmax "
            "(an unbounded-support target is not in the weighted L^1 space)"
        )
    lambdas = [complex(x) for x in lambdas]
    if len(lambdas) < 2:
        raise DomainError("span_density_demo: need at least 2 lambdas")
    if any(x.imag <= params.rho for x in lambdas):
        raise DomainError("span_density_demo: all lambdas need Im lambda > rho")
    slowest = min(x.imag for x in lambdas) - params.rho
    cutoff = max(float(tmax), decay_cutoff(slowest, quad.abs_tol, hi=quad.tail_cutoff * 4))
    nodes, weights = singular_halfline_nodes(cutoff)
    sqw = np.sqrt(weights * weight_delta(params, nodes))
    y = np.asarray(
        [complex(target(t)) if t <= tmax else 0.0 for t in nodes], dtype=complex
    ) * sqw
    columns = np.column_stack(
        [b_lambda(params, x, nodes) * sqw for x in lambdas]
    )
    sizes, residuals, conds, regularized = [], [], [], []
    for k in range(1, len(lambdas) + 1):
        a_k = columns[:, :k]
        sv = np.linalg.svd(a_k, compute_uv=False)
        cond = float(sv[0] / sv[-1]) if sv[-1] > 0 else np.inf
        rcond = 1.0 / cond_limit if cond > cond_limit else None
        coef, *_ = np.linalg.lstsq(a_k, y, rcond=rcond)
        res = float(np.linalg.norm(a_k @ coef - y))
        sizes.append(k)
        residuals.append(res)
        conds.append(cond)
        regularized.append(cond > cond_limit)
    return {
        "sizes": sizes,
        "residuals": residuals,
        "conditions": conds,
        "regularized": regularized,
        "lambdas": [[x.real, x.imag] for x in lambdas],
        "target_norm": float(np.linalg.norm(y)),
    }


def report_to_json(report) -> str:
    """Serialize a scan/demo report dict to a deterministic JSON line."""
    return json.dumps(report, sort_keys=True)
