"""Generalized translation and the hypergeometric convolution structure.

The translation tau_s averages f over a kernel measure on [0,1] x [0,pi]
whose density carries Jacobi-type endpoint singularities; nodes are built
with Gauss-Jacobi rules so those exponents cost no accuracy.  The three
parameter regimes (generic alpha > beta > -1/2, alpha = beta, and
beta = -1/2) get their own kernels.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np
from scipy.special import roots_jacobi

from .core import JacobiParams, weight_delta
from .errors import DomainError
from .grid import DEFAULT_QUAD, EvenMeasure, GridFunction, QuadratureSpec
from .quadrature import composite_gauss_nodes, integrate
from .special import log_gamma

_DEGENERATE_TOL = 1e-10


def _lg(x):
    return log_gamma(complex(x)).real


@lru_cache(maxsize=32)
def _kernel_nodes(alpha, beta, n_r=32, n_psi=32):
    """Nodes (r_i, cos psi_i, sin psi_i) and weights of the kernel measure dm.

    Weights include the explicit Gamma-factor normalization, so their sum
    equals the kernel mass (= 1) only because the normalization constant
    is right; nothing is renormalized numerically.
    """
    if abs(beta + 0.5) < _DEGENERATE_TOL:
        # beta = -1/2: density in r, psi concentrated on {0, pi} with mass 1/2 each
        const = math.exp(_lg(alpha + 1.0) - 0.5 * math.log(math.pi) - _lg(alpha + 0.5))
        # u = r^2: (1-r^2)^(alpha-1/2) dr = (1/2)(1-u)^(alpha-1/2) u^(-1/2) du
        xj, wj = roots_jacobi(n_r, alpha - 0.5, -0.5)
        u = 0.5 * (1.0 + xj)
        scale = 2.0 ** (-(alpha - 0.5) - (-0.5) - 1.0)
        r_w = 2.0 * const * 0.5 * scale * wj  # overall 2 from the paper's constant
        r = np.sqrt(u)
        rr = np.concatenate([r, r])
        cos_psi = np.concatenate([np.ones_like(r), -np.ones_like(r)])
        sin_psi = np.zeros_like(rr)
        weights = np.concatenate([0.5 * r_w, 0.5 * r_w])
        return rr, cos_psi, sin_psi, weights
    if abs(alpha - beta) < _DEGENERATE_TOL:
        # alpha = beta: psi-density only, r pinned at 1 (see decisions ledger)
        const = math.exp(_lg(alpha + 1.0) - 0.5 * math.log(math.pi) - _lg(alpha + 0.5))
        # v = cos psi: (sin psi)^(2 alpha) d psi = (1-v^2)^(alpha-1/2) dv
        xv, wv = roots_jacobi(n_psi, alpha - 0.5, alpha - 0.5)
        weights = const * wv
        r = np.ones_like(xv)
        return r, xv, np.sqrt(np.clip(1.0 - xv**2, 0.0, None)), weights
    # generic alpha > beta > -1/2
    const = math.exp(
        math.log(2.0)
        + _lg(alpha + 1.0)
        - 0.5 * math.log(math.pi)
        - _lg(alpha - beta)
        - _lg(beta + 0.5)
    )
    # u = r^2: (1-r^2)^(a-b-1) r^(2b+1) dr = (1/2)(1-u)^(a-b-1) u^b du
    xj, wj = roots_jacobi(n_r, alpha - beta - 1.0, beta)
    u = 0.5 * (1.0 + xj)
    r = np.sqrt(u)
    r_scale = 2.0 ** (-(alpha - beta - 1.0) - beta - 1.0)
    r_w = 0.5 * r_scale * wj
    # v = cos psi: (sin psi)^(2b) d psi = (1-v^2)^(b-1/2) dv
    xv, wv = roots_jacobi(n_psi, beta - 0.5, beta - 0.5)
    rr = np.repeat(r, xv.size)
    cos_psi = np.tile(xv, r.size)
    sin_psi = np.sqrt(np.clip(1.0 - cos_psi**2, 0.0, None))
    weights = const * np.repeat(r_w, xv.size) * np.tile(wv, r.size)
    return rr, cos_psi, sin_psi, weights


def kernel_mass(params: JacobiParams, n_r=32, n_psi=32):
    """Total mass of the kernel measure; 1 when the normalization is right."""
    _, _, _, w = _kernel_nodes(params.alpha, params.beta, n_r, n_psi)
    return float(np.sum(w))


def _translate_arguments(r, cos_psi, sin_psi, s, t):
    a = np.cosh(s) * np.cosh(t)
    b = np.sinh(s) * np.sinh(t)
    modulus = np.sqrt((a + r * cos_psi * b) ** 2 + (r * sin_psi * b) ** 2)
    return np.arccosh(np.maximum(modulus, 1.0))


def translate(params: JacobiParams, f, s, t, quad: QuadratureSpec = DEFAULT_QUAD,
              n_r=32, n_psi=32):
    """Generalized translation (tau_s f)(t).

    f is a GridFunction or an even callable vectorized over arrays.  For a
    GridFunction the domain constraint |s| + |t| <= tmax applies (the
    kernel argument never exceeds |s| + |t|).
    """
    s = float(s)
    t = float(t)
    tmax = getattr(f, "tmax", None)
    if tmax is not None and abs(s) + abs(t) > tmax * (1.0 + 1e-9):
        raise DomainError(
            f"translate: |s|+|t|={abs(s) + abs(t):.6g} exceeds tmax={tmax}"
        )
    r, cos_psi, sin_psi, w = _kernel_nodes(params.alpha, params.beta, n_r, n_psi)
    args = _translate_arguments(r, cos_psi, sin_psi, abs(s), abs(t))
    vals = np.asarray(f(args), dtype=complex)
    return complex(np.sum(w * vals))


def _translate_batch(params, f, s_array, t, n_r=32, n_psi=32):
    """tau_s f(t) over an array of s values (shared node set)."""
    r, cos_psi, sin_psi, w = _kernel_nodes(params.alpha, params.beta, n_r, n_psi)
    s_array = np.abs(np.asarray(s_array, dtype=float))
    a = np.cosh(s_array)[:, None] * np.cosh(t)
    b = np.sinh(s_array)[:, None] * np.sinh(t)
    modulus = np.sqrt(
        (a + r[None, :] * cos_psi[None, :] * b) ** 2
        + (r[None, :] * sin_psi[None, :] * b) ** 2
    )
    args = np.arccosh(np.maximum(modulus, 1.0))
    vals = np.asarray(f(args.ravel()), dtype=complex).reshape(args.shape)
    return vals @ w


def convolve(params: JacobiParams, f: GridFunction, g: GridFunction,
             quad: QuadratureSpec = DEFAULT_QUAD, out_n=None,
             n_r=32, n_psi=32, s_order=10, s_segments=None):
    """(f * g)(t) = int tau_s f(t) g(s) Delta(s) ds on the certified subgrid.

    Output is a GridFunction on [0, f.tmax - g.tmax] carrying valid_tmax
    (domain-shrinking convention: no extrapolation of f beyond its grid).
    """
    out_tmax = f.tmax - g.tmax
    if out_tmax <= 0:
        raise DomainError(
            "convolve: f.tmax must exceed g.tmax (domain-shrinking convention)"
        )
    if out_n is None:
        out_n = max(16, int(round(f.n * out_tmax / f.tmax)))
    if s_segments is None:
        s_segments = max(8, int(np.ceil(g.tmax * 4)))
    edges = np.linspace(0.0, g.tmax, s_segments + 1)
    s_nodes, s_weights = composite_gauss_nodes(edges, s_order)
    gs = np.asarray(g(s_nodes), dtype=complex) * weight_delta(params, s_nodes)
    out_ts = np.linspace(0.0, out_tmax, out_n)
    out_vals = np.empty(out_n, dtype=complex)
    for k, t in enumerate(out_ts):
        tau = _translate_batch(params, f, s_nodes, t, n_r, n_psi)
        out_vals[k] = 2.0 * np.sum(s_weights * gs * tau)
    return GridFunction(out_tmax, out_vals, f.interpolation, valid_tmax=out_tmax)


def convolve_measure(params: JacobiParams, f: GridFunction, mu: EvenMeasure,
                     quad: QuadratureSpec = DEFAULT_QUAD, out_n=None,
                     n_r=32, n_psi=32):
    """(f * mu)(t) = int tau_s f(t) d mu(s) on the shrunken certified domain."""
    reach = mu.reach
    out_tmax = f.tmax - reach
    if out_tmax <= 0:
        raise DomainError(
            f"convolve_measure: measure reach {reach} exhausts the domain "
            f"(f.tmax={f.tmax})"
        )
    if out_n is None:
        out_n = max(16, int(round(f.n * out_tmax / f.tmax)))
    out_ts = np.linspace(0.0, out_tmax, out_n)
    out_vals = np.zeros(out_n, dtype=complex)
    if mu.atom0 != 0:
        out_vals += mu.atom0 * np.asarray(f(out_ts), dtype=complex)
    for t_j, w_j in mu.atoms:
        for k, t in enumerate(out_ts):
            out_vals[k] += w_j * translate(params, f, t_j, t, quad, n_r, n_psi)
    if mu.density is not None:
        s_segments = max(8, int(np.ceil(mu.density.tmax * 4)))
        edges = np.linspace(0.0, mu.density.tmax, s_segments + 1)
        s_nodes, s_weights = composite_gauss_nodes(edges, 10)
        dens = np.asarray(mu.density(s_nodes), dtype=complex)
        if mu.density_measure == "delta-weighted":
            dens = dens * weight_delta(params, s_nodes)
        for k, t in enumerate(out_ts):
            tau = _translate_batch(params, f, s_nodes, t, n_r, n_psi)
            out_vals[k] += 2.0 * np.sum(s_weights * dens * tau)
    return GridFunction(out_tmax, out_vals, f.interpolation, valid_tmax=out_tmax)


def l1_norm(params: JacobiParams, f, quad: QuadratureSpec = DEFAULT_QUAD):
    """Weighted L1 norm int |f| Delta over R."""
    tmax = getattr(f, "tmax", None)
    if tmax is None:
        raise DomainError("l1_norm: f must carry a support bound tmax")
    return float(
        np.real(
            2.0
            * integrate(
                lambda t: np.abs(f(t)) * weight_delta(params, t), 0.0, tmax, quad
            )
        )
    )


def l10_defect(params: JacobiParams, f, quad: QuadratureSpec = DEFAULT_QUAD):
    """int f Delta over R; zero exactly on the L^1_0 subclass (= fhat(i rho))."""
    tmax = getattr(f, "tmax", None)
    if tmax is None:
        raise DomainError("l10_defect: f must carry a support bound tmax")
    return complex(
        2.0 * integrate(lambda t: f(t) * weight_delta(params, t), 0.0, tmax, quad)
    )
