"""Jacobi functions, the c-function, the weight, and their operators.

The function of the first kind phi is the even eigenfunction of the Jacobi
operator L with eigenvalue -(lambda^2 + rho^2) normalized to 1 at the
origin; Phi is the second-kind solution on (0, oo) with pure exponential
behaviour at infinity; G is the nonsymmetric eigenfunction of the
differential-difference operator T whose even part is phi.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .special import (
    gauss_2f1_array,
    hyp2f1_near_one,
    is_nonpositive_integer,
    log_gamma,
    rgamma,
)

_PHI2K_SPLIT = 0.7  # t-threshold between the sech^2 series and the 1-z expansion


@dataclass(frozen=True)
class JacobiParams:
    """Parameter pair (alpha, beta) with alpha >= beta >= -1/2, alpha != -1/2."""

    alpha: float
    beta: float

    def __post_init__(self):
        if not (self.alpha >= self.beta >= -0.5):
            raise DomainError(
                f"JacobiParams requires alpha >= beta >= -1/2, got "
                f"({self.alpha}, {self.beta})"
            )
        if self.alpha == -0.5:
            raise DomainError("JacobiParams requires alpha != -1/2")
        if not self.rho > 0:
            raise DomainError("JacobiParams: rho = alpha + beta + 1 must be > 0")

    @property
    def rho(self) -> float:
        return self.alpha + self.beta + 1.0


STRIP_TIE_TOL = 1e-12


def strip_region(params: JacobiParams, lam, tie_tol=STRIP_TIE_TOL) -> str:
    """Classify a spectral point against the strip |Im lambda| <= rho.

    Returns "interior", "boundary", or "exterior"; ties within tie_tol of
    the boundary count as boundary.
    """
    gap = abs(complex(lam).imag) - params.rho
    if abs(gap) <= tie_tol:
        return "boundary"
    return "interior" if gap < 0 else "exterior"


@dataclass(frozen=True)
class SpectralPoint:
    """A complex spectral parameter with strip classification."""

    value: complex

    def region(self, params: JacobiParams, tie_tol=STRIP_TIE_TOL) -> str:
        return strip_region(params, self.value, tie_tol)


def in_strip(params: JacobiParams, lam, tie_tol=STRIP_TIE_TOL) -> bool:
    return strip_region(params, lam, tie_tol) != "exterior"


def weight_delta(params: JacobiParams, t):
    """Weight (2|sinh t|)^(2a+1) (2cosh t)^(2b+1); vectorized over t."""
    t = np.asarray(t, dtype=float)
    sh = 2.0 * np.abs(np.sinh(t))
    ch = 2.0 * np.cosh(t)
    out = sh ** (2.0 * params.alpha + 1.0) * ch ** (2.0 * params.beta + 1.0)
    return out if out.shape else float(out)


def phi(params: JacobiParams, lam, t, tol=1e-12):
    """Jacobi function of the first kind; even in t and in lambda.

    phi_lam(t) = 2F1((rho - i lam)/2, (rho + i lam)/2; alpha + 1; -sinh^2 t).
    Accepts scalar or array t.
    """
    lam = complex(lam)
    t = np.asarray(t, dtype=float)
    scalar = t.ndim == 0
    z = -np.sinh(np.atleast_1d(t)) ** 2
    a = (params.rho - 1j * lam) / 2.0
    b = (params.rho + 1j * lam) / 2.0
    out = gauss_2f1_array(a, b, params.alpha + 1.0, z, tol)
    return complex(out[0]) if scalar else out


def _forbidden_second_kind(lam):
    # lambda in {-i, -2i, ...} makes c = 1 - i*lambda a nonpositive integer
    return is_nonpositive_integer(1.0 - 1j * complex(lam))


def phi_second_kind(params: JacobiParams, lam, t, tol=1e-12):
    """Second-kind solution Phi_lam on (0, oo), singular at t = 0.

    Evaluated from the sech^2 hypergeometric series for t >= 0.7 and from
    the 1-z connection expansion (argument tanh^2 t) below, which stays
    convergent down to t -> 0 including integer alpha (log case).
    """
    lam = complex(lam)
    if _forbidden_second_kind(lam):
        raise DomainError(f"phi_second_kind: lambda={lam} in the excluded set -iN")
    t = np.asarray(t, dtype=float)
    scalar = t.ndim == 0
    t = np.atleast_1d(t)
    if np.any(t <= 0):
        raise DomainError("phi_second_kind requires t > 0")
    rho = params.rho
    a = (rho - 1j * lam) / 2.0
    b = (params.alpha - params.beta + 1.0 - 1j * lam) / 2.0
    c = 1.0 - 1j * lam
    out = np.empty(t.shape, dtype=complex)
    pref = np.exp((1j * lam - rho) * np.log(2.0 * np.cosh(t)))
    large = t >= _PHI2K_SPLIT
    if np.any(large):
        z = np.cosh(t[large]) ** -2.0
        out[large] = pref[large] * gauss_2f1_array(a, b, c, z, tol)
    if np.any(~large):
        w = np.tanh(t[~large]) ** 2
        out[~large] = pref[~large] * hyp2f1_near_one(a, b, c, w, tol)
    return complex(out[0]) if scalar else out


def phi_second_kind_sinh_form(params: JacobiParams, lam, t, tol=1e-12):
    """Alternative sinh-form of Phi_lam; cross-check oracle for moderate t."""
    lam = complex(lam)
    if _forbidden_second_kind(lam):
        raise DomainError(f"phi_second_kind: lambda={lam} in the excluded set -iN")
    t = np.asarray(t, dtype=float)
    scalar = t.ndim == 0
    t = np.atleast_1d(t)
    if np.any(t <= 0):
        raise DomainError("phi_second_kind requires t > 0")
    rho = params.rho
    a = (rho - 1j * lam) / 2.0
    b = (params.beta - params.alpha + 1.0 - 1j * lam) / 2.0
    c = 1.0 - 1j * lam
    z = -np.sinh(t) ** -2.0
    pref = np.exp((1j * lam - rho) * np.log(2.0 * np.sinh(t)))
    out = pref * gauss_2f1_array(a, b, c, z, tol)
    return complex(out[0]) if scalar else out


def c_function(params: JacobiParams, lam):
    """Harish-Chandra c-function, normalized so that c(-i rho) = 1.

    c(lam) = 2^(rho - i lam) Gamma(a+1) Gamma(i lam)
             / (Gamma((rho + i lam)/2) Gamma((i lam + a - b + 1)/2)).
    """
    lam = complex(lam)
    il = 1j * lam
    if is_nonpositive_integer(il):
        raise DomainError(
            f"c_function: Gamma(i*lambda) pole at lambda={lam} (i*lambda={il})"
        )
    rho = params.rho
    log_num = (rho - il) * math.log(2.0) + log_gamma(params.alpha + 1.0) + log_gamma(il)
    den1 = (rho + il) / 2.0
    den2 = (il + params.alpha - params.beta + 1.0) / 2.0
    # Denominator Gamma poles are ordinary zeros of c.
    r1 = rgamma(den1)
    r2 = rgamma(den2)
    return cmath.exp(log_num) * r1 * r2


def heckman_opdam_g(params: JacobiParams, lam, x, tol=1e-12):
    """Heckman-Opdam eigenfunction G_lam on R (not even).

    G(x) = phi(x) + (rho + i lam)/(4(alpha+1)) sinh(2x) phi^(a+1,b+1)(x).
    """
    lam = complex(lam)
    x = np.asarray(x, dtype=float)
    shifted = JacobiParams(params.alpha + 1.0, params.beta + 1.0)
    coef = (params.rho + 1j * lam) / (4.0 * (params.alpha + 1.0))
    out = phi(params, lam, np.abs(x), tol) + coef * np.sinh(2.0 * x) * phi(
        shifted, lam, np.abs(x), tol
    )
    return complex(out) if x.ndim == 0 else out


def _coefficient(params: JacobiParams, t):
    return (2.0 * params.alpha + 1.0) / np.tanh(t) + (
        2.0 * params.beta + 1.0
    ) * np.tanh(t)


def _as_callable(f):
    if callable(f):
        return f
    raise TypeError("expected a callable or GridFunction-like object")


_FD_H = 1e-3
# 5-point central stencils
_D1 = np.array([1.0, -8.0, 0.0, 8.0, -1.0]) / 12.0
_D2 = np.array([-1.0, 16.0, -30.0, 16.0, -1.0]) / 12.0


def _stencil_values(func, t, h):
    offsets = np.array([-2.0, -1.0, 0.0, 1.0, 2.0]) * h
    return np.array([complex(func(t + o)) for o in offsets])


def apply_L(params: JacobiParams, f, t, h=_FD_H):
    """Second-order Jacobi operator L applied to f at t by finite differences.

    f may be a GridFunction or any callable defined near t.  Refuses t
    within 2h of the origin (coth singularity) or outside the grid.
    """
    func = f if callable(f) else _as_callable(f)
    t = float(t)
    if t < 2.0 * h:
        raise DomainError(f"apply_L: t={t} too close to the coth singularity at 0")
    tmax = getattr(f, "tmax", None)
    if tmax is not None and t + 2.0 * h > tmax:
        raise DomainError(f"apply_L: t={t} within 2h of the grid edge")
    v = _stencil_values(func, t, h)
    d1 = np.dot(_D1, v) / h
    d2 = np.dot(_D2, v) / h**2
    return d2 + _coefficient(params, t) * d1


def apply_cherednik_T(params: JacobiParams, f, t, h=_FD_H):
    """Differential-difference operator T applied to f at t.

    T f(t) = f'(t) + coeff(t) (f(t)-f(-t))/2 - rho f(-t); f must be defined
    on both signs of t (callable, or an even GridFunction).
    """
    func = f if callable(f) else _as_callable(f)
    t = float(t)
    if abs(t) < 2.0 * h:
        raise DomainError(f"apply_cherednik_T: |t|={abs(t)} too close to 0")
    tmax = getattr(f, "tmax", None)
    if tmax is not None and abs(t) + 2.0 * h > tmax:
        raise DomainError("apply_cherednik_T: t within 2h of the grid edge")
    v = _stencil_values(func, t, h)
    d1 = np.dot(_D1, v) / h
    ft = complex(func(t))
    fmt = complex(func(-t))
    return d1 + _coefficient(params, t) * 0.5 * (ft - fmt) - params.rho * fmt


def phi_dx_at_rho(params: JacobiParams, t, h=1e-4, tol=1e-12):
    """d/dx phi_{ix}(t) at x = rho, by Richardson-extrapolated differences.

    Strictly positive for t > 0.
    """
    t = float(t)
    if t <= 0:
        raise DomainError("phi_dx_at_rho requires t > 0")

    def diff(step):
        hi = phi(params, 1j * (params.rho + step), t, tol).real
        lo = phi(params, 1j * (params.rho - step), t, tol).real
        return (hi - lo) / (2.0 * step)

    d_h = diff(h)
    d_h2 = diff(h / 2.0)
    return (4.0 * d_h2 - d_h) / 3.0


def phi_dx_at_rho_closed_form(params: JacobiParams, t, n_nodes=80, tol=1e-12):
    """Closed-form route to d/dx phi_{ix}(t)|_{x=rho}.

    Integrates g'(u) = rho sinh(2u)/(2(alpha+1)) 2F1(rho+1, 1; alpha+2;
    -sinh^2 u) from 0 to t (the chain-rule form of the parameter
    derivative; the finite-difference value is the ground truth it is
    checked against).
    """
    t = float(t)
    if t <= 0:
        raise DomainError("phi_dx_at_rho requires t > 0")
    x, w = np.polynomial.legendre.leggauss(n_nodes)
    u = 0.5 * t * (x + 1.0)
    wu = 0.5 * t * w
    vals = gauss_2f1_array(
        params.rho + 1.0, 1.0, params.alpha + 2.0, -np.sinh(u) ** 2, tol
    ).real
    integrand = params.rho * np.sinh(2.0 * u) / (2.0 * (params.alpha + 1.0)) * vals
    return float(np.sum(wu * integrand))
