"""Complex Gauss hypergeometric function and complex log-gamma.

Everything else in the library reduces to the two primitives here:
``gauss_2f1`` for real argument z < 1 with complex parameters, and
``log_gamma`` on the cut plane.  A quadrature-based Euler-integral
evaluation of the same hypergeometric function is provided as an
independent cross-check.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
from scipy.special import roots_jacobi

from .errors import DomainError, PrecisionError

MAX_TERMS = 100_000

# Lanczos approximation, g = 7, 9 coefficients.
_LANCZOS_G = 7
_LANCZOS_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)

_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)


def is_nonpositive_integer(z, tol=1e-12):
    """True when z sits (within tol) on {0, -1, -2, ...}."""
    z = complex(z)
    if abs(z.imag) > tol:
        return False
    r = round(z.real)
    return r <= 0 and abs(z.real - r) <= tol


def _near_integer(z, tol=1e-10):
    z = complex(z)
    return abs(z.imag) < tol and abs(z.real - round(z.real)) < tol


def log_gamma(z, tol=1e-12):
    """Principal-branch log Gamma via Lanczos with reflection for Re z < 1/2.

    For Re z < 1/2 the reflection formula may shift the imaginary part by a
    multiple of 2*pi; exp(log_gamma(z)) is always Gamma(z).
    """
    z = complex(z)
    if is_nonpositive_integer(z, tol):
        raise DomainError(f"log_gamma: pole at z={z} (nonpositive integer)")
    if z.real < 0.5:
        return (
            math.log(math.pi)
            - cmath.log(cmath.sin(cmath.pi * z))
            - log_gamma(1.0 - z, tol)
        )
    zm = z - 1.0
    acc = _LANCZOS_COEF[0]
    for k in range(1, len(_LANCZOS_COEF)):
        acc += _LANCZOS_COEF[k] / (zm + k)
    t = zm + _LANCZOS_G + 0.5
    return _HALF_LOG_2PI + (zm + 0.5) * cmath.log(t) - t + cmath.log(acc)


def gamma(z):
    """Gamma(z) through the Lanczos log-gamma."""
    return cmath.exp(log_gamma(z))


def rgamma(z):
    """1/Gamma(z); returns 0 exactly at the poles of Gamma."""
    if is_nonpositive_integer(z):
        return 0.0 + 0.0j
    return cmath.exp(-log_gamma(z))


@dataclass(frozen=True)
class HypergeometricArgs:
    """Parameter bundle (a, b; c; z) of the Gauss hypergeometric function.

    c must avoid {0, -1, -2, ...}; z is real and < 1 (the library never
    touches the branch cut [1, oo)).
    """

    a: complex
    b: complex
    c: complex
    z: float

    def __post_init__(self):
        if is_nonpositive_integer(self.c):
            raise DomainError(f"2F1: c={self.c} is zero or a negative integer")
        if not np.isreal(self.z) and abs(complex(self.z).imag) > 0:
            raise DomainError("2F1: z must be real")
        if float(np.real(self.z)) >= 1.0:
            raise DomainError(f"2F1: z={self.z} lies on the cut [1, oo)")


def _series_2f1(a, b, c, z, tol, max_terms=MAX_TERMS):
    """Power series sum_{n} (a)_n (b)_n / ((c)_n n!) z^n over an array z.

    Stops when the last three terms are each below tol * |partial sum|.
    """
    z = np.atleast_1d(np.asarray(z, dtype=complex))
    term = np.ones_like(z)
    total = np.ones_like(z)
    streak = np.zeros(z.shape, dtype=np.int64)
    for n in range(max_terms):
        term = term * ((a + n) * (b + n) / ((c + n) * (n + 1.0))) * z
        total = total + term
        small = np.abs(term) <= tol * np.maximum(np.abs(total), 1e-300)
        streak = np.where(small, streak + 1, 0)
        if np.all(streak >= 3):
            return total
    worst = float(np.max(np.abs(term) / np.maximum(np.abs(total), 1e-300)))
    raise PrecisionError(
        f"2F1 series: no convergence within {max_terms} terms "
        f"(worst relative term {worst:.2e})",
        achieved=worst,
    )


# Above this size of |a * b * z| the alternating series loses too many
# digits to cancellation (large |Im a| = |Im b|); switch to arbitrary
# precision for the affected nodes only.
_CANCEL_LIMIT = 100.0


def _mp_2f1(a, b, c, z_vals):
    """Arbitrary-precision fallback for cancellation-heavy arguments."""
    import mpmath as mp

    out = np.empty(np.shape(z_vals), dtype=complex)
    with mp.workdps(40):
        for i, zv in enumerate(np.atleast_1d(z_vals)):
            out[i] = complex(mp.hyp2f1(a, b, c, float(zv)))
    return out


def _pow_real_base(x, p):
    """x**p for array x > 0 and complex exponent p."""
    return np.exp(np.asarray(p) * np.log(np.asarray(x, dtype=float)))


def _pfaff_2f1(a, b, c, z, tol):
    """Pfaff transform: (1-z)^(-a) 2F1(a, c-b; c; z/(z-1)) for z < 0."""
    z = np.atleast_1d(np.asarray(z, dtype=float))
    w = z / (z - 1.0)
    return _pow_real_base(1.0 - z, -a) * _series_2f1(a, c - b, c, w, tol)


def _invz_2f1(a, b, c, z, tol):
    """Two-term z -> 1/z connection for large negative z; needs a-b not integer."""
    if _near_integer(a - b, 1e-8):
        raise PrecisionError(
            f"2F1: 1/z connection degenerate (a-b={a - b} near integer)"
        )
    z = np.atleast_1d(np.asarray(z, dtype=float))
    inv = 1.0 / z
    coef_a = gamma(complex(c)) * gamma(b - a) * rgamma(b) * rgamma(c - a)
    coef_b = gamma(complex(c)) * gamma(a - b) * rgamma(a) * rgamma(c - b)
    out = np.zeros_like(z, dtype=complex)
    if coef_a != 0:
        out += coef_a * _pow_real_base(-z, -a) * _series_2f1(
            a, a - c + 1.0, a - b + 1.0, inv, tol
        )
    if coef_b != 0:
        out += coef_b * _pow_real_base(-z, -b) * _series_2f1(
            b, b - c + 1.0, b - a + 1.0, inv, tol
        )
    return out


def gauss_2f1_array(a, b, c, z, tol=1e-12):
    """2F1(a, b; c; z) for fixed complex parameters over a real array z < 1.

    Direct series for z >= -0.5, Pfaff continuation on (-4, -0.5), and the
    1/z connection below; falls back to Pfaff when a-b is integral (slower,
    still convergent for the arguments this library produces).
    """
    a = complex(a)
    b = complex(b)
    c = complex(c)
    if is_nonpositive_integer(c):
        raise DomainError(f"2F1: c={c} is zero or a negative integer")
    z = np.atleast_1d(np.asarray(z, dtype=float))
    if np.any(z >= 1.0):
        raise DomainError("2F1: argument on the cut [1, oo)")
    out = np.empty(z.shape, dtype=complex)
    if a == 0 or b == 0:
        out[:] = 1.0
        return out
    near = z >= -0.5
    mid = (~near) & (z > -4.0)
    far = z <= -4.0
    if np.any(near):
        zn = z[near]
        hard = np.abs(a * b) * np.abs(zn) > _CANCEL_LIMIT
        res = np.empty(zn.shape, dtype=complex)
        if np.any(~hard):
            res[~hard] = _series_2f1(a, b, c, zn[~hard], tol)
        if np.any(hard):
            res[hard] = _mp_2f1(a, b, c, zn[hard])
        out[near] = res
    if np.any(mid):
        zm = z[mid]
        w_abs = np.abs(zm / (zm - 1.0))
        hard = np.abs(a * (c - b)) * w_abs > _CANCEL_LIMIT
        res = np.empty(zm.shape, dtype=complex)
        if np.any(~hard):
            res[~hard] = _pfaff_2f1(a, b, c, zm[~hard], tol)
        if np.any(hard):
            res[hard] = _mp_2f1(a, b, c, zm[hard])
        out[mid] = res
    if np.any(far):
        if _near_integer(a - b, 1e-8):
            zf = z[far]
            moderate = zf >= -19.0
            res = np.empty(zf.shape, dtype=complex)
            if np.any(moderate):
                res[moderate] = _pfaff_2f1(a, b, c, zf[moderate], tol)
            if np.any(~moderate):
                res[~moderate] = _invz_degenerate(a, b, c, zf[~moderate], tol)
            out[far] = res
        else:
            out[far] = _invz_2f1(a, b, c, z[far], tol)
    return out


def _invz_degenerate(a, b, c, z, tol, eps=1e-4):
    """1/z connection at integral a-b via Richardson-extrapolated detours.

    2F1 is analytic in a; symmetric +-eps averages kill the odd error terms
    and one Richardson step the eps^2 term, leaving ~1e-11 relative error
    from the cancellation inside the detoured connection formulas.
    """

    def sym(h):
        return 0.5 * (
            _invz_2f1(a + h, b, c, z, tol) + _invz_2f1(a - h, b, c, z, tol)
        )

    return (4.0 * sym(eps) - sym(2.0 * eps)) / 3.0


def gauss_2f1(a, b, c, z, tol=1e-12):
    """Scalar 2F1(a, b; c; z), z real < 1, complex parameters."""
    if tol <= 0:
        raise DomainError("2F1: tol must be positive")
    return complex(gauss_2f1_array(a, b, c, [float(np.real(z))], tol)[0])


# --- connection at z near 1 (w = 1 - z), used by the second-kind solution ---

def hyp2f1_near_one(a, b, c, w, tol=1e-12):
    """2F1(a, b; c; 1-w) through the w-expansion, for array w in (0, 1).

    Uses the two-term connection formula when c-a-b is not an integer and
    the logarithmic expansion when c-a-b is a (near-)integer.  The integer
    case is reduced to s = a+b-c in {0, 1, 2, ...} via the Euler transform.
    """
    a = complex(a)
    b = complex(b)
    c = complex(c)
    w = np.atleast_1d(np.asarray(w, dtype=float))
    if np.any((w <= 0) | (w >= 1)):
        raise DomainError("hyp2f1_near_one: w must lie in (0, 1)")
    s = c - a - b
    if not _near_integer(s, 1e-9):
        coef1 = gamma(c) * gamma(s) * rgamma(c - a) * rgamma(c - b)
        coef2 = gamma(c) * gamma(-s) * rgamma(a) * rgamma(b)
        t1 = coef1 * _series_2f1(a, b, 1.0 - s, w, tol)
        t2 = coef2 * _pow_real_base(w, s) * _series_2f1(c - a, c - b, 1.0 + s, w, tol)
        return t1 + t2
    m = round(s.real)
    if m >= 0:
        return _hyp2f1_log_case(a, b, m, w, tol)
    # Euler transform flips the sign of c-a-b.
    return _pow_real_base(w, s) * _hyp2f1_log_case(c - a, c - b, -m, w, tol)


def _digamma(z):
    from scipy.special import psi

    return complex(psi(complex(z)))


def _hyp2f1_log_case(a, b, m, w, tol):
    """2F1(a, b; a+b+m; 1-w) for integer m >= 0, array w in (0, 1).

    DLMF 15.8.10; requires a, b not nonpositive integers (true for all
    spectral parameters produced upstream).
    """
    if is_nonpositive_integer(a) or is_nonpositive_integer(b):
        raise DomainError("log-case 2F1: a or b is a nonpositive integer")
    c = a + b + m
    w = np.asarray(w, dtype=float)
    logw = np.log(w)
    out = np.zeros(w.shape, dtype=complex)
    # Finite part (empty when m == 0).
    if m > 0:
        coef = gamma(float(m)) * gamma(c) * rgamma(a + m) * rgamma(b + m)
        term = np.ones(w.shape, dtype=complex)
        acc = term.copy()
        for k in range(1, m):
            term = term * ((a + k - 1.0) * (b + k - 1.0) / (k * (k - m))) * w
            acc += term
        out += coef * acc
    # Logarithmic series.
    coef = -((-1.0) ** m) * gamma(c) * rgamma(a) * rgamma(b)
    pref = coef * w**m
    term = np.ones(w.shape, dtype=complex) / math.factorial(m)
    total = np.zeros(w.shape, dtype=complex)
    streak = 0
    for k in range(MAX_TERMS):
        psi_sum = (
            _digamma(k + 1.0)
            + _digamma(k + m + 1.0)
            - _digamma(a + k + m)
            - _digamma(b + k + m)
        )
        contrib = term * (logw - psi_sum)
        total += contrib
        scale = np.maximum(np.abs(total), 1e-300)
        if np.all(np.abs(contrib) <= tol * scale):
            streak += 1
            if streak >= 3:
                break
        else:
            streak = 0
        term = term * ((a + m + k) * (b + m + k) / ((k + 1.0) * (k + m + 1.0))) * w
    else:
        raise PrecisionError("log-case 2F1: series did not converge")
    return out + pref * total


def euler_integral_2f1(a, b, c, z, n_nodes=192, tol=1e-10):
    """Quadrature of the Euler integral representation of 2F1.

    Gamma(c)/(Gamma(b)Gamma(c-b)) * int_0^1 s^(b-1) (1-s)^(c-b-1) (1-sz)^(-a) ds,
    valid for Re c > Re b > 0 and z < 1.  Gauss-Jacobi nodes absorb the
    endpoint singularities; the node count is doubled once as an internal
    consistency check.
    """
    a = complex(a)
    b = complex(b)
    c = complex(c)
    z = float(np.real(z))
    if not (c.real > b.real > 0):
        raise DomainError("euler_integral_2f1 requires Re c > Re b > 0")
    if z >= 1.0:
        raise DomainError("euler_integral_2f1: z on the cut [1, oo)")

    def estimate(n):
        # weight (1-x)^(Re(c-b)-1) (1+x)^(Re b - 1) on [-1, 1], s=(1+x)/2
        xj, wj = roots_jacobi(n, (c - b).real - 1.0, b.real - 1.0)
        s = 0.5 * (1.0 + xj)
        onems = 0.5 * (1.0 - xj)
        rest = np.exp(
            1j * b.imag * np.log(s)
            + 1j * (c - b).imag * np.log(onems)
            - a * np.log(1.0 - s * z)
        )
        scale = 2.0 ** (-(b.real - 1.0) - ((c - b).real - 1.0) - 1.0)
        return scale * np.sum(wj * rest)

    coarse = estimate(n_nodes)
    fine = estimate(2 * n_nodes)
    err = abs(fine - coarse)
    if err > max(tol, 1e-8) * max(1.0, abs(fine)):
        raise PrecisionError(
            f"euler_integral_2f1: quadrature not converged (delta {err:.2e})",
            achieved=err,
        )
    norm = cmath.exp(log_gamma(c) - log_gamma(b) - log_gamma(c - b))
    return norm * fine
