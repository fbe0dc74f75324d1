"""Forward transform, Plancherel inversion, and Riemann-Lebesgue decay.

Transforms a smooth even bump, inverts the transform against the
Plancherel density |c(lam)|^-2, and watches |fhat| decay along the real
axis.
"""

import numpy as np

from fourierjacobi import (
    JacobiParams,
    forward_transform,
    gaussian_bump,
    inverse_transform,
    inversion_tail_estimate,
    plancherel_density,
    riemann_lebesgue_check,
)

p = JacobiParams(1.0, 0.0)
f = gaussian_bump(8.0, 1025, width=1.0)

print("transform of a width-1 Gaussian bump at (alpha, beta) = (1, 0):")
for lam in (0.0, 1.0, 3.0, 6.0):
    print(f"  fhat({lam}) = {forward_transform(p, f, lam).real:+.8f}")

print("\nPlancherel density |c|^-2 (vanishes quadratically at 0):")
for lam in (0.0, 0.5, 2.0, 8.0):
    print(f"  |c({lam})|^-2 = {plancherel_density(p, lam):.6f}")


def fhat(lams):
    return np.array([forward_transform(p, f, complex(x)) for x in np.atleast_1d(lams)])


lam_max = 16.0
tail = inversion_tail_estimate(p, lambda x: forward_transform(p, f, x), lam_max)
ts = np.array([0.0, 0.5, 1.0, 2.0, 3.5])
recon = inverse_transform(p, fhat, ts, lambda_max=lam_max)
print(f"\ninversion roundtrip (lambda_max={lam_max}, tail estimate {tail:.1e}):")
for t, v in zip(ts, recon):
    print(f"  t={t}: f={f(t).real:+.8f}  reconstructed={v.real:+.8f}  |err|={abs(v - f(t)):.2e}")

values, monotone = riemann_lebesgue_check(p, gaussian_bump(8.0, 1025, width=0.5),
                                          [10.0, 12.0, 14.0, 16.0])
print("\nRiemann-Lebesgue decay of a narrow bump:")
for lam, v in zip([10, 12, 14, 16], values):
    print(f"  |fhat({lam})| = {v:.3e}")
print(f"  strictly decreasing: {monotone}")
