"""Resolvent kernels: b_lambda, its transform identity, and T_lambda f.

b_lambda is the second-kind solution normalized so its transform is the
resolvent factor 1/(xi^2 - lambda^2); T_lambda f extends the construction
into the strip interior, where b_lambda itself leaves L^1.
"""

import numpy as np

from fourierjacobi import (
    JacobiParams,
    TLambdaOperator,
    b_hat,
    b_hat_exact,
    b_l1_norm,
    forward_transform,
    gaussian_bump,
    t_lambda_hat,
    wronskian_bracket,
    wronskian_exact,
)

p = JacobiParams(1.0, 0.0)
lam = 0.4 + 1j * (p.rho + 0.8)

print(f"b_lambda transform identity at lam = {lam} (Im lam > rho = {p.rho}):")
for xi in (0.0, 1.0, 3.0):
    got = b_hat(p, lam, xi)
    want = b_hat_exact(lam, xi)
    print(f"  xi={xi}: bhat = {got:.8f}  closed form {want:.8f}  |err| {abs(got - want):.1e}")

print(f"\nweighted L1 norm of b_lambda: {b_l1_norm(p, lam):.6f} (finite iff Im lam > rho)")

lam2 = 0.9 + 0.3j
print(f"\nWronskian [phi, Phi](t) is constant = 2 i lam c(-lam), lam = {lam2}:")
want = wronskian_exact(p, lam2)
for t in (0.3, 1.0, 3.0):
    got = wronskian_bracket(p, lam2, t)
    print(f"  t={t}: {got:.10f}  |err| = {abs(got - want):.1e}")

f = gaussian_bump(8.0, 1025, width=1.0, center=1.5)
lam3 = 0.5 + 1j * 0.6 * p.rho
op = TLambdaOperator(p, f, lam3)
print(f"\nT_lambda f spectral identity at lam = {lam3} (strip interior):")
for xi in (0.0, 1.3, 2.0 + 0.3j):
    xi = complex(xi)
    got = t_lambda_hat(p, op, lam3, xi)
    want = (op.fhat_lam - forward_transform(p, f, xi)) / (xi * xi - lam3 * lam3)
    print(f"  xi={xi}: |That - (fhat(lam)-fhat(xi))/(xi^2-lam^2)| = {abs(got - want):.1e}")
