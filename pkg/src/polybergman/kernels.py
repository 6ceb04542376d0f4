"""Reproducing kernels of the weighted poly-Bergman spaces on the disk.

``K_{n,z}(w)`` reproduces point evaluation at ``z`` in ``A^2_n(D, mu_alpha)``::

    K_{n,z}(w) = (1 - conj(w) z)^{n-1} / (1 - conj(z) w)^{n+1+alpha}
                 * R_{n-1}^{(alpha,0)}(|(z - w) / (1 - conj(z) w)|^2)

The complex power uses the principal branch; ``Re(1 - conj(z) w) > 0`` on the
disk so it is continuous there.
"""
from __future__ import annotations

import math

import numpy as np

from .disk import (
    DEFAULT_ANGULAR_ORDER,
    DEFAULT_RADIAL_ORDER,
    basis_indices_An,
    eval_disk_poly,
    polar_grid,
)
from .jacobi import eval_reproducing_poly

__all__ = [
    "eval_poly_bergman_kernel",
    "eval_true_poly_kernel",
    "kernel_norm",
    "kernel_norm_quadrature",
    "kernel_via_basis",
    "weighted_mean_value",
]


def _check(alpha, n, *points):
    if not alpha > -1:
        raise ValueError(f"alpha must exceed -1, got {alpha}")
    if int(n) != n or n < 0:
        raise ValueError(f"n must be a nonnegative integer, got {n!r}")
    for pt in points:
        if np.any(np.abs(pt) >= 1):
            raise ValueError("points must lie in the open unit disk")


def _finish(values, *inputs):
    if all(np.ndim(x) == 0 for x in inputs):
        return complex(values)
    return values


def eval_poly_bergman_kernel(alpha, n, z, w):
    """Closed-form ``K_{n,z}(w)``; ``n = 0`` gives the zero kernel."""
    _check(alpha, n, z, w)
    za = np.asarray(z, dtype=complex)
    wa = np.asarray(w, dtype=complex)
    if n == 0:
        return _finish(np.zeros(np.broadcast(za, wa).shape, dtype=complex), z, w)
    den = 1.0 - np.conj(za) * wa
    num = 1.0 - np.conj(wa) * za
    s = np.abs((za - wa) / den) ** 2
    vals = num ** (n - 1) * den ** (-(n + 1 + alpha)) * eval_reproducing_poly(n - 1, alpha, 0.0, s)
    return _finish(vals, z, w)


def eval_true_poly_kernel(alpha, n, z, w):
    """Kernel of the true-polyanalytic space: ``K_{n,z} - K_{n-1,z}``."""
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    vals = np.asarray(eval_poly_bergman_kernel(alpha, n, z, w)) - np.asarray(
        eval_poly_bergman_kernel(alpha, n - 1, z, w)
    )
    return _finish(vals, z, w)


def kernel_norm(alpha, n, z):
    """``||K_{n,z}|| = sqrt(K_{n,z}(z))`` in closed form.

    ``R_{n-1}^{(alpha,0)}(0) = n (n + alpha) / (alpha + 1)``, hence
    ``||K_{n,z}||^2 = n (n + alpha) / (alpha + 1) / (1 - |z|^2)^(alpha + 2)``.
    """
    _check(alpha, n, z)
    r2 = np.abs(np.asarray(z)) ** 2
    vals = math.sqrt(n * (n + alpha) / (alpha + 1)) * (1.0 - r2) ** (-(alpha + 2) / 2)
    return float(vals) if np.ndim(z) == 0 else vals


def kernel_norm_quadrature(alpha, n, z, radial_order=DEFAULT_RADIAL_ORDER, angular_order=DEFAULT_ANGULAR_ORDER):
    """``||K_{n,z}||`` from polar quadrature of ``|K_{n,z}(w)|^2``."""
    grid, wts = polar_grid(alpha, radial_order, angular_order)
    vals = eval_poly_bergman_kernel(alpha, n, z, grid)
    return math.sqrt(float(np.sum(wts * np.abs(vals) ** 2)))


def kernel_via_basis(alpha, n, z, w, max_p):
    """Truncated expansion ``sum_{p <= max_p, q < n} b_{p,q}(w) conj(b_{p,q}(z))``."""
    _check(alpha, n, z, w)
    total = 0
    for p, q in basis_indices_An(n, max_p):
        total = total + np.asarray(eval_disk_poly(alpha, p, q, w)) * np.conj(eval_disk_poly(alpha, p, q, z))
    return _finish(total, z, w)


def weighted_mean_value(alpha, n, f, radial_order=DEFAULT_RADIAL_ORDER, angular_order=DEFAULT_ANGULAR_ORDER):
    """Quadrature value of ``int f(z) R_{n-1}^{(alpha,0)}(|z|^2) dmu_alpha(z)``.

    Equals ``f(0)`` whenever ``f`` is ``n``-analytic and integrable.
    """
    grid, wts = polar_grid(alpha, radial_order, angular_order)
    rep = eval_reproducing_poly(n - 1, alpha, 0.0, np.abs(grid) ** 2)
    vals = np.asarray(f(grid)) * rep
    if not np.all(np.isfinite(vals)):
        raise ValueError("integrand is not finite on the quadrature grid")
    return complex(np.sum(wts * vals))
