"""Disk polynomials ``b^alpha_{p,q}`` and polar quadrature on the unit disk.

The measure is the normalized radial weight
``dmu_alpha = (alpha+1)/pi (1-|z|^2)^alpha dA``, so ``mu_alpha(D) = 1``.
``b^alpha_{p,q}`` is the orthonormalization of ``z^p zbar^q``; ``p - q`` is
its *frequency* ``xi``.
"""
from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .jacobi import eval_shifted_jacobi, norm_coef
from .quadrature import beta_function, gauss_jacobi_rule

__all__ = [
    "BasisIndex",
    "SpaceSpec",
    "DEFAULT_RADIAL_ORDER",
    "DEFAULT_ANGULAR_ORDER",
    "eval_disk_poly",
    "eval_monomial",
    "disk_poly_monomial_coeffs",
    "eval_disk_poly_expansion",
    "monomial_inner_product",
    "monomial_disk_poly_product",
    "polar_grid",
    "disk_inner_product",
    "gram_matrix",
    "basis_indices_An",
    "basis_indices_freq",
    "freq_labels",
    "project_to_freq",
]

DEFAULT_RADIAL_ORDER = 64
DEFAULT_ANGULAR_ORDER = 256


class BasisIndex(NamedTuple):
    p: int
    q: int

    @property
    def xi(self):
        return self.p - self.q


@dataclass(frozen=True)
class SpaceSpec:
    """Weight exponent and polyanalyticity order of ``A^2_n(D, mu_alpha)``."""

    alpha: float
    n: int

    def __post_init__(self):
        if not self.alpha > -1:
            raise ValueError(f"alpha must exceed -1, got {self.alpha}")
        if int(self.n) != self.n or self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n!r}")


def _check_disk(z):
    if np.any(np.abs(z) >= 1):
        raise ValueError("points must lie in the open unit disk")


def _finish(values, z):
    if np.ndim(z) == 0:
        return complex(values)
    return values


def eval_disk_poly(alpha, p, q, z):
    r"""Evaluate :math:`b^\alpha_{p,q}(z)` through its shifted-Jacobi form.

    ``z^{p-q}`` (or ``zbar^{q-p}``) carries the factor :math:`r^{|p-q|}\tau^{p-q}`,
    which is continuous at the origin and vanishes there when ``p != q``.
    """
    if not alpha > -1:
        raise ValueError(f"alpha must exceed -1, got {alpha}")
    za = np.asarray(z, dtype=complex)
    _check_disk(za)
    m, d = min(p, q), abs(p - q)
    phase = za ** (p - q) if p >= q else np.conj(za) ** (q - p)
    radial = eval_shifted_jacobi(m, alpha, d, (za * np.conj(za)).real)
    c = norm_coef(m, alpha, d) / math.sqrt(alpha + 1)
    return _finish(c * phase * radial, z)


def eval_monomial(p, q, z):
    za = np.asarray(z, dtype=complex)
    return _finish(za**p * np.conj(za) ** q, z)


def disk_poly_monomial_coeffs(alpha, p, q):
    """Coefficients of ``b^alpha_{p,q}`` in the monomials ``z^{p-k} zbar^{q-k}``.

    Returns ``[(k, c_k), ...]`` for ``k = 0 .. min(p, q)``; ``c_0 > 0``.
    """
    lead = 0.5 * (
        math.log(alpha + p + q + 1)
        + math.lgamma(p + 1)
        + math.lgamma(q + 1)
        - math.log(alpha + 1)
        - math.lgamma(alpha + p + 1)
        - math.lgamma(alpha + q + 1)
    )
    out = []
    for k in range(min(p, q) + 1):
        log_c = (
            lead
            + math.lgamma(alpha + p + q + 1 - k)
            - math.lgamma(k + 1)
            - math.lgamma(p - k + 1)
            - math.lgamma(q - k + 1)
        )
        out.append((k, (-1) ** k * math.exp(log_c)))
    return out


def eval_disk_poly_expansion(alpha, p, q, z):
    """Evaluate ``b^alpha_{p,q}`` by summing its monomial expansion."""
    za = np.asarray(z, dtype=complex)
    total = sum(c * za ** (p - k) * np.conj(za) ** (q - k) for k, c in disk_poly_monomial_coeffs(alpha, p, q))
    return _finish(total, z)


def monomial_inner_product(alpha, p, q, j, k):
    """Closed form of ``<z^p zbar^q, z^j zbar^k>`` in ``L^2(D, mu_alpha)``."""
    if p - q != j - k:
        return 0.0
    return (alpha + 1) * beta_function(p + k + 1, alpha + 1)


def monomial_disk_poly_product(alpha, p, q, j, k):
    """Closed form of ``<z^p zbar^q, b^alpha_{j,k}>`` (no quadrature)."""
    return sum(
        c * monomial_inner_product(alpha, p, q, j - nu, k - nu)
        for nu, c in disk_poly_monomial_coeffs(alpha, j, k)
    )


@functools.lru_cache(maxsize=64)
def _polar_grid(alpha, radial_order, angular_order):
    rule = gauss_jacobi_rule(radial_order, (alpha, 0.0))
    r = np.sqrt(rule.nodes)
    theta = 2 * np.pi * np.arange(angular_order) / angular_order
    z = r[:, None] * np.exp(1j * theta)[None, :]
    # (alpha+1) (1-t)^alpha dt  x  dtheta / 2pi
    w = np.repeat(((alpha + 1) * rule.weights / angular_order)[:, None], angular_order, axis=1)
    z.setflags(write=False)
    w.setflags(write=False)
    return z, w


def polar_grid(alpha, radial_order=DEFAULT_RADIAL_ORDER, angular_order=DEFAULT_ANGULAR_ORDER):
    """Tensor-product nodes ``z`` and weights ``w`` (summing to 1) for ``mu_alpha``.

    Radially a Gauss-Jacobi rule in ``t = r^2``; in the angle the equispaced
    trapezoid rule, exact for trigonometric polynomials of degree
    ``< angular_order``.
    """
    return _polar_grid(float(alpha), int(radial_order), int(angular_order))


def disk_inner_product(alpha, f, g, radial_order=DEFAULT_RADIAL_ORDER, angular_order=DEFAULT_ANGULAR_ORDER):
    """Quadrature value of ``<f, g> = int f conj(g) dmu_alpha``.

    ``f`` and ``g`` are vectorized callables of a complex array.
    """
    z, w = polar_grid(alpha, radial_order, angular_order)
    with np.errstate(invalid="ignore", over="ignore"):
        vals = np.asarray(f(z)) * np.conj(np.asarray(g(z)))
    if not np.all(np.isfinite(vals)):
        raise ValueError("integrand is not finite on the quadrature grid")
    return complex(np.sum(w * vals))


def gram_matrix(alpha, indices, radial_order=DEFAULT_RADIAL_ORDER, angular_order=DEFAULT_ANGULAR_ORDER):
    """Gram matrix ``G[i, j] = <b_{indices[j]}, b_{indices[i]}>`` by polar quadrature."""
    z, w = polar_grid(alpha, radial_order, angular_order)
    V = np.array([eval_disk_poly(alpha, p, q, z).ravel() for p, q in indices])
    return (np.conj(V) * w.ravel()) @ V.T


def basis_indices_An(n, max_p):
    """Indices ``(p, q)`` with ``p <= max_p`` and ``q < n``, ``p``-major."""
    return [BasisIndex(p, q) for p in range(max_p + 1) for q in range(n)]


def basis_indices_freq(xi, s):
    """First ``s`` indices ``(q + xi, q)`` on the diagonal of frequency ``xi``."""
    if s < 1:
        raise ValueError(f"s must be positive, got {s}")
    start = max(0, -xi)
    return [BasisIndex(q + xi, q) for q in range(start, start + s)]


def freq_labels(n, xi):
    """Row labels ``q = max(0, -xi) .. n-1`` of the frequency-``xi`` block in ``A^2_n``."""
    return list(range(max(0, -xi), n))


def project_to_freq(alpha, f, xi, truncation, radial_order=DEFAULT_RADIAL_ORDER, angular_order=DEFAULT_ANGULAR_ORDER):
    """Coefficients ``<f, b^alpha_{q+xi,q}>`` over the first ``truncation`` diagonal elements."""
    z, w = polar_grid(alpha, radial_order, angular_order)
    fz = np.asarray(f(z))
    return np.array(
        [
            np.sum(w * fz * np.conj(eval_disk_poly(alpha, p, q, z)))
            for p, q in basis_indices_freq(xi, truncation)
        ]
    )
