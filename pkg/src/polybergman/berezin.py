"""Berezin transform, the Englis operator and the non-density witness.

Operators live on the truncation of ``A^2_n(D, mu_alpha)`` spanned by
``b_{p,q}`` with ``p <= max_p``, ``q < n``. Vectors are coefficient arrays over
that basis, so ``<h, g> = sum h_i conj(g_i)``.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from .disk import (
    DEFAULT_ANGULAR_ORDER,
    DEFAULT_RADIAL_ORDER,
    SpaceSpec,
    basis_indices_An,
    eval_disk_poly,
    polar_grid,
)
from .kernels import kernel_norm

__all__ = [
    "TruncationWarning",
    "TruncatedBasis",
    "FiniteRankOperator",
    "DEFAULT_MAX_P",
    "DEFAULT_TEST_SYMBOLS",
    "inner",
    "berezin_transform",
    "kernel_tail",
    "englis_operator",
    "identity_function_coeffs",
    "separating_projection",
    "toeplitz_quadratic_form",
    "nondensity_witness",
]

DEFAULT_MAX_P = 40
DEFAULT_TAIL_TOL = 1e-8


class TruncationWarning(UserWarning):
    """The truncated kernel misses more than the tolerated share of ``K_z(z)``."""


def inner(h, g):
    """``<h, g> = sum h_i conj(g_i)``."""
    return complex(np.vdot(g, h))


@dataclass(frozen=True)
class TruncatedBasis:
    """The basis ``b^alpha_{p,q}``, ``p <= max_p``, ``q < n``, in ``p``-major order."""

    alpha: float
    n: int
    max_p: int = DEFAULT_MAX_P
    indices: tuple = field(init=False, repr=False)

    def __post_init__(self):
        SpaceSpec(self.alpha, self.n)
        if self.max_p < 0:
            raise ValueError("max_p must be nonnegative")
        object.__setattr__(self, "indices", tuple(basis_indices_An(self.n, self.max_p)))

    def __len__(self):
        return len(self.indices)

    def position(self, p, q):
        if not (0 <= p <= self.max_p and 0 <= q < self.n):
            raise ValueError(f"({p}, {q}) is outside the truncated basis")
        return p * self.n + q

    def unit(self, p, q):
        v = np.zeros(len(self), dtype=complex)
        v[self.position(p, q)] = 1.0
        return v

    def evaluate(self, z):
        """``[b_{p,q}(z)]`` with the basis along the first axis."""
        za = np.asarray(z, dtype=complex)
        return np.array([eval_disk_poly(self.alpha, p, q, za) for p, q in self.indices])

    def synthesize(self, coeffs, z):
        """``sum_i c_i b_i(z)``."""
        vals = np.tensordot(np.asarray(coeffs), self.evaluate(z), axes=1)
        return complex(vals) if np.ndim(z) == 0 else vals

    def kernel_coeffs(self, z):
        """Coefficients ``conj(b_{p,q}(z))`` of the truncated ``K_{n,z}``."""
        if np.ndim(z) != 0:
            raise ValueError("kernel_coeffs takes a single point")
        return np.conj(self.evaluate(z))


@dataclass
class FiniteRankOperator:
    """``h -> sum_k s_k <h, in_k> out_k`` on a :class:`TruncatedBasis`."""

    basis: TruncatedBasis
    terms: list

    def __post_init__(self):
        size = len(self.basis)
        clean = []
        for s, out, inp in self.terms:
            out = np.asarray(out, dtype=complex)
            inp = np.asarray(inp, dtype=complex)
            if out.shape != (size,) or inp.shape != (size,):
                raise ValueError(f"term vectors must have length {size}")
            clean.append((complex(s), out, inp))
        self.terms = clean

    def apply(self, h):
        h = np.asarray(h, dtype=complex)
        out = np.zeros(len(self.basis), dtype=complex)
        for s, o, i in self.terms:
            out += s * inner(h, i) * o
        return out

    def matrix(self):
        """Dense matrix ``M`` with ``S h = M @ h``."""
        size = len(self.basis)
        m = np.zeros((size, size), dtype=complex)
        for s, o, i in self.terms:
            m += s * np.outer(o, np.conj(i))
        return m

    def quadratic_form(self, h):
        """``<S h, h>``."""
        return inner(self.apply(h), h)

    def __neg__(self):
        return FiniteRankOperator(self.basis, [(-s, o, i) for s, o, i in self.terms])


def kernel_tail(basis, z):
    """Relative share of ``K_z(z)`` missing from the truncated kernel."""
    full = kernel_norm(basis.alpha, basis.n, z) ** 2
    kept = float(np.sum(np.abs(basis.evaluate(z)) ** 2))
    return max(0.0, (full - kept) / full)


def berezin_transform(S, z, tail_tol=DEFAULT_TAIL_TOL):
    r"""``<S K_z, K_z> / <K_z, K_z>`` with ``K_z`` expanded in the truncated basis.

    The denominator is the closed-form :math:`\|K_{n,z}\|^2`. A
    :class:`TruncationWarning` is issued when the truncated kernel misses more
    than ``tail_tol`` of it.
    """
    basis = S.basis
    kz = basis.kernel_coeffs(z)
    tail = kernel_tail(basis, z)
    if tail > tail_tol:
        warnings.warn(
            f"kernel truncation at max_p={basis.max_p} misses {tail:.3g} of K_z(z) at |z|={abs(z):.3g}",
            TruncationWarning,
            stacklevel=2,
        )
    return S.quadratic_form(kz) / kernel_norm(basis.alpha, basis.n, z) ** 2


def identity_function_coeffs(basis):
    """Coefficient vectors of ``f(z) = z`` and ``conj(f)(z) = zbar``.

    ``b_{1,0} = sqrt(alpha+2) z`` and ``b_{0,1} = sqrt(alpha+2) zbar``, so both are
    exact in any truncation with ``n >= 2``.
    """
    if basis.n < 2:
        raise ValueError("zbar is not in A^2_1; need n >= 2")
    c = 1.0 / math.sqrt(basis.alpha + 2)
    return c * basis.unit(1, 0), c * basis.unit(0, 1)


def englis_operator(basis, f, fbar):
    """``S h = <h, f> f - <h, fbar> fbar``: nonzero, with identically zero Berezin transform.

    ``f`` must be analytic and ``fbar`` its conjugate; both as coefficient vectors.
    """
    if basis.n < 2:
        raise ValueError("the Englis construction needs n >= 2 (conj(f) is not 1-analytic)")
    return FiniteRankOperator(basis, [(1.0, f, f), (-1.0, fbar, fbar)])


def separating_projection(basis, f, g, tol=1e-12):
    """Rank-one projection ``S`` onto ``h`` with ``<S f, f> = 0`` and ``<S g, g> = lambda_2^2``.

    ``h`` is the normalized part of ``g`` orthogonal to ``f``; ``lambda_2`` its
    length. Raises ``ValueError`` when the normalized Gram determinant of
    ``(f, g)`` is below ``tol``.
    """
    f = np.asarray(f, dtype=complex)
    g = np.asarray(g, dtype=complex)
    nf = math.sqrt(inner(f, f).real)
    ng = math.sqrt(inner(g, g).real)
    if nf == 0 or ng == 0:
        raise ValueError("vectors are linearly dependent (one is zero)")
    fhat = f / nf
    rest = g - inner(g, fhat) * fhat
    lam2 = math.sqrt(inner(rest, rest).real)
    if (lam2 / ng) ** 2 < tol:
        raise ValueError("vectors are linearly dependent within tolerance")
    h = rest / lam2
    return FiniteRankOperator(basis, [(1.0, h, h)])


def toeplitz_quadratic_form(g, f, basis, radial_order=DEFAULT_RADIAL_ORDER, angular_order=DEFAULT_ANGULAR_ORDER):
    """Quadrature value of ``<T_g f, f> = int g |f|^2 dmu_alpha``."""
    z, w = polar_grid(basis.alpha, radial_order, angular_order)
    fz = basis.synthesize(f, z)
    vals = np.asarray(g(z)) * np.abs(fz) ** 2
    if not np.all(np.isfinite(vals)):
        raise ValueError("integrand is not finite on the quadrature grid")
    return complex(np.sum(w * vals))


# Bounded polynomial test symbols (radial and non-radial)
DEFAULT_TEST_SYMBOLS = (
    ("1", lambda z: np.ones_like(z)),
    ("|z|^2", lambda z: np.abs(z) ** 2),
    ("1-|z|^4", lambda z: 1 - np.abs(z) ** 4),
    ("z", lambda z: z),
    ("zbar", lambda z: np.conj(z)),
    ("z^2", lambda z: z**2),
    ("Re z", lambda z: z.real),
    ("z zbar^2", lambda z: z * np.conj(z) ** 2),
    ("(z+zbar)^3", lambda z: (z + np.conj(z)) ** 3),
    ("1j zbar^3 + z^4", lambda z: 1j * np.conj(z) ** 3 + z**4),
)


def _polar_sample(radii, angles):
    r = np.asarray(radii, dtype=float)[:, None]
    th = 2 * np.pi * np.arange(angles) / angles
    return (r * np.exp(1j * th)[None, :]).ravel()


def nondensity_witness(alpha=0.0, n=2, max_p=DEFAULT_MAX_P, symbols=DEFAULT_TEST_SYMBOLS,
                       radii=(0.1, 0.25, 0.4, 0.55, 0.7), angles=8,
                       radial_order=DEFAULT_RADIAL_ORDER, angular_order=DEFAULT_ANGULAR_ORDER):
    """Run the Englis and separation constructions for ``f(z) = z``.

    Returns a dict with the Toeplitz quadratic forms at ``f`` and ``conj(f)`` per
    symbol, the separating-projection forms (at ``f`` and normalized
    ``conj(f)``), ``max |Ber(S)|`` of the Englis operator over the sample grid
    and the largest relative kernel truncation tail on that grid.
    """
    basis = TruncatedBasis(alpha, n, max_p)
    f, fbar = identity_function_coeffs(basis)
    forms = []
    for name, g in symbols:
        a = toeplitz_quadratic_form(g, f, basis, radial_order, angular_order)
        b = toeplitz_quadratic_form(g, fbar, basis, radial_order, angular_order)
        forms.append({"symbol": name, "form_f": a, "form_fbar": b, "diff": abs(a - b)})
    sep = separating_projection(basis, f, fbar)
    fbar_unit = fbar / math.sqrt(inner(fbar, fbar).real)
    englis = englis_operator(basis, f, fbar)
    grid = _polar_sample(radii, angles)
    with warnings.catch_warnings():
        # reported through max_kernel_tail instead
        warnings.simplefilter("ignore", TruncationWarning)
        ber = [abs(berezin_transform(englis, z)) for z in grid]
    return {
        "alpha": alpha,
        "n": n,
        "max_p": max_p,
        "forms": forms,
        "max_form_diff": max(x["diff"] for x in forms),
        "separating_form_f": sep.quadratic_form(f),
        "separating_form_fbar": sep.quadratic_form(fbar_unit),
        "englis_norm": float(np.linalg.norm(englis.matrix(), 2)),
        "max_abs_berezin": max(ber),
        "grid_points": len(ber),
        "max_kernel_tail": max(kernel_tail(basis, z) for z in grid),
    }
