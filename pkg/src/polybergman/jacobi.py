"""Jacobi polynomials on (-1, 1) and their shifted / normalized variants on (0, 1).

Conventions
-----------
``P_n^{(a,b)}(x)``  classical Jacobi polynomial, orthogonal for ``(1-x)^a (1+x)^b``.
``Q_n^{(a,b)}(t) = P_n^{(a,b)}(2t - 1)``, orthogonal on (0, 1) for ``(1-t)^a t^b``.
``J_n^{(a,b)}(t)``  the orthonormal function ``c_n (1-t)^{a/2} t^{b/2} Q_n(t)``.
``R_n^{(a,b)}(t)``  the polynomial reproducing ``h(0)`` for ``deg h <= n``.

All functions accept scalars or numpy arrays for the evaluation point and
return the same shape (a Python ``float`` for scalar input).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "WeightParams",
    "eval_jacobi",
    "eval_jacobi_explicit",
    "eval_jacobi_derivative",
    "eval_shifted_jacobi",
    "shifted_jacobi_coeffs",
    "norm_coef",
    "log_norm_coef",
    "eval_normalized_jacobi",
    "eval_reproducing_poly",
    "reproducing_poly_scale",
]


@dataclass(frozen=True)
class WeightParams:
    """Exponents of the weight ``(1-t)^alpha t^beta`` on (0, 1)."""

    alpha: float
    beta: float

    def __post_init__(self):
        if not (self.alpha > -1 and self.beta > -1):
            raise ValueError(
                f"weight exponents must exceed -1, got alpha={self.alpha}, beta={self.beta}"
            )


def _check_degree(n):
    if int(n) != n or n < 0:
        raise ValueError(f"degree must be a nonnegative integer, got {n!r}")
    return int(n)


def _finish(values, x):
    if np.ndim(x) == 0:
        return float(values)
    return values


def _gen_binom(a, k):
    """Generalized binomial ``binom(a, k)`` for real ``a`` and integer ``k >= 0``."""
    out = 1.0
    for i in range(k):
        out *= (a - i) / (i + 1)
    return out


def eval_jacobi_explicit(n, alpha, beta, x):
    r"""Evaluate :math:`P_n^{(\alpha,\beta)}` from its expansion in powers of
    :math:`(x-1)/2`.

    Exact in exact arithmetic for every real ``alpha``, ``beta``; used for
    small degrees and as an independent cross-check of the recurrence.
    """
    n = _check_degree(n)
    xa = np.asarray(x, dtype=float)
    u = (xa - 1.0) / 2.0
    # Horner in u
    acc = np.zeros_like(u)
    for k in range(n, -1, -1):
        c = _gen_binom(alpha + beta + n + k, k) * _gen_binom(alpha + n, n - k)
        acc = acc * u + c
    return _finish(acc, x)


def _recurrence_is_degenerate(n, alpha, beta):
    ab = alpha + beta
    for k in range(1, n):
        if (2 * k + ab) == 0 or (k + ab + 1) == 0:
            return True
    return False


def eval_jacobi(n, alpha, beta, x):
    r"""Evaluate the Jacobi polynomial :math:`P_n^{(\alpha,\beta)}(x)`.

    Uses the three-term recurrence in the degree; degrees ``n <= 2`` and the
    (measure-zero) parameter choices where a recurrence coefficient vanishes
    go through :func:`eval_jacobi_explicit` instead. Any real ``alpha`` and
    ``beta`` are accepted.
    """
    n = _check_degree(n)
    if n <= 2 or _recurrence_is_degenerate(n, alpha, beta):
        return eval_jacobi_explicit(n, alpha, beta, x)

    xa = np.asarray(x, dtype=float)
    ab = alpha + beta
    p_prev = np.ones_like(xa)
    p_cur = (alpha + 1.0) + (ab + 2.0) * (xa - 1.0) / 2.0
    a2b2 = alpha * alpha - beta * beta
    for k in range(1, n):
        c = 2 * k + ab
        a1 = 2.0 * (k + 1) * (k + ab + 1) * c
        lin = (c + 1.0) * (c * (c + 2.0) * xa + a2b2)
        a4 = 2.0 * (k + alpha) * (k + beta) * (c + 2.0)
        p_prev, p_cur = p_cur, (lin * p_cur - a4 * p_prev) / a1
    return _finish(p_cur, x)


def eval_jacobi_derivative(n, alpha, beta, x):
    """Derivative of :func:`eval_jacobi` with respect to ``x``."""
    n = _check_degree(n)
    if n == 0:
        return _finish(np.zeros_like(np.asarray(x, dtype=float)), x)
    scale = (alpha + beta + n + 1) / 2.0
    return _finish(scale * np.asarray(eval_jacobi(n - 1, alpha + 1, beta + 1, x)), x)


def eval_shifted_jacobi(n, alpha, beta, t):
    """Shifted Jacobi polynomial ``Q_n(t) = P_n(2t - 1)``."""
    ta = np.asarray(t, dtype=float)
    return _finish(np.asarray(eval_jacobi(n, alpha, beta, 2.0 * ta - 1.0)), t)


def shifted_jacobi_coeffs(n, alpha, beta):
    """Monomial coefficients ``[c_0, ..., c_n]`` of ``Q_n`` in powers of ``t``.

    Direct transcription of the explicit finite sum; suffers cancellation for
    large ``n`` and is meant for small degrees and tests.
    """
    n = _check_degree(n)
    return np.array(
        [
            _gen_binom(alpha + beta + n + k, k)
            * _gen_binom(beta + n, n - k)
            * (-1) ** (n - k)
            for k in range(n + 1)
        ]
    )


def log_norm_coef(n, alpha, beta):
    """Logarithm of :func:`norm_coef`."""
    n = _check_degree(n)
    if not (alpha > -1 and beta > -1):
        raise ValueError(f"alpha and beta must exceed -1, got {alpha}, {beta}")
    if n == 0:
        # (ab + 1) * Gamma(ab + 1) == Gamma(ab + 2) stays valid when ab + 1 <= 0
        head = math.lgamma(alpha + beta + 2)
    else:
        head = math.log(2 * n + alpha + beta + 1) + math.lgamma(n + alpha + beta + 1)
    return 0.5 * (
        head + math.lgamma(n + 1) - math.lgamma(n + alpha + 1) - math.lgamma(n + beta + 1)
    )


def norm_coef(n, alpha, beta):
    r"""Normalizing constant making :math:`\mathcal{J}_n^{(\alpha,\beta)}` orthonormal.

    Its square is the reciprocal of
    :math:`\int_0^1 Q_n^2 (1-t)^\alpha t^\beta\,dt`. Computed through log-gamma
    so that large degrees do not overflow.
    """
    return math.exp(log_norm_coef(n, alpha, beta))


def eval_normalized_jacobi(n, alpha, beta, t):
    r"""Evaluate :math:`\mathcal{J}_n^{(\alpha,\beta)}(t)` on (0, 1).

    Endpoints are accepted where the corresponding weight exponent is
    nonnegative (continuous extension); otherwise ``t`` must lie strictly
    inside the interval.
    """
    ta = np.asarray(t, dtype=float)
    lo_ok = ta > 0 if beta < 0 else ta >= 0
    hi_ok = ta < 1 if alpha < 0 else ta <= 1
    if not np.all(lo_ok & hi_ok):
        raise ValueError(
            f"t outside the domain of J_n^({alpha},{beta}); "
            "endpoints need nonnegative exponents"
        )
    with np.errstate(divide="ignore"):
        w = (1.0 - ta) ** (alpha / 2.0) * ta ** (beta / 2.0)
    vals = norm_coef(n, alpha, beta) * w * np.asarray(eval_shifted_jacobi(n, alpha, beta, ta))
    return _finish(vals, t)


def reproducing_poly_scale(n, alpha, beta):
    """The constant ``(-1)^n B(a+1, b+1) / B(a+n+1, b+1)`` in front of ``Q_n^{(a,b+1)}``."""
    n = _check_degree(n)
    if not (alpha > -1 and beta > -1):
        raise ValueError(f"alpha and beta must exceed -1, got {alpha}, {beta}")
    log_ratio = (
        math.lgamma(alpha + 1)
        + math.lgamma(alpha + beta + n + 2)
        - math.lgamma(alpha + beta + 2)
        - math.lgamma(alpha + n + 1)
    )
    return (-1) ** n * math.exp(log_ratio)


def eval_reproducing_poly(n, alpha, beta, t):
    r"""Evaluate :math:`R_n^{(\alpha,\beta)}(t)`.

    For every polynomial ``h`` of degree at most ``n``::

        1/B(a+1, b+1) * int_0^1 h(t) R_n(t) (1-t)^a t^b dt == h(0)
    """
    scale = reproducing_poly_scale(n, alpha, beta)
    ta = np.asarray(t, dtype=float)
    return _finish(scale * np.asarray(eval_shifted_jacobi(n, alpha, beta + 1, ta)), t)
