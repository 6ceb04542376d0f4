"""Gauss-Jacobi rules on (0, 1) for the weight ``(1-t)^alpha t^beta``.

Nodes are the eigenvalues of the symmetric tridiagonal Jacobi matrix
(Golub-Welsch). Weights are Christoffel numbers ``mass / sum_k p_k(t_i)^2``
evaluated with the orthonormal recurrence, which keeps small weights
accurate in the relative sense.

Rules are cached by ``(order, alpha, beta)``. If ``POLYBERGMAN_CACHE_DIR`` is
set, rules are also persisted there as ``.npz`` files.
"""
from __future__ import annotations

import functools
import math
import os
import tempfile
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .jacobi import WeightParams

__all__ = [
    "QuadratureRule",
    "beta_function",
    "gauss_jacobi_rule",
    "gauss_legendre_on",
    "integrate",
    "order_for_degree",
    "DEFAULT_SYMBOL_ORDER",
]

CACHE_ENV = "POLYBERGMAN_CACHE_DIR"
DEFAULT_SYMBOL_ORDER = 128


def beta_function(x, y):
    """Euler Beta function ``B(x, y)`` for positive arguments."""
    if not (x > 0 and y > 0):
        raise ValueError(f"Beta function needs positive arguments, got ({x}, {y})")
    return math.exp(math.lgamma(x) + math.lgamma(y) - math.lgamma(x + y))


@dataclass(frozen=True)
class QuadratureRule:
    """Nodes and weights with ``sum(w * f(t)) ~ int_0^1 f(t) (1-t)^a t^b dt``."""

    order: int
    params: WeightParams
    nodes: np.ndarray = field(repr=False)
    weights: np.ndarray = field(repr=False)

    @property
    def alpha(self):
        return self.params.alpha

    @property
    def beta(self):
        return self.params.beta

    @property
    def mass(self):
        return beta_function(self.params.alpha + 1, self.params.beta + 1)


def order_for_degree(degree):
    """Order used for a polynomial integrand of the given degree (with guard points)."""
    return math.ceil((degree + 1) / 2) + 8


def _recurrence_coeffs(order, alpha, beta):
    """Diagonal ``a`` and off-diagonal ``b`` of the Jacobi matrix on (-1, 1)."""
    ab = alpha + beta
    k = np.arange(order, dtype=float)
    a = np.empty(order)
    a[0] = (beta - alpha) / (ab + 2)
    if order > 1:
        s = 2 * k[1:] + ab
        a[1:] = (beta**2 - alpha**2) / (s * (s + 2))
    b = np.empty(max(order - 1, 0))
    if order > 1:
        b[0] = math.sqrt(4 * (1 + alpha) * (1 + beta) / ((2 + ab) ** 2 * (3 + ab)))
    if order > 2:
        kk = k[2:]
        s = 2 * kk + ab
        b[1:] = np.sqrt(
            4 * kk * (kk + alpha) * (kk + beta) * (kk + ab) / (s**2 * (s + 1) * (s - 1))
        )
    return a, b


def _build_rule(order, alpha, beta):
    a, b = _recurrence_coeffs(order, alpha, beta)
    if order == 1:
        x = a.copy()
    else:
        x = eigh_tridiagonal(a, b, eigvals_only=True)
    x = np.sort(x)
    # Christoffel numbers from the orthonormal recurrence
    p_prev = np.zeros_like(x)
    p_cur = np.ones_like(x)
    total = np.ones_like(x)
    for j in range(order - 1):
        bj_prev = b[j - 1] if j > 0 else 0.0
        p_next = ((x - a[j]) * p_cur - bj_prev * p_prev) / b[j]
        p_prev, p_cur = p_cur, p_next
        total += p_cur * p_cur
    mass = beta_function(alpha + 1, beta + 1)
    t = (x + 1.0) / 2.0
    w = mass / total
    return t, w


def _cache_path(order, alpha, beta):
    root = os.environ.get(CACHE_ENV)
    if not root:
        return None
    return Path(root) / f"gauss_jacobi_{order}_{alpha!r}_{beta!r}.npz"


@functools.lru_cache(maxsize=512)
def _cached_rule(order, alpha, beta):
    path = _cache_path(order, alpha, beta)
    if path is not None and path.exists():
        with np.load(path) as data:
            t, w = data["nodes"], data["weights"]
    else:
        t, w = _build_rule(order, alpha, beta)
        if path is not None:
            path.parent.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".npz")
            os.close(fd)
            np.savez(tmp, nodes=t, weights=w)
            os.replace(tmp, path)
    t.setflags(write=False)
    w.setflags(write=False)
    return t, w


def gauss_jacobi_rule(order, params):
    """Gauss-Jacobi rule with ``order`` nodes for ``(1-t)^alpha t^beta`` on (0, 1).

    ``params`` may be a :class:`WeightParams` or an ``(alpha, beta)`` pair.
    The rule integrates ``t^k`` exactly for ``k <= 2*order - 1``.
    """
    if not isinstance(params, WeightParams):
        params = WeightParams(*params)
    if int(order) != order or order < 1:
        raise ValueError(f"order must be a positive integer, got {order!r}")
    t, w = _cached_rule(int(order), float(params.alpha), float(params.beta))
    return QuadratureRule(int(order), params, t, w)


def gauss_legendre_on(order, lo, hi):
    """Gauss-Legendre nodes and weights mapped to ``[lo, hi]`` (unit weight)."""
    rule = gauss_jacobi_rule(order, WeightParams(0.0, 0.0))
    return lo + (hi - lo) * rule.nodes, (hi - lo) * rule.weights


def integrate(rule, f):
    """Apply ``rule`` to ``f``; the weight lives in the rule, not in ``f``.

    ``f`` is called once with the node array and may return real or complex
    values (or a scalar, which is broadcast).
    """
    vals = np.broadcast_to(np.asarray(f(rule.nodes)), rule.nodes.shape)
    if not np.all(np.isfinite(vals)):
        raise ValueError("integrand is not finite at every quadrature node")
    return np.dot(rule.weights, vals)
