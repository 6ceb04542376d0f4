"""Bounded radial symbols ``a: [0, 1) -> C`` and integration against them.

Three representations:

* ``polynomial``: coefficients in ``t = r^2`` (``a(r) = sum c_i r^(2i)``);
* ``step``: ``a(r) = v_i`` for ``r_i <= r < r_{i+1}``, zero before ``r_1``;
* ``callable``: any vectorized ``r -> a(r)``.

Text form (used by the CLI): ``one``, ``poly:c0,c1,...``, ``step:r1=v1,r2=v2,...``,
``pow:k`` (``r^k``).
"""
from __future__ import annotations

import numpy as np
from numpy.polynomial import polynomial as P

from .quadrature import gauss_jacobi_rule, gauss_legendre_on

__all__ = ["RadialSymbol", "parse_symbol", "symbol_weighted_nodes"]

_SUP_SAMPLES = 4097


def _parse_number(text):
    v = complex(text.strip().replace("i", "j"))
    return v.real if v.imag == 0 else v


class RadialSymbol:
    """A bounded function of the radius, in one of three representations."""

    def __init__(self, kind, *, coeffs=None, breakpoints=None, values=None, func=None,
                 sup_norm=None, spec=None):
        if kind not in ("polynomial", "step", "callable"):
            raise ValueError(f"unknown symbol kind {kind!r}")
        self.kind = kind
        self.spec = spec
        if kind == "polynomial":
            self.coeffs = np.atleast_1d(np.asarray(coeffs))
            if self.coeffs.size == 0 or not np.all(np.isfinite(self.coeffs)):
                raise ValueError("polynomial symbol needs a finite, nonempty coefficient list")
        elif kind == "step":
            bps = np.asarray(breakpoints, dtype=float)
            vals = np.asarray(values)
            if bps.ndim != 1 or bps.size == 0 or bps.shape != vals.shape:
                raise ValueError("step symbol needs matching breakpoint and value lists")
            if np.any(np.diff(bps) <= 0) or bps[0] < 0 or bps[-1] >= 1:
                raise ValueError("step breakpoints must be strictly increasing within [0, 1)")
            if not np.all(np.isfinite(vals)):
                raise ValueError("step values must be finite")
            self.breakpoints, self.values = bps, vals
        else:
            if not callable(func):
                raise ValueError("callable symbol needs a function")
            self.func = func
        self._sup = sup_norm
        self.sup_is_estimate = False
        if self._sup is None:
            self._sup = self._compute_sup()
        if not np.isfinite(self._sup):
            raise ValueError("symbol is not bounded")

    # constructors

    @classmethod
    def constant(cls, c=1.0):
        return cls("polynomial", coeffs=[c], spec="one" if c == 1 else f"poly:{c!r}")

    @classmethod
    def one(cls):
        return cls.constant(1.0)

    @classmethod
    def polynomial(cls, coeffs):
        """Polynomial in ``t = r^2`` with coefficients ``[c0, c1, ...]``."""
        spec = "poly:" + ",".join(repr(c) for c in coeffs)
        return cls("polynomial", coeffs=list(coeffs), spec=spec)

    @classmethod
    def step(cls, breakpoints, values):
        spec = "step:" + ",".join(f"{b!r}={v!r}" for b, v in zip(breakpoints, values))
        return cls("step", breakpoints=breakpoints, values=values, spec=spec)

    @classmethod
    def power(cls, k):
        """``a(r) = r^k``."""
        if int(k) != k or k < 0:
            raise ValueError(f"power must be a nonnegative integer, got {k!r}")
        k = int(k)
        if k % 2 == 0:
            coeffs = [0.0] * (k // 2) + [1.0]
            return cls("polynomial", coeffs=coeffs, spec=f"pow:{k}")
        return cls("callable", func=lambda r: np.asarray(r, dtype=float) ** k, sup_norm=1.0, spec=f"pow:{k}")

    @classmethod
    def from_callable(cls, func, sup_norm=None):
        return cls("callable", func=func, sup_norm=sup_norm)

    # evaluation

    def __call__(self, r):
        ra = np.asarray(r, dtype=float)
        if self.kind == "polynomial":
            out = P.polyval(ra * ra, self.coeffs)
        elif self.kind == "step":
            idx = np.searchsorted(self.breakpoints, ra, side="right") - 1
            out = np.where(idx >= 0, self.values[np.clip(idx, 0, None)], 0)
        else:
            out = np.broadcast_to(np.asarray(self.func(ra)), ra.shape)
        return out[()] if np.ndim(r) == 0 else out

    def at_t(self, t):
        """``a(sqrt(t))``."""
        if self.kind == "polynomial":
            return P.polyval(np.asarray(t, dtype=float), self.coeffs)
        return self(np.sqrt(t))

    @property
    def sup_norm(self):
        return float(self._sup)

    @property
    def is_real(self):
        if self.kind == "polynomial":
            return not np.iscomplexobj(self.coeffs) or bool(np.all(self.coeffs.imag == 0))
        if self.kind == "step":
            return not np.iscomplexobj(self.values) or bool(np.all(self.values.imag == 0))
        return not np.iscomplexobj(self(np.linspace(0, 1, 65, endpoint=False)))

    def _compute_sup(self):
        if self.kind == "polynomial":
            # negligible leading terms make the critical points meaningless
            c = P.polytrim(self.coeffs, tol=1e-15 * float(np.max(np.abs(self.coeffs))))
            sq = P.polymul(c, np.conj(c)).real  # |a(t)|^2 as a real polynomial
            crit = P.polyroots(P.polyder(sq)) if sq.size > 2 else np.array([])
            crit = crit[np.abs(crit.imag) < 1e-8].real if crit.size else crit
            cand = np.concatenate([np.linspace(0.0, 1.0, 257), crit[(crit > 0) & (crit < 1)]])
            return float(np.sqrt(np.max(np.abs(P.polyval(cand, sq)))))
        if self.kind == "step":
            return float(np.max(np.abs(np.append(self.values, 0.0 if self.breakpoints[0] > 0 else self.values[0]))))
        self.sup_is_estimate = True
        return float(np.max(np.abs(self(np.linspace(0.0, 1.0, _SUP_SAMPLES, endpoint=False)))))

    def __repr__(self):
        return f"RadialSymbol({self.spec or self.kind})"


def parse_symbol(text):
    """Parse the mini-language ``one | poly:... | step:... | pow:k``."""
    text = text.strip()
    head, _, body = text.partition(":")
    try:
        if text == "one":
            sym = RadialSymbol.one()
        elif head == "poly":
            sym = RadialSymbol.polynomial([_parse_number(c) for c in body.split(",")])
        elif head == "step":
            pairs = [item.split("=") for item in body.split(",")]
            sym = RadialSymbol.step([float(r) for r, _ in pairs], [_parse_number(v) for _, v in pairs])
        elif head == "pow":
            sym = RadialSymbol.power(int(body))
        else:
            raise ValueError(f"unknown symbol spec {text!r}; expected one, poly:, step:, or pow:")
    except (ValueError, TypeError) as exc:
        raise ValueError(f"malformed symbol spec {text!r}: {exc}") from exc
    sym.spec = text
    return sym


def symbol_weighted_nodes(a, alpha, d, order):
    """Nodes ``t_i`` and weights ``w_i`` with

        sum_i w_i F(t_i) ~ int_0^1 a(sqrt t) F(t) (1-t)^alpha t^d dt

    for polynomial ``F``. Exact for polynomial symbols (given enough nodes).
    Step symbols are split at the squared breakpoints; callable symbols are
    integrated in ``r = sqrt t`` so a non-smooth dependence on ``sqrt t``
    costs no accuracy.
    """
    if a.kind == "polynomial":
        rule = gauss_jacobi_rule(order, (alpha, d))
        return rule.nodes, rule.weights * a.at_t(rule.nodes)

    if a.kind == "callable":
        rule = gauss_jacobi_rule(order, (alpha, 2 * d + 1))
        r = rule.nodes
        return r * r, rule.weights * 2.0 * (1.0 + r) ** alpha * a(r)

    cuts = list(a.breakpoints**2)
    vals = list(a.values)
    if cuts[0] > 0:
        cuts.insert(0, 0.0)
        vals.insert(0, 0.0)
    edges = cuts + [1.0]
    ts, ws = [], []
    for lo, hi, v in zip(edges[:-1], edges[1:], vals):
        if v == 0:
            continue
        if lo == 0.0 and hi == 1.0:
            rule = gauss_jacobi_rule(order, (alpha, d))
            t, w = rule.nodes, rule.weights
        elif hi == 1.0:
            rule = gauss_jacobi_rule(order, (alpha, 0.0))
            t = lo + (1.0 - lo) * rule.nodes
            w = rule.weights * (1.0 - lo) ** (alpha + 1) * t**d
        else:
            t, w0 = gauss_legendre_on(order, lo, hi)
            w = w0 * (1.0 - t) ** alpha * t**d
        ts.append(t)
        ws.append(w * v)
    if not ts:
        return np.zeros(1), np.zeros(1)
    return np.concatenate(ts), np.concatenate(ws)
