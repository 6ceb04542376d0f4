"""Radial operators on ``A^2_n(D, mu_alpha)`` as matrix sequences.

A radial operator leaves every truncated frequency subspace
``W_{xi, min(n, n+xi)}`` invariant, so in the basis ``b_{q+xi, q}`` it is a
sequence of square blocks ``A_xi`` (``xi = -n+1, -n+2, ...``) of size
``min(n, n+xi)``, rows and columns labeled by ``q = max(0, -xi) .. n-1``.
Everything here truncates the sequence at ``xi_max``.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .disk import (
    DEFAULT_ANGULAR_ORDER,
    DEFAULT_RADIAL_ORDER,
    basis_indices_An,
    eval_disk_poly,
    freq_labels,
    polar_grid,
)
from .jacobi import eval_shifted_jacobi, norm_coef
from .quadrature import DEFAULT_SYMBOL_ORDER, gauss_jacobi_rule, gauss_legendre_on
from .symbols import RadialSymbol, symbol_weighted_nodes

__all__ = [
    "MatrixSequence",
    "CoefficientVector",
    "DEFAULT_XI_MAX",
    "DEFAULT_P_MAX",
    "beta_coefficient",
    "gamma_block",
    "gamma_sequence",
    "true_poly_eigenvalues",
    "toeplitz_matrix_bruteforce",
    "coefficients_Un",
    "apply_matrix_sequence",
    "sup_block_norm",
    "radialize_symbol",
    "radialize_operator",
]

DEFAULT_XI_MAX = 32
DEFAULT_P_MAX = 64


def _block_dim(n, xi):
    return min(n, n + xi)


@dataclass
class MatrixSequence:
    """Truncated element ``(A_xi)_{xi=-n+1}^{xi_max}`` of the matrix-sequence algebra."""

    n: int
    blocks: dict
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        expected = set(range(-self.n + 1, max(self.blocks) + 1)) if self.blocks else set()
        if set(self.blocks) != expected:
            raise ValueError(f"blocks must cover xi = {-self.n + 1} .. xi_max without gaps")
        for xi, blk in self.blocks.items():
            blk = np.asarray(blk)
            dim = _block_dim(self.n, xi)
            if blk.shape != (dim, dim):
                raise ValueError(f"block {xi} has shape {blk.shape}, expected ({dim}, {dim})")
            self.blocks[xi] = blk

    @property
    def xi_min(self):
        return -self.n + 1

    @property
    def xi_max(self):
        return max(self.blocks)

    def labels(self, xi):
        return freq_labels(self.n, xi)

    @classmethod
    def identity(cls, n, xi_max=DEFAULT_XI_MAX):
        return cls(n, {xi: np.eye(_block_dim(n, xi), dtype=complex) for xi in range(-n + 1, xi_max + 1)})

    @classmethod
    def from_full_matrix(cls, matrix, indices, n, xi_max):
        """Blocks ``[<S b_{xi+k,k}, b_{xi+j,j}>]_{j,k}`` read off a full matrix.

        ``matrix[row, col]`` is ``<S e_col, e_row>`` over the basis ``indices``.
        """
        pos = {tuple(ix): i for i, ix in enumerate(indices)}
        blocks = {}
        for xi in range(-n + 1, xi_max + 1):
            sel = [pos[(q + xi, q)] for q in freq_labels(n, xi)]
            blocks[xi] = np.asarray(matrix)[np.ix_(sel, sel)]
        return cls(n, blocks)

    def __matmul__(self, other):
        if not isinstance(other, MatrixSequence):
            return NotImplemented
        if other.n != self.n or other.xi_max != self.xi_max:
            raise ValueError("matrix sequences have different shapes")
        return MatrixSequence(self.n, {xi: self.blocks[xi] @ other.blocks[xi] for xi in self.blocks})

    def conj_transpose(self):
        return MatrixSequence(self.n, {xi: b.conj().T for xi, b in self.blocks.items()}, dict(self.metadata))

    def max_abs_diff(self, other):
        if other.n != self.n:
            raise ValueError("matrix sequences have different n")
        common = set(self.blocks) & set(other.blocks)
        return max(float(np.max(np.abs(self.blocks[xi] - other.blocks[xi]))) for xi in common)

    def to_dict(self):
        out = {
            "alpha": self.metadata.get("alpha"),
            "n": self.n,
            "xi_max": self.xi_max,
            "quad_order": self.metadata.get("quad_order"),
            "blocks": [],
        }
        for key in ("symbol", "p_max"):
            if key in self.metadata:
                out[key] = self.metadata[key]
        for xi in sorted(self.blocks):
            blk = self.blocks[xi]
            labels = self.labels(xi)
            out["blocks"].append(
                {
                    "xi": xi,
                    "dim": len(labels),
                    "row_labels": labels,
                    "col_labels": labels,
                    "entries_re": np.real(blk).tolist(),
                    "entries_im": np.imag(blk).tolist(),
                }
            )
        return out

    @classmethod
    def from_dict(cls, data):
        blocks = {
            b["xi"]: np.asarray(b["entries_re"], dtype=float) + 1j * np.asarray(b["entries_im"], dtype=float)
            for b in data["blocks"]
        }
        meta = {k: data[k] for k in ("alpha", "quad_order", "symbol", "p_max") if k in data}
        return cls(int(data["n"]), blocks, meta)


@dataclass
class CoefficientVector:
    """Truncated image ``(v_xi)`` of a function under the coefficient isometry."""

    n: int
    blocks: dict

    def __post_init__(self):
        for xi, v in self.blocks.items():
            v = np.asarray(v, dtype=complex)
            if v.shape != (_block_dim(self.n, xi),):
                raise ValueError(f"component {xi} has length {v.shape}, expected {_block_dim(self.n, xi)}")
            self.blocks[xi] = v

    @property
    def xi_max(self):
        return max(self.blocks)

    @classmethod
    def from_basis_coeffs(cls, coeffs, n, xi_max):
        """Build from a mapping ``{(p, q): c}`` of coefficients in the basis ``b_{p,q}``."""
        blocks = {xi: np.zeros(_block_dim(n, xi), dtype=complex) for xi in range(-n + 1, xi_max + 1)}
        for (p, q), c in coeffs.items():
            xi = p - q
            if q >= n or xi not in blocks:
                raise ValueError(f"basis index ({p}, {q}) is outside the truncation")
            blocks[xi][q - max(0, -xi)] = c
        return cls(n, blocks)

    def to_basis_coeffs(self):
        out = {}
        for xi, v in self.blocks.items():
            for q, c in zip(freq_labels(self.n, xi), v):
                out[(q + xi, q)] = c
        return out

    def norm(self):
        return math.sqrt(sum(float(np.vdot(v, v).real) for v in self.blocks.values()))


def _block_values(a, alpha, xi, labels, order):
    """Rows ``nc * Q_m(t_i)`` for each label plus the symbol-weighted quadrature weights."""
    d = abs(xi)
    t, w = symbol_weighted_nodes(a, alpha, d, order)
    V = np.array(
        [norm_coef(min(j, j + xi), alpha, d) * eval_shifted_jacobi(min(j, j + xi), alpha, d, t) for j in labels]
    )
    return V, w


def beta_coefficient(a, alpha, xi, j, k, rule=None, quad_order=DEFAULT_SYMBOL_ORDER):
    r"""The number :math:`\beta_{a,\alpha,\xi,j,k} = \int_0^1 a(\sqrt t)\,
    \mathcal{J}_{\min(j,j+\xi)}\mathcal{J}_{\min(k,k+\xi)}\,dt` (parameters
    ``(alpha, |xi|)``).

    ``rule`` must carry the weight ``(alpha, |xi|)``; it is used as-is for
    polynomial symbols and supplies the order otherwise.
    """
    d = abs(xi)
    lo = max(0, -xi)
    if j < lo or k < lo:
        raise ValueError(f"indices must be at least {lo} for xi={xi}")
    if rule is not None:
        if (rule.alpha, rule.beta) != (alpha, d):
            raise ValueError(f"rule weight {(rule.alpha, rule.beta)} does not match ({alpha}, {d})")
        quad_order = rule.order
    if rule is not None and a.kind == "polynomial":
        t, w = rule.nodes, rule.weights * a.at_t(rule.nodes)
    else:
        t, w = symbol_weighted_nodes(a, alpha, d, quad_order)
    mj, mk = min(j, j + xi), min(k, k + xi)
    fj = norm_coef(mj, alpha, d) * eval_shifted_jacobi(mj, alpha, d, t)
    fk = norm_coef(mk, alpha, d) * eval_shifted_jacobi(mk, alpha, d, t)
    val = np.sum(w * fj * fk)
    return complex(val) if np.iscomplexobj(val) else float(val)


def gamma_block(a, alpha, n, xi, quad_order=DEFAULT_SYMBOL_ORDER):
    """Block ``xi`` of the gamma sequence: ``[beta_{a,alpha,xi,j,k}]_{j,k}``."""
    V, w = _block_values(a, alpha, xi, freq_labels(n, xi), quad_order)
    return (V * w) @ V.T


def gamma_sequence(a, alpha, n, xi_max=DEFAULT_XI_MAX, quad_order=DEFAULT_SYMBOL_ORDER, parallel=False):
    """Matrix sequence of the radial Toeplitz operator with symbol ``a(|z|)`` on ``A^2_n``.

    With ``parallel=True`` blocks are computed in a thread pool; results are
    merged in ``xi`` order, so output is identical either way.
    """
    if not alpha > -1:
        raise ValueError(f"alpha must exceed -1, got {alpha}")
    if n < 1 or xi_max < 0:
        raise ValueError("need n >= 1 and xi_max >= 0")
    xis = list(range(-n + 1, xi_max + 1))

    def block(xi):
        return gamma_block(a, alpha, n, xi, quad_order)

    if parallel:
        with ThreadPoolExecutor() as pool:
            blocks = list(pool.map(block, xis))
    else:
        blocks = [block(xi) for xi in xis]
    meta = {"alpha": alpha, "quad_order": quad_order, "symbol": a.spec or a.kind}
    return MatrixSequence(n, dict(zip(xis, blocks)), meta)


def true_poly_eigenvalues(a, alpha, n, p_max=DEFAULT_P_MAX, quad_order=DEFAULT_SYMBOL_ORDER):
    """Eigenvalues ``lambda(p)``, ``p = 0 .. p_max``, of the Toeplitz operator on ``A^2_(n)``."""
    out = []
    for p in range(p_max + 1):
        d, m = abs(p - n + 1), min(p, n - 1)
        t, w = symbol_weighted_nodes(a, alpha, d, quad_order)
        jac = norm_coef(m, alpha, d) * eval_shifted_jacobi(m, alpha, d, t)
        out.append(np.sum(w * jac * jac))
    return np.array(out)


def _radial_r_nodes(a, alpha, order):
    """Nodes ``r_i`` and weights for ``(alpha+1) int_0^1 G(r) a(r) (1-r^2)^alpha 2r dr``.

    Works in ``r`` directly and splits at the breakpoints of step symbols.
    """
    if a.kind == "step":
        edges = list(a.breakpoints)
        if edges[0] > 0:
            edges.insert(0, 0.0)
        edges.append(1.0)
    else:
        edges = [0.0, 1.0]
    rs, ws = [], []
    for lo, hi in zip(edges[:-1], edges[1:]):
        if hi == 1.0:
            rule = gauss_jacobi_rule(order, (alpha, 0.0))
            r = lo + (1.0 - lo) * rule.nodes
            w = rule.weights * (1.0 - lo) ** (alpha + 1) * (1.0 + r) ** alpha
        else:
            r, w0 = gauss_legendre_on(order, lo, hi)
            w = w0 * (1.0 - r * r) ** alpha
        rs.append(r)
        ws.append(w * 2.0 * r * (alpha + 1))
    r = np.concatenate(rs)
    w = np.concatenate(ws)
    # evaluate inside each piece; step values are taken from the piece midpoint
    if a.kind == "step":
        vals = np.concatenate(
            [np.full(len(x), a(0.5 * (lo + hi))) for x, lo, hi in zip(rs, edges[:-1], edges[1:])]
        )
    else:
        vals = a(r)
    return r, w * vals


def toeplitz_matrix_bruteforce(a, alpha, n, max_p, radial_order=DEFAULT_RADIAL_ORDER,
                               angular_order=DEFAULT_ANGULAR_ORDER):
    """Full matrix ``T[(j,k), (p,q)] = <a(|z|) b_{p,q}, b_{j,k}>`` over ``basis_indices_An(n, max_p)``.

    Independent 2-D polar quadrature in ``r`` (not ``t``); meant as an oracle.
    Returns ``(matrix, indices)``.
    """
    indices = basis_indices_An(n, max_p)
    r, wr = _radial_r_nodes(a, alpha, radial_order)
    theta = 2 * np.pi * np.arange(angular_order) / angular_order
    z = (r[:, None] * np.exp(1j * theta)[None, :]).ravel()
    w = np.repeat(wr / angular_order, angular_order)
    V = np.array([eval_disk_poly(alpha, p, q, z) for p, q in indices])
    return (np.conj(V) * w) @ V.T, indices


def coefficients_Un(alpha, n, f, xi_max=DEFAULT_XI_MAX, radial_order=DEFAULT_RADIAL_ORDER,
                    angular_order=DEFAULT_ANGULAR_ORDER):
    """``(U_n f)_{xi,q} = <f, b_{q+xi,q}>`` for ``xi = -n+1 .. xi_max`` by polar quadrature."""
    z, w = polar_grid(alpha, radial_order, angular_order)
    fw = np.asarray(f(z)) * w
    blocks = {}
    for xi in range(-n + 1, xi_max + 1):
        blocks[xi] = np.array(
            [np.sum(fw * np.conj(eval_disk_poly(alpha, q + xi, q, z))) for q in freq_labels(n, xi)]
        )
    return CoefficientVector(n, blocks)


def apply_matrix_sequence(A, v):
    """Blockwise product ``(A_xi v_xi)_xi``."""
    if A.n != v.n or set(A.blocks) != set(v.blocks):
        raise ValueError("matrix sequence and coefficient vector have different shapes")
    return CoefficientVector(v.n, {xi: A.blocks[xi] @ v.blocks[xi] for xi in A.blocks})


def sup_block_norm(A):
    """``max_xi ||A_xi||`` in the spectral norm."""
    return max(float(np.linalg.norm(b, 2)) for b in A.blocks.values())


def radialize_symbol(g, angular_order=DEFAULT_ANGULAR_ORDER):
    """Angular average ``r -> mean_k g(r e^{2 pi i k / M})`` as a callable :class:`RadialSymbol`."""
    roots = np.exp(2j * np.pi * np.arange(angular_order) / angular_order)

    def rad(r):
        ra = np.asarray(r, dtype=float)
        vals = np.asarray(g(ra[..., None] * roots)).mean(axis=-1)
        if np.all(np.imag(vals) == 0):
            vals = np.real(vals)
        return vals

    return RadialSymbol.from_callable(rad)


def radialize_operator(matrix, indices, angular_order=DEFAULT_ANGULAR_ORDER):
    """Finite surrogate of ``int rho(tau) S rho(tau)^-1 dtau`` on a truncated basis.

    ``rho(tau)`` acts on ``b_{p,q}`` as ``tau^{q-p}``; averaging over the
    ``angular_order``-th roots of unity keeps exactly the entries whose
    row and column frequencies agree (for frequency gaps below ``angular_order``).
    """
    xi = np.array([p - q for p, q in indices])
    roots = np.exp(2j * np.pi * np.arange(angular_order) / angular_order)
    gap = xi[None, :] - xi[:, None]  # column frequency minus row frequency
    factor = np.mean(roots[:, None, None] ** gap[None, :, :], axis=0)
    return np.asarray(matrix) * factor
