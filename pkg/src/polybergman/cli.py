"""Command-line interface: ``polybergman <command> [options]``.

Commands: ``jacobi``, ``gram``, ``kernel``, ``toeplitz``, ``spectrum``,
``berezin-demo``. Output is JSON (default) or CSV; exit status is 0 when all
checks of the command pass, 1 when a check fails and 2 on invalid input.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import re
import sys
from dataclasses import dataclass

import numpy as np

from .berezin import DEFAULT_MAX_P, nondensity_witness
from .disk import DEFAULT_ANGULAR_ORDER, gram_matrix
from .jacobi import eval_jacobi, eval_normalized_jacobi, eval_reproducing_poly, eval_shifted_jacobi
from .kernels import eval_poly_bergman_kernel, kernel_norm, kernel_norm_quadrature, kernel_via_basis
from .quadrature import DEFAULT_SYMBOL_ORDER
from .radial import (
    DEFAULT_P_MAX,
    DEFAULT_XI_MAX,
    MatrixSequence,
    gamma_sequence,
    toeplitz_matrix_bruteforce,
    true_poly_eigenvalues,
)
from .symbols import parse_symbol

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

# per-command defaults when --tolerance is not given
DEFAULT_TOLERANCE = {
    "gram": 1e-9,
    "kernel": 1e-6,
    "toeplitz": 1e-8,
    "spectrum": 1e-12,
    "berezin-demo": 1e-10,
}


@dataclass(frozen=True)
class RunConfig:
    alpha: float = 0.0
    n: int = 1
    xi_max: int = DEFAULT_XI_MAX
    p_max: int = DEFAULT_P_MAX
    quad_order: int = DEFAULT_SYMBOL_ORDER
    angular_order: int = DEFAULT_ANGULAR_ORDER
    tolerance: float = 1e-9
    output_format: str = "json"
    seed: int = 0
    parallel: bool = False

    def __post_init__(self):
        if not self.alpha > -1:
            raise ValueError(f"alpha must exceed -1, got {self.alpha}")
        if self.n < 1:
            raise ValueError(f"n must be at least 1, got {self.n}")
        if self.xi_max < 0 or self.p_max < 0:
            raise ValueError("xi_max and p_max must be nonnegative")
        if self.quad_order < 1 or self.angular_order < 1:
            raise ValueError("quadrature orders must be positive")
        if not self.tolerance > 0:
            raise ValueError("tolerance must be positive")
        if self.output_format not in ("json", "csv"):
            raise ValueError(f"unknown output format {self.output_format!r}")


def _parse_complex(text):
    return complex(text.strip().replace(" ", "").replace("i", "j"))


def _complex_json(c):
    return {"re": float(np.real(c)), "im": float(np.imag(c))}


def _fmt(x):
    if x is None:
        return ""
    return "%.17g" % x


def _to_csv(header, rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([v if isinstance(v, (int, str)) else _fmt(v) for v in row])
    return buf.getvalue()


def _checks_result(checks):
    checks = {k: bool(v) for k, v in checks.items()}
    return {"checks": checks, "passed": all(checks.values())}


# commands return (payload dict, csv header, csv rows)


def cmd_jacobi(n, alpha, beta, points):
    """Table of ``R_n``, ``J_n``, ``Q_n`` and ``P_n`` at ``points``.

    ``P`` takes the point as ``x`` on (-1, 1); ``R``, ``J`` and ``Q`` take it as
    ``t`` on (0, 1). ``J`` is ``None`` where its weight factor is undefined.
    """
    if int(n) != n or n < 0:
        raise ValueError(f"n must be a nonnegative integer, got {n}")
    if not (alpha > -1 and beta > -1):
        raise ValueError("alpha and beta must exceed -1")
    rows = []
    for x in points:
        try:
            jval = eval_normalized_jacobi(n, alpha, beta, x)
        except ValueError:
            jval = None
        if jval is not None and not math.isfinite(jval):
            jval = None
        rows.append(
            [
                float(x),
                eval_reproducing_poly(n, alpha, beta, x),
                jval,
                eval_shifted_jacobi(n, alpha, beta, x),
                eval_jacobi(n, alpha, beta, x),
            ]
        )
    payload = {"command": "jacobi", "n": n, "alpha": alpha, "beta": beta,
               "columns": ["point", "R", "J", "Q", "P"], "rows": rows}
    return payload, payload["columns"], rows


def cmd_gram(config, size=8):
    """Gram matrix of ``b_{p,q}``, ``p, q <= size``; passes when ``max |G - I| <= tolerance``."""
    indices = [(p, q) for p in range(size + 1) for q in range(size + 1)]
    G = gram_matrix(config.alpha, indices, config.quad_order, config.angular_order)
    dev = np.abs(G - np.eye(len(indices)))
    worst = np.unravel_index(np.argmax(dev), dev.shape)
    payload = {
        "command": "gram",
        "alpha": config.alpha,
        "size": size,
        "radial_order": config.quad_order,
        "angular_order": config.angular_order,
        "max_deviation": float(dev.max()),
        "worst_entry": [list(indices[worst[0]]), list(indices[worst[1]])],
        "identity_row_00": float(dev[0].max()),
        "tolerance": config.tolerance,
        **_checks_result({"orthonormal": bool(dev.max() <= config.tolerance)}),
    }
    rows = [[f"{p}_{q}", float(dev[i].max())] for i, (p, q) in enumerate(indices)]
    return payload, ["index", "max_row_deviation"], rows


def cmd_kernel(config, z, w, max_p=60):
    """Closed-form and truncated kernels at ``(z, w)`` plus both kernel norms."""
    closed = eval_poly_bergman_kernel(config.alpha, config.n, z, w)
    swapped = eval_poly_bergman_kernel(config.alpha, config.n, w, z)
    trunc = kernel_via_basis(config.alpha, config.n, z, w, max_p)
    nf = kernel_norm(config.alpha, config.n, z)
    nq = kernel_norm_quadrature(config.alpha, config.n, z, config.quad_order, config.angular_order)
    diff = abs(closed - trunc)
    checks = {
        "truncated_sum": diff <= config.tolerance,
        "norm": abs(nf - nq) <= config.tolerance * nf,
        "hermitian_swap": abs(closed - np.conj(swapped)) <= config.tolerance * max(1.0, abs(closed)),
    }
    payload = {
        "command": "kernel",
        "alpha": config.alpha,
        "n": config.n,
        "z": _complex_json(z),
        "w": _complex_json(w),
        "max_p": max_p,
        "closed_form": _complex_json(closed),
        "truncated": _complex_json(trunc),
        "difference": float(diff),
        "norm_formula": nf,
        "norm_quadrature": nq,
        **_checks_result(checks),
    }
    rows = [
        ["closed_form", closed.real, closed.imag],
        ["truncated", trunc.real, trunc.imag],
        ["difference", diff, 0.0],
        ["norm_formula", nf, 0.0],
        ["norm_quadrature", nq, 0.0],
    ]
    return payload, ["quantity", "re", "im"], rows


def cmd_toeplitz(config, symbol, oracle=False):
    """Gamma sequence of the radial Toeplitz operator; ``oracle`` adds the brute-force comparison."""
    a = parse_symbol(symbol)
    seq = gamma_sequence(a, config.alpha, config.n, config.xi_max, config.quad_order, config.parallel)
    payload = seq.to_dict()
    payload["symbol"] = symbol
    checks = {}
    if oracle:
        max_p = config.xi_max + config.n - 1
        M, idx = toeplitz_matrix_bruteforce(a, config.alpha, config.n, max_p, config.quad_order, config.angular_order)
        ref = MatrixSequence.from_full_matrix(M, idx, config.n, config.xi_max)
        xi = np.array([p - q for p, q in idx])
        off = float(np.max(np.abs(M[xi[:, None] != xi[None, :]]), initial=0.0))
        dev = seq.max_abs_diff(ref)
        payload["oracle"] = {"max_p": max_p, "max_block_deviation": dev, "max_off_frequency": off}
        checks = {"oracle_blocks": dev <= config.tolerance, "off_frequency": off <= config.tolerance}
        payload.update(_checks_result(checks))
    rows = []
    for xi in sorted(seq.blocks):
        blk = seq.blocks[xi]
        for i, j_lab in enumerate(seq.labels(xi)):
            for k, k_lab in enumerate(seq.labels(xi)):
                rows.append([xi, j_lab, k_lab, blk[i, k].real, blk[i, k].imag])
    return payload, ["xi", "row", "col", "re", "im"], rows


def cmd_spectrum(config, symbol):
    """Eigenvalues ``lambda(p)`` on the true-polyanalytic space, checked against gamma blocks."""
    a = parse_symbol(symbol)
    lam = true_poly_eigenvalues(a, config.alpha, config.n, config.p_max, config.quad_order)
    lam = np.asarray(lam, dtype=complex)
    xi_max = max(config.p_max - config.n + 1, 0)
    seq = gamma_sequence(a, config.alpha, config.n, xi_max, config.quad_order, config.parallel)
    diag = np.array([seq.blocks[p - config.n + 1][-1, -1] for p in range(config.p_max + 1)])
    dev = float(np.max(np.abs(lam - diag)))
    payload = {
        "command": "spectrum",
        "alpha": config.alpha,
        "n": config.n,
        "p_max": config.p_max,
        "quad_order": config.quad_order,
        "symbol": symbol,
        "lambda": [{"p": p, "re": float(v.real), "im": float(v.imag)} for p, v in enumerate(lam)],
        "max_gamma_deviation": dev,
        **_checks_result({"gamma_consistency": dev <= config.tolerance}),
    }
    rows = [[p, float(v.real), float(v.imag)] for p, v in enumerate(lam)]
    return payload, ["p", "lambda_re", "lambda_im"], rows


def cmd_berezin_demo(config, max_p=DEFAULT_MAX_P):
    """Englis operator and non-density witness for ``f(z) = z``."""
    if config.n < 2:
        raise ValueError("berezin-demo needs n >= 2: for n = 1 conj(z) is not in the space, "
                         "so the Englis construction does not exist")
    rep = nondensity_witness(config.alpha, config.n, max_p, angular_order=config.angular_order,
                             radial_order=config.quad_order)
    tol = config.tolerance
    checks = {
        "forms_agree": rep["max_form_diff"] <= tol,
        "separating_f_zero": abs(rep["separating_form_f"]) <= tol,
        "separating_fbar_large": rep["separating_form_fbar"].real >= 0.99,
        "berezin_vanishes": rep["max_abs_berezin"] <= tol,
        "englis_nonzero": rep["englis_norm"] > 0.1,
    }
    payload = {
        "command": "berezin-demo",
        **rep,
        "forms": [
            {"symbol": x["symbol"], "form_f": _complex_json(x["form_f"]),
             "form_fbar": _complex_json(x["form_fbar"]), "diff": x["diff"]}
            for x in rep["forms"]
        ],
        "separating_form_f": _complex_json(rep["separating_form_f"]),
        "separating_form_fbar": _complex_json(rep["separating_form_fbar"]),
        **_checks_result(checks),
    }
    rows = [[x["symbol"], x["form_f"].real, x["form_fbar"].real, x["diff"]] for x in rep["forms"]]
    return payload, ["symbol", "form_f", "form_fbar", "diff"], rows


def _add_common(p, n_default=1):
    p.add_argument("--alpha", type=float, default=0.0, help="weight exponent (> -1)")
    p.add_argument("--n", type=int, default=n_default, help="polyanalyticity order")
    p.add_argument("--xi-max", type=int, default=DEFAULT_XI_MAX)
    p.add_argument("--p-max", type=int, default=DEFAULT_P_MAX)
    p.add_argument("--quad-order", type=int, default=DEFAULT_SYMBOL_ORDER,
                   help="radial Gauss-Jacobi order")
    p.add_argument("--angular-order", type=int, default=DEFAULT_ANGULAR_ORDER)
    p.add_argument("--tolerance", type=float, default=None)
    p.add_argument("--format", dest="output_format", choices=("json", "csv"), default="json")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--parallel", action="store_true", help="compute gamma blocks in a thread pool")
    p.add_argument("--output", "-o", default=None, help="write to this file instead of stdout")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="polybergman", description="Weighted polyanalytic Bergman spaces on the unit disk."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("jacobi", help="evaluate P, Q, J, R at points")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", type=float, default=0.0)
    p.add_argument("--beta", type=float, default=0.0)
    p.add_argument("--points", required=True, help="comma-separated evaluation points")
    p.add_argument("--format", dest="output_format", choices=("json", "csv"), default="json")
    p.add_argument("--output", "-o", default=None)

    p = sub.add_parser("gram", help="Gram matrix of the disk polynomials")
    _add_common(p)
    p.add_argument("--size", type=int, default=8, help="use p, q <= size")

    p = sub.add_parser("kernel", help="reproducing kernel: closed form vs truncated sum")
    _add_common(p)
    p.add_argument("--z", type=_parse_complex, default=None, help="e.g. 0.3+0.1i; random if omitted")
    p.add_argument("--w", type=_parse_complex, default=None)
    p.add_argument("--max-p", type=int, default=60, help="truncation of the basis sum")

    p = sub.add_parser("toeplitz", help="gamma sequence of a radial Toeplitz operator")
    _add_common(p)
    p.add_argument("--symbol", required=True, help="one | poly:c0,c1,.. | step:r1=v1,.. | pow:k")
    p.add_argument("--oracle", action="store_true", help="compare with the brute-force matrix")

    p = sub.add_parser("spectrum", help="eigenvalues on the true-polyanalytic space")
    _add_common(p)
    p.add_argument("--symbol", required=True)

    p = sub.add_parser("berezin-demo", help="Englis operator and non-density witness")
    _add_common(p, n_default=2)
    p.add_argument("--max-p", type=int, default=DEFAULT_MAX_P)
    return parser


_NEG_VALUE = re.compile(r"^-[0-9.]")


def _normalize_argv(argv):
    """Join ``--points -1,0`` into ``--points=-1,0`` so argparse accepts negative lists."""
    out = []
    it = iter(argv)
    for tok in it:
        if tok in ("--points", "--z", "--w"):
            nxt = next(it, None)
            if nxt is not None and _NEG_VALUE.match(nxt):
                out.append(f"{tok}={nxt}")
                continue
            out.append(tok)
            if nxt is not None:
                out.append(nxt)
            continue
        out.append(tok)
    return out


def _config(args):
    tol = args.tolerance if args.tolerance is not None else DEFAULT_TOLERANCE[args.command]
    return RunConfig(
        alpha=args.alpha, n=args.n, xi_max=args.xi_max, p_max=args.p_max, quad_order=args.quad_order,
        angular_order=args.angular_order, tolerance=tol, output_format=args.output_format,
        seed=args.seed, parallel=args.parallel,
    )


def run(args):
    """Dispatch parsed arguments; returns ``(payload, header, rows)``."""
    if args.command == "jacobi":
        points = [float(x) for x in args.points.split(",") if x.strip()]
        if not points:
            raise ValueError("no evaluation points given")
        return cmd_jacobi(args.n, args.alpha, args.beta, points)
    config = _config(args)
    if args.command == "gram":
        return cmd_gram(config, args.size)
    if args.command == "kernel":
        rng = np.random.default_rng(config.seed)
        z, w = args.z, args.w
        if z is None:
            z = complex(0.5 * math.sqrt(rng.random()) * np.exp(2j * math.pi * rng.random()))
        if w is None:
            w = complex(0.5 * math.sqrt(rng.random()) * np.exp(2j * math.pi * rng.random()))
        payload, header, rows = cmd_kernel(config, z, w, args.max_p)
        payload["seed"] = config.seed
        return payload, header, rows
    if args.command == "toeplitz":
        return cmd_toeplitz(config, args.symbol, args.oracle)
    if args.command == "spectrum":
        return cmd_spectrum(config, args.symbol)
    if args.command == "berezin-demo":
        return cmd_berezin_demo(config, args.max_p)
    raise ValueError(f"unknown command {args.command!r}")


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(_normalize_argv(sys.argv[1:] if argv is None else list(argv)))
    try:
        payload, header, rows = run(args)
    except ValueError as exc:
        print(f"polybergman {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.output_format == "csv":
        text = _to_csv(header, rows)
    else:
        text = json.dumps(payload, indent=2, allow_nan=False) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    passed = payload.get("passed", True)
    if not passed:
        failed = [k for k, v in payload.get("checks", {}).items() if not v]
        print(f"polybergman {args.command}: checks failed: {', '.join(failed)}", file=sys.stderr)
    return EXIT_OK if passed else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
