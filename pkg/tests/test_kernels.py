import math

import numpy as np
import pytest

from polybergman.disk import basis_indices_An, disk_inner_product, eval_disk_poly, eval_monomial
from polybergman.kernels import (
    eval_poly_bergman_kernel,
    eval_true_poly_kernel,
    kernel_norm,
    kernel_norm_quadrature,
    kernel_via_basis,
    weighted_mean_value,
)


def random_disk_points(rng, count, rmax):
    r = rmax * np.sqrt(rng.random(count))
    return r * np.exp(2j * np.pi * rng.random(count))


def test_analytic_bergman_kernel():
    z, w = 0.3 - 0.4j, 0.5 + 0.1j
    assert eval_poly_bergman_kernel(0.0, 1, z, w) == pytest.approx(1 / (1 - np.conj(z) * w) ** 2)
    assert eval_poly_bergman_kernel(1.5, 1, z, w) == pytest.approx((1 - np.conj(z) * w) ** -3.5)


def test_zero_kernel_and_errors():
    assert eval_poly_bergman_kernel(0.0, 0, 0.1, 0.2) == 0
    with pytest.raises(ValueError):
        eval_poly_bergman_kernel(0.0, 2, 1.0, 0.2)
    with pytest.raises(ValueError):
        eval_poly_bergman_kernel(-1.0, 2, 0.1, 0.2)
    with pytest.raises(ValueError):
        eval_poly_bergman_kernel(0.0, -1, 0.1, 0.2)
    with pytest.raises(ValueError):
        eval_true_poly_kernel(0.0, 0, 0.1, 0.2)


@pytest.mark.parametrize("alpha", [0.0, 0.5, 2.0])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_closed_form_equals_basis_sum(alpha, n, rng):
    z = random_disk_points(rng, 6, 0.5)
    w = random_disk_points(rng, 6, 0.5)
    closed = eval_poly_bergman_kernel(alpha, n, z, w)
    trunc = kernel_via_basis(alpha, n, z, w, 60)
    assert np.max(np.abs(closed - trunc)) <= 1e-6
    assert np.max(np.abs(closed - trunc)) <= 1e-12 * np.max(np.abs(closed))


@pytest.mark.parametrize("alpha", [0.0, 2.0])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_hermitian_symmetry(alpha, n, rng):
    z = random_disk_points(rng, 10, 0.9)
    w = random_disk_points(rng, 10, 0.9)
    np.testing.assert_allclose(eval_poly_bergman_kernel(alpha, n, z, w), np.conj(eval_poly_bergman_kernel(alpha, n, w, z)), rtol=1e-12)


@pytest.mark.parametrize("alpha", [0.0, 1.5])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_true_poly_kernel_is_top_row(alpha, n):
    z, w = 0.2 + 0.3j, -0.4 + 0.1j
    ref = sum(eval_disk_poly(alpha, p, n - 1, w) * np.conj(eval_disk_poly(alpha, p, n - 1, z)) for p in range(80))
    assert eval_true_poly_kernel(alpha, n, z, w) == pytest.approx(ref, rel=1e-12)


def test_kernel_norm_examples():
    assert kernel_norm(0.0, 1, 0.0) == pytest.approx(1.0)
    assert kernel_norm(0.0, 2, 0.0) == pytest.approx(2.0)
    assert kernel_norm(0.0, 1, 0.5) == pytest.approx(1 / 0.75)
    assert kernel_norm(2.0, 3, 0.0) == pytest.approx(math.sqrt(3 * 5 / 3))


@pytest.mark.parametrize("alpha", [0.0, 0.5, 2.0])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_kernel_norm_is_sqrt_diagonal(alpha, n, rng):
    for z in random_disk_points(rng, 5, 0.8):
        assert kernel_norm(alpha, n, z) ** 2 == pytest.approx(eval_poly_bergman_kernel(alpha, n, z, z).real, rel=1e-12)
        assert kernel_norm(alpha, n, z) ** 2 == pytest.approx(kernel_via_basis(alpha, n, z, z, 400).real, rel=1e-10)


@pytest.mark.parametrize("alpha", [0.0, 2.0])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_kernel_norm_quadrature(alpha, n, rng):
    for z in random_disk_points(rng, 5, 0.7):
        nq = kernel_norm_quadrature(alpha, n, z, 128, 256)
        assert nq == pytest.approx(kernel_norm(alpha, n, z), rel=1e-7)


@pytest.mark.parametrize("alpha", [0.0, 2.0])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_reproducing_property(alpha, n, rng):
    zs = random_disk_points(rng, 20, 0.7)
    for p, q in [(0, 0), (3, 0), (1, n - 1), (4, n - 1), (0, n - 1)]:
        for z in zs[:4]:
            val = disk_inner_product(
                alpha, lambda w: eval_disk_poly(alpha, p, q, w), lambda w: eval_poly_bergman_kernel(alpha, n, z, w), 128, 256
            )
            assert abs(val - eval_disk_poly(alpha, p, q, z)) <= 1e-8


def test_kernel_annihilates_higher_order():
    # b_{p,q} with q >= n is orthogonal to K_{n,z}
    val = disk_inner_product(0.5, lambda w: eval_disk_poly(0.5, 2, 2, w),
                             lambda w: eval_poly_bergman_kernel(0.5, 2, 0.3 + 0.2j, w), 128, 256)
    assert abs(val) < 1e-10


@pytest.mark.parametrize("alpha", [0.0, 1.5])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_weighted_mean_value(alpha, n, rng):
    for _ in range(5):
        c = rng.standard_normal((7, n)) + 1j * rng.standard_normal((7, n))

        def f(z, c=c):
            return sum(c[p, q] * eval_monomial(p, q, z) for p in range(7) for q in range(n) if p + q <= 6)

        assert abs(weighted_mean_value(alpha, n, f) - c[0, 0]) <= 1e-9


def test_weighted_mean_value_fails_beyond_order():
    # zbar^2 z^2 is 3-analytic, so the 2-analytic mean value does not reproduce f(0) = 0
    assert abs(weighted_mean_value(0.0, 2, lambda z: np.abs(z) ** 4)) > 1e-3


def test_basis_count():
    assert len(basis_indices_An(3, 4)) == 15
