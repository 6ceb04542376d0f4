import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from polybergman.disk import (
    BasisIndex,
    SpaceSpec,
    basis_indices_An,
    basis_indices_freq,
    disk_inner_product,
    disk_poly_monomial_coeffs,
    eval_disk_poly,
    eval_disk_poly_expansion,
    eval_monomial,
    freq_labels,
    gram_matrix,
    monomial_disk_poly_product,
    monomial_inner_product,
    polar_grid,
    project_to_freq,
)
from polybergman.quadrature import beta_function

ALPHAS = (-0.5, 0.0, 0.5, 2.0)
disk_points = st.builds(
    lambda r, th: r * complex(math.cos(th), math.sin(th)), st.floats(0, 0.95), st.floats(0, 2 * math.pi)
)


def test_space_spec_validation():
    SpaceSpec(0.0, 1)
    with pytest.raises(ValueError):
        SpaceSpec(-1.0, 2)
    with pytest.raises(ValueError):
        SpaceSpec(0.0, 0)


def test_basis_index():
    ix = BasisIndex(2, 5)
    assert ix.xi == -3 and tuple(ix) == (2, 5)


def test_eval_disk_poly_errors_and_types():
    with pytest.raises(ValueError):
        eval_disk_poly(0.0, 1, 0, 1.0)
    with pytest.raises(ValueError):
        eval_disk_poly(-1.0, 1, 0, 0.1)
    assert isinstance(eval_disk_poly(0.0, 2, 1, 0.3j), complex)
    assert eval_disk_poly(0.0, 2, 1, np.zeros((3, 2))).shape == (3, 2)


@pytest.mark.parametrize("alpha", ALPHAS)
def test_b00_and_analytic_row(alpha):
    # b_{0,0} = 1 and b_{p,0} = z^p / ||z^p||, ||z^p||^2 = (alpha+1) B(p+1, alpha+1)
    assert eval_disk_poly(alpha, 0, 0, 0.4 + 0.2j) == pytest.approx(1.0)
    z = np.array([0.3, 0.5j, -0.2 + 0.6j])
    for p in range(6):
        ref = z**p / math.sqrt((alpha + 1) * beta_function(p + 1, alpha + 1))
        np.testing.assert_allclose(eval_disk_poly(alpha, p, 0, z), ref, rtol=1e-13)


@pytest.mark.parametrize("alpha", ALPHAS)
@given(p=st.integers(0, 7), q=st.integers(0, 7), z=disk_points)
def test_jacobi_form_matches_monomial_expansion(alpha, p, q, z):
    assert eval_disk_poly(alpha, p, q, z) == pytest.approx(eval_disk_poly_expansion(alpha, p, q, z), abs=1e-9)


@given(alpha=st.sampled_from(ALPHAS), p=st.integers(0, 12), q=st.integers(0, 12), z=disk_points)
def test_conjugation_symmetry(alpha, p, q, z):
    # b_{q,p} = conj(b_{p,q}) and b_{p,q}(zbar) = conj(b_{p,q}(z))
    assert eval_disk_poly(alpha, q, p, z) == pytest.approx(np.conj(eval_disk_poly(alpha, p, q, z)), abs=1e-12)
    assert eval_disk_poly(alpha, p, q, np.conj(z)) == pytest.approx(np.conj(eval_disk_poly(alpha, p, q, z)), abs=1e-12)


@given(alpha=st.sampled_from(ALPHAS), p=st.integers(0, 10), q=st.integers(0, 10),
       z=disk_points, theta=st.floats(0, 2 * math.pi))
def test_rotation_covariance(alpha, p, q, z, theta):
    tau = complex(math.cos(theta), math.sin(theta))
    lhs = eval_disk_poly(alpha, p, q, tau * z)
    assert lhs == pytest.approx(tau ** (p - q) * eval_disk_poly(alpha, p, q, z), abs=1e-12)


def test_monomial_coeffs_leading_positive():
    for p, q in [(0, 0), (3, 1), (2, 5), (6, 6)]:
        c = disk_poly_monomial_coeffs(0.5, p, q)
        assert len(c) == min(p, q) + 1 and c[0][1] > 0
        assert [k for k, _ in c] == list(range(min(p, q) + 1))


@pytest.mark.parametrize("alpha", ALPHAS)
def test_monomial_inner_product_closed_form(alpha):
    assert monomial_inner_product(alpha, 2, 1, 1, 0) == pytest.approx((alpha + 1) * beta_function(3, alpha + 1))
    assert monomial_inner_product(alpha, 2, 1, 0, 0) == 0.0
    assert monomial_inner_product(0.0, 1, 0, 1, 0) == pytest.approx(0.5)
    for p, q, j, k in [(3, 1, 2, 0), (1, 4, 0, 3), (2, 2, 5, 5), (0, 0, 0, 0)]:
        quad = disk_inner_product(alpha, lambda z: eval_monomial(p, q, z), lambda z: eval_monomial(j, k, z))
        assert monomial_inner_product(alpha, p, q, j, k) == pytest.approx(quad.real, rel=1e-12)
        assert abs(quad.imag) < 1e-14


@pytest.mark.parametrize("alpha", [0.0, 0.5, 2.0])
def test_gram_orthonormality(alpha):
    indices = [(p, q) for p in range(9) for q in range(9)]
    G = gram_matrix(alpha, indices)
    assert np.max(np.abs(G - np.eye(len(indices)))) <= 1e-9


@pytest.mark.parametrize("alpha", [-0.5, 0.0, 2.0])
def test_gram_by_closed_form_monomials(alpha):
    # quadrature-free: expand each b in monomials, use the closed-form monomial products
    indices = [(p, q) for p in range(5) for q in range(5)]
    coeffs = [disk_poly_monomial_coeffs(alpha, p, q) for p, q in indices]
    G = np.zeros((len(indices), len(indices)))
    for i, (j, k) in enumerate(indices):
        for l, (p, q) in enumerate(indices):
            G[i, l] = sum(
                c1 * c2 * monomial_inner_product(alpha, p - s1, q - s1, j - s2, k - s2)
                for s1, c1 in coeffs[l]
                for s2, c2 in coeffs[i]
            )
    # alternating monomial sums lose about 6 digits at bidegree (4, 4)
    assert np.max(np.abs(G - np.eye(len(indices)))) <= 1e-8


@pytest.mark.parametrize("alpha", [0.0, 1.5])
def test_monomial_disk_poly_product(alpha):
    for (p, q), (j, k) in [((3, 1), (3, 1)), ((3, 1), (2, 0)), ((1, 3), (2, 4)), ((2, 2), (1, 1)), ((4, 2), (5, 3))]:
        quad = disk_inner_product(alpha, lambda z: eval_monomial(p, q, z), lambda z: eval_disk_poly(alpha, j, k, z))
        assert monomial_disk_poly_product(alpha, p, q, j, k) == pytest.approx(quad.real, abs=1e-12)
    # b_{j,k} is orthogonal to monomials of lower bidegree in the same frequency
    assert abs(monomial_disk_poly_product(alpha, 2, 0, 3, 1)) < 1e-13


@pytest.mark.parametrize("alpha", ALPHAS)
def test_polar_grid(alpha):
    z, w = polar_grid(alpha, 20, 16)
    assert z.shape == w.shape == (20, 16)
    assert w.sum() == pytest.approx(1.0, rel=1e-14)
    for k in range(10):
        exact = (alpha + 1) * beta_function(k + 1, alpha + 1)
        assert np.sum(w * np.abs(z) ** (2 * k)) == pytest.approx(exact, rel=1e-13)
    assert abs(np.sum(w * z**3)) < 1e-15


def test_disk_inner_product_rejects_nonfinite():
    with pytest.raises(ValueError):
        disk_inner_product(0.0, lambda z: np.full(z.shape, np.inf), lambda z: 1 + 0 * z)


def test_indices_and_labels():
    assert basis_indices_An(2, 1) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert basis_indices_freq(-2, 3) == [(0, 2), (1, 3), (2, 4)]
    assert basis_indices_freq(1, 2) == [(1, 0), (2, 1)]
    assert freq_labels(3, -2) == [2]
    assert freq_labels(3, 4) == [0, 1, 2]
    with pytest.raises(ValueError):
        basis_indices_freq(0, 0)


def test_project_to_freq():
    v = project_to_freq(0.5, lambda z: eval_disk_poly(0.5, 3, 1, z) + 2 * eval_disk_poly(0.5, 1, 2, z), 2, 4)
    np.testing.assert_allclose(v, [0, 1, 0, 0], atol=1e-12)
    v = project_to_freq(0.5, lambda z: eval_disk_poly(0.5, 1, 2, z), -1, 3)
    np.testing.assert_allclose(v, [0, 1, 0], atol=1e-12)
