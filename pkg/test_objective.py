#!/usr/bin/env python3
"""
Testes da função de custo tri-critério e dos seus minimizadores analíticos.
"""
import sys
import os

# Adiciona a raiz do projeto ao path
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import numpy as np
import pytest
from scipy.linalg import solve_banded

from swarm_enhance.histogram import LEVELS, Histogram, compute_histogram
from swarm_enhance.objective import (
    DiffMatrix, ObjectiveError, ObjectiveSpec, closed_form_bicriteria, closed_form_tricriteria,
    gradient, solve_tridiagonal, system_residual, tri_cost,
)
from swarm_enhance.synthetic import low_contrast_document, random_image


def _random_spec(rng, lambda_, gamma, scale=100.0):
    return ObjectiveSpec.from_histogram(Histogram(rng.uniform(0, scale, LEVELS)), lambda_, gamma)


def _image_spec(seed, lambda_, gamma):
    return ObjectiveSpec.from_histogram(compute_histogram(random_image(64, 64, seed=seed, low=40, high=200)),
                                        lambda_, gamma)


def test_diff_matrix_matches_dense():
    rng = np.random.default_rng(0)
    diff = DiffMatrix(LEVELS)
    dense = diff.dense()
    h = rng.normal(size=LEVELS)
    np.testing.assert_allclose(diff.apply(h), dense @ h, atol=1e-12)
    np.testing.assert_allclose(diff.apply_transpose(h), dense.T @ h, atol=1e-12)

    lower, diag, upper = diff.gram_bands()
    gram = dense.T @ dense
    np.testing.assert_array_equal(diag, np.diag(gram))
    np.testing.assert_array_equal(lower[1:], np.diag(gram, -1))
    np.testing.assert_array_equal(upper[:-1], np.diag(gram, 1))
    assert diag[0] == 1 and diag[-1] == 1 and np.all(diag[1:-1] == 2)


def test_spec_validation():
    h = Histogram(np.full(LEVELS, 4.0))
    with pytest.raises(ObjectiveError):
        ObjectiveSpec.from_histogram(h, -1.0, 0.0)
    with pytest.raises(ObjectiveError):
        ObjectiveSpec.from_histogram(h, 0.0, -5.0)
    with pytest.raises(ObjectiveError):
        ObjectiveSpec.from_histogram(h, float("nan"), 0.0)

    ramp = Histogram(np.arange(LEVELS, dtype=float))
    with pytest.raises(ObjectiveError):
        ObjectiveSpec(h_input=h, u_target=ramp, lambda_=1.0, gamma=0.0)
    with pytest.raises(ObjectiveError):
        ObjectiveSpec(h_input=h, u_target=Histogram(np.full(LEVELS, 5.0)), lambda_=1.0, gamma=0.0)


def test_uniform_target_has_same_total():
    spec = _image_spec(1, 5.0, 50000.0)
    assert spec.u_target.total == pytest.approx(spec.h_input.total, rel=1e-12)
    assert np.all(spec.u_target.counts == 4096 / 256)


def test_tri_cost_examples():
    rng = np.random.default_rng(1)
    spec = _random_spec(rng, 0.0, 0.0)
    assert tri_cost(spec.h_input.counts, spec) == 0.0

    for gamma in (0.0, 1000.0, 1e6):
        spec = ObjectiveSpec(spec.h_input, spec.u_target, 3.0, gamma)
        residual = spec.u_target.counts - spec.h_input.counts
        assert tri_cost(spec.u_target.counts, spec) == pytest.approx(float(residual @ residual), rel=1e-12)


def test_tri_cost_matches_naive_sum():
    rng = np.random.default_rng(2)
    spec = _random_spec(rng, 5.0, 50000.0)
    h = rng.uniform(0, 100, LEVELS)
    hi, u = spec.h_input.counts, spec.u_target.counts
    fidelity = sum((h[k] - hi[k]) ** 2 for k in range(LEVELS))
    contrast = sum((h[k] - u[k]) ** 2 for k in range(LEVELS))
    smooth = sum((h[k] - h[k - 1]) ** 2 for k in range(1, LEVELS))
    expected = fidelity + 5.0 * contrast + 50000.0 * smooth
    assert tri_cost(h, spec) == pytest.approx(expected, rel=1e-9)


def test_tri_cost_length_mismatch():
    spec = _random_spec(np.random.default_rng(3), 1.0, 1.0)
    with pytest.raises(ObjectiveError):
        tri_cost(np.zeros(255), spec)


def test_bicriteria_examples():
    rng = np.random.default_rng(4)
    spec = _random_spec(rng, 0.0, 0.0)
    np.testing.assert_array_equal(closed_form_bicriteria(spec), spec.h_input.counts)

    spec = ObjectiveSpec(spec.h_input, spec.u_target, 1e9, 0.0)
    h_hat = closed_form_bicriteria(spec)
    assert np.max(np.abs(h_hat - spec.u_target.counts)) <= 1e-6 * np.max(np.abs(spec.h_input.counts))

    spec = ObjectiveSpec(spec.h_input, spec.u_target, 1.0, 0.0)
    np.testing.assert_allclose(closed_form_bicriteria(spec), (spec.h_input.counts + spec.u_target.counts) / 2,
                               rtol=1e-12)


def test_tricriteria_reduces_to_bicriteria():
    """Com γ = 0 as duas soluções analíticas coincidem em 100 instâncias."""
    rng = np.random.default_rng(5)
    for _ in range(100):
        spec = _random_spec(rng, rng.uniform(0, 20), 0.0, scale=rng.uniform(1, 1000))
        diff = np.abs(closed_form_tricriteria(spec) - closed_form_bicriteria(spec))
        assert np.max(diff) <= 1e-10


def test_tricriteria_identity_at_zero_weights():
    spec = _image_spec(6, 0.0, 0.0)
    np.testing.assert_array_equal(closed_form_tricriteria(spec), spec.h_input.counts)


@pytest.mark.parametrize("lambda_", [0.0, 1.0, 5.0, 20.0])
@pytest.mark.parametrize("gamma", [0.0, 1000.0, 50000.0, 1e6])
def test_tridiagonal_residual(lambda_, gamma):
    spec = _image_spec(7, lambda_, gamma)
    h_hat = closed_form_tricriteria(spec)
    b = spec.rhs()
    assert np.max(np.abs(system_residual(h_hat, spec))) <= 1e-8 * np.max(np.abs(b))


@pytest.mark.parametrize("gamma", [1000.0, 50000.0, 1e6])
def test_thomas_matches_banded_solver(gamma):
    spec = _image_spec(8, 5.0, gamma)
    lower, diag, upper = spec.system_bands()
    banded = np.zeros((3, LEVELS))
    banded[0, 1:] = upper[:-1]
    banded[1] = diag
    banded[2, :-1] = lower[1:]
    expected = solve_banded((1, 1), banded, spec.rhs())
    np.testing.assert_allclose(solve_tridiagonal(lower, diag, upper, spec.rhs()), expected, rtol=1e-8)


def test_solve_tridiagonal_small_system():
    x = solve_tridiagonal(np.array([0.0, 1.0, 1.0]), np.array([4.0, 4.0, 4.0]),
                          np.array([1.0, 1.0, 0.0]), np.array([5.0, 6.0, 5.0]))
    np.testing.assert_allclose(x, [1.0, 1.0, 1.0], rtol=1e-14)
    with pytest.raises(ObjectiveError):
        solve_tridiagonal(np.zeros(2), np.ones(3), np.zeros(3), np.ones(3))


def test_tricriteria_is_local_minimum():
    rng = np.random.default_rng(9)
    spec = _image_spec(9, 5.0, 50000.0)
    h_hat = closed_form_tricriteria(spec)
    best = tri_cost(h_hat, spec)
    for _ in range(1000):
        delta = rng.uniform(-1, 1, LEVELS)
        assert best <= tri_cost(h_hat + delta, spec)


def test_tricriteria_beats_bicriteria_when_smoothing():
    spec = ObjectiveSpec.from_histogram(compute_histogram(low_contrast_document(64, 64, seed=2)), 5.0, 50000.0)
    assert tri_cost(closed_form_tricriteria(spec), spec) < tri_cost(closed_form_bicriteria(spec), spec)


def test_gradient_zero_at_minimizer():
    for lambda_, gamma in [(0.0, 0.0), (5.0, 50000.0), (20.0, 1e6)]:
        spec = _image_spec(10, lambda_, gamma)
        h_hat = closed_form_tricriteria(spec)
        scale = (1 + lambda_ + 4 * gamma) * np.max(np.abs(h_hat)) + np.max(np.abs(spec.rhs()))
        assert np.max(np.abs(gradient(h_hat, spec))) <= 1e-6 * scale

    spec = _image_spec(11, 0.0, 0.0)
    np.testing.assert_array_equal(gradient(spec.h_input.counts, spec), np.zeros(LEVELS))


def test_gradient_matches_finite_differences():
    """Diferenças centrais com passo 1e-4 em 50 pontos aleatórios (escala unitária)."""
    rng = np.random.default_rng(12)
    step = 1e-4
    for _ in range(50):
        spec = _random_spec(rng, rng.uniform(0, 5), rng.uniform(0, 10), scale=1.0)
        h = rng.uniform(0, 1, LEVELS)
        analytic = gradient(h, spec)
        numeric = np.empty(LEVELS)
        for k in range(LEVELS):
            e = np.zeros(LEVELS)
            e[k] = step
            numeric[k] = (tri_cost(h + e, spec) - tri_cost(h - e, spec)) / (2 * step)
        assert np.all(np.abs(numeric - analytic) <= 1e-5 * np.maximum(np.abs(analytic), 1.0))


def test_tradeoff_monotonicity():
    """Com γ = 0, aumentar λ aproxima ĥ de u e o afasta de h_i."""
    rng = np.random.default_rng(13)
    lambdas = [0.0, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0]
    for _ in range(20):
        base = _random_spec(rng, 0.0, 0.0)
        to_u, to_hi = [], []
        for lambda_ in lambdas:
            spec = ObjectiveSpec(base.h_input, base.u_target, lambda_, 0.0)
            h_hat = closed_form_tricriteria(spec)
            to_u.append(np.linalg.norm(h_hat - spec.u_target.counts))
            to_hi.append(np.linalg.norm(h_hat - spec.h_input.counts))
        tolerance = 1e-9 * np.linalg.norm(base.h_input.counts)
        assert all(b <= a + tolerance for a, b in zip(to_u, to_u[1:]))
        assert all(b >= a - tolerance for a, b in zip(to_hi, to_hi[1:]))


def main():
    """Executa os testes deste módulo com pytest."""
    sys.exit(pytest.main([__file__, "-v"]))


if __name__ == "__main__":
    main()
