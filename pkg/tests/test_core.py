import math

import numpy as np
import pytest

from cfqpr import core


def test_normalize_channel(rng):
    h = rng.standard_normal(5)
    P = 7.5
    nc = core.normalize_channel(h, P)

    assert nc.L == 5
    assert nc.b == pytest.approx(1 + P * np.dot(h, h))
    assert nc.norm_sq < 1
    assert nc.norm_sq == pytest.approx(P * np.dot(h, h) / nc.b)

    with pytest.raises(ValueError):
        nc.u[0] = 1


def test_gram_matrix(rng):
    h = rng.standard_normal(4)
    P = 3.0
    G = core.gram_matrix(h, P)
    expected = np.eye(4) - P / (1 + P * np.dot(h, h)) * np.outer(h, h)
    np.testing.assert_allclose(G, expected, atol=1e-12)

    # Smallest eigenvalue is 1 / b (along h), all others are 1
    nc = core.normalize_channel(h, P)
    ev = np.linalg.eigvalsh(G)
    assert ev.min() == pytest.approx(1 / nc.b)
    np.testing.assert_allclose(ev[1:], 1)

    # P is ignored for normalized channels
    np.testing.assert_allclose(core.gram_matrix(nc, None), G)


def test_quadratic_form_matches_gram(rng):
    for L in (2, 3, 5, 8):
        h = rng.standard_normal(L)
        P = float(rng.uniform(0.5, 200))
        G = core.gram_matrix(h, P)
        nc = core.normalize_channel(h, P)
        A = rng.integers(-4, 5, size=(20, L))

        dense = np.einsum('ij,jk,ik->i', A, G, A)
        np.testing.assert_allclose(core.quadratic_forms(nc, A), dense, atol=1e-9)
        for a, f in zip(A, dense):
            assert core.quadratic_form(nc, a) == pytest.approx(f, abs=1e-9)


def test_quadratic_form_dimension_mismatch():
    nc = core.normalize_channel([1, 2, 3], 1)
    with pytest.raises(ValueError):
        core.quadratic_form(nc, [1, 2])
    with pytest.raises(ValueError):
        core.quadratic_forms(nc, [[1, 2]])


def test_rate_from_form():
    assert core.rate_from_form(0.25) == pytest.approx(1.0)
    assert core.rate_from_form(1) == 0
    assert core.rate_from_form(3.5) == 0
    with pytest.raises(ValueError):
        core.rate_from_form(0)


def test_computation_rate_axis():
    # e_L on the axis channel: f = 1 / b
    assert core.computation_rate([0, 0, 1], [0, 0, 1], 15) == pytest.approx(2.0)
    assert core.computation_rate([0, 0, 1], [0, 1, 0], 15) == 0


def test_computation_rate_norm_bound():
    # b = 2 and |a|^2 = 2
    assert core.computation_rate([1, 0], [1, 1], 1) == 0.0
    # Far outside of the ball
    assert core.computation_rate([1, 0.5], [10, 5], 1) == 0.0


def test_computation_rate_formula(rng):
    h = rng.standard_normal(4)
    a = np.array([1, 0, -1, 2])
    P = 50.0
    f = np.dot(a, a) - P * np.dot(h, a) ** 2 / (1 + P * np.dot(h, h))
    expected = max(0, 0.5 * math.log2(1 / f))
    assert core.computation_rate(h, a, P) == pytest.approx(expected)


def test_computation_rate_errors():
    with pytest.raises(ValueError):
        core.computation_rate([1, 2], [0, 0], 1)
    with pytest.raises(ValueError):
        core.computation_rate([1, 2], [1, 2, 3], 1)
    with pytest.raises(ValueError):
        core.computation_rate([1, 2], [0.5, 1], 1)
    with pytest.raises(ValueError):
        core.computation_rate([1, 2], [1, 1], -1)


def test_computation_rates(rng):
    h = rng.standard_normal(3)
    P = 20.0
    A = np.array([[0, 0, 0], [1, 0, 0], [0, 1, 1], [3, -2, 1], [50, 50, 50]])
    rates = core.computation_rates(h, A, P)

    assert rates[0] == 0
    assert rates[-1] == 0
    for a, r in zip(A[1:], rates[1:]):
        assert r == pytest.approx(core.computation_rate(h, a, P))


def test_make_coefficient():
    nc = core.normalize_channel([0, 0, 1], 15)

    res = core.make_coefficient(nc, [0, 0, 0], foo='bar')
    assert res.degenerate
    assert res.rate == 0
    assert res.meta == {'foo': 'bar'}

    res = core.make_coefficient(nc, [0, 0, 1])
    assert not res.degenerate
    assert res.f == pytest.approx(1 / 16)
    assert res.rate == pytest.approx(2.0)
    assert res.L == 3
