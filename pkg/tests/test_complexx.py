import numpy as np
import pytest

from cfqpr import complexx, core, qpr


def test_complex_to_real_channel():
    np.testing.assert_allclose(complexx.complex_to_real_channel([1 + 2j, -3j]),
                               [1, 0, -2, 3])
    np.testing.assert_allclose(complexx.complex_to_real_channel(([1, 0], [2, -3])),
                               [1, 0, -2, 3])


def test_parse_complex_channel():
    with pytest.raises(ValueError):
        complexx.parse_complex_channel([0j, 0j])
    with pytest.raises(ValueError):
        complexx.parse_complex_channel(([1, 2], [1]))
    with pytest.raises(ValueError):
        complexx.parse_complex_channel([[1j, 2]])
    with pytest.raises(ValueError):
        complexx.parse_complex_channel([np.nan * 1j, 1])


def test_real_only_channel(rng):
    for _ in range(10):
        h = rng.standard_normal(3)
        P = float(10 ** rng.uniform(0, 2))
        res = complexx.complex_coeff(h.astype(complex), P, K_u=4)
        ref = qpr.qpr_select(h, P / 2, K_u=4)

        np.testing.assert_array_equal(res.re, ref.a)
        np.testing.assert_array_equal(res.im, 0)
        assert res.rate == pytest.approx(ref.rate)


def test_pure_imaginary_channel(rng):
    for _ in range(10):
        h = rng.standard_normal(3)
        P = float(10 ** rng.uniform(0, 2))
        res = complexx.complex_coeff(1j * h, P, K_u=4)
        ref = qpr.qpr_select(h, P / 2, K_u=4)

        np.testing.assert_array_equal(res.re, 0)
        np.testing.assert_array_equal(res.im, ref.a)
        assert res.rate == pytest.approx(ref.rate)


def test_direct_and_lifted_forms_agree(rng):
    for _ in range(20):
        L = int(rng.integers(1, 5))
        hc = rng.standard_normal(L) + 1j * rng.standard_normal(L)
        a = rng.integers(-3, 4, size=L) + 1j * rng.integers(-3, 4, size=L)
        P = float(10 ** rng.uniform(0, 2))

        direct = complexx.complex_quadratic_form(hc, a, P)
        lifted = complexx.lifted_quadratic_form(hc, a, P)
        assert direct == pytest.approx(lifted, abs=1e-9)


def test_complex_coeff(rng):
    for _ in range(10):
        L = int(rng.integers(1, 5))
        hc = rng.standard_normal(L) + 1j * rng.standard_normal(L)
        P = 100.0
        res = complexx.complex_coeff(hc, P)

        assert res.a.dtype == complex
        assert res.rate > 0
        assert res.f == pytest.approx(complexx.lifted_quadratic_form(hc, res, P))
        assert res.rate == pytest.approx(
            complexx.complex_computation_rate(hc, res.a, P))


def test_counterpart(rng):
    hc = rng.standard_normal(3) + 1j * rng.standard_normal(3)
    P = 30.0
    res = complexx.complex_coeff(hc, P)

    first = core.normalize_channel(np.concatenate([hc.real, -hc.imag]), P / 2)
    second = core.normalize_channel(np.concatenate([hc.imag, hc.real]), P / 2)
    assert core.quadratic_form(second, res.counterpart()) == pytest.approx(
        core.quadratic_form(first, res.stacked()))


def test_complex_computation_rate():
    # [1, 0] -> real channel [1, 0], P / 2 = 7.5; a = 1 -> f = 1 / 8.5
    r = complexx.complex_computation_rate([1, 0], [1, 0], 15)
    assert r == pytest.approx(0.5 * np.log2(8.5))
    assert complexx.complex_computation_rate([1, 0], [10, 10j], 15) == 0
    with pytest.raises(ValueError):
        complexx.complex_computation_rate([1, 0], [0, 0], 15)


def test_gaussian_integer_vector():
    with pytest.raises(ValueError):
        complexx.GaussianIntegerVector(re=np.zeros(2, int), im=np.zeros(2, int))

    g = complexx.GaussianIntegerVector(re=np.array([1, 0]), im=np.array([0, -2]))
    np.testing.assert_array_equal(g.a, [1, -2j])
    np.testing.assert_array_equal(g.stacked(), [1, 0, 0, 2])
    np.testing.assert_array_equal(g.counterpart(), [0, -2, 1, 0])
