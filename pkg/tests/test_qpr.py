import math
import time

import numpy as np
import pytest

from cfqpr import qpr, core, preprocess, baselines, bench, utils


def _ordered(h, P):
    hbar, _ = preprocess.to_nonneg_ordered(h)
    nc = core.normalize_channel(hbar, P)
    return nc, qpr.base_solution(nc)


def test_base_solution_is_stationary(rng):
    for L in (2, 3, 6, 12):
        h = rng.standard_normal(L)
        P = float(rng.uniform(1, 1000))
        nc, base = _ordered(h, P)
        G = core.gram_matrix(nc, None)

        assert base.a1[-1] == 1
        assert base.L == L
        # Gradient w.r.t. the free entries vanishes
        np.testing.assert_allclose((G @ base.a1)[:-1], 0, atol=1e-9)
        # Nonnegative and ordered like hbar
        assert preprocess.is_nonneg_ordered(base.r)


def test_scaled_solution(example_channel):
    nc, base = _ordered(*example_channel)
    np.testing.assert_allclose(qpr.scaled_solution(base, 3), 3 * base.a1)
    for k in (0, -1, 1.5):
        with pytest.raises(ValueError):
            qpr.scaled_solution(base, k)


def _constrained_minimizer(nc, k):
    """Dense solve of min a^T G a with a(L) = k."""
    G = core.gram_matrix(nc, None)
    r = np.linalg.solve(G[:-1, :-1], -k * G[:-1, -1])
    return np.append(r, k)


def test_base_solution_matches_dense_solve(rng):
    for _ in range(2000):
        L = int(rng.integers(2, 9))
        nc, base = _ordered(rng.standard_normal(L), float(10 ** rng.uniform(0, 2)))
        np.testing.assert_allclose(base.a1, _constrained_minimizer(nc, 1),
                                   rtol=0, atol=1e-9)


def test_scaled_solution_is_constrained_minimizer(rng):
    for _ in range(1000):
        L = int(rng.integers(2, 9))
        nc, base = _ordered(rng.standard_normal(L), float(10 ** rng.uniform(0, 2)))
        for k in range(2, 7):
            np.testing.assert_allclose(qpr.scaled_solution(base, k),
                                       _constrained_minimizer(nc, k),
                                       rtol=0, atol=1e-9)


def test_determine_k(example_channel):
    nc, base = _ordered(*example_channel)

    assert qpr.determine_k(base, nc.b, 1) == 1
    assert qpr.determine_k(base, nc.b, 3) == 3
    assert qpr.determine_k(base, nc.b, 10) == 6

    with pytest.raises(ValueError):
        qpr.determine_k(base, nc.b, 0)


def test_determine_k_matches_linear_scan(rng):
    for _ in range(50):
        L = int(rng.integers(2, 10))
        nc, base = _ordered(rng.standard_normal(L), float(rng.uniform(1, 300)))
        K_u = int(rng.integers(1, 20))

        fits = [k for k in range(1, K_u + 1)
                if np.sum(np.floor(k * base.a1) ** 2) < nc.b]
        expected = max(fits) if fits else 1
        assert qpr.determine_k(base, nc.b, K_u) == expected


def test_quantization_tie_keeps_floor():
    u = np.array([0.5, 0.75])
    assert qpr.quantization_condition([0.5, 1], u, 0) == 0

    a = qpr.successive_quantize([0.5, 1], u)
    np.testing.assert_array_equal(a, [0, 1])
    # Both choices give the same quadratic form
    assert core.quadratic_form(u, [0, 1]) == pytest.approx(0.4375)
    assert core.quadratic_form(u, [1, 1]) == pytest.approx(0.4375)


def test_quantization_condition_is_form_difference(rng):
    for _ in range(50):
        L = int(rng.integers(2, 8))
        nc, _ = _ordered(rng.standard_normal(L), float(rng.uniform(1, 100)))
        w = rng.uniform(0, 5, size=L)
        l = int(rng.integers(0, L))

        fl = w.copy()
        fl[l] = math.floor(w[l])
        ce = w.copy()
        ce[l] = math.floor(w[l]) + 1
        diff = core.quadratic_form(nc, ce) - core.quadratic_form(nc, fl)
        assert qpr.quantization_condition(w, nc, l) == pytest.approx(diff, abs=1e-9)


def test_successive_quantize_is_greedy(rng):
    for _ in range(50):
        L = int(rng.integers(2, 8))
        nc, base = _ordered(rng.standard_normal(L), float(rng.uniform(1, 100)))
        k = int(rng.integers(1, 6))
        w = k * base.a1
        a = qpr.successive_quantize(w, nc)

        assert a.dtype == np.int64
        assert a[-1] == k
        assert np.all((a == np.floor(w)) | (a == np.floor(w) + 1))

        # Replay the decisions one element at a time
        x = w.copy()
        for l in range(L - 1):
            if x[l] == math.floor(x[l]):
                continue
            cond = qpr.quantization_condition(x, nc, l)
            if abs(cond) < 1e-9:
                x[l] = a[l]
                continue
            x[l] = math.floor(x[l]) + (1 if cond < 0 else 0)
            assert x[l] == a[l]


def test_successive_quantize_errors():
    u = [0.1, 0.2]
    with pytest.raises(ValueError):
        qpr.successive_quantize([0.5, 1.5], u)
    with pytest.raises(ValueError):
        qpr.successive_quantize([0.5, 0], u)
    with pytest.raises(ValueError):
        qpr.successive_quantize([0.5, 0.2, 1], u)


def test_quantized_candidates(example_channel):
    nc, base = _ordered(*example_channel)
    cands = qpr.quantized_candidates(nc, base, 3)

    assert len(cands) == 3
    np.testing.assert_array_equal(cands.candidates[0], [0, 1, 1])
    np.testing.assert_array_equal(cands.candidates[1], [0, 1, 2])
    np.testing.assert_array_equal(cands.candidates[2], [0, 2, 3])
    for c, f in zip(cands.candidates, cands.f):
        assert f == pytest.approx(core.quadratic_form(nc, c))

    k, c, f = cands.best()
    assert k == 2
    assert f == pytest.approx(0.1298, abs=1e-3)


def test_worked_example(example_channel):
    h, P = example_channel
    res = qpr.qpr_select(h, P)

    np.testing.assert_array_equal(res.a, [-2, 0, 1])
    assert res.meta == {'K': 3, 'k': 2}
    assert res.f == pytest.approx(0.1298, abs=1e-3)
    assert res.rate == pytest.approx(core.computation_rate(h, res.a, P))


def test_axis_channel_keeps_unit_vector():
    res = qpr.qpr_select([0, 0, 1], 15)
    np.testing.assert_array_equal(res.a, [0, 0, 1])
    assert res.meta['k'] == 0
    assert res.rate == pytest.approx(2.0)


def test_selection_invariants(rng):
    for _ in range(100):
        L = int(rng.integers(2, 17))
        h = rng.standard_normal(L)
        P = float(10 ** rng.uniform(0, 3))
        res = qpr.qpr_select(h, P)
        nc = core.normalize_channel(h, P)

        assert res.rate > 0
        assert not res.degenerate
        assert 0 <= res.meta['k'] <= res.meta['K'] <= qpr.default_ku(L)
        # Never worse than the best unit vector
        assert res.f <= 1 - np.max(nc.u ** 2) + 1e-12
        assert res.rate == pytest.approx(core.computation_rate(h, res.a, P))


def test_not_better_than_optimal(rng):
    for _ in range(30):
        L = int(rng.integers(2, 5))
        h = rng.standard_normal(L)
        P = float(10 ** rng.uniform(0, 2))
        opt = baselines.exhaustive_optimal(h, P)
        assert qpr.qpr_select(h, P).rate <= opt.rate + 1e-9


def test_invariant_to_sign_and_permutation(rng):
    h = rng.standard_normal(6)
    P = 100.0
    res = qpr.qpr_select(h, P)

    perm = rng.permutation(6)
    flipped = qpr.qpr_select(-h[perm], P)
    assert flipped.rate == pytest.approx(res.rate)


def test_select_many_matches_select(rng):
    for L in (2, 3, 4, 7, 16):
        H = rng.standard_normal((100, L))
        # Zeros and equal magnitudes
        H[0] = 0
        H[0, -1] = 1
        H[1, :2] = [1.5, -1.5]
        for P in (1.0, 10.0, 100.0):
            for K_u in (None, 1, 6):
                batch = qpr.qpr_select_many(H, P, K_u=K_u)
                single = [qpr.qpr_select(h, P, K_u=K_u) for h in H]

                assert len(batch) == 100
                np.testing.assert_array_equal(batch.a, [r.a for r in single])
                np.testing.assert_array_equal(batch.K, [r.meta['K'] for r in single])
                np.testing.assert_array_equal(batch.k, [r.meta['k'] for r in single])
                np.testing.assert_allclose(batch.f, [r.f for r in single],
                                           rtol=1e-12)
                np.testing.assert_allclose(batch.rate, [r.rate for r in single],
                                           rtol=1e-12)


def test_select_many_errors():
    with pytest.raises(ValueError):
        qpr.qpr_select_many([1., 2.], 10)
    with pytest.raises(ValueError):
        qpr.qpr_select_many([[1.], [2.]], 10)
    with pytest.raises(ValueError):
        qpr.qpr_select_many([[1., 2.], [0., 0.]], 10)
    with pytest.raises(ValueError):
        qpr.qpr_select_many([[1., np.nan]], 10)
    with pytest.raises(ValueError):
        qpr.qpr_select_many([[1., 2.]], 10, K_u=0)


def test_default_ku():
    assert qpr.default_ku(2) == 2
    assert qpr.default_ku(4) == 4
    assert qpr.default_ku(12) == 7
    assert qpr.default_ku(17) == qpr.KU_FALLBACK
    with pytest.raises(ValueError):
        qpr.default_ku(1)


def test_rates_by_cap_match_select(rng):
    for _ in range(30):
        L = int(rng.integers(2, 10))
        h = rng.standard_normal(L)
        P = float(10 ** rng.uniform(0, 2.5))
        by_cap = qpr.qpr_rates_by_cap(h, P, 8)

        assert by_cap.shape == (8,)
        assert np.all(np.diff(by_cap) >= 0)
        expected = [qpr.qpr_select(h, P, K_u=c).rate for c in range(1, 9)]
        np.testing.assert_allclose(by_cap, expected, rtol=1e-9, atol=1e-12)


def test_calibrate_ku_not_converging():
    with pytest.warns(UserWarning):
        ku = qpr.calibrate_ku(3, trials=20, seed=1, k_max=3, threshold=1.0,
                              progress=False)
    assert ku == 3


@pytest.mark.slow
def test_calibrate_ku_small_dims():
    # Shipped table +/- 1 on the default seed
    for L in (2, 3, 4):
        ku = qpr.calibrate_ku(L, trials=10000, seed=utils.DEFAULT_SEED,
                              progress=False)
        assert qpr.KU_TABLE[L] - 1 <= ku <= qpr.KU_TABLE[L] + 1


@pytest.mark.slow
def test_runtime_grows_slower_than_dim_squared():
    P = 10.0

    def median_ns(L):
        H = bench.generate_channels(L, 300, seed=3)
        times = []
        for h in H:
            start = time.perf_counter_ns()
            qpr.qpr_select(h, P)
            times.append(time.perf_counter_ns() - start)
        return np.median(times)

    # Warm up
    median_ns(4)
    assert median_ns(16) / median_ns(4) <= 12
