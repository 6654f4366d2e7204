import logging

import numpy as np
import pytest

from cfqpr import utils


def test_parse_channel():
    h = utils.parse_channel([1, 2])
    assert h.dtype == float

    with pytest.raises(ValueError):
        utils.parse_channel([1])
    with pytest.raises(ValueError):
        utils.parse_channel([0, 0, 0])
    with pytest.raises(ValueError):
        utils.parse_channel([1, np.nan])
    with pytest.raises(ValueError):
        utils.parse_channel([[1, 2], [3, 4]])
    with pytest.raises(TypeError):
        utils.parse_channel('12')


def test_parse_power():
    assert utils.parse_power(10) == 10.0
    for P in (0, -1, np.inf):
        with pytest.raises(ValueError):
            utils.parse_power(P)
    for P in ('10', True, None):
        with pytest.raises(TypeError):
            utils.parse_power(P)


def test_parse_coefficients():
    a = utils.parse_coefficients([1., -2., 0.])
    assert a.dtype == np.int64
    np.testing.assert_array_equal(a, [1, -2, 0])

    with pytest.raises(ValueError):
        utils.parse_coefficients([0.5, 1])
    with pytest.raises(ValueError):
        utils.parse_coefficients([0, 0])
    with pytest.raises(ValueError):
        utils.parse_coefficients([1, 2], L=3)
    with pytest.raises(TypeError):
        utils.parse_coefficients(np.array([True, False]))

    np.testing.assert_array_equal(utils.parse_coefficients([0, 0], allow_zero=True),
                                  [0, 0])


def test_round_half_away():
    np.testing.assert_array_equal(utils.round_half_away([0.5, -0.5, 1.5, -2.5, 0.49]),
                                  [1, -1, 2, -3, 0])


def test_sign_normalize():
    h = np.array([1., -2.])
    np.testing.assert_array_equal(utils.sign_normalize([1, 1], h), [-1, -1])
    np.testing.assert_array_equal(utils.sign_normalize([1, 0], h), [1, 0])
    # Orthogonal: first non-zero entry made positive
    np.testing.assert_array_equal(utils.sign_normalize([-2, -1], h), [2, 1])


def test_db_conversion():
    np.testing.assert_allclose(utils.db_to_linear([0, 10, 20]), [1, 10, 100])
    np.testing.assert_allclose(utils.linear_to_db(utils.db_to_linear(13.5)), 13.5)


def test_parse_range():
    assert utils.parse_range('2,4,8') == [2, 4, 8]
    assert utils.parse_range('0:5:20') == [0, 5, 10, 15, 20]
    assert utils.parse_range('1:3') == [1, 2, 3]
    assert utils.parse_range('0:2.5:5', dtype=float) == [0.0, 2.5, 5.0]
    assert utils.parse_range('2, 5:6') == [2, 5, 6]

    with pytest.raises(ValueError):
        utils.parse_range('1:0:5')
    with pytest.raises(ValueError):
        utils.parse_range('')
    with pytest.raises(ValueError):
        utils.parse_range('1:2:3:4')


def test_loggers():
    old = utils.logger.level
    try:
        utils.set_loggers('debug')
        assert utils.logger.level == logging.DEBUG

        @utils.quiet
        def level():
            return utils.logger.level

        assert level() == logging.ERROR
        assert utils.logger.level == logging.DEBUG
    finally:
        utils.logger.setLevel(old)
