import math

import numpy as np
import pytest

from smoothint import (
    Canonical,
    EncoderConfig,
    Heaviside,
    Mode,
    Sigmoid,
    Smoothstep,
    counter_eval,
    counter_grid,
    smooth_cutoff,
    term_weights,
)


def test_config_defaults():
    config = EncoderConfig(family=Canonical())
    assert config.delta == 0.2
    assert config.mode is Mode.DISCRETE
    assert config.transition is None


def test_smooth_mode_gets_default_transition():
    config = EncoderConfig(family=Canonical(), mode=Mode.SMOOTH)
    assert config.transition == Sigmoid(10.0)


def test_config_validation():
    with pytest.raises(ValueError, match="delta"):
        EncoderConfig(family=Canonical(), delta=0.0)
    with pytest.raises(ValueError, match="transition"):
        EncoderConfig(family=Canonical(), transition=Sigmoid())
    with pytest.raises(ValueError, match="truncation"):
        EncoderConfig(family=Canonical(), truncation=40)
    with pytest.raises(ValueError, match="truncation"):
        EncoderConfig(family=Canonical(), mode=Mode.SMOOTH, truncation=0)


def test_term_weights_discrete():
    config = EncoderConfig(family=Canonical())
    ns, weights = term_weights(config, 5)
    assert np.array_equal(ns, [1, 2, 3, 4, 5])
    assert np.array_equal(weights, np.ones(5))
    ns0, weights0 = term_weights(config, 0)
    assert ns0.size == 0 and weights0.size == 0


def test_term_weights_discrete_rejects_fraction():
    config = EncoderConfig(family=Canonical())
    with pytest.raises(ValueError, match="integer"):
        term_weights(config, 2.5)


def test_term_weights_fractional():
    config = EncoderConfig(family=Canonical(), mode=Mode.FRACTIONAL)
    ns, weights = term_weights(config, 2.25)
    assert np.array_equal(ns, [1, 2, 3])
    assert np.array_equal(weights, [1.0, 1.0, 0.25])
    # an exact integer carries no partial term
    ns, weights = term_weights(config, 3.0)
    assert np.array_equal(ns, [1, 2, 3])
    assert np.array_equal(weights, np.ones(3))


def test_term_weights_smooth():
    config = EncoderConfig(family=Canonical(), mode=Mode.SMOOTH)
    ns, weights = term_weights(config, 4.2)
    assert ns[-1] == math.ceil(4.2) + 10
    expected = Sigmoid(10.0)(ns - 4.2)
    assert np.array_equal(weights, expected)


def test_smooth_cutoff_rules():
    config = EncoderConfig(family=Canonical(), mode=Mode.SMOOTH)
    assert smooth_cutoff(config, 4.2) == 15
    fixed = EncoderConfig(family=Canonical(), mode=Mode.SMOOTH, truncation=40)
    assert smooth_cutoff(fixed, 4.2) == 40
    with pytest.raises(ValueError, match="below the required cutoff"):
        smooth_cutoff(fixed, 35.0)


def test_counting_parameter_validation():
    config = EncoderConfig(family=Canonical())
    with pytest.raises(ValueError):
        term_weights(config, -1.0)
    with pytest.raises(ValueError):
        term_weights(config, math.inf)
    with pytest.raises(TypeError):
        term_weights(config, "3")


def test_counter_eval_peak_value(fractional_config):
    # at t = 2 the half-on second bump dominates: 0.5 * a_2 = 0.3125
    value = counter_eval(fractional_config, 1.5, 2.0)
    assert value == 0.312498136673414
    assert value == pytest.approx(0.5 * 0.625, abs=2e-6)


def test_counter_eval_far_from_train_is_exactly_zero(canonical_config):
    assert counter_eval(canonical_config, 3, 50.0) == 0.0
    assert counter_eval(canonical_config, 0, 1.0) == 0.0


def test_counter_eval_rejects_bad_t(canonical_config):
    with pytest.raises(ValueError, match="finite"):
        counter_eval(canonical_config, 3, math.nan)


@pytest.mark.parametrize(
    "mode,n_value",
    [(Mode.DISCRETE, 6), (Mode.FRACTIONAL, 6.4), (Mode.SMOOTH, 6.4)],
)
def test_grid_matches_scalar_bitwise(mode, n_value):
    config = EncoderConfig(family=Canonical(), mode=mode)
    ts, values = counter_grid(config, n_value, -1.0, 9.0, 257)
    for t, v in zip(ts, values):
        assert counter_eval(config, n_value, float(t)) == v


def test_grid_validation(canonical_config):
    with pytest.raises(ValueError):
        counter_grid(canonical_config, 3, 2.0, 1.0, 100)
    with pytest.raises(ValueError):
        counter_grid(canonical_config, 3, 0.0, 1.0, 1)


def test_heaviside_smooth_equals_discrete(canonical_config):
    # weight 1 through the N-th center, 0 beyond: the discrete train exactly
    smooth = EncoderConfig(family=Canonical(), mode=Mode.SMOOTH, transition=Heaviside())
    _, discrete_values = counter_grid(canonical_config, 4, 0.0, 8.0, 101)
    _, smooth_values = counter_grid(smooth, 4.0, 0.0, 8.0, 101)
    assert np.array_equal(discrete_values, smooth_values)
    assert counter_eval(smooth, 4.0, 3.7) == counter_eval(canonical_config, 4, 3.7)


def test_smoothstep_transition_accepted():
    config = EncoderConfig(
        family=Canonical(), mode=Mode.SMOOTH, transition=Smoothstep(halfwidth=0.5)
    )
    ns, weights = term_weights(config, 2.0)
    # ramp is local: centers below N - 0.5 fully on, above N + 0.5 fully off
    assert weights[0] == 1.0
    assert weights[-1] == 0.0
    assert weights[1] == 0.5
