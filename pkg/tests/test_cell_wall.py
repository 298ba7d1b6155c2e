import math
import warnings

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from phytoacoustic.cell_wall import SlowTrend, WallParams, channel_stress, sensor_force, slow_trend, wall_bracket
from phytoacoustic.traces import PressureTrace

from oracles import ema_step_response

P = WallParams()
SPEC_READING = WallParams(force_area=P.A_M)


def tr(x, dt=1e-4):
    return PressureTrace(0.0, dt, np.asarray(x, float))


def test_area_conversion():
    assert P.A_M == pytest.approx(9.110618695e-16, rel=1e-15)


def test_slow_trend_constant_and_zero():
    assert np.all(slow_trend(tr(np.full(50, 3.5)), 1e-3).samples == 3.5)
    assert np.all(slow_trend(tr(np.zeros(50)), 1e-3).samples == 0.0)


def test_slow_trend_step_response():
    dt = 1e-6
    x = np.ones(5001)
    x[0] = 0.0
    y = slow_trend(tr(x, dt), 1e-3).samples
    # sample k holds the response k*dt after the step
    assert y[1000] == pytest.approx(ema_step_response(1e-3, 1e-3), rel=1e-12)
    assert y[1000] == pytest.approx(1 - math.exp(-1), abs=1e-12)


def test_slow_trend_warns_when_coarse():
    with pytest.warns(RuntimeWarning):
        slow_trend(tr(np.ones(4), 0.01), 1e-3)


def test_streaming_trend_matches_batch():
    x = np.random.default_rng(1).normal(size=1000)
    batch = slow_trend(tr(x), 1e-3).samples
    st_ = SlowTrend(1e-4, 1e-3)
    chunks = np.concatenate([st_(x[i:i + 97]) for i in range(0, 1000, 97)])
    np.testing.assert_allclose(chunks, batch, rtol=1e-13, atol=1e-15)


def test_force_zero_at_yield():
    assert np.all(sensor_force(tr(np.full(20, P.Y)), P).samples == 0.0)


def test_force_steady_value_spec_reading():
    c = 2.0
    F = sensor_force(tr(np.full(20, P.Y + c)), SPEC_READING).samples
    np.testing.assert_allclose(F, P.mu_s / P.mu_w * c * P.A_M, rtol=1e-14)


def test_overshoot_factor():
    dt = 1e-5
    x = np.full(4000, P.Y)
    x[1:] += 1.0
    b = wall_bracket(tr(x, dt), P)
    a = 1 - math.exp(-dt / P.tau_s)
    # just after the step the fast term dominates: (tau_w/tau_s)(1 - a) + a
    assert b[1] == pytest.approx(P.tau_w / P.tau_s * (1 - a) + a, rel=1e-12)
    assert b[1] / b[-1] == pytest.approx(P.tau_w / P.tau_s, rel=0.01)


def test_channel_stress_units():
    assert np.all(channel_stress(tr(np.zeros(3)), P.A_M).samples == 0)
    one = channel_stress(tr([133.322 * P.A_M]), P.A_M).samples[0]
    assert one == pytest.approx(1.0, rel=1e-14)
    assert channel_stress(tr([9.1106e-16 * 133.322]), P.A_M).samples[0] == pytest.approx(1.0, rel=1e-4)


def test_spec_reading_gives_bracket_in_pascal():
    x = np.random.default_rng(0).uniform(0, 2, 200)
    ch = channel_stress(sensor_force(tr(x), SPEC_READING), P.A_M).samples * 133.322
    np.testing.assert_allclose(ch, P.mu_s / P.mu_w * wall_bracket(tr(x), P), rtol=1e-12)


def test_default_transfer_gain():
    assert P.transfer == pytest.approx(0.01 / 13e10 / 9.110618695e-16, rel=1e-14)


finite = st.floats(-10, 10, allow_nan=False)


@settings(max_examples=50, deadline=None)
@given(arrays(float, 64, elements=finite), arrays(float, 64, elements=finite), finite, finite)
def test_linearity_about_yield(s1, s2, a, b):
    f = lambda s: wall_bracket(tr(s), P)
    lhs = f(a * s1 + b * s2 + P.Y * (1 - a - b))
    rhs = a * f(s1) + b * f(s2)
    # round-off of the inputs is amplified by at most tau_w / tau_s + 1
    magnitude = (abs(a) + abs(b)) * (10 + P.Y) + P.Y
    np.testing.assert_allclose(lhs, rhs, rtol=0, atol=1e-13 * (P.tau_w / P.tau_s + 1) * magnitude)
    np.testing.assert_allclose(
        sensor_force(tr(s1), P).samples, P.mu_s / P.mu_w * P.force_area * f(s1), rtol=1e-14, atol=1e-300
    )


def test_timing_preserved_at_200_hz():
    from phytoacoustic.sim_io.analysis import xcorr

    dt = 5e-4
    t = np.arange(40000) * dt
    x = tr(np.abs(np.cos(2 * np.pi * 200 * t + 0.3) + 0.5 * np.cos(2 * np.pi * 170 * t)), dt)
    y = sensor_force(x, P)
    tab = xcorr(x, y)
    lag = tab.column("lag")[np.argmax(tab.column("xcorr"))]
    assert abs(lag) <= 2 * P.tau_w
    assert np.max(tab.column("xcorr")) > 0.8


def test_params_validate():
    with pytest.raises(ValueError):
        WallParams(tau_s=0.0)
