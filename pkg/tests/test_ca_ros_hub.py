import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from phytoacoustic.ca_ros_hub import (
    HubParams, HubState, activated_rbohc, annexin_current, annexin_influx, efflux,
    h2o2_production_rate, h2o2_scavenging_rate, hub_step, literal, nernst_potential,
    rbohc_fraction, run_hub, total_from_ppm,
)

from oracles import nernst

P = HubParams()
LIT = literal(P)


def test_efflux_branches():
    assert efflux(150.0, P) == 0.0
    assert efflux(164.999, P) == 0.0
    assert efflux(180.0, P) == pytest.approx(4.0, rel=1e-14)
    assert efflux(250.0, P) == pytest.approx(16.5, rel=1e-14)
    assert efflux(200.0, P) == pytest.approx(max(0.3 * 5, 0.16 * 45))


def test_rbohc_fraction():
    assert rbohc_fraction(0.0, P.k_C) == 0.0
    c_half = math.sqrt(P.k_C) * 1e9
    assert rbohc_fraction(c_half, P.k_C) == pytest.approx(0.5, rel=1e-12)
    assert rbohc_fraction(1e15, P.k_C) == pytest.approx(1.0, rel=1e-12)


def test_total_from_ppm():
    assert total_from_ppm(0.0, 3.0) == 0.0
    assert total_from_ppm(2.0, 3.0) == pytest.approx(2 * total_from_ppm(1.0, 3.0))
    assert P.R_total == 1.420265781e-8


def test_michaelis_menten_rates():
    assert h2o2_production_rate(0.0, P) == 0.0
    assert h2o2_production_rate(P.m_H, P) == pytest.approx(P.v_Hm / 2)
    assert h2o2_production_rate(1e6, P) == pytest.approx(P.v_Hm, rel=1e-12)
    assert h2o2_scavenging_rate(0.0, P) == 0.0
    assert h2o2_scavenging_rate(P.m_s, P) == pytest.approx(P.v_sm / 2)
    assert h2o2_scavenging_rate(1e6, P) == pytest.approx(P.v_sm, rel=1e-9)


def test_nernst():
    assert nernst_potential(1.0, 1.0) == 0.0
    assert nernst_potential(1e-3, 150e-9) == pytest.approx(0.113, abs=5e-4)
    assert nernst_potential(1e-3, 150e-9) == pytest.approx(nernst(1e-3, 150e-9), rel=1e-14)
    assert nernst_potential(150e-9, 1e-3) == -nernst_potential(1e-3, 150e-9)
    with pytest.raises(ValueError):
        nernst_potential(0.0, 1.0)


def test_annexin_current():
    assert annexin_current(0.0, 150.0, P) == 0.0
    half = annexin_current(P.k_a, 150.0, P)
    assert half == pytest.approx(P.G_a * 0.5 * (nernst(1e-3, 150e-9) - 0.15), rel=1e-12)
    assert half == pytest.approx(-3.1e-13, rel=0.02)


def test_annexin_influx_literal():
    assert annexin_influx(0.0, LIT, 0.5) == 0.0
    assert annexin_influx(3.1e-13, LIT, 0.5) == pytest.approx(310.0, rel=0.02)
    from dataclasses import replace

    assert annexin_influx(3.1e-13, replace(LIT, n_a=0.0), 0.5) == 0.0
    assert annexin_influx(3.1e-13, P, 0.5) == pytest.approx(P.annexin_gain * annexin_influx(3.1e-13, LIT, 0.5))


def test_resting_state_is_fixed_point():
    s = HubState()
    for _ in range(500):
        s = hub_step(s, 0.0, P)
    assert s.c_c == 150.0 and s.h == 0.0


def test_literal_hub_has_no_resting_state():
    # with absolute RBOHC activation the resting cell already makes H2O2
    assert activated_rbohc(150.0, LIT) > 0
    c, h = run_hub(np.zeros(40), LIT)
    assert h[-1] > 0 and c[-1] > 150.0


def test_decay_after_stimulus():
    c, _ = run_hub(np.r_[np.full(200, 4.0), np.zeros(400)], P)
    assert c[200] > 220
    assert c[-1] <= 165.0


@settings(max_examples=40, deadline=None)
@given(st.lists(st.floats(0, 50), min_size=1, max_size=60), st.floats(0, 1e3), st.floats(0, 1e-3))
def test_state_stays_nonnegative(cm, c0, h0):
    c, h = run_hub(cm, P, HubState(c0, h0))
    assert np.all(c >= 0) and np.all(h >= 0)


def test_plateau_monotone_in_drive():
    plateaus = [run_hub(np.full(300, a), P)[0][100:].mean() for a in (1.0, 2.0, 3.0, 4.0, 5.0, 6.0)]
    assert all(b >= a for a, b in zip(plateaus, plateaus[1:]))


def test_h2o2_plateau_balances_production():
    c, h = run_hub(np.full(4000, 4.0), P)
    prod = h2o2_production_rate(activated_rbohc(c[-2], P), P)
    scav = h2o2_scavenging_rate(h[-2], P)
    assert prod == pytest.approx(scav, rel=0.01)
