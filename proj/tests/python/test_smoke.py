import json
import math

import pytest

import isingotto as io


def test_cycle_reference():
    r = io.finite_cycle(1.0, 2.0, 1.5, 0.75, 0.1)
    assert r["regime"] == "engine"
    assert r["work"] == pytest.approx(-0.012403268527985712, rel=1e-9)
    assert r["q_hot"] + r["q_cold"] + r["work"] == pytest.approx(0.0, abs=1e-12)


def test_carnot_point_is_exact():
    assert io.carnot_point(1.0, 0.75, 0.6) == (0.8, 1.25)
    r = io.finite_cycle(1.0, 1.25, 0.8, 0.75, 0.6)
    assert max(abs(r["work"]), abs(r["q_hot"]), abs(r["q_cold"])) < 1e-8


def test_landmarks():
    assert io.peak_temperature(1.0, 0.5, "linear-h") == pytest.approx(0.8335565596009647, rel=1e-8)
    assert io.equal_magnetization_temperature(1.0, 0.5) == pytest.approx(1.41953482378912, rel=1e-8)
    with pytest.raises(io.NoPeak):
        io.peak_temperature(1.0, 1.5)


def test_equilibrium_identities():
    g, h, t = 1.0, 0.7, 1.5
    f = io.free_energy(g, h, t)
    assert f == pytest.approx(io.internal_energy(g, h, t) - t * io.entropy(g, h, t), rel=1e-11)
    d = 1e-4
    fd = -(io.free_energy(g, h + d, t) - io.free_energy(g, h - d, t)) / (2 * d)
    assert io.magnetization(g, h, t) == pytest.approx(fd, rel=1e-7)
    assert io.magnetization(g, h, t, n_sites=8) != io.magnetization(g, h, t)


def test_brute_force_small_chain():
    r = io.brute_force_cycle(1.0, 2.0, 1.5, 0.75, 0.1, 6)
    assert r["work"] == pytest.approx(-0.0130781, rel=1e-5)
    with pytest.raises(io.DimensionCap):
        io.brute_force_cycle(1.0, 2.0, 1.5, 0.75, 0.1, 14)


def test_errors_are_typed():
    with pytest.raises(io.DomainError):
        io.finite_cycle(-1.0, 2.0, 1.5, 0.75, 0.1)
    with pytest.raises(io.DomainError):
        io.magnetization(1.0, 0.5, 1.0, model="bogus")


def test_sweep_and_window():
    cfg = {
        "x_axis": {"name": "h", "min": 0.2, "max": 1.8, "steps": 3},
        "y_axis": {"name": "t_cold", "min": 0.1, "max": 0.5, "steps": 2},
        "fixed": {"g": 1.0, "t_hot": 0.5, "delta_h": 1e-4},
        "mode": "infinitesimal",
    }
    rows = io.sweep(json.dumps(cfg), threads=2)
    assert len(rows) == 6
    assert rows[0]["regime"] == "accelerator"
    assert rows[2]["regime"] == "engine"
    assert all(r["regime"] == "boundary" for r in rows[3:])
    low, high = io.refrigerator_window(1.0, 0.5, 0.06, 0.05)
    assert low == pytest.approx(1.0 + 0.5 * 0.06 / 0.11)
    assert high == pytest.approx(4.0)
    assert math.isinf(io.refrigerator_window(1.0, 0.5, 0.1, 0.1)[1])
