"""Smoke tests for the python bindings."""

import math

import numpy as np
import pytest

import ymh


TWO_PI = 2.0 * math.pi


def test_grid_and_field_roundtrip():
    g = ymh.TorusGrid(2, 16)
    assert g.dim == 2 and g.n == 16
    f = ymh.Field(g)
    f.add_cosine([1, 0, 0], 1.0, 0.0)
    values = f.values()
    assert values.shape == (16, 16)
    x = np.arange(16) * g.length / 16
    np.testing.assert_allclose(values[:, 0], np.cos(x), atol=1e-13)
    back = ymh.Field.from_values(g, values)
    np.testing.assert_allclose(back.values(), values, atol=1e-13)


def test_derivative_of_sine():
    g = ymh.TorusGrid(2, 16)
    f = ymh.Field(g)
    f.add_cosine([1, 0, 0], 1.0, -math.pi / 2)  # sin x
    d = ymh.derivative(f, 0)
    x = np.arange(16) * g.length / 16
    np.testing.assert_allclose(d.values()[:, 0], np.cos(x), atol=1e-13)


def test_integrate_and_product():
    g = ymh.TorusGrid(2, 16)
    s = ymh.Field(g)
    s.add_cosine([1, 0, 0], 1.0, -math.pi / 2)
    assert ymh.integrate(s, s) == pytest.approx(0.5 * TWO_PI**2, rel=1e-13)
    p = ymh.dealiased_product(s, s)
    assert p.mean() == pytest.approx(0.5, rel=1e-13)


def test_projection_kills_gradients():
    g = ymh.TorusGrid(2, 32)
    ws = ymh.ProjectionWorkspace(g, ymh.WeightFunction.constant(g, 1.0))
    q = ymh.Field(g)
    q.add_cosine([2, 1, 0], 1.0, 0.3)
    comps = [ymh.derivative(q, 0).values(), ymh.derivative(q, 1).values()]
    projected = ymh.weighted_leray_project(comps, ws)
    for c in projected:
        assert np.max(np.abs(c)) <= 1e-12


def test_hopf_volume_and_integration():
    assert ymh.hopf_orbit_volume() == pytest.approx(TWO_PI, abs=1e-10)
    lhs, rhs, se = ymh.hopf_integration_check([1.0], samples=50_000, seed=3)
    assert lhs == pytest.approx(2.0 * math.pi**2, abs=1e-9)
    assert rhs == pytest.approx(2.0 * math.pi**2, abs=1e-9)
    lhs, rhs, se = ymh.hopf_integration_check([1.0, 0.0, 1.0], samples=50_000, seed=3)
    assert abs(lhs - rhs) <= max(3.0 * se, 1e-9)


def test_bracket_antisymmetry():
    g = ymh.TorusGrid(2, 32)
    geom = ymh.GaugeGeometry.trivial(g, ymh.LieAlgebraSpec.su2(),
                                     ymh.WeightFunction.constant(g, 1.0))
    x = ymh.VectorField(g)
    x.add_cosine(0, [0, 2, 0], 0.4, 0.1)
    x.add_cosine(1, [1, 0, 0], 0.3, -0.2)
    f = ymh.GaugeField(g, 3)
    f.add_cosine(0, [1, 1, 0], 0.5, 0.0)
    u = ymh.make_algebra_element(geom, x, f)
    b = ymh.bracket(u, u, geom)
    assert ymh.max_abs(b.velocity.component(0)) == 0.0
    assert ymh.max_abs(b.charge.component(0)) == 0.0


def test_config_round_trip():
    cfg = ymh.config_template("abelian-charged")
    assert ymh.parse_config_text(ymh.emit_config(cfg)) == cfg


def test_simulation_run(tmp_path):
    cfg = ymh.config_template("taylor-green")
    cfg.steps = 20
    steps, final = ymh.run_simulation(cfg, str(tmp_path))
    assert steps == 20
    assert final.t == pytest.approx(0.02, rel=1e-12)
    assert (tmp_path / "diagnostics.csv").exists()


def test_charged_run_conserves_energy():
    cfg = ymh.config_template("su2-charged")
    cfg.steps = 50
    geom = ymh.build_geometry(cfg)
    state = ymh.build_initial_state(cfg, geom)
    e0 = ymh.compute_diagnostics(state, geom).total_energy
    for _ in range(50):
        state = ymh.step_rk4(state, cfg.dt, geom)
    e1 = ymh.compute_diagnostics(state, geom).total_energy
    assert e1 == pytest.approx(e0, rel=1e-10)
