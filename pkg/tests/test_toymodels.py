import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from photonmodel.toymodels import (
    RadialDistribution,
    calibrate_scale,
    compose_velocity,
    cross_section_scaling,
    energy_and_spin,
    make_disk,
    make_model,
    make_ring,
    make_string,
    omega_ode_residual,
    omega_profile,
    relativistic_step,
    report,
    ring_parameters,
    velocity_profile,
)

OMEGAS = [0.25, 0.5, 1.0, 2.0, 4.0]


def trapezoid(y, a, b):
    h = (b - a) / (len(y) - 1)
    return h * (y.sum() - 0.5 * (y[0] + y[-1]))


def trapezoid_oracle(dist, n=1_000_001):
    """Fixed-step trapezoid on the support, independent of the library's quadrature."""
    if hasattr(dist, "half_length"):
        L = dist.half_length
        x = np.linspace(-L, L, n)
        eps = dist.epsilon(x)
        return trapezoid(eps, -L, L), dist.omega0 * trapezoid(x**2 * eps, -L, L)
    r = np.linspace(dist.r_min, dist.r_max, n)
    eps = dist.epsilon(r)
    E = trapezoid(2 * np.pi * r * eps, dist.r_min, dist.r_max)
    S = dist.omega0 * trapezoid(2 * np.pi * r**3 * eps, dist.r_min, dist.r_max)
    return E, S


# ------------------------------------------------------------- kinematics


def test_omega_profile_values():
    assert omega_profile(0.0, 3.0) == 3.0
    assert omega_profile(1 / 3.0, 3.0) == pytest.approx(3.0 / np.sqrt(2), rel=1e-15)
    r = np.linspace(0, 10, 101)
    assert np.all(np.diff(omega_profile(r, 1.0)) < 0)
    with pytest.raises(ValueError):
        omega_profile(-0.1, 1.0)


@pytest.mark.parametrize("omega0", [0.5, 1.0, 4.0])
def test_omega_satisfies_ode(omega0):
    assert np.max(np.abs(omega_ode_residual([0.5, 1.0, 2.0], omega0))) < 1e-8


def test_velocity_profile():
    assert velocity_profile(0.0, 2.0) == 0.0
    assert velocity_profile(0.5, 2.0) == pytest.approx(1 / np.sqrt(2), rel=1e-15)
    assert velocity_profile(1e3 / 2.0, 2.0) > 0.999999
    with pytest.raises(ValueError):
        velocity_profile(-1.0, 1.0)


@settings(max_examples=200, deadline=None)
@given(st.floats(0, 1e4), st.floats(1e-3, 1e3))
def test_velocity_strictly_subluminal(r, omega0):
    # beyond omega0 r ~ 1e8 the gap 1 - v is below double precision
    assert 0.0 <= velocity_profile(r, omega0) < 1.0


def test_relativistic_step():
    assert relativistic_step(0.0, 0.5) == 0.5
    assert relativistic_step(0.5, 0.5) == pytest.approx(0.8, rel=1e-15)
    for v in (1.0, -1.0, 1.5):
        with pytest.raises(ValueError):
            relativistic_step(v, 0.1)


def test_composition_converges_to_profile():
    # error of the composed increments is first order in the step
    errs = [abs(compose_velocity(2.0, 1.0, n) - velocity_profile(2.0, 1.0)) for n in (100, 1000, 10000)]
    assert errs[0] / errs[1] == pytest.approx(10, rel=0.1)
    assert errs[1] / errs[2] == pytest.approx(10, rel=0.1)
    assert errs[2] < 2e-4


# ---------------------------------------------------------------- models


def test_disk_parameters():
    d = make_disk(1.0)
    assert (d.r_min, d.r_max) == (0.0, pytest.approx(np.sqrt(2)))
    assert d(0.3) == pytest.approx(1 / (2 * np.pi))
    assert d(2.0) == 0.0
    assert make_disk(2.0).support_measure == pytest.approx(2 * np.pi / 4, rel=1e-15)


def test_ring_parameters():
    R1, R2, K = ring_parameters(1.0, 1.0)
    assert R1 == pytest.approx(np.sqrt(2) - 1, rel=1e-15)
    assert R2 == pytest.approx(np.sqrt(2) + 1, rel=1e-15)
    assert K == pytest.approx(1 / (4 * np.pi), rel=1e-15)
    # closed form E = 2 pi K (1/R1 - 1/R2)
    assert 2 * np.pi * K * (1 / R1 - 1 / R2) == pytest.approx(1.0, rel=1e-14)
    for bad in (0.0, -1.0):
        with pytest.raises(ValueError):
            make_ring(1.0, bad)


def test_ring_small_k_limit():
    for w in (0.5, 2.0):
        R1 = [ring_parameters(w, k)[0] for k in (1e-2, 1e-4, 1e-6)]
        assert abs(R1[-1] - 1 / w) < 1e-5 / w
        assert np.all(np.diff(np.abs(np.array(R1) - 1 / w)) < 0)


def test_string_parameters():
    s = make_string(1.0)
    assert s.half_length == pytest.approx(np.sqrt(3))
    assert s(0.0) == pytest.approx(1 / (2 * np.sqrt(3)))
    assert s(2.0) == 0.0
    assert s.support_measure == pytest.approx(2 * np.sqrt(3))


@pytest.mark.parametrize("omega0", [0.5, 1.0, 2.0])
def test_disk_identities(omega0):
    E, S = energy_and_spin(make_disk(omega0))
    assert E / omega0 == pytest.approx(1.0, abs=1e-10)
    assert S == pytest.approx(1.0, abs=1e-10)


@pytest.mark.parametrize("k", [0.1, 1.0, 10.0])
@pytest.mark.parametrize("omega0", OMEGAS)
def test_ring_identities(omega0, k):
    E, S = energy_and_spin(make_ring(omega0, k))
    assert abs(E / omega0 - 1) < 1e-8 and abs(S - 1) < 1e-8


@pytest.mark.parametrize("omega0", OMEGAS)
def test_string_identities(omega0):
    E, S = energy_and_spin(make_string(omega0))
    assert E / omega0 == pytest.approx(1.0, abs=1e-10)
    assert S == pytest.approx(1.0, abs=1e-10)


def test_string_example():
    assert energy_and_spin(make_string(2.0)) == (pytest.approx(2.0, rel=1e-10), pytest.approx(1.0, rel=1e-10))


@pytest.mark.parametrize(
    "name, omega0, params, n",
    [
        ("disk", 1.0, {}, 1_000_001),
        ("disk", 4.0, {}, 1_000_001),
        ("string", 0.25, {}, 1_000_001),
        ("ring", 1.0, {"k": 1.0}, 1_000_001),
        ("ring", 0.5, {"k": 0.1}, 1_000_001),
        ("ring", 2.0, {"k": 10.0}, 4_000_001),
    ],
)
def test_quadrature_agrees_with_trapezoid(name, omega0, params, n):
    dist = make_model(name, omega0, **params)
    E, S = energy_and_spin(dist)
    E_t, S_t = trapezoid_oracle(dist, n)
    assert abs(E - E_t) < 1e-8 * omega0
    assert abs(S - S_t) < 1e-8


def test_report_fields():
    rep = report(make_ring(1.0, 1.0))
    d = rep.as_dict()
    assert set(d) == {"model", "omega0", "params", "E", "S", "sigma_T", "rel_err_E", "rel_err_S"}
    assert d["model"] == "ring" and d["params"]["k"] == 1.0
    assert 0 <= d["rel_err_E"] < 1e-10 and 0 <= d["rel_err_S"] < 1e-10


def test_unknown_model():
    with pytest.raises(ValueError, match="unknown model"):
        make_model("sphere", 1.0)


def test_invalid_omega0():
    for f in (make_disk, make_string):
        with pytest.raises(ValueError):
            f(0.0)


# --------------------------------------------------------------- scaling


def test_disk_cross_section_ratio():
    res = cross_section_scaling("disk", [1.0, 2.0])
    (E1, s1), (E2, s2) = res.points
    assert s1 / s2 == pytest.approx(4.0, rel=1e-14)


@pytest.mark.parametrize("name, params", [("disk", {}), ("ring", {"k": 1.0}), ("ring", {"k": 0.1})])
def test_area_scaling_slope(name, params):
    res = cross_section_scaling(name, OMEGAS, **params)
    assert abs(res.slope + 2) < 1e-10
    prod = [s * E**2 for E, s in res.points]
    assert np.ptp(prod) / np.mean(prod) < 1e-10


def test_string_length_scaling():
    assert cross_section_scaling("string", OMEGAS).slope == pytest.approx(-1.0, abs=1e-10)


def test_string_spin_independent_of_frequency():
    spins = [energy_and_spin(make_string(w))[1] for w in OMEGAS]
    assert np.ptp(spins) < 1e-12


def test_scaling_needs_two_points():
    with pytest.raises(ValueError):
        cross_section_scaling("disk", [1.0])


# ------------------------------------------------------------ calibration


def unit_disk():
    return RadialDistribution(lambda r: np.ones_like(np.asarray(r, float)), 0.0, 1.0, 1.0, name="unit-disk")


def gaussian_shape():
    return RadialDistribution(lambda r: np.exp(-np.asarray(r, float) ** 2), 0.0, np.inf, 1.0, name="gauss")


def test_calibrating_unit_disk_recovers_disk():
    cal = calibrate_scale(unit_disk(), 1.0)
    disk = make_disk(1.0)
    assert cal.radius_scale == pytest.approx(disk.r_max, rel=1e-12)
    assert cal.amplitude == pytest.approx(float(disk(0.0)), rel=1e-12)


def test_calibrated_gaussian():
    cal = calibrate_scale(gaussian_shape(), 1.0)
    # m1 = m3 = pi, so rho = 1 and A = 1 / pi
    assert cal.radius_scale == pytest.approx(1.0, rel=1e-10)
    assert cal.amplitude == pytest.approx(1 / np.pi, rel=1e-10)
    E, S = energy_and_spin(cal.distribution)
    assert E == pytest.approx(1.0, abs=1e-10) and S == pytest.approx(1.0, abs=1e-10)


@pytest.mark.parametrize("shape", [unit_disk, gaussian_shape])
def test_calibration_dimensional_scaling(shape):
    a, b = calibrate_scale(shape(), 1.5), calibrate_scale(shape(), 3.0)
    assert b.radius_scale == pytest.approx(a.radius_scale / 2, rel=1e-12)
    assert b.amplitude == pytest.approx(a.amplitude * 8, rel=1e-12)
    E, S = energy_and_spin(b.distribution)
    assert E == pytest.approx(3.0, rel=1e-10) and S == pytest.approx(1.0, abs=1e-10)


def test_calibration_rejects_degenerate_shape():
    zero = RadialDistribution(lambda r: np.zeros_like(np.asarray(r, float)), 0.0, 1.0, 1.0)
    with pytest.raises(ValueError):
        calibrate_scale(zero, 1.0)


# ------------------------------------------------------------------- ODE


@pytest.mark.parametrize("name, params", [("disk", {}), ("ring", {"k": 0.1}), ("ring", {"k": 10.0}), ("string", {})])
@pytest.mark.parametrize("omega0", OMEGAS)
def test_ode_residual_across_support(name, omega0, params):
    dist = make_model(name, omega0, **params)
    hi = getattr(dist, "r_max", None) or dist.half_length
    lo = getattr(dist, "r_min", 0.0)
    r = np.linspace(lo, hi, 201)
    assert np.max(np.abs(omega_ode_residual(r, omega0))) < 1e-8
