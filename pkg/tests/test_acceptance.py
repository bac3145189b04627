"""Acceptance criteria, one test per criterion.

Each test prints a single ``criterion N: PASS|FAIL ...`` line, and the lines
are gathered again in the terminal summary so they show up without ``-s``.
"""

import time

import numpy as np
import pytest

from conftest import ACCEPTANCE_LINES, random_unit
from photonmodel.helicity import helicity_basis, levi_civita, spin_dot, spin_matrices
from photonmodel.schrodinger import (
    EvolutionConfig,
    MomentumGrid,
    evolve,
    evolve_exact,
    gaussian_envelope,
    gaussian_packet,
    general_state,
    maxwell_residual,
    position_centroid,
    to_position,
)
from photonmodel.tensor import (
    LorentzBoost,
    Rotation,
    boost_photon,
    discrete_symmetry,
    invariants,
    make_photon_tensor,
    rotate_photon,
    transversality_residual,
)
from photonmodel.toymodels import cross_section_scaling, energy_and_spin, make_model, omega_ode_residual

OMEGAS = [0.25, 0.5, 1.0, 2.0, 4.0]
SEED = 7


def verdict(number, title, passed, detail):
    line = f"criterion {number}: {'PASS' if passed else 'FAIL'}  {title}  [{detail}]"
    print(line)
    ACCEPTANCE_LINES.append(line)
    return passed


def random_photon(rng, omega_range=(0.1, 10.0)):
    return make_photon_tensor(
        random_unit(rng), int(rng.choice([1, -1])), rng.uniform(*omega_range), rng.uniform(0, 2 * np.pi)
    )


def toy_models():
    for w in OMEGAS:
        yield make_model("disk", w)
        yield make_model("string", w)
        for k in (0.1, 1.0, 10.0):
            yield make_model("ring", w, k=k)


# ---------------------------------------------------------------------------


def test_01_toy_model_identities():
    start = time.perf_counter()
    worst_E = worst_S = 0.0
    count = 0
    for dist in toy_models():
        E, S = energy_and_spin(dist)
        worst_E = max(worst_E, abs(E / dist.omega0 - 1))
        worst_S = max(worst_S, abs(S - 1))
        count += 1
    elapsed = time.perf_counter() - start
    ok = worst_E < 1e-8 and worst_S < 1e-8 and elapsed < 5.0
    assert verdict(1, "toy-model E = omega0, S = 1", ok,
                   f"{count} models, max|E/w0-1|={worst_E:.1e}, max|S-1|={worst_S:.1e}, {elapsed:.3f}s")


def test_02_doppler_identity():
    rng = np.random.default_rng(SEED)
    worst = 0.0
    for _ in range(100):
        p = random_photon(rng)
        beta = rng.uniform(-0.99, 0.99)
        q = boost_photon(p, LorentzBoost(beta * p.k))
        expected = p.omega / np.sqrt(1 - beta**2) * (1 - beta)
        worst = max(worst, abs(np.linalg.norm(q.e) - expected))
    assert verdict(2, "|e'| = E gamma (1 - beta) along k", worst < 1e-12, f"max abs err={worst:.1e}")


def test_03_invariants_and_covariance():
    rng = np.random.default_rng(SEED)
    initial = chained = chained_abs = transverse = 0.0
    for _ in range(1000):
        p = random_photon(rng)
        initial = max(initial, *map(abs, invariants(p.tensor)))
        for _ in range(5):
            if rng.random() < 0.5:
                p = boost_photon(p, LorentzBoost(random_unit(rng) * rng.uniform(0, 0.9)))
            else:
                p = rotate_photon(p, Rotation.about_axis(random_unit(rng), rng.uniform(0, 2 * np.pi)))
        inv = max(map(abs, invariants(p.tensor)))
        chained_abs = max(chained_abs, inv)
        chained = max(chained, inv / p.omega**2)
        transverse = max(transverse, max(transversality_residual(p.tensor, p.k)) / p.omega)
    ok = initial < 1e-12 and chained < 1e-9 and transverse < 1e-9
    assert verdict(3, "photon invariants vanish and stay zero", ok,
                   f"initial={initial:.1e}, after 5 maps={chained:.1e} (relative to omega'^2; "
                   f"absolute {chained_abs:.1e}), transversality={transverse:.1e} (relative to omega')")


def test_04_symmetry_table():
    rng = np.random.default_rng(SEED)
    checks = {"PP": "", "TT": "", "CC": "", "PTC": "", "DD": "C"}
    ok = True
    for _ in range(200):
        f = random_photon(rng).tensor
        for word, target in checks.items():
            g = discrete_symmetry(f, word)
            h = discrete_symmetry(f, target) if target else f
            ok &= np.array_equal(g.e, h.e) and np.array_equal(g.b, h.b)
    assert verdict(4, "P^2 = T^2 = C^2 = PTC = Id, D^2 = C", ok, "exact equality on 200 tensors")


def test_05_spin_algebra():
    rng = np.random.default_rng(SEED)
    S = spin_matrices()
    eps = levi_civita()
    exact = all(
        np.array_equal(S[j] @ S[k] - S[k] @ S[j], 1j * sum(eps[j, k, l] * S[l] for l in range(3)))
        for j in range(3)
        for k in range(3)
    )
    diag = np.ones(3) / np.sqrt(3)
    near = diag + random_unit(rng, 20) * rng.uniform(0, 1e-4, size=(20, 1))
    ks = np.vstack([random_unit(rng, 980), near / np.linalg.norm(near, axis=1, keepdims=True)])
    worst = 0.0
    fallback = 0
    for k in ks:
        B = helicity_basis(k)
        M = spin_dot(k)
        fallback += not B.closed_form
        worst = max(worst, np.linalg.norm(M @ B.chi_plus - B.chi_plus), np.linalg.norm(M @ B.chi_minus + B.chi_minus))
    ok = exact and worst < 1e-12
    assert verdict(5, "spin commutators exact, helicity eigen-residuals", ok,
                   f"commutators exact={exact}, 1000 directions, max residual={worst:.1e}, "
                   f"{fallback} used the near-diagonal branch")


def test_06_unitarity_and_conservation():
    grid = MomentumGrid(32, 8.0)
    state = general_state(grid, gaussian_envelope([2.0, 1.0, 0.0], 0.5), 0.8, 0.6)
    rows = []
    start = time.perf_counter()
    evolve(state, EvolutionConfig(0.05, 1000, observables_every=100), rows)
    elapsed = time.perf_counter() - start
    drift = {key: max(abs(r[key] - rows[0][key]) for r in rows) for key in ("norm", "energy", "helicity")}
    ok = max(drift.values()) < 1e-10 and elapsed < 60.0
    assert verdict(6, "32^3 grid, 1000 steps: norm, energy, helicity conserved", ok,
                   ", ".join(f"{k} drift={v:.1e}" for k, v in drift.items()) + f", {elapsed:.2f}s")


def test_07_group_velocity():
    grid = MomentumGrid(64, 8.0)
    state = gaussian_packet(grid, [5.0, 0.0, 0.0], 0.5, 1)
    ts = np.linspace(0.0, 8.0, 9)
    xs = [position_centroid(to_position(evolve_exact(state, t)))[0] for t in ts]
    speed = np.polyfit(ts, xs, 1)[0]
    assert verdict(7, "chi+ packet centroid speed = 1", abs(speed - 1) < 0.02, f"speed={speed:.5f}")


def test_08_maxwell_correspondence():
    grid = MomentumGrid(32, 8.0)
    state = to_position(gaussian_packet(grid, [2.0, 0.0, 0.0], 0.5, 1))
    coarse, fine = maxwell_residual(state, 0.02), maxwell_residual(state, 0.01)
    ratio_e = coarse["curl_e_residual"] / fine["curl_e_residual"]
    ratio_b = coarse["curl_b_residual"] / fine["curl_b_residual"]
    div = max(r[key] for r in (coarse, fine) for key in ("div_e", "div_b"))
    ok = abs(ratio_e - 4) < 0.2 and abs(ratio_b - 4) < 0.2 and div < 1e-10
    assert verdict(8, "curl residual ratio ~4 on dt halving, divergence ~0", ok,
                   f"ratios=({ratio_e:.3f}, {ratio_b:.3f}), max divergence={div:.1e}")


def test_09_cross_section_scaling():
    slopes = {
        "disk": cross_section_scaling("disk", OMEGAS).slope,
        **{f"ring k={k}": cross_section_scaling("ring", OMEGAS, k=k).slope for k in (0.1, 1.0, 10.0)},
    }
    worst = max(abs(s + 2) for s in slopes.values())
    assert verdict(9, "sigma_T ~ E^-2 for disk and ring", worst < 1e-10, f"max|slope+2|={worst:.1e}")


def test_10_omega_ode():
    worst = 0.0
    for dist in toy_models():
        lo = getattr(dist, "r_min", 0.0)
        hi = getattr(dist, "r_max", None) or dist.half_length
        r = np.linspace(lo, hi, 401)
        worst = max(worst, float(np.max(np.abs(omega_ode_residual(r, dist.omega0)))))
    assert verdict(10, "d omega/dr = -omega^3 r on every model support", worst < 1e-8, f"max residual={worst:.1e}")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
