"""
Rotating energy distributions with E = omega0 and S = 1
=======================================================

A planar energy distribution spinning with a relativistic profile
omega(r) = omega0 / sqrt((omega0 r)^2 + 1) never exceeds the speed of
light.  A disk, a ring and a string can each be tuned so the energy is
omega0 and the angular momentum is exactly one unit.
"""

import numpy as np

from photonmodel.toymodels import (
    RadialDistribution,
    calibrate_scale,
    compose_velocity,
    cross_section_scaling,
    make_model,
    report,
    velocity_profile,
)

# Adding velocity increments relativistically reproduces the profile.
for n in (10, 100, 1000):
    print(f"n={n:5d}: composed v(2)={compose_velocity(2.0, 1.0, n):.6f}  exact={velocity_profile(2.0, 1.0):.6f}")

# %%
for name, params in (("disk", {}), ("ring", {"k": 1.0}), ("ring", {"k": 10.0}), ("string", {})):
    for w in (0.5, 2.0):
        rep = report(make_model(name, w, **params))
        print(f"{name:6s} {params!s:12s} omega0={w}: E={rep.E:.12f} S={rep.S:.12f} sigma_T={rep.sigma_T:.4f}")

# %%
# The support area falls as 1/E^2 for the planar models; the string's
# length falls as 1/E.
omegas = [0.25, 0.5, 1, 2, 4]
for name, params in (("disk", {}), ("ring", {"k": 1.0}), ("string", {})):
    print(f"{name}: log-log slope {cross_section_scaling(name, omegas, **params).slope:+.12f}")

# %%
# Any radial shape can be scaled to meet both conditions.
gauss = RadialDistribution(lambda r: np.exp(-np.asarray(r) ** 2), 0.0, np.inf, 1.0, name="gauss")
cal = calibrate_scale(gauss, 2.0)
rep = report(cal.distribution)
print(f"calibrated gaussian: A={cal.amplitude:.6f} rho={cal.radius_scale:.6f} E={rep.E:.12f} S={rep.S:.12f}")
