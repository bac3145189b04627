"""
A photon as an antisymmetric tensor
===================================

The six numbers (e, b) of a free photon form an antisymmetric rank-2 tensor.
For a photon the pair is orthogonal, of equal length, and turns about the
propagation direction.  This walk-through builds one, looks at it from a
moving frame and applies the discrete symmetries.
"""

import numpy as np

from photonmodel.tensor import (
    LorentzBoost,
    Rotation,
    boost_photon,
    discrete_symmetry,
    doppler_factor,
    dual,
    helix_length,
    invariants,
    make_photon_tensor,
    photon_snapshot,
    rotate_photon,
    transversality_residual,
)

np.set_printoptions(precision=6, suppress=True)

# A right-handed photon travelling along +x with omega = 1.
p = make_photon_tensor([1, 0, 0], helicity=1, omega=1.0)
print("e =", p.e, " b =", p.b, " k =", p.k)
print("invariants (trace, ff, ff*):", invariants(p.tensor))
print("transversality residuals:", transversality_residual(p.tensor, p.k))

# The pair turns about k.  Over a quarter period e moves into the old b slot.
quarter = photon_snapshot([1, 0, 0], 1, 1.0, t=np.pi / 2)
print("after a quarter turn: e =", quarter.e)
print("helix length 2 pi / omega =", helix_length(p.omega))

# %%
# Seen from a frame receding along k, |e| shrinks by the Doppler factor.
for beta in (0.3, 0.6, 0.9):
    q = boost_photon(p, LorentzBoost([beta, 0, 0]))
    print(f"beta={beta}: |e'|={np.linalg.norm(q.e):.6f}  gamma(1-beta)={doppler_factor(beta):.6f}")

# A transverse boost changes the direction too (aberration), and the photon
# constraints survive.
q = boost_photon(p, LorentzBoost([0, 0.8, 0]))
print("transverse boost: k' =", q.k, " invariants:", invariants(q.tensor)[1:])

r = rotate_photon(p, Rotation.about_axis([0, 0, 1], np.pi / 2))
print("rotated by 90 deg about z: k =", r.k)

# %%
# Parity, time reversal, charge conjugation and the dual map.
for word in ("P", "T", "C", "D", "DD", "PTC"):
    g = discrete_symmetry(p.tensor, word)
    print(f"{word:>3}: e={g.e}  b={g.b}")
print("dual equals D:", dual(p.tensor) == discrete_symmetry(p.tensor, "D"))
