"""
Reading the wave function as E + iB
===================================

In position space the Hamiltonian acts on a transverse spinor as curl.
Setting Psi = E + iB and splitting i dPsi/dt = curl Psi into real and
imaginary parts gives the two curl equations, while transversality gives
zero divergence.  The residuals below measure how well a finite-difference
time derivative satisfies them.  The agreement is formal: identifying spin
space with physical space is an interpretation, so this can not be
considered to be a derivation of Maxwell's equations.
"""

from photonmodel.schrodinger import (
    MomentumGrid,
    gaussian_envelope,
    gaussian_packet,
    longitudinal_state,
    maxwell_residual,
    to_position,
)

grid = MomentumGrid(32, 8.0)
packet = gaussian_packet(grid, [2.0, 0.0, 0.0], 0.5, 1)
x = to_position(packet)

previous = None
for dt in (0.04, 0.02, 0.01, 0.005):
    r = maxwell_residual(x, dt)
    ratio = "" if previous is None else f"  ratio={previous / r['curl_e_residual']:.3f}"
    print(f"dt={dt:<6} curl E={r['curl_e_residual']:.3e} curl B={r['curl_b_residual']:.3e} "
          f"div E={r['div_e']:.1e} div B={r['div_b']:.1e}{ratio}")
    previous = r["curl_e_residual"]

# %%
# A small longitudinal admixture shows up linearly in the divergence.
bad = longitudinal_state(grid, gaussian_envelope([2.0, 0.0, 0.0], 0.5))
for eps in (1e-9, 1e-8, 1e-7):
    r = maxwell_residual(to_position(packet + bad * eps), 0.01)
    print(f"admixture {eps:.0e}: div E={r['div_e']:.3e}")
