"""Photon tensor algebra, spin-1 helicity states, single-photon evolution on
momentum grids and rotating toy models (natural units, hbar = c = 1)."""

from .helicity import (
    HelicityBasis,
    SpinMatrices,
    helicity_basis,
    spin_dot,
    spin_matrices,
    transverse_projector,
)
from .schrodinger import (
    EvolutionConfig,
    MomentumGrid,
    Observables,
    SpinorField,
    apply_hamiltonian,
    evolve,
    gaussian_packet,
    general_state,
    maxwell_residual,
    observables,
    stationary_residual,
    to_momentum,
    to_position,
)
from .tensor import (
    AntisymTensor,
    LorentzBoost,
    PhotonTensor,
    Rotation,
    boost,
    discrete_symmetry,
    doppler_shift,
    dual,
    helix_length,
    invariants,
    make_photon_tensor,
    transversality_residual,
)
from .toymodels import (
    LinearDistribution,
    RadialDistribution,
    ToyModelReport,
    calibrate_scale,
    cross_section_scaling,
    energy_and_spin,
    make_disk,
    make_ring,
    make_string,
    omega_profile,
    relativistic_step,
    velocity_profile,
)

__version__ = "0.1.0"
