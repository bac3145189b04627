"""Single-photon wavefunction on a Cartesian momentum grid.

The state is a three-component spinor field ``Psi_j(p)``.  The Hamiltonian
``H = S.P`` (hbar = c = 1) is block diagonal in momentum: at each node it is
``|p| (k.S)`` with ``k = p/|p|``, acting as ``H Psi = i p x Psi`` in the
Cartesian spin representation.  Evolution applies the exact node-wise
propagator, so there is no time-step restriction.

Position fields are related by ``Psi(r) = (2 pi)^{-3/2} sum_p Psi(p) e^{+i p.r} dp^3``,
which turns ``i d_t Psi = H Psi`` into ``i d_t Psi_j = eps_{jlk} d_l Psi_k``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, List, Optional, Union

import numpy as np

from .helicity import helicity_vectors, levi_civita
from .tensor import as_vec3

MOMENTUM = "momentum"
POSITION = "position"
TRANSVERSE_TOL = 1e-6
_AXES = (0, 1, 2)


@dataclass(frozen=True)
class MomentumGrid:
    """``n`` nodes per axis at ``-p_max + j*dp``, ``dp = 2 p_max / n``.

    The conjugate position grid has spacing ``pi / p_max`` and is centred
    the same way, with the origin at index ``n // 2``.
    """

    n: int
    p_max: float

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 8 or self.n % 2:
            raise ValueError("grid size n must be an even integer >= 8")
        if not self.p_max > 0:
            raise ValueError("p_max must be positive")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "p_max", float(self.p_max))

    @property
    def shape(self):
        return (self.n, self.n, self.n)

    @property
    def dp(self) -> float:
        return 2.0 * self.p_max / self.n

    @property
    def dr(self) -> float:
        return np.pi / self.p_max

    @property
    def axis(self) -> np.ndarray:
        return (np.arange(self.n) - self.n // 2) * self.dp

    @property
    def position_axis(self) -> np.ndarray:
        return (np.arange(self.n) - self.n // 2) * self.dr

    def cell_volume(self, representation: str = MOMENTUM) -> float:
        return (self.dp if representation == MOMENTUM else self.dr) ** 3

    @cached_property
    def p(self) -> np.ndarray:
        """Node momenta, shape ``(n, n, n, 3)``."""
        return _mesh(self.axis)

    @cached_property
    def r(self) -> np.ndarray:
        return _mesh(self.position_axis)

    @cached_property
    def p_abs(self) -> np.ndarray:
        return np.linalg.norm(self.p, axis=-1)

    @cached_property
    def origin(self) -> np.ndarray:
        return self.p_abs == 0.0

    @cached_property
    def k_hat(self) -> np.ndarray:
        """Unit momentum direction; the zero vector at the origin node."""
        safe = np.where(self.origin, 1.0, self.p_abs)
        return np.where(self.origin[..., None], 0.0, self.p / safe[..., None])

    @cached_property
    def chi(self):
        """Node-wise helicity eigenvectors ``(chi_plus, chi_minus)``."""
        k = np.where(self.origin[..., None], np.array([0.0, 0.0, 1.0]), self.k_hat)
        cp, cm, _ = helicity_vectors(k)
        cp[self.origin] = 0.0
        cm[self.origin] = 0.0
        return cp, cm

    def contains(self, p) -> bool:
        p = np.asarray(p, dtype=float)
        return bool(np.all(p >= -self.p_max) and np.all(p <= self.p_max - self.dp))


def _mesh(axis: np.ndarray) -> np.ndarray:
    return np.stack(np.meshgrid(axis, axis, axis, indexing="ij"), axis=-1)


@dataclass(frozen=True)
class SpinorField:
    grid: MomentumGrid
    values: np.ndarray
    representation: str = MOMENTUM

    def __post_init__(self):
        if self.representation not in (MOMENTUM, POSITION):
            raise ValueError(f"representation must be {MOMENTUM!r} or {POSITION!r}")
        v = np.array(self.values, dtype=complex)
        if v.shape != self.grid.shape + (3,):
            raise ValueError(f"values must have shape {self.grid.shape + (3,)}, got {v.shape}")
        if not np.all(np.isfinite(v)):
            raise ValueError("spinor values must be finite")
        v.flags.writeable = False
        object.__setattr__(self, "values", v)

    def norm(self) -> float:
        return float(np.sqrt(np.sum(np.abs(self.values) ** 2) * self.grid.cell_volume(self.representation)))

    def inner(self, other: "SpinorField") -> complex:
        _same_rep(self, other)
        return complex(np.vdot(self.values, other.values) * self.grid.cell_volume(self.representation))

    def replace(self, values) -> "SpinorField":
        return SpinorField(self.grid, values, self.representation)

    def __add__(self, other: "SpinorField") -> "SpinorField":
        _same_rep(self, other)
        return self.replace(self.values + other.values)

    def __sub__(self, other: "SpinorField") -> "SpinorField":
        _same_rep(self, other)
        return self.replace(self.values - other.values)

    def __mul__(self, c) -> "SpinorField":
        return self.replace(self.values * c)

    __rmul__ = __mul__


def _same_rep(a: SpinorField, b: SpinorField):
    if a.grid != b.grid or a.representation != b.representation:
        raise ValueError("fields live on different grids or representations")


def _require(state: SpinorField, representation: str, op: str):
    if state.representation != representation:
        raise ValueError(f"{op} requires a {representation}-representation state, got {state.representation}")


@dataclass(frozen=True)
class EvolutionConfig:
    dt: float
    steps: int
    project_transverse: bool = False
    observables_every: int = 0

    def __post_init__(self):
        if not self.dt > 0:
            raise ValueError("dt must be positive")
        if int(self.steps) != self.steps or self.steps < 1:
            raise ValueError("steps must be a positive integer")
        if int(self.observables_every) != self.observables_every or self.observables_every < 0:
            raise ValueError("observables_every must be a non-negative integer")


# ---------------------------------------------------------------- states

FieldLike = Union[Callable[[np.ndarray], np.ndarray], complex, np.ndarray]


def _on_grid(value: FieldLike, grid: MomentumGrid) -> np.ndarray:
    if callable(value):
        out = np.asarray(value(grid.p), dtype=complex)
    else:
        out = np.asarray(value, dtype=complex)
    return np.broadcast_to(out, grid.shape)


def general_state(grid: MomentumGrid, C: FieldLike, alpha: FieldLike, beta: FieldLike) -> SpinorField:
    """Normalised ``C(p) (alpha(p) chi_+(p) + beta(p) chi_-(p))``.

    ``C``, ``alpha`` and ``beta`` are callables of the ``(n, n, n, 3)`` node
    momenta, constants, or arrays of the grid shape.  The origin node, where
    the helicity basis is undefined, carries zero amplitude.
    """
    c, a, b = (_on_grid(s, grid) for s in (C, alpha, beta))
    cp, cm = grid.chi
    values = c[..., None] * (a[..., None] * cp + b[..., None] * cm)
    values[grid.origin] = 0.0
    if not np.all(np.isfinite(values)):
        raise ValueError("state coefficients must be finite on the grid")
    state = SpinorField(grid, values)
    nrm = state.norm()
    if nrm == 0.0:
        raise ValueError("state vanishes identically on the grid")
    return state * (1.0 / nrm)


def gaussian_envelope(p0, sigma: float) -> Callable[[np.ndarray], np.ndarray]:
    p0 = np.asarray(p0, dtype=float)
    return lambda p: np.exp(-np.sum((p - p0) ** 2, axis=-1) / (4.0 * sigma**2))


def gaussian_packet(grid: MomentumGrid, p0, sigma: float, helicity: int) -> SpinorField:
    """Helicity eigenstate with Gaussian momentum profile centred on ``p0``.

    ``sigma`` is the standard deviation of ``|Psi(p)|^2`` per axis.  Every
    node carries its own helicity eigenvector.
    """
    p0 = as_vec3(p0, "p0")
    if not sigma > 0:
        raise ValueError("sigma must be positive")
    if helicity not in (1, -1):
        raise ValueError("helicity must be +1 or -1")
    if not grid.contains(p0):
        raise ValueError("p0 lies outside the momentum grid")
    if np.linalg.norm(p0) <= 3.0 * sigma:
        raise ValueError("packet overlaps the origin: need |p0| > 3 sigma")
    a, b = (1.0, 0.0) if helicity == 1 else (0.0, 1.0)
    return general_state(grid, gaussian_envelope(p0, sigma), a, b)


def longitudinal_state(grid: MomentumGrid, C: FieldLike) -> SpinorField:
    """Normalised ``C(p) chi_0(p)``; unphysical, used to probe the constraint."""
    values = _on_grid(C, grid)[..., None] * grid.k_hat
    state = SpinorField(grid, values)
    return state * (1.0 / state.norm())


def shell_state(grid: MomentumGrid, E: float, helicity: int, width: Optional[float] = None) -> SpinorField:
    """Finite-width stand-in for ``chi_h delta(|p| - E)``."""
    width = grid.dp if width is None else width
    if not width > 0:
        raise ValueError("shell width must be positive")
    if helicity not in (1, -1):
        raise ValueError("helicity must be +1 or -1")
    if not (E - 3.0 * width > 0 and E + 4.0 * width <= grid.p_max):
        raise ValueError("energy shell does not fit inside the momentum grid")
    a, b = (1.0, 0.0) if helicity == 1 else (0.0, 1.0)
    return general_state(grid, lambda p: np.exp(-((np.linalg.norm(p, axis=-1) - E) ** 2) / (4.0 * width**2)), a, b)


# -------------------------------------------------------------- dynamics


def apply_hamiltonian(state: SpinorField) -> SpinorField:
    _require(state, MOMENTUM, "apply_hamiltonian")
    return state.replace(1j * np.cross(state.grid.p, state.values))


def apply_helicity(state: SpinorField) -> SpinorField:
    """Node-wise ``(k.S) Psi``."""
    _require(state, MOMENTUM, "apply_helicity")
    return state.replace(1j * np.cross(state.grid.k_hat, state.values))


def project_transverse(state: SpinorField) -> SpinorField:
    _require(state, MOMENTUM, "project_transverse")
    k = state.grid.k_hat
    return state.replace(state.values - k * np.sum(k * state.values, axis=-1, keepdims=True))


def _helicity_operator(grid: MomentumGrid) -> np.ndarray:
    return np.einsum("...j,jkl->...kl", grid.k_hat, -1j * levi_civita())


def propagator(grid: MomentumGrid, t: float) -> np.ndarray:
    """Node-wise ``exp(-i t |p| (k.S))``, shape ``(n, n, n, 3, 3)``.

    Uses ``exp(-i a M) = I - i sin(a) M - (1 - cos a) M^2``, exact because
    ``M = k.S`` satisfies ``M^3 = M``.
    """
    M = _helicity_operator(grid)
    theta = (t * grid.p_abs)[..., None, None]
    return np.eye(3) - 1j * np.sin(theta) * M - (1.0 - np.cos(theta)) * (M @ M)


def _step(U: np.ndarray, values: np.ndarray) -> np.ndarray:
    return np.einsum("...ij,...j->...i", U, values)


@dataclass(frozen=True)
class Observables:
    norm: float
    energy: float
    helicity: float
    mean_momentum: np.ndarray
    transversality_defect: float
    signed_energy: float = field(default=0.0)

    def as_dict(self) -> dict:
        return {
            "norm": self.norm,
            "energy": self.energy,
            "helicity": self.helicity,
            "mean_momentum": [float(x) for x in self.mean_momentum],
            "transversality_defect": self.transversality_defect,
            "signed_energy": self.signed_energy,
        }


def observables(state: SpinorField) -> Observables:
    """Expectation values for a momentum-representation state.

    ``energy`` uses ``|H| = |p|`` on the transverse subspace, so both
    helicities carry positive energy; ``signed_energy`` is ``<H>`` itself.
    """
    _require(state, MOMENTUM, "observables")
    g = state.grid
    dv = g.cell_volume()
    psi = state.values
    dens = np.sum(np.abs(psi) ** 2, axis=-1)
    norm2 = np.sum(dens) * dv
    if norm2 == 0.0:
        raise ValueError("observables are undefined for the null state")
    long2 = np.abs(np.sum(g.k_hat * psi, axis=-1)) ** 2
    hel = np.real(np.sum(np.conj(psi) * (1j * np.cross(g.k_hat, psi)), axis=-1))
    return Observables(
        norm=float(np.sqrt(norm2)),
        energy=float(np.sum(g.p_abs * (dens - long2)) * dv / norm2),
        helicity=float(np.sum(hel) * dv / norm2),
        mean_momentum=np.einsum("abc,abci->i", dens, g.p) * dv / norm2,
        transversality_defect=float(np.sqrt(np.sum(long2) * dv / norm2)),
        signed_energy=float(np.sum(g.p_abs * hel) * dv / norm2),
    )


def evolve(
    state: SpinorField,
    config: EvolutionConfig,
    record: Optional[List[dict]] = None,
) -> SpinorField:
    """Advance ``state`` by ``config.steps`` exact steps of length ``config.dt``.

    Position-representation input is evolved in momentum space and returned
    in position representation.  When ``record`` is a list, a row of
    observables is appended at step 0 and every ``observables_every`` steps
    (and at the final step).
    """
    if state.representation == POSITION:
        return to_position(evolve(to_momentum(state), config, record))
    U = propagator(state.grid, config.dt)
    if config.project_transverse:
        k = state.grid.k_hat
        P = np.eye(3) - k[..., :, None] * k[..., None, :]
        U = P @ U
    every = config.observables_every
    values = state.values
    if record is not None:
        record.append(_row(state.replace(values), 0, 0.0))
    for step in range(1, config.steps + 1):
        values = _step(U, values)
        if record is not None and ((every and step % every == 0) or step == config.steps):
            record.append(_row(state.replace(values), step, step * config.dt))
    return state.replace(values)


def _row(state: SpinorField, step: int, time: float) -> dict:
    obs = observables(state)
    return {
        "step": step,
        "time": time,
        "norm": obs.norm,
        "energy": obs.energy,
        "helicity": obs.helicity,
        "defect": obs.transversality_defect,
    }


def evolve_exact(state: SpinorField, t: float) -> SpinorField:
    """Single application of the propagator for time ``t`` (any sign)."""
    _require(state, MOMENTUM, "evolve_exact")
    return state.replace(_step(propagator(state.grid, t), state.values))


# ------------------------------------------------------- representations


def to_position(state: SpinorField) -> SpinorField:
    _require(state, MOMENTUM, "to_position")
    g = state.grid
    scale = (g.dp / np.sqrt(2.0 * np.pi)) ** 3
    shifted = np.fft.ifftshift(state.values, axes=_AXES)
    out = np.fft.fftshift(np.fft.ifftn(shifted, axes=_AXES, norm="forward"), axes=_AXES)
    return SpinorField(g, out * scale, POSITION)


def to_momentum(state: SpinorField) -> SpinorField:
    _require(state, POSITION, "to_momentum")
    g = state.grid
    scale = (g.dr / np.sqrt(2.0 * np.pi)) ** 3
    shifted = np.fft.ifftshift(state.values, axes=_AXES)
    out = np.fft.fftshift(np.fft.fftn(shifted, axes=_AXES, norm="backward"), axes=_AXES)
    return SpinorField(g, out * scale, MOMENTUM)


def _position_fft(values: np.ndarray, grid: MomentumGrid) -> np.ndarray:
    return to_momentum(SpinorField(grid, values, POSITION)).values


def _position_ifft(values: np.ndarray, grid: MomentumGrid) -> np.ndarray:
    return to_position(SpinorField(grid, values, MOMENTUM)).values


def spectral_gradient(values: np.ndarray, grid: MomentumGrid) -> np.ndarray:
    """``d_l F_k`` for a position-space 3-vector field; shape ``(3, n, n, n, 3)``
    with the derivative axis first."""
    fp = _position_fft(values, grid)
    return np.stack([_position_ifft(1j * grid.p[..., l : l + 1] * fp, grid) for l in range(3)])


def position_curl(state: SpinorField) -> SpinorField:
    """``eps_{jlk} d_l Psi_k``, the position-space Hamiltonian."""
    _require(state, POSITION, "position_curl")
    grad = spectral_gradient(state.values, state.grid)
    return state.replace(_curl(grad))


def _curl(grad: np.ndarray) -> np.ndarray:
    # grad[l, ..., k] = d_l F_k
    return np.stack(
        [grad[1, ..., 2] - grad[2, ..., 1], grad[2, ..., 0] - grad[0, ..., 2], grad[0, ..., 1] - grad[1, ..., 0]],
        axis=-1,
    )


def position_centroid(state: SpinorField) -> np.ndarray:
    _require(state, POSITION, "position_centroid")
    dens = np.sum(np.abs(state.values) ** 2, axis=-1)
    return np.einsum("abc,abci->i", dens, state.grid.r) / np.sum(dens)


# -------------------------------------------------------------- residuals


def stationary_residual(E: float, helicity: int, grid: MomentumGrid, width: Optional[float] = None) -> float:
    """``||(H - helicity*E) Psi|| / ||Psi||`` for an energy shell of the given
    width (default one grid spacing) around ``|p| = E``."""
    if not E > 0:
        raise ValueError("E must be positive")
    state = shell_state(grid, E, helicity, width)
    resid = apply_hamiltonian(state) - state * (helicity * E)
    return resid.norm() / state.norm()


def maxwell_residual(state: SpinorField, dt: float) -> dict:
    """Residuals of the Maxwell-like equations obtained by reading
    ``Psi = E + iB`` in position space.

    The identification mixes spin space with physical space and treats a
    quantum state as a classical field; it can not be considered to be a
    derivation of Maxwell's equations.  This routine only shows that the
    formal correspondence holds numerically for transverse states.

    Time derivatives are central differences of the exact evolution over
    ``+-dt``; spatial derivatives are spectral.  Curl residuals are relative
    to ``||d_t B||`` and ``||d_t E||``; divergences are relative to the full
    gradient norm of the field.
    """
    _require(state, POSITION, "maxwell_residual")
    if not dt > 0:
        raise ValueError("dt must be positive")
    g = state.grid
    psi_p = to_momentum(state)
    defect = observables(psi_p).transversality_defect
    if defect > TRANSVERSE_TOL:
        raise ValueError(f"state is not transverse (defect {defect:.3e} > {TRANSVERSE_TOL:g})")
    fwd = to_position(evolve_exact(psi_p, dt)).values
    bwd = to_position(evolve_exact(psi_p, -dt)).values
    dpsi_dt = (fwd - bwd) / (2.0 * dt)
    E, B = state.values.real.copy(), state.values.imag.copy()
    dE_dt, dB_dt = dpsi_dt.real, dpsi_dt.imag
    grad_E = spectral_gradient(E, g).real
    grad_B = spectral_gradient(B, g).real
    div_E = grad_E[0, ..., 0] + grad_E[1, ..., 1] + grad_E[2, ..., 2]
    div_B = grad_B[0, ..., 0] + grad_B[1, ..., 1] + grad_B[2, ..., 2]
    nrm = np.linalg.norm
    return {
        "curl_e_residual": float(nrm(-_curl(grad_E) - dB_dt) / nrm(dB_dt)),
        "curl_b_residual": float(nrm(_curl(grad_B) - dE_dt) / nrm(dE_dt)),
        "div_e": float(nrm(div_E) / nrm(grad_E)),
        "div_b": float(nrm(div_B) / nrm(grad_B)),
        "dt": float(dt),
        "transversality_defect": float(defect),
    }
