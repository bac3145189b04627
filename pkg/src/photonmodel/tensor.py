"""Classical photon tensor algebra.

The six components of an antisymmetric rank-2 tensor f^{mu nu} are carried
as two three-vectors ``e`` (the f^{0i} entries) and ``b`` (the spatial
entries, f^{12} = b3, f^{23} = b1, f^{31} = b2).  Natural units are used
throughout (hbar = c = 1), so ``omega = |e|`` is both the rotation
frequency and the photon energy.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Tuple

import numpy as np

UNIT_TOL = 1e-9
CONSTRUCT_TOL = 1e-12
TRANSFORM_TOL = 1e-9
SINGULAR_AXIS_TOL = 1e-6

_X = np.array([1.0, 0.0, 0.0])
_Z = np.array([0.0, 0.0, 1.0])


def as_vec3(v, name: str = "vector") -> np.ndarray:
    arr = np.array(v, dtype=float).reshape(-1)
    if arr.shape != (3,):
        raise ValueError(f"{name} must have exactly 3 components, got {arr.shape[0]}")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} must be finite")
    arr.flags.writeable = False
    return arr


def as_unit(v, name: str = "k", tol: float = UNIT_TOL) -> np.ndarray:
    arr = as_vec3(v, name)
    if abs(np.linalg.norm(arr) - 1.0) > tol:
        raise ValueError(f"{name} must be a unit vector (|{name}| = {np.linalg.norm(arr):.15g})")
    return arr


@dataclass(frozen=True)
class AntisymTensor:
    """General antisymmetric tensor stored as its (e, b) pair."""

    e: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "e", as_vec3(self.e, "e"))
        object.__setattr__(self, "b", as_vec3(self.b, "b"))

    def __neg__(self) -> "AntisymTensor":
        return AntisymTensor(-self.e, -self.b)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AntisymTensor):
            return NotImplemented
        return bool(np.array_equal(self.e, other.e) and np.array_equal(self.b, other.b))

    def __hash__(self):
        return hash((self.e.tobytes(), self.b.tobytes()))

    def as_matrix(self) -> np.ndarray:
        """Contravariant 4x4 matrix f^{mu nu}."""
        e1, e2, e3 = self.e
        b1, b2, b3 = self.b
        return np.array(
            [
                [0.0, e1, e2, e3],
                [-e1, 0.0, b3, -b2],
                [-e2, -b3, 0.0, b1],
                [-e3, b2, -b1, 0.0],
            ]
        )

    @classmethod
    def from_matrix(cls, f) -> "AntisymTensor":
        f = np.asarray(f, dtype=float)
        if f.shape != (4, 4):
            raise ValueError("tensor matrix must be 4x4")
        return cls(f[0, 1:], [f[2, 3], f[3, 1], f[1, 2]])

    def allclose(self, other: "AntisymTensor", atol: float = 1e-12) -> bool:
        return bool(
            np.allclose(self.e, other.e, rtol=0, atol=atol)
            and np.allclose(self.b, other.b, rtol=0, atol=atol)
        )


@dataclass(frozen=True)
class PhotonTensor:
    """An :class:`AntisymTensor` satisfying the photon constraints.

    ``e`` and ``b`` are orthogonal with equal modulus and ``(e, b, k)`` is a
    right-handed orthogonal triad.  ``tol`` is relative to ``omega``.
    """

    tensor: AntisymTensor
    k: np.ndarray
    helicity: int
    tol: float = field(default=CONSTRUCT_TOL, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "k", as_unit(self.k, "k", max(self.tol, UNIT_TOL)))
        if self.helicity not in (1, -1):
            raise ValueError("helicity must be +1 or -1")
        e, b = self.tensor.e, self.tensor.b
        ne, nb = np.linalg.norm(e), np.linalg.norm(b)
        if ne <= 0.0:
            raise ValueError("photon tensor must have nonzero e")
        if abs(ne - nb) > self.tol * ne:
            raise ValueError(f"|e| != |b| ({ne!r} vs {nb!r})")
        if abs(e @ b) > self.tol * ne * nb:
            raise ValueError("e and b are not orthogonal")
        if np.linalg.norm(np.cross(e / ne, b / nb) - self.k) > self.tol:
            raise ValueError("k does not match e x b direction")

    @property
    def e(self) -> np.ndarray:
        return self.tensor.e

    @property
    def b(self) -> np.ndarray:
        return self.tensor.b

    @property
    def omega(self) -> float:
        return float(np.linalg.norm(self.tensor.e))

    @property
    def energy(self) -> float:
        """E = hbar * omega with hbar = 1."""
        return self.omega


@dataclass(frozen=True)
class LorentzBoost:
    beta: np.ndarray

    def __post_init__(self):
        beta = as_vec3(self.beta, "beta")
        if np.linalg.norm(beta) >= 1.0:
            raise ValueError("beta magnitude must be < 1")
        object.__setattr__(self, "beta", beta)

    @property
    def speed(self) -> float:
        return float(np.linalg.norm(self.beta))

    @property
    def gamma(self) -> float:
        return 1.0 / np.sqrt(1.0 - self.beta @ self.beta)

    def inverse(self) -> "LorentzBoost":
        return LorentzBoost(-self.beta)


@dataclass(frozen=True)
class Rotation:
    matrix: np.ndarray

    def __post_init__(self):
        m = np.array(self.matrix, dtype=float)
        if m.shape != (3, 3):
            raise ValueError("rotation matrix must be 3x3")
        if not np.allclose(m.T @ m, np.eye(3), rtol=0, atol=1e-12):
            raise ValueError("rotation matrix is not orthogonal")
        if abs(np.linalg.det(m) - 1.0) > 1e-12:
            raise ValueError("rotation matrix must have determinant +1")
        m.flags.writeable = False
        object.__setattr__(self, "matrix", m)

    @classmethod
    def about_axis(cls, axis, angle: float) -> "Rotation":
        """Rodrigues formula R = I + sin(a) K + (1 - cos(a)) K^2."""
        n = as_vec3(axis, "axis")
        n = n / np.linalg.norm(n)
        K = np.array([[0.0, -n[2], n[1]], [n[2], 0.0, -n[0]], [-n[1], n[0], 0.0]])
        return cls(np.eye(3) + np.sin(angle) * K + (1.0 - np.cos(angle)) * (K @ K))

    @classmethod
    def aligning(cls, a, b) -> "Rotation":
        """Smallest rotation taking direction ``a`` onto direction ``b``."""
        a = np.asarray(a, dtype=float) / np.linalg.norm(a)
        b = np.asarray(b, dtype=float) / np.linalg.norm(b)
        axis = np.cross(a, b)
        s, c = np.linalg.norm(axis), float(a @ b)
        if s < 1e-15:
            if c > 0:
                return cls(np.eye(3))
            # antiparallel: half turn about any axis perpendicular to a
            return cls.about_axis(_reference_axis(a), np.pi)
        return cls.about_axis(axis, np.arctan2(s, c))

    @property
    def T(self) -> "Rotation":
        return Rotation(self.matrix.T)


def _reference_axis(k: np.ndarray) -> np.ndarray:
    """Unit vector perpendicular to ``k``: projected z axis, else projected x."""
    axis = _Z if np.linalg.norm(np.cross(k, _Z)) >= SINGULAR_AXIS_TOL else _X
    u = axis - (axis @ k) * k
    return u / np.linalg.norm(u)


def transverse_frame(k) -> Tuple[np.ndarray, np.ndarray]:
    """Deterministic (e_hat, b_hat) pair for phase 0.

    ``b_hat`` is the reference transverse axis and ``e_hat = b_hat x k``,
    so that ``k = e_hat x b_hat`` and ``b_hat = k x e_hat``.
    """
    k = as_unit(k)
    b_hat = _reference_axis(k)
    e_hat = np.cross(b_hat, k)
    return e_hat, b_hat


def make_photon_tensor(k, helicity: int, omega: float, phase: float = 0.0) -> PhotonTensor:
    """Photon tensor with ``e = omega * e_hat(phase)`` and ``b = k x e``.

    ``phase`` is the angle of ``e_hat`` from the reference direction, measured
    right-handed about ``k``.
    """
    k = as_unit(k)
    if not omega > 0:
        raise ValueError("omega must be positive")
    if helicity not in (1, -1):
        raise ValueError("helicity must be +1 or -1")
    e0, b0 = transverse_frame(k)
    e_hat = np.cos(phase) * e0 + np.sin(phase) * b0
    e = omega * e_hat
    b = omega * np.cross(k, e_hat)
    return PhotonTensor(AntisymTensor(e, b), k, helicity)


def photon_snapshot(k, helicity: int, omega: float, t: float, phase: float = 0.0) -> PhotonTensor:
    """State of the rotating pair at time ``t``.

    The pair turns about ``k`` at rate ``omega``; right-handed for positive
    helicity, so the angular velocity is ``helicity * omega * k``.
    """
    return make_photon_tensor(k, helicity, omega, phase + helicity * omega * t)


def dual(f: AntisymTensor) -> AntisymTensor:
    return AntisymTensor(-f.b, f.e)


def invariants(f: AntisymTensor) -> Tuple[float, float, float]:
    """Return the scalars ``(0, 2(e^2 - b^2), -4 e.b)``.

    The last two equal minus the contractions ``f^{mu nu} f_{mu nu}`` and
    ``f^{mu nu} f*_{mu nu}`` evaluated with metric diag(1, -1, -1, -1); only
    their vanishing matters for photons.
    """
    return 0.0, float(2.0 * (f.e @ f.e - f.b @ f.b)), float(-4.0 * (f.e @ f.b))


def rotate(f: AntisymTensor, rotation: Rotation) -> AntisymTensor:
    R = rotation.matrix
    return AntisymTensor(R @ f.e, R @ f.b)


def _boost_x(e: np.ndarray, b: np.ndarray, beta: float) -> Tuple[np.ndarray, np.ndarray]:
    g = 1.0 / np.sqrt(1.0 - beta * beta)
    e1, e2, e3 = e
    b1, b2, b3 = b
    e_p = np.array([e1, g * (e2 - beta * b3), g * (e3 + beta * b2)])
    b_p = np.array([b1, g * (b2 + beta * e3), g * (b3 - beta * e2)])
    return e_p, b_p


def _aberrate_x(k: np.ndarray, beta: float) -> np.ndarray:
    g = 1.0 / np.sqrt(1.0 - beta * beta)
    k_p = np.array([g * (k[0] - beta), k[1], k[2]])
    return k_p / np.linalg.norm(k_p)


def boost(f: AntisymTensor, k, lorentz: LorentzBoost) -> Tuple[AntisymTensor, np.ndarray]:
    """Transform ``f`` and the propagation direction ``k`` to a frame moving
    with velocity ``lorentz.beta``.

    Boosts along an arbitrary direction are done by rotating that direction
    onto x, applying the x-axis boost, and rotating back.
    """
    k = as_vec3(k, "k")
    speed = lorentz.speed
    if speed == 0.0:
        return f, k
    R = Rotation.aligning(lorentz.beta, _X).matrix
    e_p, b_p = _boost_x(R @ f.e, R @ f.b, speed)
    k_p = _aberrate_x(R @ k, speed)
    return AntisymTensor(R.T @ e_p, R.T @ b_p), R.T @ k_p


def boost_photon(p: PhotonTensor, lorentz: LorentzBoost) -> PhotonTensor:
    f, k = boost(p.tensor, p.k, lorentz)
    return PhotonTensor(f, k, p.helicity, tol=TRANSFORM_TOL)


def rotate_photon(p: PhotonTensor, rotation: Rotation) -> PhotonTensor:
    return PhotonTensor(rotate(p.tensor, rotation), rotation.matrix @ p.k, p.helicity, tol=TRANSFORM_TOL)


def doppler_factor(beta: float) -> float:
    if not -1.0 < beta < 1.0:
        raise ValueError("beta magnitude must be < 1")
    return float(np.sqrt((1.0 - beta) / (1.0 + beta)))


def doppler_shift(E: float, beta: float) -> float:
    """Energy seen from a frame receding along the propagation direction."""
    if not E > 0:
        raise ValueError("E must be positive")
    return E * doppler_factor(beta)


_SYMMETRIES = {
    "P": lambda e, b: (-e, b),
    "T": lambda e, b: (e, -b),
    "C": lambda e, b: (-e, -b),
    "D": lambda e, b: (-b, e),
}


def discrete_symmetry(f: AntisymTensor, op: str) -> AntisymTensor:
    """Apply parity ``P``, time (propagation) reversal ``T``, charge
    conjugation ``C`` or duality ``D``.  ``op`` may be a word such as
    ``"PTC"``; letters are applied right to left like operator products."""
    ops = op.upper()
    if not ops or any(c not in _SYMMETRIES for c in ops):
        raise ValueError(f"unknown symmetry {op!r}; expected letters from P, T, C, D")
    e, b = f.e, f.b
    for c in reversed(ops):
        e, b = _SYMMETRIES[c](e, b)
    return AntisymTensor(e, b)


def transversality_residual(f: AntisymTensor, k) -> Tuple[float, float]:
    """Norms of ``k_mu f^{mu nu}`` and ``k_mu f*^{mu nu}`` for ``k^mu = (1, k)``."""
    k = as_unit(k)
    e, b = f.e, f.b
    r1 = np.concatenate(([k @ e], e + np.cross(k, b)))
    r2 = np.concatenate(([-(k @ b)], -b + np.cross(k, e)))
    return float(np.linalg.norm(r1)), float(np.linalg.norm(r2))


def helix_length(omega: float) -> float:
    """Pitch 2 pi c / omega of the helix traced by the rotating pair."""
    if not omega > 0:
        raise ValueError("omega must be positive")
    return 2.0 * np.pi / omega
