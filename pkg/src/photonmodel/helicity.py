"""Spin-1 matrices in the Cartesian representation and helicity eigenvectors.

The representation uses ``(S_j)_{kl} = -i eps_{jkl}`` (hbar = 1), in which
``(k.S) v = i k x v``.  The zero-helicity eigenvector therefore has the same
components as ``k``; that is a coincidence of representations and the
vector lives in spin space, not physical space.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .tensor import SINGULAR_AXIS_TOL, as_unit

#: threshold on 1 - (kx ky + ky kz + kz kx) below which the closed form is abandoned
CLOSED_FORM_TOL = 1e-6


def levi_civita() -> np.ndarray:
    eps = np.zeros((3, 3, 3))
    eps[0, 1, 2] = eps[1, 2, 0] = eps[2, 0, 1] = 1.0
    eps[0, 2, 1] = eps[2, 1, 0] = eps[1, 0, 2] = -1.0
    return eps


_S = -1j * levi_civita()
_S.flags.writeable = False


@dataclass(frozen=True)
class SpinMatrices:
    x: np.ndarray
    y: np.ndarray
    z: np.ndarray

    def __iter__(self):
        return iter((self.x, self.y, self.z))

    def __getitem__(self, j: int) -> np.ndarray:
        return (self.x, self.y, self.z)[j]

    def stacked(self) -> np.ndarray:
        return np.stack([self.x, self.y, self.z])


def spin_matrices() -> SpinMatrices:
    return SpinMatrices(*(_S[j].copy() for j in range(3)))


def spin_dot(k) -> np.ndarray:
    """The helicity operator ``k_j S_j``; eigenvalues +1, 0, -1."""
    k = as_unit(k)
    return np.einsum("j,jkl->kl", k, _S)


def transverse_projector(k) -> np.ndarray:
    """Projector onto the helicity +-1 subspace, ``I - chi0 chi0^dagger``."""
    k = as_unit(k)
    return (np.eye(3) - np.outer(k, k)).astype(complex)


@dataclass(frozen=True)
class HelicityBasis:
    k: np.ndarray
    chi_plus: np.ndarray
    chi_minus: np.ndarray
    chi_zero: np.ndarray
    closed_form: bool = True

    def as_columns(self) -> np.ndarray:
        """3x3 unitary with columns (chi+, chi-, chi0)."""
        return np.column_stack([self.chi_plus, self.chi_minus, self.chi_zero])

    def chi(self, helicity: int) -> np.ndarray:
        return {1: self.chi_plus, -1: self.chi_minus, 0: self.chi_zero}[helicity]


def _fallback_pair(k: np.ndarray):
    # transverse frame from the projected z axis (x axis near the poles);
    # with v = k x u, (k.S)(u + i v) = +(u + i v)
    ref = np.zeros_like(k)
    near_pole = np.linalg.norm(np.cross(k, [0.0, 0.0, 1.0]), axis=-1) < SINGULAR_AXIS_TOL
    ref[..., 2] = np.where(near_pole, 0.0, 1.0)
    ref[..., 0] = np.where(near_pole, 1.0, 0.0)
    u = ref - np.sum(ref * k, axis=-1, keepdims=True) * k
    u /= np.linalg.norm(u, axis=-1, keepdims=True)
    v = np.cross(k, u)
    return (u + 1j * v) / np.sqrt(2.0), (u - 1j * v) / np.sqrt(2.0)


def _closed_form_pair(k: np.ndarray, denom: np.ndarray):
    kx, ky, kz = k[..., 0], k[..., 1], k[..., 2]
    s = kx + ky + kz
    re = np.stack([1.0 - kx * s, 1.0 - ky * s, 1.0 - kz * s], axis=-1)
    im = np.stack([ky - kz, kz - kx, kx - ky], axis=-1)
    norm = 2.0 * np.sqrt(denom)[..., None]
    return (re + 1j * im) / norm, (re - 1j * im) / norm


def helicity_vectors(k: np.ndarray):
    """Vectorised ``(chi_plus, chi_minus, closed_form_mask)`` for unit vectors
    ``k`` of shape ``(..., 3)``.  Rows are not validated."""
    k = np.asarray(k, dtype=float)
    kx, ky, kz = k[..., 0], k[..., 1], k[..., 2]
    denom = 1.0 - kx * ky - ky * kz - kz * kx
    mask = denom > CLOSED_FORM_TOL
    safe = np.where(mask, denom, 1.0)
    cp, cm = _closed_form_pair(k, safe)
    if not np.all(mask):
        fp, fm = _fallback_pair(k)
        cp = np.where(mask[..., None], cp, fp)
        cm = np.where(mask[..., None], cm, fm)
    return cp, cm, mask


def helicity_basis(k, force_fallback: bool = False) -> HelicityBasis:
    """Eigenvectors of ``k.S`` for helicity +1, -1 and 0.

    Away from ``k ~ +-(1,1,1)/sqrt(3)`` the closed form is used; there its
    normalisation vanishes, and a transverse frame built from the reference
    axis is used instead.  The two branches differ by a phase per helicity.
    """
    k = as_unit(k)
    if force_fallback:
        cp, cm = _fallback_pair(k)
        closed = False
    else:
        cp, cm, mask = helicity_vectors(k)
        closed = bool(mask)
    chi0 = k.astype(complex)
    return HelicityBasis(k, cp, cm, chi0, closed)
