"""
Spin-1 matrices and the helicity basis
======================================

The photon's spin lives in a three-dimensional space where (S_j)_{kl} is
-i epsilon_{jkl}.  Projecting onto a direction k gives the helicity operator
k.S with eigenvalues +1, 0, -1.  Only the +1 and -1 eigenvectors are
physical; the zero eigenvector is k itself.
"""

import numpy as np

from photonmodel.helicity import helicity_basis, spin_dot, spin_matrices, transverse_projector

np.set_printoptions(precision=4, suppress=True)

S = spin_matrices()
print("S_z =\n", S.z)
print("[S_x, S_y] - i S_z =", np.abs(S.x @ S.y - S.y @ S.x - 1j * S.z).max())
print("S^2 =", np.real_if_close(sum(s @ s for s in S)).diagonal())

# %%
# Along z the eigenvectors have a simple closed form.
B = helicity_basis([0, 0, 1])
print("chi+ =", B.chi_plus)
print("chi- =", B.chi_minus)

# For a generic direction the same form applies, except near the diagonal
# (1,1,1)/sqrt(3) where its denominator vanishes and a cross-product
# construction takes over.
for k in ([0.6, 0.0, 0.8], np.ones(3) / np.sqrt(3)):
    B = helicity_basis(k)
    M = spin_dot(B.k)
    res = max(np.linalg.norm(M @ B.chi_plus - B.chi_plus), np.linalg.norm(M @ B.chi_minus + B.chi_minus))
    print(f"k={np.round(B.k, 4)} closed form={B.closed_form} eigen-residual={res:.1e}")

# %%
# The two physical states span the plane transverse to k.
k = np.array([0.0, 0.6, 0.8])
B = helicity_basis(k)
P = transverse_projector(k)
outer = np.outer(B.chi_plus, B.chi_plus.conj()) + np.outer(B.chi_minus, B.chi_minus.conj())
print("projector from chi+/chi- matches I - k k^T:", np.allclose(P, outer))
