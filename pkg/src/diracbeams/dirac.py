"""Dirac algebra in the standard representation.

Natural units hbar = c = 1 throughout; the electron mass defaults to 1 so
momenta are supplied as p/m.  Bispinors are length-4 complex arrays (the
last axis when fields are sampled on grids), with the upper two components
the large block and the lower two the small block, matching
beta = diag(1, 1, -1, -1).
"""

from __future__ import annotations

import numpy as np


def pauli_matrices():
    """The three Pauli matrices as a (3, 2, 2) complex array."""
    sx = np.array([[0, 1], [1, 0]], dtype=complex)
    sy = np.array([[0, -1j], [1j, 0]], dtype=complex)
    sz = np.array([[1, 0], [0, -1]], dtype=complex)
    return np.array([sx, sy, sz])


def dirac_matrices():
    """Dirac (alpha_x, alpha_y, alpha_z, beta) in the standard representation."""
    zeros = np.zeros((2, 2), dtype=complex)
    eye = np.eye(2, dtype=complex)
    alphas = tuple(
        np.block([[zeros, s], [s, zeros]]) for s in pauli_matrices()
    )
    beta = np.block([[eye, zeros], [zeros, -eye]])
    return alphas + (beta,)


PAULI = pauli_matrices()
ALPHA_X, ALPHA_Y, ALPHA_Z, BETA = dirac_matrices()
ALPHA = np.array([ALPHA_X, ALPHA_Y, ALPHA_Z])
EYE4 = np.eye(4, dtype=complex)


def spin_basis(s):
    """Rest-frame polarization spinor w^s for s = +1/2 or -1/2."""
    if s == 0.5:
        return np.array([1.0, 0.0], dtype=complex)
    if s == -0.5:
        return np.array([0.0, 1.0], dtype=complex)
    raise ValueError(f"spin index must be +0.5 or -0.5, got {s}")


def energy(p, mass=1.0):
    """Relativistic energy sqrt(p^2 + m^2) for momenta of shape (..., 3)."""
    p = np.asarray(p, dtype=float)
    return np.sqrt(np.sum(p * p, axis=-1) + mass * mass)


def plane_wave_spinor(p, w, mass=1.0):
    """Positive-energy plane-wave bispinor amplitude W(p).

    W = (1/sqrt(2)) * ( sqrt(1 + m/E) w,  sqrt(1 - m/E) (sigma . p_hat) w )

    Parameters
    ----------
    p : array_like, shape (..., 3)
        Momentum (units of the mass).  p = 0 is allowed: the lower block
        carries a vanishing prefactor there, so the direction is moot.
    w : array_like, shape (2,)
        Unit rest-frame polarization spinor.

    Returns
    -------
    ndarray, shape (..., 4), unit norm per momentum.
    """
    p = np.asarray(p, dtype=float)
    w = np.asarray(w, dtype=complex)
    if abs(np.vdot(w, w).real - 1.0) > 1e-12:
        raise ValueError("polarization spinor must have unit norm")
    e = energy(p, mass)
    u = mass / e
    pnorm = np.sqrt(np.sum(p * p, axis=-1))
    safe = np.where(pnorm > 0.0, pnorm, 1.0)
    kappa = p / safe[..., None]
    # sqrt(1 - u) vanishes exactly where pnorm == 0, killing the stray kappa.
    sigma_kappa = np.einsum("...i,iab->...ab", kappa, PAULI)
    upper = np.sqrt((1.0 + u) / 2.0)[..., None] * w
    lower = np.sqrt(np.maximum(1.0 - u, 0.0) / 2.0)[..., None] * np.einsum(
        "...ab,b->...a", sigma_kappa, w
    )
    return np.concatenate([upper, lower], axis=-1)


def density(psi):
    """Probability density psi^dagger psi; bispinor components on the last axis."""
    psi = np.asarray(psi)
    return np.sum((psi.conj() * psi).real, axis=-1)


def current(psi):
    """Probability current psi^dagger alpha psi, shape (..., 3)."""
    psi = np.asarray(psi)
    j = np.einsum("...a,iab,...b->...i", psi.conj(), ALPHA, psi)
    return j.real
