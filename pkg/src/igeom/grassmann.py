"""Invariant-measure sampling on rotations, linear/affine subspaces and rigid
motions, plus Radon transforms between Grassmannians by direct averaging.

Affine flats and motions are localized: samples carry importance weights so
that weighted averages estimate integrals against the (unbounded) invariant
measures for integrands supported on a known reference ball or box.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from igeom import constants as C
from igeom import polytope as P
from igeom.mc import McEstimate, as_generator


def sample_rotation(d: int, rng) -> np.ndarray:
    """Haar-distributed rotation: QR of a Gaussian matrix with the sign fix,
    then determinant forced to +1."""
    if d < 2:
        raise ValueError("need d >= 2")
    rng = as_generator(rng)
    q, r = np.linalg.qr(rng.standard_normal((d, d)))
    q = q * np.sign(np.diag(r))
    if np.linalg.det(q) < 0:
        q[:, 0] = -q[:, 0]
    return q


def haar_subspace(d: int, q: int, rng) -> np.ndarray:
    """Orthonormal basis (d, q) of a Haar-distributed q-subspace."""
    if not 1 <= q <= d:
        raise ValueError("need 1 <= q <= d")
    rng = as_generator(rng)
    g = rng.standard_normal((d, q))
    qmat, r = np.linalg.qr(g)
    return qmat * np.sign(np.diag(r))


@dataclass(frozen=True)
class SubspaceSample:
    d: int
    q: int
    basis: np.ndarray


def sample_subspace(d: int, q: int, rng) -> SubspaceSample:
    return SubspaceSample(d, q, haar_subspace(d, q, rng))


@dataclass(frozen=True)
class FlatSample:
    """A q-flat x + span(basis) with its importance weight: weighted averages
    of integrands supported on flats meeting B(0, R) estimate the invariant
    affine integral."""

    d: int
    q: int
    basis: np.ndarray      # (d, q)
    offset: np.ndarray     # in the orthogonal complement of the span
    weight: float


def _uniform_ball(k: int, radius: float, rng) -> np.ndarray:
    g = rng.standard_normal(k)
    u = g / np.linalg.norm(g)
    return radius * rng.uniform() ** (1.0 / k) * u


def sample_flat(d: int, q: int, radius: float, rng) -> FlatSample:
    """Direction Haar on the q-Grassmannian; offset uniform in the
    (d-q)-ball of the given radius inside the orthocomplement.

    weight = kappa_{d-q} radius^{d-q}, the invariant measure of all q-flats
    meeting B(0, radius).
    """
    if not 1 <= q <= d - 1:
        raise ValueError("need 1 <= q <= d-1")
    rng = as_generator(rng)
    frame = haar_subspace(d, d, rng)
    basis, perp = frame[:, :q], frame[:, q:]
    x = perp @ _uniform_ball(d - q, radius, rng)
    return FlatSample(d, q, basis, x, C.kappa(d - q) * radius ** (d - q))


@dataclass(frozen=True)
class MotionSample:
    rotation: np.ndarray
    translation: np.ndarray
    weight: float


def motion_box_halfwidth(k_body: P.ConvexPolytope, m_body: P.ConvexPolytope) -> float:
    """Half-width of a centered translation box guaranteed to contain every
    translation with K meeting rho M + t, for every rotation rho."""
    return P.circumradius(k_body) + P.circumradius(m_body) + 1e-6


def sample_motion(k_body: P.ConvexPolytope, m_body: P.ConvexPolytope, rng,
                  halfwidth: float | None = None) -> MotionSample:
    """Rotation Haar; translation uniform in a centered box; weight is the
    box volume, so weighted averages estimate rigid-motion integrals."""
    rng = as_generator(rng)
    d = k_body.d
    w = motion_box_halfwidth(k_body, m_body) if halfwidth is None else halfwidth
    rho = sample_rotation(d, rng)
    t = rng.uniform(-w, w, size=d)
    return MotionSample(rho, t, (2.0 * w) ** d)


def incident_subspace(e_basis: np.ndarray, i: int, rng) -> np.ndarray:
    """Haar sample from the i-subspaces incident to span(e_basis): contained
    in it when i < j, containing it when i > j (j = dim of e)."""
    d, j = e_basis.shape
    rng = as_generator(rng)
    if i == j:
        return e_basis
    if i < j:
        inner = haar_subspace(j, i, rng)
        return e_basis @ inner
    perp = P._orthocomplement(e_basis)
    extra = perp @ haar_subspace(d - j, i - j, rng)
    out = np.hstack([e_basis, extra])
    qmat, r = np.linalg.qr(out)
    return qmat * np.sign(np.diag(r))


def radon_point(f, e_basis: np.ndarray, i: int, samples: int, rng,
                seed=None) -> McEstimate:
    """Radon transform between Grassmannians, evaluated at span(e_basis):
    the average of f over the i-subspaces incident to it.

    f takes an orthonormal basis (d, i) and returns a float.
    """
    e_basis = np.asarray(e_basis, dtype=float)
    d, j = e_basis.shape
    if not (1 <= i <= d - 1 and 1 <= j <= d - 1):
        raise ValueError("Radon transform orders must be in 1..d-1")
    if i == j:
        return McEstimate(float(f(e_basis)), 0.0, 0, seed)
    rng = as_generator(rng)
    vals = np.array([float(f(incident_subspace(e_basis, i, rng))) for _ in range(samples)])
    se = vals.std(ddof=0) / math.sqrt(samples) if samples > 1 else math.inf
    return McEstimate(float(vals.mean()), float(se), samples, seed)
