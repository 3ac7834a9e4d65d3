"""Spherical harmonics machinery: zonal (Gegenbauer) test functions, finite
spectra with degree-wise multiplier action, sphere quadrature and subsphere
averages.

All pointwise-evaluable functions follow one batching convention: they accept
an array of shape (..., d) of unit vectors and return an array of shape (...).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from igeom.mc import McEstimate, as_generator


def gegenbauer_eval(n: int, lambda_index: float, t):
    """C_n^lambda(t) by the three-term recurrence; t may be an array."""
    if n < 0:
        raise ValueError("degree must be >= 0")
    if lambda_index <= 0:
        raise ValueError("lambda index must be > 0")
    t = np.asarray(t, dtype=float)
    c_prev = np.ones_like(t)
    if n == 0:
        return c_prev
    c_cur = 2 * lambda_index * t
    for k in range(2, n + 1):
        c_prev, c_cur = c_cur, (
            2 * t * (k + lambda_index - 1) * c_cur - (k + 2 * lambda_index - 2) * c_prev
        ) / k
    return c_cur


def gegenbauer_upto(nmax: int, lambda_index: float, t) -> list[np.ndarray]:
    """All C_n^lambda(t) for n = 0..nmax in one recurrence sweep."""
    t = np.asarray(t, dtype=float)
    out = [np.ones_like(t)]
    if nmax >= 1:
        out.append(2 * lambda_index * t)
    for k in range(2, nmax + 1):
        out.append(
            (2 * t * (k + lambda_index - 1) * out[-1] - (k + 2 * lambda_index - 2) * out[-2]) / k
        )
    return out


@dataclass(frozen=True)
class ZonalTestFunction:
    """u -> scale * C_n^{(d-2)/2}(<axis, u>), a degree-n harmonic for any d >= 3."""

    d: int
    degree: int
    axis: np.ndarray
    scale: float = 1.0

    def __post_init__(self):
        axis = np.asarray(self.axis, dtype=float)
        norm = np.linalg.norm(axis)
        if not math.isclose(norm, 1.0, abs_tol=1e-12):
            axis = axis / norm
        object.__setattr__(self, "axis", axis)
        if axis.shape != (self.d,):
            raise ValueError("axis dimension mismatch")

    @property
    def lambda_index(self) -> float:
        return (self.d - 2) / 2

    def __call__(self, u):
        u = np.asarray(u, dtype=float)
        t = u @ self.axis
        return self.scale * gegenbauer_eval(self.degree, self.lambda_index, t)


class RealSphericalHarmonic:
    """Real spherical harmonic on S^2, orthonormal for the probability
    measure sigma (i.e. sqrt(4 pi) times the surface-orthonormal one)."""

    def __init__(self, ell: int, m: int):
        if ell < 0 or abs(m) > ell:
            raise ValueError("need |m| <= ell")
        self.d = 3
        self.degree = ell
        self.m = m

    def __call__(self, u):
        from scipy.special import sph_harm_y

        u = np.asarray(u, dtype=float)
        theta = np.arccos(np.clip(u[..., 2], -1.0, 1.0))
        phi = np.arctan2(u[..., 1], u[..., 0])
        ell, m = self.degree, abs(self.m)
        y = sph_harm_y(ell, m, theta, phi)
        if self.m > 0:
            val = math.sqrt(2.0) * (-1.0) ** m * np.real(y)
        elif self.m < 0:
            val = math.sqrt(2.0) * (-1.0) ** m * np.imag(y)
        else:
            val = np.real(y)
        return math.sqrt(4 * math.pi) * val


def real_harmonic_basis(lmax: int) -> list[RealSphericalHarmonic]:
    """The d=3 real orthonormal basis for all degrees <= lmax."""
    return [RealSphericalHarmonic(l, m) for l in range(lmax + 1) for m in range(-l, l + 1)]


@dataclass
class HarmonicSpectrum:
    """A finite linear combination of harmonics with known degrees.

    entries: list of (degree, function, coefficient).  Multiplier operators
    act degree-wise on the coefficients.
    """

    d: int
    entries: list[tuple[int, Callable, float]] = field(default_factory=list)

    @classmethod
    def constant(cls, d: int, value: float = 1.0) -> "HarmonicSpectrum":
        return cls(d, [(0, ZonalTestFunction(d, 0, _e(d, 0)), value)])

    @classmethod
    def zonal(cls, d: int, degree: int, axis, coeff: float = 1.0) -> "HarmonicSpectrum":
        return cls(d, [(degree, ZonalTestFunction(d, degree, axis), coeff)])

    def __call__(self, u):
        u = np.asarray(u, dtype=float)
        out = np.zeros(u.shape[:-1])
        for _, fn, coeff in self.entries:
            out = out + coeff * fn(u)
        return out

    def degrees(self) -> list[int]:
        return sorted({deg for deg, _, _ in self.entries})

    def component(self, degree: int) -> "HarmonicSpectrum":
        return HarmonicSpectrum(self.d, [e for e in self.entries if e[0] == degree])

    def is_even(self) -> bool:
        return all(deg % 2 == 0 for deg, _, _ in self.entries)

    def is_centered(self) -> bool:
        """No degree-1 content (degree 0 allowed)."""
        return all(deg != 1 for deg, _, _ in self.entries)

    def mean(self) -> float:
        """Exact integral against sigma: only degree-0 entries contribute."""
        total = 0.0
        for deg, fn, coeff in self.entries:
            if deg == 0:
                total += coeff * float(fn(_e(self.d, 0)))
        return total

    def reflected(self) -> "HarmonicSpectrum":
        """The spectrum of u -> f(-u): coefficient times (-1)^degree."""
        return HarmonicSpectrum(
            self.d, [(deg, fn, coeff * (-1.0) ** deg) for deg, fn, coeff in self.entries]
        )


def _e(d: int, i: int) -> np.ndarray:
    v = np.zeros(d)
    v[i] = 1.0
    return v


def apply_multiplier(f: HarmonicSpectrum, multiplier: Callable[[int], float]) -> HarmonicSpectrum:
    """Scale each degree-s component by multiplier(s)."""
    entries = []
    for deg, fn, coeff in f.entries:
        m = multiplier(deg)
        if m is None or not math.isfinite(m):
            raise ValueError(f"multiplier undefined at degree {deg}")
        entries.append((deg, fn, coeff * m))
    return HarmonicSpectrum(f.d, entries)


@dataclass(frozen=True)
class SphereQuadrature:
    """Nodes and probability weights for integrating against sigma."""

    d: int
    nodes: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        if abs(self.weights.sum() - 1.0) > 1e-12:
            raise ValueError("weights must sum to 1")

    @classmethod
    def monte_carlo(cls, d: int, n: int, rng) -> "SphereQuadrature":
        nodes = sphere_points(d, n, rng)
        return cls(d, nodes, np.full(n, 1.0 / n))


def sphere_points(d: int, n: int, rng) -> np.ndarray:
    """n uniform points on S^{d-1} via normalized Gaussian vectors."""
    rng = as_generator(rng)
    g = rng.standard_normal((n, d))
    return g / np.linalg.norm(g, axis=1, keepdims=True)


def pair(f, quadrature: SphereQuadrature) -> float:
    """Integral of f against sigma under the given quadrature."""
    if getattr(f, "d", quadrature.d) != quadrature.d:
        raise ValueError("dimension mismatch")
    return float(quadrature.weights @ f(quadrature.nodes))


def pair_pointwise(f, u) -> float:
    u = np.asarray(u, dtype=float)
    if hasattr(f, "d") and u.shape[-1] != f.d:
        raise ValueError("dimension mismatch")
    return float(f(u))


def subsphere_points(basis: np.ndarray, n: int, rng) -> np.ndarray:
    """n uniform points on the unit sphere of the span of `basis` (d x k,
    orthonormal columns)."""
    rng = as_generator(rng)
    k = basis.shape[1]
    g = rng.standard_normal((n, k))
    g /= np.linalg.norm(g, axis=1, keepdims=True)
    return g @ basis.T


def subsphere_average(f, basis: np.ndarray, samples: int, rng, seed=None) -> McEstimate:
    """MC estimate of the mean of f over S^{d-1} intersected with the span of
    `basis`, under the invariant probability measure of that subsphere."""
    basis = np.asarray(basis, dtype=float)
    if basis.ndim != 2 or basis.shape[1] < 1:
        raise ValueError("need a subspace of dimension >= 1")
    rng = as_generator(rng)
    vals = np.asarray(f(subsphere_points(basis, samples, rng)), dtype=float)
    se = vals.std(ddof=0) / math.sqrt(samples) if samples > 1 else math.inf
    return McEstimate(float(vals.mean()), float(se), samples, seed)
