"""Closed-form coefficients of the sphere-transform calculus.

Every named constant used by the identity checks lives here as a pure function
of integer parameters.  Gamma ratios are evaluated in log space so that
harmonic degrees up to ~40 and dimensions up to 8 stay finite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import comb, lgamma, pi


def kappa(n: int) -> float:
    """Volume of the n-dimensional unit ball (kappa_0 = 1)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return pi ** (n / 2) / math.gamma(n / 2 + 1)


def omega(n: int) -> float:
    """Surface measure of the unit sphere in R^n; omega_n = n * kappa_n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return 2 * pi ** (n / 2) / math.gamma(n / 2)


@dataclass(frozen=True)
class DimensionalConstants:
    """Ball volumes and sphere surface measures up to the ambient dimension."""

    d: int

    def __post_init__(self):
        if self.d < 3:
            raise ValueError("ambient dimension must be >= 3")

    @property
    def kappa(self) -> list[float]:
        return [kappa(n) for n in range(self.d + 1)]

    @property
    def omega(self) -> list[float]:
        return [float("nan")] + [omega(n) for n in range(1, self.d + 1)]


@dataclass(frozen=True)
class MultiplierValue:
    """Eigenvalue of a degree-n sphere transform, split as i^n times a real
    magnitude so that composed quantities stay exactly real.

    i_power is n mod 4; the represented value is i**i_power * magnitude.
    """

    i_power: int
    magnitude: float

    @property
    def is_real(self) -> bool:
        return self.i_power % 2 == 0

    def real_value(self) -> float:
        """Signed real value; only defined for even degrees."""
        if not self.is_real:
            raise ValueError("odd-degree multiplier is purely imaginary")
        return self.magnitude * (1.0 if self.i_power == 0 else -1.0)


def _check_order(d: int, p: int):
    if not 1 <= p <= d - 1:
        raise ValueError(f"transform order p={p} outside 1..{d - 1}")


def lambda_multiplier(d: int, p: int, n: int) -> MultiplierValue:
    """Degree-n eigenvalue of the order-p sphere transform.

    Magnitude pi^(d/2) * 2^p * Gamma((n+p)/2) / Gamma((n+d-p)/2), phase i^n.
    """
    _check_order(d, p)
    if n < 0:
        raise ValueError("degree must be >= 0")
    logmag = (d / 2) * math.log(pi) + p * math.log(2.0) \
        + lgamma((n + p) / 2) - lgamma((n + d - p) / 2)
    return MultiplierValue(n % 4, math.exp(logmag))


def lambda_pair(d: int, p1: int, p2: int, s: int) -> float:
    """Real multiplier of the composition of the order-p1 and order-p2
    transforms on degree s (the phases combine to (-1)^s)."""
    _check_order(d, p1)
    _check_order(d, p2)
    if s < 0:
        raise ValueError("degree must be >= 0")
    logmag = d * math.log(pi) + (p1 + p2) * math.log(2.0) \
        + lgamma((s + p1) / 2) + lgamma((s + p2) / 2) \
        - lgamma((s + d - p1) / 2) - lgamma((s + d - p2) / 2)
    return (-1.0 if s % 2 else 1.0) * math.exp(logmag)


def composed_multiplier(d: int, j: int, q: int, s: int) -> float:
    """(-1)^s b_s(d,j,q): the degree-s action of the composed transform pair
    (orders j and q-j) appearing on the Crofton right-hand side."""
    if not 1 <= j < q <= d:
        raise ValueError("need 1 <= j < q <= d")
    return lambda_pair(d, j, q - j, s)


def b_coeff(d: int, j: int, q: int, s: int) -> float:
    """b_s(d,j,q) = 2^q pi^d G((s+j)/2)G((s+q-j)/2) / (G((s+d-j)/2)G((s+d-q+j)/2))."""
    if not 1 <= j < q <= d:
        raise ValueError("need 1 <= j < q <= d")
    logmag = d * math.log(pi) + q * math.log(2.0) \
        + lgamma((s + j) / 2) + lgamma((s + q - j) / 2) \
        - lgamma((s + d - j) / 2) - lgamma((s + d - q + j) / 2)
    return math.exp(logmag)


def reflection_multiplier(s: int) -> float:
    """Degree-s action of the antipodal map u -> -u."""
    return -1.0 if s % 2 else 1.0


def a_coeff(d: int, j: int, q: int) -> float:
    """Crofton coefficient a(d,j,q)."""
    if not 1 <= j < q <= d:
        raise ValueError("need 1 <= j < q <= d")
    logmag = lgamma((q + 1) / 2) + lgamma(d - j) - lgamma((d + 1) / 2) - lgamma(q - j)
    return j / (2**d * pi ** ((d + q) / 2) * (d + j - q)) * math.exp(logmag)


def c_meansec(d: int, k: int) -> float:
    """Constant linking area measures of a body and of its k-th mean section body."""
    if not 2 <= k <= d:
        raise ValueError("need 2 <= k <= d")
    num = (d - 1) * (d + 1 - k) * math.gamma(k / 2)
    den = (k - 1) * 2 ** (2 * d - k) * pi ** ((3 * d - k) / 2) * math.gamma(d / 2)
    return num / den


def koldobsky_constant(d: int, k: int) -> float:
    """c_{d,k} of the even orthogonality relation."""
    if not 1 <= k <= d - 1:
        raise ValueError("need 1 <= k <= d-1")
    return pi ** (d / 2) * 2 ** (d - k) * math.gamma((d - k) / 2) / math.gamma(k / 2)


def koldobsky_tilde(d: int, k: int) -> float:
    """c~_{d,k} of the double-Radon form of the even orthogonality relation."""
    if not 1 <= k <= d - 1:
        raise ValueError("need 1 <= k <= d-1")
    return 2.0 ** (-(k + 1)) * pi ** (-d) * math.gamma((d - k) / 2) \
        * math.gamma((d - 1) / 2) / (math.gamma(k / 2) * math.gamma(0.5))


def even_orthogonality_constant(d: int, q: int, j: int) -> float:
    """c_{d,q,j} of the generalized even orthogonality relation."""
    if not 1 <= j < q < d:
        raise ValueError("need 1 <= j < q < d")
    return 2**q * pi**d * math.gamma(j / 2) * math.gamma((q - j) / 2) \
        / (math.gamma((d - j) / 2) * math.gamma((d - q + j) / 2))


def asymm_constant(d: int, j: int) -> float:
    """b(d,j) of the asymmetric (centered-function) orthogonality relation."""
    if not 1 <= j <= d - 1:
        raise ValueError("need 1 <= j <= d-1")
    return j * 2 ** (d - j - 3) / (pi * (d - 1)) * math.gamma((d - j) / 2) ** 2


def hemisphere_moment(m: int, p: float) -> float:
    """Integral of <u,v>^p over the hemisphere about v of an m-dimensional
    subsphere, under the normalized (probability) spherical measure.

    Equals Gamma(m/2) Gamma((p+1)/2) / (2 sqrt(pi) Gamma((m+p)/2)); 1/2 at p=0.
    """
    if m < 1:
        raise ValueError("subspace dimension must be >= 1")
    if p <= -1:
        raise ValueError("need p > -1")
    return math.gamma(m / 2) * math.gamma((p + 1) / 2) \
        / (2 * math.sqrt(pi) * math.gamma((m + p) / 2))


def classical_kinematic_constant(d: int, j: int, k: int) -> float:
    """Flag coefficient of the classical Crofton / kinematic formulas for
    intrinsic volumes, under the product normalization of the invariant
    measures (Haar probability on rotations/subspaces times Lebesgue)."""
    if not 0 <= j <= k <= d:
        raise ValueError("need 0 <= j <= k <= d")
    return math.exp(
        lgamma((k + 1) / 2) + lgamma((d + j - k + 1) / 2)
        - lgamma((j + 1) / 2) - lgamma((d + 1) / 2)
    )


def area_measure_total_mass(d: int, j: int, vj: float) -> float:
    """Total mass of the order-j area measure of a body with j-th intrinsic
    volume vj: d kappa_{d-j} / binom(d,j) * vj."""
    if not 1 <= j <= d:
        raise ValueError("need 1 <= j <= d")
    return d * kappa(d - j) / comb(d, j) * vj
