"""Rotating energy distributions with E = omega0 and S = 1 (hbar = c = 1).

A planar distribution ``eps(r)`` rotates differentially so that the
tangential speed never reaches c: composing velocity increments
relativistically gives ``omega(r) = omega0 / sqrt((omega0 r)^2 + 1)``.  The
momentum density then reduces to ``eps(r) omega0 r``, so

    E = int 2 pi r eps(r) dr,      S = omega0 int 2 pi r^3 eps(r) dr,

and for a rotating string ``E = int eps dx``, ``S = omega0 int x^2 eps dx``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, List, Sequence, Tuple, Union

import numpy as np
from scipy import integrate

QUAD_RTOL = 1e-10


@dataclass(frozen=True)
class RadialDistribution:
    """Energy per unit area ``epsilon(r)`` supported on ``[r_min, r_max]``.

    ``r_max`` may be ``inf`` for calibrated shapes with unbounded support.
    """

    epsilon: Callable[[np.ndarray], np.ndarray]
    r_min: float
    r_max: float
    omega0: float
    name: str = "radial"
    params: dict = field(default_factory=dict, compare=False)
    breakpoints: Tuple[float, ...] = ()

    def __post_init__(self):
        if not 0.0 <= self.r_min < self.r_max:
            raise ValueError("support must satisfy 0 <= r_min < r_max")
        if not self.omega0 > 0:
            raise ValueError("omega0 must be positive")

    def __call__(self, r):
        r = np.asarray(r, dtype=float)
        inside = (r >= self.r_min) & (r <= self.r_max)
        return np.where(inside, self.epsilon(np.where(inside, r, self.r_min)), 0.0)

    @property
    def support_measure(self) -> float:
        """Area of the annulus where the distribution is nonzero."""
        return float(np.pi * (self.r_max**2 - self.r_min**2))


@dataclass(frozen=True)
class LinearDistribution:
    """Energy per unit length ``epsilon(x)`` on ``[-half_length, half_length]``."""

    epsilon: Callable[[np.ndarray], np.ndarray]
    half_length: float
    omega0: float
    name: str = "linear"
    params: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if not self.half_length > 0:
            raise ValueError("half_length must be positive")
        if not self.omega0 > 0:
            raise ValueError("omega0 must be positive")

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        inside = np.abs(x) <= self.half_length
        return np.where(inside, self.epsilon(np.where(inside, x, 0.0)), 0.0)

    @property
    def support_measure(self) -> float:
        return 2.0 * self.half_length


Distribution = Union[RadialDistribution, LinearDistribution]


@dataclass(frozen=True)
class ToyModelReport:
    model: str
    omega0: float
    params: dict
    E: float
    S: float
    sigma_T: float
    rel_err_E: float
    rel_err_S: float

    def as_dict(self) -> dict:
        return {
            "model": self.model,
            "omega0": self.omega0,
            "params": dict(self.params),
            "E": self.E,
            "S": self.S,
            "sigma_T": self.sigma_T,
            "rel_err_E": self.rel_err_E,
            "rel_err_S": self.rel_err_S,
        }


# ------------------------------------------------------------ kinematics


def _omega(r, omega0):
    return omega0 / np.sqrt((omega0 * r) ** 2 + 1.0)


def omega_profile(r, omega0: float):
    """Local angular velocity at radius ``r`` of a disk turning at ``omega0``
    at its centre."""
    r = np.asarray(r, dtype=float)
    if np.any(r < 0):
        raise ValueError("r must be non-negative")
    if not omega0 > 0:
        raise ValueError("omega0 must be positive")
    out = _omega(r, omega0)
    return float(out) if out.ndim == 0 else out


def velocity_profile(r, omega0: float):
    """Tangential speed ``r omega(r)``; below 1 for every finite ``r``, though it
    rounds to 1.0 in double precision once ``omega0 r`` exceeds about 1e8."""
    r = np.asarray(r, dtype=float)
    out = r * omega_profile(r, omega0)
    return float(out) if np.ndim(out) == 0 else out


def relativistic_step(v: float, dv: float) -> float:
    """Relativistic addition of ``dv`` to ``v``."""
    if abs(v) >= 1.0:
        raise ValueError("|v| must be < 1")
    return (v + dv) / (1.0 + v * dv)


def compose_velocity(r: float, omega0: float, n: int) -> float:
    """Tangential speed at ``r`` built from ``n`` relativistic increments
    ``dr * omega(r_i)`` starting from rest at the centre."""
    if r < 0 or n < 1:
        raise ValueError("need r >= 0 and n >= 1")
    dr = r / n
    v, w = 0.0, omega0
    for i in range(n):
        v = relativistic_step(v, dr * w)
        w = v / ((i + 1) * dr)
    return v


def omega_ode_residual(r, omega0: float, h: float = None):
    """``d omega/dr + omega^3 r`` with a five-point central difference.

    The default step is ``1e-4 / omega0``.  Evaluated through the even
    continuation in ``r`` so ``r = 0`` is allowed.
    """
    r = np.asarray(r, dtype=float)
    if np.any(r < 0):
        raise ValueError("r must be non-negative")
    h = 1e-4 / omega0 if h is None else h
    w = lambda x: _omega(x, omega0)  # noqa: E731
    d = (w(r - 2 * h) - 8 * w(r - h) + 8 * w(r + h) - w(r + 2 * h)) / (12.0 * h)
    return d + w(r) ** 3 * r


# ------------------------------------------------------------ quadrature


def _quad(f, a, b, points=()):
    inner = sorted(p for p in points if a < p < b)
    edges = [a, *inner, b]
    total = 0.0
    for lo, hi in zip(edges[:-1], edges[1:]):
        val, _ = integrate.quad(f, lo, hi, epsabs=0.0, epsrel=QUAD_RTOL, limit=200)
        total += val
    return total


def radial_moment(dist: RadialDistribution, power: int) -> float:
    """``int 2 pi r^power eps(r) dr`` over the support."""
    f = lambda r: 2.0 * np.pi * r**power * float(dist.epsilon(r))  # noqa: E731
    return _quad(f, dist.r_min, dist.r_max, dist.breakpoints)


def energy_and_spin(dist: Distribution) -> Tuple[float, float]:
    if isinstance(dist, RadialDistribution):
        E = radial_moment(dist, 1)
        S = dist.omega0 * radial_moment(dist, 3)
    elif isinstance(dist, LinearDistribution):
        L = dist.half_length
        E = _quad(lambda x: float(dist.epsilon(x)), -L, L, (0.0,))
        S = dist.omega0 * _quad(lambda x: x * x * float(dist.epsilon(x)), -L, L, (0.0,))
    else:
        raise TypeError(f"unsupported distribution type {type(dist).__name__}")
    if not (np.isfinite(E) and np.isfinite(S)):
        raise ValueError("distribution is not integrable")
    return float(E), float(S)


def report(dist: Distribution) -> ToyModelReport:
    E, S = energy_and_spin(dist)
    return ToyModelReport(
        model=dist.name,
        omega0=float(dist.omega0),
        params=dict(dist.params),
        E=E,
        S=S,
        sigma_T=dist.support_measure,
        rel_err_E=abs(E / dist.omega0 - 1.0),
        rel_err_S=abs(S - 1.0),
    )


# ---------------------------------------------------------------- models


def _check_omega0(omega0):
    if not omega0 > 0:
        raise ValueError("omega0 must be positive")


def make_disk(omega0: float) -> RadialDistribution:
    """Uniform disk of radius sqrt(2)/omega0 and density omega0^3 / 2 pi."""
    _check_omega0(omega0)
    eps = omega0**3 / (2.0 * np.pi)
    R = np.sqrt(2.0) / omega0
    return RadialDistribution(
        lambda r: np.full_like(np.asarray(r, dtype=float), eps),
        0.0,
        R,
        omega0,
        name="disk",
        params={"R": R, "epsilon": eps},
    )


def ring_parameters(omega0: float, k: float) -> Tuple[float, float, float]:
    """``(R1, R2, K)`` for the annulus with density ``K / r^3``."""
    _check_omega0(omega0)
    if not k > 0:
        raise ValueError("ring parameter k must be positive")
    R1 = (np.hypot(k, 1.0) - k) / omega0
    R2 = R1 + 2.0 * k / omega0
    return float(R1), float(R2), float(1.0 / (4.0 * np.pi * k))


def make_ring(omega0: float, k: float) -> RadialDistribution:
    R1, R2, K = ring_parameters(omega0, k)
    return RadialDistribution(
        lambda r: K / np.asarray(r, dtype=float) ** 3,
        R1,
        R2,
        omega0,
        name="ring",
        params={"k": float(k), "R1": R1, "R2": R2, "K": K},
    )


def make_string(omega0: float) -> LinearDistribution:
    """Uniform rotating segment of half-length sqrt(3)/omega0."""
    _check_omega0(omega0)
    eps = omega0**2 / (2.0 * np.sqrt(3.0))
    L = np.sqrt(3.0) / omega0
    return LinearDistribution(
        lambda x: np.full_like(np.asarray(x, dtype=float), eps),
        L,
        omega0,
        name="string",
        params={"half_length": L, "epsilon": eps},
    )


MODELS = {
    "disk": lambda omega0, **kw: make_disk(omega0),
    "ring": lambda omega0, k=1.0, **kw: make_ring(omega0, k),
    "string": lambda omega0, **kw: make_string(omega0),
}


def make_model(name: str, omega0: float, **params) -> Distribution:
    try:
        factory = MODELS[name]
    except KeyError:
        raise ValueError(f"unknown model {name!r}; expected one of {sorted(MODELS)}") from None
    return factory(omega0, **params)


@dataclass(frozen=True)
class ScalingResult:
    points: List[Tuple[float, float]]
    slope: float


def cross_section_scaling(model_family: Union[str, Callable[[float], Distribution]],
                          omega0_list: Sequence[float], **params) -> ScalingResult:
    """Energies and support measures over a frequency sweep, with the
    least-squares log-log slope of ``sigma_T`` against ``E``."""
    if len(omega0_list) < 2:
        raise ValueError("need at least two frequencies")
    if isinstance(model_family, str):
        name = model_family
        model_family = lambda w: make_model(name, w, **params)  # noqa: E731
    points = []
    for w in omega0_list:
        dist = model_family(w)
        E, _ = energy_and_spin(dist)
        points.append((E, dist.support_measure))
    E, sig = np.log(np.array(points)).T
    slope = np.polyfit(E, sig, 1)[0]
    return ScalingResult(points, float(slope))


# ----------------------------------------------------------- calibration


@dataclass(frozen=True)
class Calibration:
    amplitude: float
    radius_scale: float
    distribution: RadialDistribution


def calibrate_scale(shape: RadialDistribution, omega0: float) -> Calibration:
    """Scale a radial profile to ``A * s(r / rho)`` so that E = omega0, S = 1.

    With ``m1 = int 2 pi r s``, ``m3 = int 2 pi r^3 s`` for the unit shape,
    ``E = A rho^2 m1`` and ``S = omega0 A rho^4 m3``, giving
    ``rho = sqrt(m1 / m3) / omega0`` and ``A = omega0^3 m3 / m1^2``.
    """
    _check_omega0(omega0)
    m1 = radial_moment(shape, 1)
    m3 = radial_moment(shape, 3)
    if not (m1 > 0 and m3 > 0 and np.isfinite(m1) and np.isfinite(m3)):
        raise ValueError("shape must have finite positive first and third moments")
    rho = np.sqrt(m1 / m3) / omega0
    A = omega0**3 * m3 / m1**2
    s = shape.epsilon
    dist = RadialDistribution(
        lambda r: A * s(np.asarray(r, dtype=float) / rho),
        shape.r_min * rho,
        shape.r_max * rho,
        omega0,
        name=f"calibrated-{shape.name}",
        params={"amplitude": float(A), "radius_scale": float(rho)},
        breakpoints=tuple(p * rho for p in shape.breakpoints),
    )
    return Calibration(float(A), float(rho), dist)
