"""Ultra-parallel [m1, m2, m3]-triangle groups with m3 > 0 in the ball model.

Mirrors are normalized so that C2 is polar to (0, 1, 0), C1 to (0, r3, s3), and
the common perpendicular C12 of C1 and C2 is the complex line {(0, u, 1)},
identified with the unit disk through u.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .hermitian import EPS_FORM, Isometry, Model, hermitian_product as h

BALL = Model.BALL


def _fold_alpha(alpha: float) -> float:
    a = math.fmod(alpha, 2 * math.pi)
    if a < 0:
        a += 2 * math.pi
    if a > math.pi:
        warnings.warn(
            f"angular invariant {alpha!r} folded to {2 * math.pi - a!r} (conjugate group)",
            stacklevel=3,
        )
        a = 2 * math.pi - a
    return a


@dataclass(frozen=True)
class TriangleParams:
    """r_j = cosh(m_j / 2) with r1 >= r2 >= r3 > 1, and alpha in [0, pi]."""

    r1: float
    r2: float
    r3: float
    alpha: float

    def __post_init__(self):
        for name in ("r1", "r2", "r3", "alpha"):
            v = float(getattr(self, name))
            if not math.isfinite(v):
                raise ValueError(f"{name} must be finite")
            object.__setattr__(self, name, v)
        if not self.r1 >= self.r2 >= self.r3:
            raise ValueError(f"need r1 >= r2 >= r3, got {self.r1}, {self.r2}, {self.r3}")
        if self.r3 <= 1:
            raise ValueError("need r3 > 1 (m3 > 0); use siegel for m3 = 0")
        if not 0 <= self.alpha <= math.pi:
            object.__setattr__(self, "alpha", _fold_alpha(self.alpha))

    @classmethod
    def from_distances(cls, m1: float, m2: float, m3: float, alpha: float) -> TriangleParams:
        return cls(math.cosh(m1 / 2), math.cosh(m2 / 2), math.cosh(m3 / 2), alpha)

    @classmethod
    def from_cos(cls, r1: float, r2: float, r3: float, cos_alpha: float) -> TriangleParams:
        return cls(r1, r2, r3, math.acos(min(1.0, max(-1.0, cos_alpha))))

    @property
    def s1(self) -> float:
        return math.sqrt(self.r1**2 - 1)

    @property
    def s2(self) -> float:
        return math.sqrt(self.r2**2 - 1)

    @property
    def s3(self) -> float:
        return math.sqrt(self.r3**2 - 1)

    @property
    def cos_alpha(self) -> float:
        return math.cos(self.alpha)

    @property
    def admissible(self) -> bool:
        return self.cos_alpha <= existence_bound(self.r1, self.r2, self.r3) + EPS_FORM


@dataclass(frozen=True)
class PolarTriple:
    n1: np.ndarray
    n2: np.ndarray
    n3: np.ndarray


@dataclass(frozen=True)
class ProjectedDisk:
    """Hyperbolic disk in C12: unit-disk center and hyperbolic radius."""

    center: complex
    radius: float
    M: float


def existence_bound(r1: float, r2: float, r3: float) -> float:
    return (r1**2 + r2**2 + r3**2 - 1) / (2 * r1 * r2 * r3)


def _z3(p: TriangleParams) -> complex:
    return (p.r1 * p.r3 - p.r2 * complex(math.cos(p.alpha), -math.sin(p.alpha))) / p.s3


def _z1_squared(p: TriangleParams) -> float:
    return abs(_z3(p)) ** 2 - p.r1**2 + 1


def polar_vectors(p: TriangleParams) -> PolarTriple:
    z1sq = _z1_squared(p)
    if z1sq < -EPS_FORM * max(1.0, p.r1**2):
        raise ValueError(
            f"no triangle group: cos(alpha) = {p.cos_alpha:.12g} exceeds "
            f"{existence_bound(p.r1, p.r2, p.r3):.12g}"
        )
    z1 = math.sqrt(max(z1sq, 0.0))
    n1 = np.array([0, p.r3, p.s3], dtype=complex)
    n2 = np.array([0, 1, 0], dtype=complex)
    n3 = np.array([z1, p.r1, _z3(p)], dtype=complex)
    return PolarTriple(n1, n2, n3)


def generators(p: TriangleParams) -> tuple[Isometry, Isometry, Isometry]:
    """Closed-form R1, R2, R3 for the normalized polar vectors."""
    r1, r3, s3 = p.r1, p.r3, p.s3
    n3 = polar_vectors(p).n3
    z1, z3 = n3[0].real, n3[2]
    c, s = r3**2 + s3**2, 2 * r3 * s3
    R1 = np.array([[-1, 0, 0], [0, c, -s], [0, s, -c]], dtype=complex)
    R2 = np.diag([-1, 1, -1]).astype(complex)
    R3 = np.array(
        [
            [2 * z1**2 - 1, 2 * z1 * r1, -2 * z1 * z3.conjugate()],
            [2 * z1 * r1, 2 * r1**2 - 1, -2 * z3.conjugate() * r1],
            [2 * z1 * z3, 2 * r1 * z3, -2 * abs(z3) ** 2 - 1],
        ],
        dtype=complex,
    )
    return Isometry(R1, BALL), Isometry(R2, BALL), Isometry(R3, BALL)


def power_R2R1(p: TriangleParams | float, n: int) -> Isometry:
    """(R2 R1)^n in closed form. Accepts the params or r3 alone."""
    r3 = p.r3 if isinstance(p, TriangleParams) else float(p)
    s3 = math.sqrt(r3**2 - 1)
    lo, hi = (r3 - s3) ** (2 * n), (r3 + s3) ** (2 * n)
    a, b = (lo + hi) / 2, (lo - hi) / 2
    return Isometry(np.array([[1, 0, 0], [0, a, b], [0, b, a]], dtype=complex), BALL)


def ultra_parallel_M(p: TriangleParams) -> float:
    """M = |<n3, n12>|^2; C3 and C12 are ultra-parallel iff M > 1."""
    return (p.r1**2 + p.r2**2 + p.r3**2 - 2 * p.r1 * p.r2 * p.r3 * p.cos_alpha - 1) / (p.r3**2 - 1)


def disk_center(p: TriangleParams) -> complex:
    """Foot of the common perpendicular of C3 and C12, as a unit-disk coordinate."""
    return p.s3 * p.r1 / (p.r1 * p.r3 - p.r2 * complex(math.cos(p.alpha), -math.sin(p.alpha)))


def projected_disk(p: TriangleParams) -> ProjectedDisk:
    M = ultra_parallel_M(p)
    if M <= 1 + EPS_FORM:
        raise ValueError(f"C3 and C12 are not ultra-parallel (M = {M:.12g})")
    radius = math.acosh((M + 1) / (M - 1))
    return ProjectedDisk(disk_center(p), radius, M)


def lift(u: complex) -> np.ndarray:
    """Point u of the unit disk as a negative vector on C12."""
    return np.array([0, u, 1], dtype=complex)


def act_on_disk(g: Isometry, u: complex) -> complex:
    """Action on C12 of an isometry preserving it."""
    w = g(lift(u))
    return complex(w[1] / w[2])


def project_to_axis(z: complex) -> float:
    """Orthogonal projection of a unit-disk point onto the diameter (-1, 1)."""
    z = complex(z)
    a2 = abs(z) ** 2
    if a2 >= 1:
        raise ValueError("point is not inside the unit disk")
    plus = math.sqrt(a2 + 2 * z.real + 1)
    minus = math.sqrt(a2 - 2 * z.real + 1)
    return (plus - minus) / (plus + minus)


def v_coordinate(r3: float, j: int) -> float:
    """Point of (-1, 1) at signed hyperbolic distance j*m3 from the origin."""
    if r3 <= 1:
        raise ValueError("need r3 > 1")
    s3 = math.sqrt(r3**2 - 1)
    hi, lo = (r3 + s3) ** j, (r3 - s3) ** j
    return (hi - lo) / (hi + lo)


def recover_params(t: PolarTriple) -> tuple[float, float, float, float]:
    """(r1, r2, r3, alpha) read back from a polar triple."""
    r1 = abs(h(t.n3, t.n2))
    r2 = abs(h(t.n1, t.n3))
    r3 = abs(h(t.n2, t.n1))
    alpha = float(np.angle(h(t.n1, t.n3) * h(t.n2, t.n1) * h(t.n3, t.n2)))
    if alpha < 0:
        alpha += 2 * math.pi
    return r1, r2, r3, alpha
