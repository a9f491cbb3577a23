"""The m3 = 0 case in the Siegel model: Heisenberg group, Cygan metric, region K_n."""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .certify import Certificate, Verdict
from .hermitian import EPS_CLASS, Isometry, Model, classify_real_trace

SIEGEL = Model.SIEGEL
SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class HeisenbergPoint:
    zeta: complex
    t: float

    def __mul__(self, other: HeisenbergPoint) -> HeisenbergPoint:
        z1, z2 = self.zeta, other.zeta
        return HeisenbergPoint(z1 + z2, self.t + other.t + 2 * (z1 * z2.conjugate()).imag)

    def inverse(self) -> HeisenbergPoint:
        return HeisenbergPoint(-self.zeta, -self.t)

    def lift(self) -> np.ndarray:
        """Null vector (-|zeta|^2 + i t, sqrt2 zeta, 1)."""
        z = complex(self.zeta)
        return np.array([-abs(z) ** 2 + 1j * self.t, SQRT2 * z, 1], dtype=complex)

    @classmethod
    def from_vector(cls, v) -> HeisenbergPoint:
        v = np.asarray(v, dtype=complex)
        if abs(v[2]) < 1e-300:
            raise ValueError("vector represents the point at infinity")
        v = v / v[2]
        return cls(complex(v[1] / SQRT2), float(v[0].imag))


ORIGIN = HeisenbergPoint(0j, 0.0)


@dataclass(frozen=True)
class CyganSphere:
    center: HeisenbergPoint
    radius: float

    def __post_init__(self):
        if not self.radius > 0:
            raise ValueError("Cygan sphere radius must be positive")


def cygan_distance(p: HeisenbergPoint, q: HeisenbergPoint) -> float:
    z1, z2 = complex(p.zeta), complex(q.zeta)
    w = abs(z1 - z2) ** 2 - 1j * p.t + 1j * q.t - 2j * (z1 * z2.conjugate()).imag
    return math.sqrt(abs(w))


def heisenberg_translation(p: HeisenbergPoint) -> Isometry:
    z = complex(p.zeta)
    m = np.array(
        [[1, -SQRT2 * z.conjugate(), -abs(z) ** 2 + 1j * p.t], [0, 1, SQRT2 * z], [0, 0, 1]],
        dtype=complex,
    )
    return Isometry(m, SIEGEL)


@dataclass(frozen=True)
class ZeroParams:
    """[m1, m2, 0] groups: r1 >= r2 > 1 and alpha in [0, pi]."""

    r1: float
    r2: float
    alpha: float

    def __post_init__(self):
        for name in ("r1", "r2", "alpha"):
            object.__setattr__(self, name, float(getattr(self, name)))
        if not self.r1 >= self.r2 > 1:
            raise ValueError(f"need r1 >= r2 > 1, got {self.r1}, {self.r2}")
        if not 0 <= self.alpha <= math.pi:
            raise ValueError("alpha must lie in [0, pi]")
        if self.r1 == self.r2 and self.alpha == 0:
            raise ValueError("r1 = r2 with alpha = 0 makes the mirrors C1 and C2 coincide")

    @classmethod
    def from_cos(cls, r1: float, r2: float, cos_alpha: float) -> ZeroParams:
        return cls(r1, r2, math.acos(min(1.0, max(-1.0, cos_alpha))))

    @classmethod
    def from_xy(cls, X: float, Y: float, alpha: float) -> ZeroParams:
        r1, r2 = xy_to_r(X, Y)
        return cls(r1, r2, alpha)

    @property
    def theta(self) -> float:
        return (math.pi - self.alpha) / 2

    @property
    def cos_alpha(self) -> float:
        return math.cos(self.alpha)

    @property
    def xy(self) -> tuple[float, float]:
        return r_to_xy(self.r1, self.r2)


def r_to_xy(r1: float, r2: float) -> tuple[float, float]:
    return (r1**2 - 1) / (r2**2 - 1) - 1, 1 / (r2**2 - 1)


def xy_to_r(X: float, Y: float) -> tuple[float, float]:
    if Y <= 0 or X < 0:
        raise ValueError("need X >= 0 and Y > 0")
    return math.sqrt(1 + (X + 1) / Y), math.sqrt(1 + 1 / Y)


def generators_zero(z: ZeroParams) -> tuple[Isometry, Isometry, Isometry]:
    r1, r2 = z.r1, z.r2
    e = cmath.exp(1j * z.theta)
    R1 = np.array(
        [[-1, 2 * SQRT2 * r2 / e, 4 * r2**2], [0, 1, 2 * SQRT2 * r2 * e], [0, 0, -1]], dtype=complex
    )
    R2 = np.array(
        [[-1, -2 * SQRT2 * r1 * e, 4 * r1**2], [0, 1, -2 * SQRT2 * r1 / e], [0, 0, -1]], dtype=complex
    )
    R3 = np.array([[0, 0, 1], [0, -1, 0], [1, 0, 0]], dtype=complex)
    return Isometry(R1, SIEGEL), Isometry(R2, SIEGEL), Isometry(R3, SIEGEL)


def translation_vector(z: ZeroParams) -> HeisenbergPoint:
    """Heisenberg point by which R2 R1 translates."""
    th = z.theta
    zeta = 2 * (z.r1 * cmath.exp(-1j * th) + z.r2 * cmath.exp(1j * th))
    return HeisenbergPoint(zeta, -8 * z.r1 * z.r2 * math.sin(2 * th))


def h_value(r1: float, r2: float, t: float) -> float:
    """Sign of rho_0(o, R2R1 o)^4 - 16, as a function of t = cos(alpha)."""
    return -4 * r1 * r2 * (r1**2 + r2**2) * t + r1**4 + 6 * r1**2 * r2**2 + r2**4 - 1


def t_n_zero(r1: float, r2: float, n: int) -> float:
    if n < 1:
        raise ValueError("n must be positive")
    return ((r1**2 + r2**2) * n**2 + r2**2 * (2 * n + 1) - 1) / (2 * r1 * r2 * n * (n + 1))


def trace_w_zero(r1: float, r2: float, alpha: float, n: int) -> float:
    return 4 * (n * r1 - (n + 1) * r2) ** 2 - 1 + 8 * n * (n + 1) * r1 * r2 * (1 - math.cos(alpha))


def trace_margin_zero(r1: float, r2: float, alpha: float, n: int) -> float:
    """tr w(n) - 3 = 8 n (n+1) r1 r2 (t_n - cos alpha)."""
    return 8 * n * (n + 1) * r1 * r2 * (t_n_zero(r1, r2, n) - math.cos(alpha))


def region_index_n(r1: float, r2: float, tol: float = 1e-12) -> tuple[int, ...]:
    """Every n >= 1 with 2/n <= X <= 2/(n-1); empty when X = 0 (r1 = r2)."""
    if r2 <= 1:
        raise ValueError("need r2 > 1")
    X = r_to_xy(r1, r2)[0]
    if X < -tol:
        raise ValueError("need r1 >= r2")
    return region_index_from_x(max(X, 0.0), tol)


def region_index_from_x(X: float, tol: float = 1e-12) -> tuple[int, ...]:
    if X <= tol:
        return ()
    lo = max(1, math.floor(2 / X) - 1)
    out = []
    for n in range(lo, math.floor(2 / X) + 3):
        if 2 / n > X + tol:
            continue
        if n > 1 and X > 2 / (n - 1) + tol:
            continue
        out.append(n)
    return tuple(out)


def kn_condition_lhs(r1: float, r2: float, n: int) -> float:
    a, b = r1**2, r2**2
    return -(n**2) * ((a - b) ** 2 + 1) + n * ((a + b) ** 2 - 4 * b**2 - 1) - 2 * (a + b) * (b - 1)


def certify_theorem3(z: ZeroParams, eps: float = EPS_CLASS) -> Certificate:
    """Certify through any admissible region index n; passes if one of them does."""
    indices = region_index_n(z.r1, z.r2)
    info = {"r1": z.r1, "r2": z.r2, "r3": 1.0, "alpha": z.alpha, "cos_alpha": z.cos_alpha}
    if not indices:
        return Certificate(
            Verdict.NOT_CERTIFIED, None, None, region_indices=(), kn_margins={},
            notes=("X = 0 lies in no region K_n",), params=info,
        )
    lhs = {n: kn_condition_lhs(z.r1, z.r2, n) for n in indices}
    traces, classes = {}, {}
    outcome = {}
    for n in indices:
        traces[n] = trace_w_zero(z.r1, z.r2, z.alpha, n)
        classes[n] = classify_real_trace(3.0 + trace_margin_zero(z.r1, z.r2, z.alpha, n), eps)
        scale = max(1.0, z.r1**4)
        if lhs[n] < -eps * scale or not classes[n].non_elliptic:
            outcome[n] = Verdict.NOT_CERTIFIED
        elif abs(lhs[n]) <= eps * scale:
            outcome[n] = Verdict.INCONCLUSIVE
        else:
            outcome[n] = Verdict.CERTIFIED
    for v in (Verdict.CERTIFIED, Verdict.INCONCLUSIVE, Verdict.NOT_CERTIFIED):
        if v in outcome.values():
            verdict = v
            break
    notes = tuple(f"n = {n}: {outcome[n].value}" for n in indices)
    return Certificate(
        verdict, None, None, indices, traces, classes,
        region_indices=indices, kn_margins=lhs, notes=notes, params=info,
    )
