"""Discreteness certificates for ultra-parallel triangle groups with m3 > 0.

The word w(n) = R1 (R2 R1)^n R3 has real trace, affine and decreasing in
cos(alpha); t_n is the value of cos(alpha) at which its trace equals 3.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from .hermitian import EPS_CLASS, IsometryClass, classify_real_trace
from .ultra import (
    TriangleParams,
    existence_bound,
    generators,
    projected_disk,
    project_to_axis,
    v_coordinate,
)


class Verdict(enum.Enum):
    CERTIFIED = "CertifiedDiscreteFaithful"
    NOT_CERTIFIED = "NotCertified"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class Certificate:
    verdict: Verdict
    cond1_margin: float | None
    cond2_margin: float | None
    indices_checked: tuple[int, ...] = ()
    word_traces: dict[int, float] = field(default_factory=dict)
    word_classes: dict[int, IsometryClass] = field(default_factory=dict)
    region_indices: tuple[int, ...] | None = None
    kn_margins: dict[int, float] | None = None
    notes: tuple[str, ...] = ()
    params: dict[str, float] = field(default_factory=dict)

    def to_record(self) -> dict:
        """Flat JSON-ready record; see README for the schema."""
        rec = {
            **self.params,
            "verdict": self.verdict.value,
            "cond1_margin": self.cond1_margin,
            "cond2_margin": self.cond2_margin,
            "indices_checked": list(self.indices_checked),
            "word_traces": {str(k): v for k, v in self.word_traces.items()},
            "word_classes": {str(k): c.kind.value for k, c in self.word_classes.items()},
            "notes": list(self.notes),
        }
        if self.region_indices is not None:
            rec["region_indices"] = list(self.region_indices)
            rec["kn_margins"] = {str(k): v for k, v in (self.kn_margins or {}).items()}
        return rec


def quadratic_coeffs(r1: float, r2: float, r3: float) -> tuple[float, float, float]:
    """(a0, a1, a2) of the disk-disjointness quadratic in cos(alpha)."""
    a2 = 4 * r1**2 * r2**2 * r3**2
    a1 = 2 * r1 * r2 * r3 * (1 - 2 * r3**2 * (r1**2 + r2**2))
    a0 = 4 * r1**2 * r2**2 * r3**4 + r3**2 * (r1**2 - r2**2) ** 2 - r1**2 - r2**2 - r3**2 + 1
    return a0, a1, a2


def quadratic_value(r1: float, r2: float, r3: float, t: float) -> float:
    a0, a1, a2 = quadratic_coeffs(r1, r2, r3)
    return (a2 * t + a1) * t + a0


def _trace_slope(r1: float, r2: float, r3: float, n: int) -> float:
    """Coefficient of cos(alpha) in tr w(n); strictly negative for n >= 1."""
    s3 = math.sqrt(r3**2 - 1)
    e = 2 * n + 1
    return -2 * r1 * r2 * ((r3 - s3) ** e + (r3 + s3) ** e - 2 * r3) / s3**2


def t_n_threshold(r1: float, r2: float, r3: float, n: int) -> float:
    if r3 <= 1 or n < 1:
        raise ValueError("need r3 > 1 and n >= 1")
    s3 = math.sqrt(r3**2 - 1)
    lo, hi = r3 - s3, r3 + s3
    common = (2 * r1**2 * r3**2 - r1**2 + r2**2) * s3
    twist = 2 * r1**2 * r3 * (r3**2 - 1)
    A0 = lo ** (2 * n + 2) * (common + twist)
    A1 = hi ** (2 * n + 2) * (common - twist)
    A2 = -2 * s3 * (r1**2 + r2**2 + 2 * r3**2 - 2)
    denom = 2 * r1 * r2 * s3 * (hi ** (2 * n + 1) + lo ** (2 * n + 1) - 2 * r3)
    return (A0 + A1 + A2) / denom


def trace_w(p: TriangleParams, n: int) -> float:
    """Closed-form trace of R1 (R2 R1)^n R3."""
    r1, r2, r3, s3, c = p.r1, p.r2, p.r3, p.s3, p.cos_alpha
    lo, hi = r3 - s3, r3 + s3
    common = (2 * r1**2 * r3**2 - r1**2 + r2**2) * s3
    twist = 2 * r1**2 * r3 * (r3**2 - 1)
    A0 = lo ** (2 * n + 2) * (common + twist - 2 * r1 * r2 * s3 * hi * c)
    A1 = hi ** (2 * n + 2) * (common - twist - 2 * r1 * r2 * s3 * lo * c)
    A2 = s3 * (4 * r1 * r2 * r3 * c - 2 * r1**2 - 2 * r2**2 - r3**2 + 1)
    return (A0 + A1 + A2) / s3**3


def trace_margin(p: TriangleParams, n: int) -> float:
    """tr w(n) - 3, written as |slope| * (t_n - cos(alpha)) to avoid cancellation."""
    return -_trace_slope(p.r1, p.r2, p.r3, n) * (t_n_threshold(p.r1, p.r2, p.r3, n) - p.cos_alpha)


def word_matrix_trace(p: TriangleParams, n: int) -> complex:
    R1, R2, R3 = generators(p)
    return (R1 @ (R2 @ R1) ** n @ R3).trace


def _f_coeffs(r1: float, r2: float, r3: float) -> tuple[float, float, float, float]:
    s3 = math.sqrt(r3**2 - 1)
    x0 = r1**2 * (r3 + s3) ** 2 + r2**2
    x1 = 2 * r1 * r2 * (r3 + s3)
    y0 = r1**2 * (r3 - s3) ** 2 + r2**2
    y1 = 2 * r1 * r2 * (r3 - s3)
    return x0, x1, y0, y1


def projection_f(r1: float, r2: float, r3: float, t: float) -> float:
    """Projection of the disk center onto the axis (-1, 1), as a function of t = cos(alpha)."""
    if r3 <= 1:
        raise ValueError("need r3 > 1")
    x0, x1, y0, y1 = _f_coeffs(r1, r2, r3)
    X, Y = x0 - x1 * t, y0 - y1 * t
    if X < 0 or Y < 0:
        raise ValueError(f"negative radicand in projection_f at t = {t}")
    a, b = math.sqrt(X), math.sqrt(Y)
    return (a - b) / (a + b)


def segment_index(pi: float, r3: float, snap: float = 1e-9) -> int:
    """The l >= 1 with v_{l-1} < pi <= v_l."""
    if not -1 < pi < 1:
        raise ValueError("projection must lie in (-1, 1)")
    if pi <= 0:
        raise ValueError("projection of the disk center is not positive")
    s3 = math.sqrt(r3**2 - 1)
    ratio = (math.log1p(pi) - math.log1p(-pi)) / (math.log(r3 + s3) - math.log(r3 - s3))
    nearest = round(ratio)
    if abs(ratio - nearest) <= snap * max(1.0, ratio):
        ratio = float(nearest)
    # largest integer k with k < ratio is ceil(ratio) - 1
    return max(1, math.ceil(ratio))


def segment_index_l(p: TriangleParams) -> int:
    return segment_index(projection_f(p.r1, p.r2, p.r3, p.cos_alpha), p.r3)


def indices_to_check(p: TriangleParams) -> tuple[int, ...]:
    """Positive members of {l-2, l-1}; w(0) = R1 R3 and w(-1) = R2 R3 are never elliptic."""
    l = segment_index_l(p)
    return tuple(k for k in (l - 2, l - 1) if k >= 1)


def word_class(p: TriangleParams, n: int, eps: float = EPS_CLASS) -> IsometryClass:
    return classify_real_trace(3.0 + trace_margin(p, n), eps)


def all_words_nonelliptic(p: TriangleParams, n_max: int, eps: float = EPS_CLASS) -> bool:
    """Brute-force version of condition (3) over n = 1..n_max."""
    return all(word_class(p, n, eps).non_elliptic for n in range(1, n_max + 1))


def _in_band(x: float, eps: float) -> bool:
    return abs(x) <= eps


def certify_theorem1(p: TriangleParams, all_n: int | None = None, eps: float = EPS_CLASS) -> Certificate:
    """Three-condition certificate. With all_n, condition (3) is checked on n = 1..all_n instead."""
    bound = existence_bound(p.r1, p.r2, p.r3)
    if not p.admissible:
        raise ValueError(f"inadmissible parameters: cos(alpha) = {p.cos_alpha:.12g} > {bound:.12g}")
    c = p.cos_alpha
    info = {"r1": p.r1, "r2": p.r2, "r3": p.r3, "alpha": p.alpha, "cos_alpha": c}
    cond1 = (p.r1**2 + p.r2**2) / (2 * p.r1 * p.r2 * p.r3) - c
    cond2 = quadratic_value(p.r1, p.r2, p.r3, c)
    # g is quartic in r; compare on a relative scale
    cond2_eps = eps * max(1.0, quadratic_coeffs(p.r1, p.r2, p.r3)[2])
    notes: list[str] = []

    if cond1 < -eps:
        return Certificate(Verdict.NOT_CERTIFIED, cond1, cond2, notes=("condition (1) fails",), params=info)
    if _in_band(cond1, eps):
        return Certificate(
            Verdict.INCONCLUSIVE, cond1, cond2, notes=("condition (1) at threshold",), params=info
        )

    if all_n is not None:
        indices = tuple(range(1, all_n + 1))
        notes.append(f"condition (3) brute-forced over n <= {all_n}")
    else:
        try:
            indices = indices_to_check(p)
        except ValueError as exc:
            return Certificate(Verdict.INCONCLUSIVE, cond1, cond2, notes=(str(exc),), params=info)
        if len(indices) < 2:
            notes.append("w(0) and w(-1) excluded: products of reflections in disjoint mirrors")

    traces, classes = {}, {}
    words_ok = True
    for n in indices:
        traces[n], cls = trace_w(p, n), word_class(p, n, eps)
        classes[n] = cls
        words_ok &= cls.non_elliptic

    if cond2 < -cond2_eps or not words_ok:
        if cond2 < -cond2_eps:
            notes.append("condition (2) fails")
        if not words_ok:
            notes.append("an elliptic word w(n) was found")
        verdict = Verdict.NOT_CERTIFIED
    elif _in_band(cond2, cond2_eps):
        notes.append("condition (2) at threshold")
        verdict = Verdict.INCONCLUSIVE
    else:
        verdict = Verdict.CERTIFIED
    return Certificate(verdict, cond1, cond2, indices, traces, classes, notes=tuple(notes), params=info)


@dataclass(frozen=True)
class RegionMembership:
    j: int
    in_Kj: bool
    in_Kj_prime: bool
    condition_margins: tuple[float, float, float, float]
    t_j: float


def region_membership(r1: float, r2: float, r3: float, j: int, j0: int) -> RegionMembership:
    if not 1 <= j <= j0:
        raise ValueError("need 1 <= j <= j0")
    if not (1 < r2 <= r1 and r3 > 1):
        raise ValueError("need 1 < r2 <= r1 and r3 > 1")
    ts = {k: t_n_threshold(r1, r2, r3, k) for k in range(1, j0 + 2)}
    tj = ts[j]
    in_kj = all(tj <= ts[k] for k in ts if k != j)
    margins = (
        r1**2 + r2**2 - 2 * r1 * r2 * r3 * tj,
        2 * r3**2 * (r1**2 + r2**2) - 4 * r1 * r2 * r3 * tj - 1,
        quadratic_value(r1, r2, r3, tj),
        v_coordinate(r3, j + 2) - projection_f(r1, r2, r3, 1.0),
    )
    in_prime = in_kj and all(m >= 0 for m in margins)
    return RegionMembership(j, in_kj, in_prime, margins, tj)


def disk_axis_projection(p: TriangleParams) -> float:
    """Same value as projection_f(..., cos alpha), via the disk center."""
    return project_to_axis(projected_disk(p).center)
