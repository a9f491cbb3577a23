"""Brute-force ping-pong checks on G2 = <R1, R2>, independent of the trace formulas.

Disk checks work inside C12 with actual matrix products; the only shared input
with the certificates is the disk S3 itself (center and radius).
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass

import numpy as np

from .hermitian import Isometry, hermitian_product
from .siegel import ORIGIN, HeisenbergPoint, ZeroParams, cygan_distance, generators_zero, h_value
from .ultra import TriangleParams, generators, lift, projected_disk, v_coordinate

EPS_GEO = 1e-8

OVERLAP = "overlap"
TANGENT = "tangent"
DISJOINT = "disjoint"


def enumerate_g2_words(R1: Isometry, R2: Isometry, max_n: int) -> list[tuple[str, Isometry]]:
    """(R2R1)^n for n != 0 and R1 (R2R1)^n for all n, |n| <= max_n, as matrix products."""
    if max_n < 1:
        raise ValueError("max_n must be positive")
    R21, R12 = R2 @ R1, R1 @ R2
    identity = Isometry(np.eye(3), R1.model)
    words = []
    for n in range(-max_n, max_n + 1):
        step = R21 if n > 0 else R12
        power = identity
        for _ in range(abs(n)):
            power = power @ step
        if n != 0:
            words.append((f"(R2R1)^{n}", power))
        words.append((f"R1(R2R1)^{n}", R1 @ power))
    return words


@dataclass(frozen=True)
class OracleRow:
    family: str
    n: int
    distance: float
    threshold: float
    verdict: str


@dataclass
class OracleReport:
    rows: list[OracleRow]
    extra: dict

    @property
    def overlaps(self) -> list[OracleRow]:
        return [r for r in self.rows if r.verdict == OVERLAP]

    @property
    def clean(self) -> bool:
        return not self.overlaps

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["family", "n", "distance", "threshold", "verdict"])
        for r in self.rows:
            w.writerow([r.family, r.n, f"{r.distance:.12g}", f"{r.threshold:.12g}", r.verdict])
        return buf.getvalue()


def _judge(distance: float, threshold: float) -> str:
    if distance < threshold - EPS_GEO:
        return OVERLAP
    if distance <= threshold + EPS_GEO:
        return TANGENT
    return DISJOINT


def _moved_distance(g: Isometry, x, y) -> float:
    """rho(g x, y) using <gx, gx> = <x, x>; the direct norm of g x cancels badly for long words."""
    xx, yy = hermitian_product(x, x).real, hermitian_product(y, y).real
    if xx >= 0 or yy >= 0:
        raise ValueError("need negative vectors")
    ch2 = abs(hermitian_product(g(x), y)) ** 2 / (xx * yy)
    return 2.0 * math.acosh(math.sqrt(max(ch2, 1.0)))


def check_disk_disjointness(p: TriangleParams, max_n: int = 10) -> OracleReport:
    disk = projected_disk(p)
    R1, R2, _ = generators(p)
    center = lift(disk.center)
    rows = []
    for label, g in enumerate_g2_words(R1, R2, max_n):
        family = "R21" if label.startswith("(") else "R1R21"
        n = int(label.split("^")[1])
        d = _moved_distance(g, center, center)
        rows.append(OracleRow(family, n, d, 2 * disk.radius, _judge(d, 2 * disk.radius)))
    # axis points v0 (on C2) and v1 (on C1) against translated disks
    step = R2 @ R1
    power = step
    for n in range(1, max_n + 1):
        for j in (0, 1):
            d = _moved_distance(power, center, lift(v_coordinate(p.r3, j)))
            rows.append(OracleRow(f"axis_v{j}", n, d, disk.radius, _judge(d, disk.radius)))
        power = step @ power
    return OracleReport(rows, {"radius": disk.radius, "center": disk.center})


def translate_origin(z: ZeroParams, n: int) -> HeisenbergPoint:
    R1, R2, _ = generators_zero(z)
    return HeisenbergPoint.from_vector(((R2 @ R1) ** n)(ORIGIN.lift()))


def check_cygan_disjointness(z: ZeroParams, max_n: int = 10) -> OracleReport:
    """Sufficient test rho_0(o, (R2R1)^n o) >= 2 for the unit Cygan sphere and its images."""
    rows = []
    for n in range(1, max_n + 1):
        d = cygan_distance(ORIGIN, translate_origin(z, n))
        rows.append(OracleRow("R21", n, d, 2.0, _judge(d, 2.0)))
    return OracleReport(rows, {"h": h_value(z.r1, z.r2, z.cos_alpha)})


def block_on_c12(g: Isometry) -> np.ndarray:
    """Lower-right 2x2 block: the action of a G2 element on C12."""
    return g.matrix[1:, 1:]
