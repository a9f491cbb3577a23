"""Parameter-grid scans over the K_j' and K_n' regions, with CSV and SVG output."""
from __future__ import annotations

import configparser
import csv
import enum
import io
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .certify import region_membership
from .siegel import kn_condition_lhs, region_index_from_x, xy_to_r


class ScanMode(enum.Enum):
    ULTRA = "UltraKj"
    ZERO = "ZeroKn"


@dataclass(frozen=True)
class ScanConfig:
    mode: ScanMode
    x_range: tuple[float, float]
    y_range: tuple[float, float]
    x_step: float
    y_step: float
    r3: float | None = None
    j0: int = 3
    csv_path: str | None = None
    svg_path: str | None = None
    workers: int = 1

    def __post_init__(self):
        if self.x_step <= 0 or self.y_step <= 0:
            raise ValueError("grid steps must be positive")
        if self.x_range[0] > self.x_range[1] or self.y_range[0] > self.y_range[1]:
            raise ValueError("grid ranges must be nonempty (min <= max)")
        if self.mode is ScanMode.ULTRA:
            if self.r3 is None or self.r3 <= 1:
                raise ValueError("UltraKj scans need r3 > 1")
            if self.j0 < 1:
                raise ValueError("j0 must be positive")

    def axis(self, which: str) -> np.ndarray:
        (lo, hi), step = (self.x_range, self.x_step) if which == "x" else (self.y_range, self.y_step)
        count = int(math.floor((hi - lo) / step + 1e-9)) + 1
        return lo + step * np.arange(count)

    @classmethod
    def from_file(cls, path: str | Path) -> ScanConfig:
        """Flat 'key = value' file; keys as in ScanConfig plus x_min/x_max/y_min/y_max."""
        text = Path(path).read_text()
        cp = configparser.ConfigParser(inline_comment_prefixes=("#",))
        cp.read_string("[scan]\n" + text)
        sec = cp["scan"]
        try:
            mode = ScanMode(sec.get("mode", "UltraKj"))
        except ValueError:
            raise ValueError(f"unknown mode {sec.get('mode')!r}; use UltraKj or ZeroKn") from None
        known = {"mode", "r3", "j0", "x_min", "x_max", "x_step", "y_min", "y_max", "y_step",
                 "csv", "svg", "workers"}
        unknown = set(sec) - known
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        base = Path(path).parent

        def out(key):
            v = sec.get(key)
            return None if v is None else str(base / v)

        return cls(
            mode=mode,
            x_range=(sec.getfloat("x_min"), sec.getfloat("x_max")),
            y_range=(sec.getfloat("y_min"), sec.getfloat("y_max")),
            x_step=sec.getfloat("x_step"),
            y_step=sec.getfloat("y_step"),
            r3=sec.getfloat("r3") if "r3" in sec else None,
            j0=sec.getint("j0", 3),
            csv_path=out("csv"),
            svg_path=out("svg"),
            workers=sec.getint("workers", 1),
        )


ULTRA_COLUMNS = ["r1", "r2", "j", "in_Kj", "in_Kj_prime", "t_j", "t_j_gt_1"]
ZERO_COLUMNS = ["X", "Y", "r1", "r2", "n", "kn_lhs", "in_Kn_prime"]


@dataclass
class ScanTable:
    mode: ScanMode
    columns: list[str]
    rows: list[dict]
    meta: dict

    def __len__(self):
        return len(self.rows)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(self.columns)
        for row in self.rows:
            w.writerow([_fmt(row[c]) for c in self.columns])
        return buf.getvalue()


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "1" if v else "0"
    if isinstance(v, float):
        return f"{v:.12g}"
    if isinstance(v, tuple):
        return ";".join(str(x) for x in v)
    return str(v)


def ultra_cell(r1: float, r2: float, r3: float, j0: int) -> dict:
    """Smallest j <= j0 with (r1, r2) in K_j; j = 0 when the minimum of t_k sits at j0 + 1."""
    for j in range(1, j0 + 1):
        m = region_membership(r1, r2, r3, j, j0)
        if m.in_Kj:
            return {"r1": r1, "r2": r2, "j": j, "in_Kj": True, "in_Kj_prime": m.in_Kj_prime,
                    "t_j": m.t_j, "t_j_gt_1": m.t_j > 1}
    return {"r1": r1, "r2": r2, "j": 0, "in_Kj": False, "in_Kj_prime": False,
            "t_j": float("nan"), "t_j_gt_1": False}


def zero_cell(X: float, Y: float) -> dict:
    r1, r2 = xy_to_r(X, Y)
    ns = region_index_from_x(X)
    lhs = max((kn_condition_lhs(r1, r2, n) for n in ns), default=float("nan"))
    return {"X": X, "Y": Y, "r1": r1, "r2": r2, "n": ns, "kn_lhs": lhs,
            "in_Kn_prime": bool(ns) and lhs >= 0}


def _ultra_chunk(args):
    cells, r3, j0 = args
    return [ultra_cell(r1, r2, r3, j0) for r1, r2 in cells]


def _zero_chunk(args):
    (cells,) = args
    return [zero_cell(X, Y) for X, Y in cells]


def _run(cells, fn, extra, workers):
    if workers <= 1 or len(cells) < 2000:
        return fn((cells, *extra))
    size = math.ceil(len(cells) / (4 * workers))
    chunks = [(cells[i:i + size], *extra) for i in range(0, len(cells), size)]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        # map preserves chunk order, so row order stays the grid order
        return [row for part in ex.map(fn, chunks) for row in part]


def scan_ultra(config: ScanConfig) -> ScanTable:
    """Rows in grid order (r1 outer, r2 inner), restricted to 1 < r2 <= r1."""
    if config.mode is not ScanMode.ULTRA:
        raise ValueError("scan_ultra needs mode UltraKj")
    cells = [(float(r1), float(r2)) for r1 in config.axis("x") for r2 in config.axis("y")
             if 1 < r2 <= r1]
    rows = _run(cells, _ultra_chunk, (config.r3, config.j0), config.workers)
    meta = {"r3": config.r3, "j0": config.j0, "x_range": config.x_range, "y_range": config.y_range,
            "x_step": config.x_step, "y_step": config.y_step}
    return ScanTable(ScanMode.ULTRA, ULTRA_COLUMNS, rows, meta)


def scan_zero(config: ScanConfig) -> ScanTable:
    """Rows in grid order (X outer, Y inner), restricted to X >= 0, Y > 0."""
    if config.mode is not ScanMode.ZERO:
        raise ValueError("scan_zero needs mode ZeroKn")
    cells = [(float(X), float(Y)) for X in config.axis("x") for Y in config.axis("y")
             if X >= 0 and Y > 0]
    rows = _run(cells, _zero_chunk, (), config.workers)
    meta = {"x_range": config.x_range, "y_range": config.y_range,
            "x_step": config.x_step, "y_step": config.y_step}
    return ScanTable(ScanMode.ZERO, ZERO_COLUMNS, rows, meta)


def run_scan(config: ScanConfig) -> ScanTable:
    table = scan_ultra(config) if config.mode is ScanMode.ULTRA else scan_zero(config)
    if config.csv_path:
        Path(config.csv_path).write_text(table.to_csv())
    if config.svg_path and len(table):
        Path(config.svg_path).write_text(emit_svg(table))
    return table


# K_j' regions: one hue per j; lighter shade for the t_j > 1 ("always loxodromic") part.
_ULTRA_COLORS = {
    1: ("#d62728", "#9467bd"),
    2: ("#1f77b4", "#6baed6"),
    3: ("#2ca02c", "#98df8a"),
    4: ("#ff7f0e", "#ffbb78"),
    5: ("#8c564b", "#c49c94"),
}
_KJ_ONLY = "#e6e6e6"
_ZERO_IN = "#d62728"
_ZERO_OUT = "#f2f2f2"


def _cell_color(table: ScanTable, row: dict) -> str | None:
    if table.mode is ScanMode.ULTRA:
        if not row["in_Kj"]:
            return None
        if not row["in_Kj_prime"]:
            return _KJ_ONLY
        strong, weak = _ULTRA_COLORS.get(row["j"], ("#7f7f7f", "#c7c7c7"))
        return strong if row["t_j_gt_1"] else weak
    if not row["n"]:
        return None
    return _ZERO_IN if row["in_Kn_prime"] else _ZERO_OUT


def emit_svg(table: ScanTable, width: int = 640, height: int = 640) -> str:
    """Deterministic SVG rendering of a scan table (no timestamps, fixed palette)."""
    if not len(table):
        raise ValueError("cannot render an empty scan table")
    xk, yk = ("r1", "r2") if table.mode is ScanMode.ULTRA else ("X", "Y")
    (x0, x1), (y0, y1) = table.meta["x_range"], table.meta["y_range"]
    dx, dy = table.meta["x_step"], table.meta["y_step"]
    margin = 60
    pw, ph = width - 2 * margin, height - 2 * margin
    spanx = (x1 - x0) + dx
    spany = (y1 - y0) + dy

    def px(x):
        return margin + (x - x0 + dx / 2) / spanx * pw

    def py(y):
        return height - margin - (y - y0 + dy / 2) / spany * ph

    cw, ch = dx / spanx * pw, dy / spany * ph
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>',
    ]
    for row in table.rows:
        color = _cell_color(table, row)
        if color is None:
            continue
        x, y = row[xk], row[yk]
        out.append(
            f'<rect x="{px(x) - cw / 2:.3f}" y="{py(y) - ch / 2:.3f}" width="{cw:.3f}" '
            f'height="{ch:.3f}" fill="{color}"/>'
        )
    if table.mode is ScanMode.ZERO:
        n = 1
        while 2 / n >= x0 and n < 200:
            if 2 / n <= x1:
                xs = px(2 / n - dx / 2)
                out.append(
                    f'<line x1="{xs:.3f}" y1="{margin}" x2="{xs:.3f}" y2="{height - margin}" '
                    f'stroke="#000000" stroke-width="0.8" stroke-dasharray="4 3"/>'
                )
                out.append(f'<text x="{xs + 3:.3f}" y="{margin + 12}" font-size="11">X=2/{n}</text>')
            n += 1
    out.append(
        f'<rect x="{margin}" y="{margin}" width="{pw}" height="{ph}" fill="none" stroke="#000000"/>'
    )
    for i in range(6):
        xv = x0 + (x1 - x0) * i / 5
        yv = y0 + (y1 - y0) * i / 5
        out.append(f'<text x="{px(xv):.3f}" y="{height - margin + 18}" font-size="11" '
                   f'text-anchor="middle">{xv:.4g}</text>')
        out.append(f'<text x="{margin - 6}" y="{py(yv) + 4:.3f}" font-size="11" '
                   f'text-anchor="end">{yv:.4g}</text>')
    xl, yl = ("r_1", "r_2") if table.mode is ScanMode.ULTRA else ("X", "Y")
    out.append(f'<text x="{width / 2}" y="{height - 15}" font-size="14" text-anchor="middle">{xl}</text>')
    out.append(f'<text x="18" y="{height / 2}" font-size="14" text-anchor="middle" '
               f'transform="rotate(-90 18 {height / 2})">{yl}</text>')
    if table.mode is ScanMode.ULTRA:
        title = f"K_j' regions, r_3 = {table.meta['r3']:g}, j_0 = {table.meta['j0']}"
    else:
        title = "K_n' regions (m_3 = 0)"
    out.append(f'<text x="{width / 2}" y="30" font-size="15" text-anchor="middle">{title}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
