"""K_j' regions at r3 = 1.01, j0 = 3: grid scan to CSV + SVG, plus the three anchor points."""
import argparse
from collections import Counter
from pathlib import Path

from ultratri.scan import ScanConfig, run_scan, ultra_cell

HERE = Path(__file__).parent


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--config", default=str(HERE / "configs" / "figure1.cfg"))
    args = ap.parse_args()
    config = ScanConfig.from_file(args.config)
    Path(config.csv_path).parent.mkdir(parents=True, exist_ok=True)
    table = run_scan(config)
    counts = Counter((row["j"], row["in_Kj_prime"], row["t_j_gt_1"]) for row in table.rows)
    print(f"{len(table)} cells, r3 = {config.r3}, j0 = {config.j0}")
    for j in range(1, config.j0 + 1):
        inside = sum(v for (jj, prime, _), v in counts.items() if jj == j and prime)
        always = counts.get((j, True, True), 0)
        print(f"  K_{j}': {inside} cells ({always} with t_{j} > 1)")
    for r2 in (4.0, 5.0, 6.0):
        cell = ultra_cell(8.0, r2, config.r3, config.j0)
        print(f"  (8, {r2:g}): j = {cell['j']}, in K_j' = {cell['in_Kj_prime']}, t_j = {cell['t_j']:.6f}")
    print(f"wrote {config.csv_path} and {config.svg_path}")


if __name__ == "__main__":
    main()
