"""K_n' strips for m3 = 0 in (X, Y) coordinates, with the X = 2/n boundaries drawn."""
import argparse
from collections import Counter
from pathlib import Path

from ultratri.scan import ScanConfig, run_scan

HERE = Path(__file__).parent


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--config", default=str(HERE / "configs" / "figure2.cfg"))
    args = ap.parse_args()
    config = ScanConfig.from_file(args.config)
    Path(config.csv_path).parent.mkdir(parents=True, exist_ok=True)
    table = run_scan(config)
    per_n = Counter()
    for row in table.rows:
        if row["in_Kn_prime"]:
            per_n[min(row["n"])] += 1
    print(f"{len(table)} cells")
    for n in sorted(per_n):
        print(f"  K_{n}': {per_n[n]} cells")
    print(f"wrote {config.csv_path} and {config.svg_path}")


if __name__ == "__main__":
    main()
