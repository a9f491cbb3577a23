"""Random sweep: certificate verdicts against the brute-force disk oracle.

Every certified sample must have disjoint disk images under G2 words up to
--max-n; the table also counts how often the oracle sees overlaps elsewhere.
"""
import argparse
import csv
import sys
from collections import Counter
from pathlib import Path

import numpy as np

from ultratri import TriangleParams, Verdict, certify_theorem1, existence_bound, t_n_threshold
from ultratri.oracle import check_disk_disjointness
from ultratri.ultra import ultra_parallel_M


def draw(rng, near):
    r3 = rng.uniform(1.001, 3)
    r2 = r3 + rng.uniform(0, 3)
    r1 = r2 + rng.uniform(0, 3)
    hi = min(1.0, existence_bound(r1, r2, r3))
    if near:
        c = t_n_threshold(r1, r2, r3, int(rng.integers(1, 6))) + rng.normal(scale=0.02)
        if not -1 <= c <= hi:
            return None
    else:
        c = rng.uniform(-1, hi)
    return TriangleParams.from_cos(r1, r2, r3, c)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=2000)
    ap.add_argument("--max-n", type=int, default=10)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--csv", default=str(Path(__file__).parent / "out" / "oracle_sweep.csv"))
    args = ap.parse_args()
    rng = np.random.default_rng(args.seed)
    Path(args.csv).parent.mkdir(parents=True, exist_ok=True)
    tally = Counter()
    with open(args.csv, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["r1", "r2", "r3", "cos_alpha", "verdict", "oracle_overlaps"])
        done = 0
        while done < args.samples:
            p = draw(rng, near=done % 2 == 0)
            if p is None:
                continue
            verdict = certify_theorem1(p).verdict
            overlaps = -1
            if ultra_parallel_M(p) > 1 + 1e-9:
                overlaps = len(check_disk_disjointness(p, args.max_n).overlaps)
            w.writerow([f"{p.r1:.12g}", f"{p.r2:.12g}", f"{p.r3:.12g}", f"{p.cos_alpha:.12g}",
                        verdict.value, overlaps])
            tally[verdict, overlaps > 0] += 1
            done += 1
    for (verdict, overlap), count in sorted(tally.items(), key=lambda kv: (kv[0][0].value, kv[0][1])):
        print(f"{verdict.value:28s} oracle overlap={overlap!s:5s} {count}")
    bad = tally[Verdict.CERTIFIED, True]
    print("certified samples with overlaps:", bad)
    sys.exit(1 if bad else 0)


if __name__ == "__main__":
    main()
