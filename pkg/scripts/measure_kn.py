#!/usr/bin/env python3
"""Measure the constant K_n = det_n / prod phi_r^p2(n - rs) at level zero.

Evaluated mode samples seeded rational weights; symbolic mode divides the
generic determinant by the product and checks the quotient is a constant.

    python scripts/measure_kn.py --max-degree 6
    python scripts/measure_kn.py --mode symbolic --max-degree 4
"""
import argparse
import json
import random
import time
from dataclasses import asdict, dataclass

from twisted_hv.scalars import format_scalar
from twisted_hv.shapovalov import kn_constancy_check, sample_points


@dataclass
class KnConfig:
    max_degree: int = 5
    mode: str = "evaluated"
    seed: int = 0
    points: int = 5


def measure(cfg: KnConfig) -> list:
    pts = sample_points(random.Random(cfg.seed), cfg.points) if cfg.mode == "evaluated" else ()
    rows = []
    for n in range(1, cfg.max_degree + 1):
        t0 = time.perf_counter()
        rep = kn_constancy_check(n, pts, mode=cfg.mode)
        rows.append({
            "n": n,
            "K_n": None if rep.constant is None else format_scalar(rep.constant),
            "constant": rep.passed,
            "skipped_points": len(rep.skipped),
            "seconds": round(time.perf_counter() - t0, 3),
        })
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-degree", type=int, default=KnConfig.max_degree)
    ap.add_argument("--mode", choices=("evaluated", "symbolic"), default=KnConfig.mode)
    ap.add_argument("--seed", type=int, default=KnConfig.seed)
    ap.add_argument("--points", type=int, default=KnConfig.points)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    cfg = KnConfig(args.max_degree, args.mode, args.seed, args.points)
    rows = measure(cfg)
    if args.json:
        print(json.dumps({"config": asdict(cfg), "rows": rows}, indent=2))
        return
    for r in rows:
        flag = "ok" if r["constant"] else "NOT CONSTANT"
        print(f"n={r['n']:<2} K_n={r['K_n']}  [{flag}, {r['seconds']}s]")


if __name__ == "__main__":
    main()
