#!/usr/bin/env python3
"""Sweep the ratio h_I / c_LI and tabulate where singular vectors appear.

For each ratio the table lists the degrees (up to --max-degree) with a
nonzero kernel, the kernel dimension, and whether the lowest vector is
pure-I. The predicted degree is |ratio - 1| for integer ratios != 1.

    python scripts/sweep_ratios.py --ratios -3..5 --max-degree 4
"""
import argparse
import random
from dataclasses import dataclass, field
from fractions import Fraction

from twisted_hv.algebra import HighestWeight
from twisted_hv.structure import predicted_p, singular_vectors
from twisted_hv.verma import is_pure_I


@dataclass
class SweepConfig:
    ratios: list = field(default_factory=lambda: [Fraction(k) for k in range(-3, 6)] + [Fraction(1, 2)])
    max_degree: int = 4
    seed: int = 0


def parse_ratios(text: str) -> list:
    if ".." in text:
        lo, hi = text.split("..")
        return [Fraction(k) for k in range(int(lo), int(hi) + 1)]
    return [Fraction(t) for t in text.split(",")]


def sweep(cfg: SweepConfig):
    rng = random.Random(f"sweep:{cfg.seed}")
    for ratio in cfg.ratios:
        cli = Fraction(rng.choice([-1, 1]) * rng.randint(1, 7), rng.randint(1, 4))
        hw = HighestWeight(Fraction(rng.randint(-9, 9), 4), ratio * cli, Fraction(rng.randint(-5, 5)), cli, Fraction(0))
        hits = []
        for n in range(1, cfg.max_degree + 1):
            res = singular_vectors(n, hw)
            if res.dimension:
                hits.append((n, res.dimension, all(is_pure_I(v) for v in res.kernel_basis)))
        yield ratio, predicted_p(hw)[0], hits


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--ratios", type=parse_ratios, default=None, help="e.g. -3..5 or 1/2,2,3")
    ap.add_argument("--max-degree", type=int, default=SweepConfig.max_degree)
    ap.add_argument("--seed", type=int, default=SweepConfig.seed)
    args = ap.parse_args()
    cfg = SweepConfig(max_degree=args.max_degree, seed=args.seed)
    if args.ratios is not None:
        cfg.ratios = args.ratios
    print(f"{'ratio':>6}  {'p':>4}  singular degrees (n, dim, pure-I)")
    for ratio, p, hits in sweep(cfg):
        shown = ", ".join(f"({n}, {d}, {'yes' if pure else 'no'})" for n, d, pure in hits) or "-"
        print(f"{str(ratio):>6}  {str(p) if p is not None else '-':>4}  {shown}")


if __name__ == "__main__":
    main()
