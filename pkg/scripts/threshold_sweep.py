"""How the axiom profile of the confidence conditional moves with the threshold.

For a fixed 11-world space with one heavy world per index, sweep the
acceptance threshold and sample the ternary axioms at each step.  The
interesting line is NORM: it survives every threshold below the heavy
mass and dies exactly when the threshold reaches it.

    python3 scripts/threshold_sweep.py [--samples N] [--worlds K]
"""

import argparse
import sys
from fractions import Fraction

from condlat.ops import Axiom
from condlat.probabilistic import confidence_space, verify_axioms

AXES = (Axiom.P1, Axiom.P2, Axiom.P3, Axiom.P4, Axiom.P5, Axiom.MP, Axiom.NORM)


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--samples", type=int, default=100_000)
    ap.add_argument("--worlds", type=int, default=11)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    steps = [Fraction(k, 20) for k in range(1, 20)] + [Fraction(9, 10), Fraction(1)]
    print("threshold  " + "  ".join(ax.value.ljust(4) for ax in AXES))
    for t in sorted(set(steps)):
        space = confidence_space(world_count=args.worlds, threshold=t)
        rep = verify_axioms(space, samples=args.samples, seed=args.seed)
        cells = "  ".join(
            ("ok" if rep[ax].holds else "FAIL").ljust(4) for ax in AXES
        )
        print(f"{str(t).ljust(9)}  {cells}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
