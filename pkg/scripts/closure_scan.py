"""Scan random integrands for residue-closure violations.

For every family the residue engine covers, all residues of the
integrand over one period strip must sum to zero. This script samples
random parameter points, measures |sum of residues| relative to the
largest boundary residue, and prints the worst offenders. A healthy
build stays comfortably below 1e-10 on every draw.
"""

import argparse
import random
import statistics
from dataclasses import dataclass

from trigsum import (
    RESIDUE_FAMILIES,
    TRAITS,
    IntegrandDescriptor,
    SumSpec,
    boundary_residues,
    residue_at_interior_pole,
)
from trigsum.errors import ParameterError


@dataclass(frozen=True)
class ScanConfig:
    cases: int = 500
    dmax: int = 12
    nmax: int = 3
    seed: int = 0


def sample_spec(rng: random.Random, config: ScanConfig) -> SumSpec | None:
    family = rng.choice(list(RESIDUE_FAMILIES))
    traits = TRAITS[family]
    d = rng.randint(2, config.dmax)
    m = rng.randint(1, d - 1)
    if traits.odd_m and m % 2 == 0:
        return None
    if 2 * m == d and traits.prefix == "sin":
        return None  # boundary residues all vanish, nothing to normalize by
    n = 1 if traits.kind == "triple" else rng.randint(1, config.nmax)
    b2 = rng.uniform(0.05, 0.95) if traits.kind == "triple" else None
    return SumSpec(family, d, m, rng.uniform(0.03, 0.97), n, b2)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--cases", type=int, default=500)
    parser.add_argument("--dmax", type=int, default=12)
    parser.add_argument("--nmax", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    config = ScanConfig(args.cases, args.dmax, args.nmax, args.seed)

    rng = random.Random(config.seed)
    results = []
    while len(results) < config.cases:
        spec = sample_spec(rng, config)
        if spec is None:
            continue
        try:
            desc = IntegrandDescriptor.from_spec(spec)
        except ParameterError:
            continue
        bres = boundary_residues(desc)
        total = residue_at_interior_pole(desc) + sum(bres)
        ratio = abs(total) / max(abs(r) for r in bres)
        results.append((ratio, spec))

    results.sort(key=lambda item: item[0], reverse=True)
    ratios = [r for r, _ in results]
    print(f"{len(results)} draws, dmax={config.dmax}, nmax={config.nmax}, seed={config.seed}")
    print(f"max residual ratio    {ratios[0]:.3e}")
    print(f"median residual ratio {statistics.median(ratios):.3e}")
    print("worst offenders:")
    for ratio, spec in results[:10]:
        b2 = f" b2={spec.b2:.4f}" if spec.b2 is not None else ""
        print(f"  {ratio:.3e}  {spec.family.value} n={spec.n} d={spec.d} "
              f"m={spec.m} b={spec.b:.4f}{b2}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
