"""Time the three evaluation paths against each other.

Sweeps the power families over a (d, n) grid and reports the mean
per-case wall time of the closed-form, oracle, and residue paths.
The oracle scales linearly in d, the closed form in the number of
multi-index terms, the residue path in the truncation order, so the
crossover points move with --dmax and --nmax.
"""

import argparse
import time
from dataclasses import dataclass

from trigsum import (
    POWER_FAMILIES,
    TRAITS,
    SumSpec,
    direct_sum,
    sum_via_residues,
    theorem_sum,
    validate_params,
)
from trigsum.cli import default_offsets
from trigsum.errors import ParameterError

PATHS = (("closed", theorem_sum), ("oracle", direct_sum), ("residue", sum_via_residues))


@dataclass(frozen=True)
class BenchmarkConfig:
    dmax: int = 30
    nmax: int = 4
    repeats: int = 3


def build_cases(config: BenchmarkConfig) -> list[SumSpec]:
    cases = []
    for family in POWER_FAMILIES:
        for d in range(2, config.dmax + 1):
            m = d - 1 if not TRAITS[family].odd_m or (d - 1) % 2 == 1 else d - 2
            if not 0 < m < d:
                continue
            for n in range(1, config.nmax + 1):
                try:
                    cases.append(validate_params(SumSpec(family, d, m, default_offsets(d)[0], n)))
                except ParameterError:
                    continue
    return cases


def time_path(fn, cases: list[SumSpec], repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        for spec in cases:
            fn(spec)
        best = min(best, time.perf_counter() - start)
    return best / len(cases)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--dmax", type=int, default=30)
    parser.add_argument("--nmax", type=int, default=4)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()
    config = BenchmarkConfig(args.dmax, args.nmax, args.repeats)

    cases = build_cases(config)
    print(f"{len(cases)} cases, d <= {config.dmax}, n <= {config.nmax}, "
          f"best of {config.repeats} runs")
    for name, fn in PATHS:
        per_case = time_path(fn, cases, config.repeats)
        print(f"  {name:<8} {per_case * 1e6:8.1f} us/case")

    # split by power index so the growth of each path is visible
    for n in range(1, config.nmax + 1):
        subset = [spec for spec in cases if spec.n == n]
        if not subset:
            continue
        row = [f"n={n} ({len(subset)} cases)"]
        for name, fn in PATHS:
            row.append(f"{name} {time_path(fn, subset, config.repeats) * 1e6:.1f}us")
        print("  " + "  ".join(row))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
