"""Pure-Python vs compiled kernel benchmark.

Runs the same verification workloads under both backends by rebinding
the dispatch table in momsos._kernels, checks that the results agree
exactly, and prints a timing table.  Usage:

    python benchmarks/bench_kernels.py [--repeat N]
"""
from __future__ import annotations

import argparse
import sys
import time

from momsos import _kernels
from momsos._kernels import pure

try:
    from momsos._kernels import _speedups
except ImportError:
    _speedups = None

KERNEL_NAMES = ("poly_mul", "poly_divmod", "mat_mul", "mat_inv", "sym_eliminate")


def _bind(impl):
    for name in KERNEL_NAMES:
        setattr(_kernels, name, getattr(impl, name))


def workload_identity_sweep():
    from momsos.soscert import verify_identity

    return all(verify_identity(r) for r in range(3, 61))


def workload_moments_r30():
    from momsos.momentside import moments

    return moments(30).even_values


def workload_psd_r30():
    from momsos.momentside import verify_psd

    mom, loc = verify_psd(30)
    return (mom.is_psd, mom.rank, loc.is_psd, loc.rank)


def workload_sturm_a60():
    from momsos.exactnum import sturm_count
    from momsos.soscert import build_a

    return sturm_count(build_a(60), -1, 1).count


WORKLOADS = (
    ("identity sweep r=3..60", workload_identity_sweep),
    ("moment vector r=30", workload_moments_r30),
    ("psd certification r=30", workload_psd_r30),
    ("sturm count A_60 in (-1,1)", workload_sturm_a60),
)


def run(repeat: int) -> int:
    if _speedups is None:
        print("compiled backend unavailable; nothing to compare", file=sys.stderr)
        return 1
    print(f"default backend at import: {_kernels.BACKEND}")
    print(f"{'workload':<30} {'pure':>9} {'compiled':>9} {'speedup':>8}")
    original = {name: getattr(_kernels, name) for name in KERNEL_NAMES}
    try:
        for label, fn in WORKLOADS:
            times = {}
            results = {}
            for impl_name, impl in (("pure", pure), ("compiled", _speedups)):
                _bind(impl)
                best = float("inf")
                for _ in range(repeat):
                    start = time.perf_counter()
                    results[impl_name] = fn()
                    best = min(best, time.perf_counter() - start)
                times[impl_name] = best
            if results["pure"] != results["compiled"]:
                print(f"{label}: BACKEND MISMATCH", file=sys.stderr)
                return 1
            speedup = times["pure"] / times["compiled"] if times["compiled"] else float("inf")
            print(
                f"{label:<30} {times['pure']:>8.3f}s {times['compiled']:>8.3f}s {speedup:>7.2f}x"
            )
    finally:
        for name, fn in original.items():
            setattr(_kernels, name, fn)
    return 0


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3, help="timing repetitions, best-of")
    args = parser.parse_args()
    if args.repeat < 1:
        parser.error("--repeat must be >= 1")
    return run(args.repeat)


if __name__ == "__main__":
    raise SystemExit(main())
