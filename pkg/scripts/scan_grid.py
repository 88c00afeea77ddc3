"""Check fast invariants against the brute-force oracle over a grid of specs."""

import argparse
import sys
import time

from quotsemi.cli import ScanConfig, run_scan


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-a", type=int, default=20)
    ap.add_argument("--max-b", type=int, default=30)
    ap.add_argument("--max-d", type=int, default=40)
    ap.add_argument("--check", choices=["wilf", "oracle", "cases"], default="oracle")
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()
    cfg = ScanConfig(args.max_a, args.max_b, args.max_d, args.check, args.jobs)
    t0 = time.perf_counter()
    n, viol = run_scan(cfg)
    for v in viol:
        print(*v)
    print(f"{n} specs, {len(viol)} violations, {time.perf_counter() - t0:.1f}s")
    return 3 if viol else 0


if __name__ == "__main__":
    sys.exit(main())
