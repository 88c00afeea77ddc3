"""Cross-check the Frobenius case formula against the oracle, grouped by case tag."""

import argparse
from collections import Counter
from dataclasses import dataclass

from quotsemi.cli import ScanConfig, scan_specs
from quotsemi.invariants import fast_report, frobenius_case_formula
from quotsemi.lattice import QuotientSpec
from quotsemi.oracle import invariants, quotient_ab


@dataclass
class ProbeConfig:
    max_a: int = 15
    max_b: int = 25
    max_d: int = 40


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-a", type=int, default=15)
    ap.add_argument("--max-b", type=int, default=25)
    ap.add_argument("--max-d", type=int, default=40)
    args = ap.parse_args()
    cfg = ProbeConfig(args.max_a, args.max_b, args.max_d)
    seen, bad = Counter(), Counter()
    for a, b, d in scan_specs(ScanConfig(cfg.max_a, cfg.max_b, cfg.max_d)):
        spec = QuotientSpec(a, b, d)
        tag = fast_report(spec).case_tag
        seen[tag] += 1
        if frobenius_case_formula(spec) != invariants(quotient_ab(a, b, d)).frobenius:
            bad[tag] += 1
            print(f"mismatch {a} {b} {d} ({tag})")
    for tag in sorted(seen):
        print(f"{tag}: {seen[tag]} specs, {bad[tag]} mismatches")


if __name__ == "__main__":
    main()
