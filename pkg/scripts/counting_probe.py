"""Compare the two readings of the digit-sum counting formula against a direct count."""

import argparse
import math
from dataclasses import dataclass
from fractions import Fraction

from quotsemi.ostrowski import count_c, count_c_as_printed, count_c_naive, ctx_new


@dataclass
class ProbeConfig:
    max_q: int = 20
    show: int = 5


def probe(cfg: ProbeConfig):
    total = bad_shifted = bad_printed = 0
    examples = []
    for q in range(2, cfg.max_q + 1):
        for p in range(1, q):
            if math.gcd(p, q) != 1:
                continue
            alpha = Fraction(p, q)
            ctx = ctx_new(alpha)
            for bn in range(1, q):
                beta = Fraction(bn, q)
                for nu in range(1, q):
                    truth = count_c_naive(alpha, beta, nu)
                    total += 1
                    if count_c(ctx, beta, nu) != truth:
                        bad_shifted += 1
                    got = count_c_as_printed(ctx, beta, nu)
                    if got != truth:
                        bad_printed += 1
                        if len(examples) < cfg.show:
                            examples.append((alpha, beta, nu, got, truth))
    return total, bad_shifted, bad_printed, examples


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-q", type=int, default=20)
    ap.add_argument("--show", type=int, default=5)
    args = ap.parse_args()
    total, bs, bp, ex = probe(ProbeConfig(args.max_q, args.show))
    print(f"{total} cases with q<={args.max_q}")
    print(f"shifted indices: {bs} failures")
    print(f"unshifted indices: {bp} failures")
    for alpha, beta, nu, got, truth in ex:
        print(f"  alpha={alpha} beta={beta} nu={nu}: formula {got}, count {truth}")


if __name__ == "__main__":
    main()
