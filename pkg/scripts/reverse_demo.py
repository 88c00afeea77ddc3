"""List the (a, b, d) families realizing a given minimal generating set and verify instances."""

import argparse
from dataclasses import dataclass

from quotsemi.oracle import quotient_ab
from quotsemi.reverse import solve_case1, solve_case2, solve_case3


@dataclass
class DemoConfig:
    gens: tuple
    limit: int = 5


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("gens", type=int, nargs="+")
    ap.add_argument("--limit", type=int, default=5)
    args = ap.parse_args()
    cfg = DemoConfig(tuple(sorted(set(args.gens))), args.limit)
    target = set(cfg.gens)
    c2, f2 = solve_case2(list(cfg.gens), cfg.limit)
    c3, f3 = solve_case3(list(cfg.gens), cfg.limit)
    for name, triples, fams in [
        ("d<a<b", solve_case1(list(cfg.gens)), []),
        ("a<d<b", c2, f2),
        ("a<b<d", c3, f3),
    ]:
        print(name)
        for f in fams:
            print(f"  family {f.formula}  {', '.join(f.constraints)}")
        for t in triples:
            ok = set(quotient_ab(*t).irr()) == target
            print(f"  {t} {'ok' if ok else 'FAIL'}")


if __name__ == "__main__":
    main()
