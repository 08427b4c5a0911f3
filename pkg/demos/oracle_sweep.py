"""Cross-check every algebraic answer against the exact brute-force oracle.

Sweeps all admissible alphas up to a norm bound in all three tilings, with every
divisor coloring, and prints a per-tiling tally.

Run: python demos/oracle_sweep.py [--max-norm 60]
"""
from __future__ import annotations

import argparse
import time

from singtile import InadmissibleAlphaError, TilingKind, check_admissible
from singtile.cyclotomic import enumerate_elements
from singtile.verifier import conformance_report


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-norm", type=int, default=60)
    args = ap.parse_args()
    t0 = time.perf_counter()
    total_bad = 0
    for kind in TilingKind:
        alphas = checks = bad = 0
        for z in enumerate_elements(kind.tag, args.max_norm):
            try:
                adm = check_admissible(kind, z)
            except InadmissibleAlphaError:
                continue
            rows = conformance_report(adm)
            alphas += 1
            checks += len(rows)
            for c in rows:
                if not c.agree:
                    bad += 1
                    print(f"  DISAGREE {kind.name} alpha={z}: {c.as_dict()}")
        total_bad += bad
        print(f"{kind.name:<10} {alphas:>4} alphas  {checks:>6} checks  {bad} disagreements")
    print(f"done in {time.perf_counter() - t0:.1f}s")
    raise SystemExit(1 if total_bad else 0)


if __name__ == "__main__":
    main()
