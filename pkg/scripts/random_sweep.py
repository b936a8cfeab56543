"""Run the full invariant suite over a seeded random corpus.

Usage: python scripts/random_sweep.py [count] [--no-oracle]
"""

import pathlib
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from dellkit import fixtures, suite


def main(argv):
    count = int(argv[1]) if len(argv) > 1 and argv[1].isdigit() else 50
    with_oracle = "--no-oracle" not in argv
    t0 = time.perf_counter()
    algebras = [
        (a.name, a) for a in (fixtures.random_sample(seed) for seed in range(1, count + 1))
    ]
    results = suite.batch_check(algebras, with_oracle=with_oracle)
    bad = [r for r in results if not r.passed]
    for r in bad:
        print(f"FAIL {r.label}")
        for rep in r.reports:
            if not rep.passed:
                print(f"  {rep.name}: {dict(rep.details)}")
    print(
        f"{len(results)} algebras, {len(bad)} failures, "
        f"{time.perf_counter() - t0:.1f}s"
    )
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
