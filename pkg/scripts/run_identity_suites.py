"""Sweep the identity suites over a batch of multiplicity configs.

Prints one block per config with every report line, then a summary table.
Exit status is nonzero if any identity fails, so this doubles as a slow
regression gate:

    python3 scripts/run_identity_suites.py
    python3 scripts/run_identity_suites.py --suite translation --config 2:1,0
"""

import argparse
import sys
import time

from dunklpd.identities import run_suites
from dunklpd.root_system import make_config

SWEEP = [
    (1, [0.0]),
    (1, [0.5]),
    (1, [2.0]),
    (2, [1.0, 0.0]),
    (3, [1.0, 0.5, 0.0]),
]


def parse_config(text):
    head, _, tail = text.partition(":")
    return int(head), [float(v) for v in tail.split(",")]


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--suite", default="all", help="all, kernel, transform, translation, posdef, heat")
    parser.add_argument(
        "--config",
        action="append",
        type=parse_config,
        help="d:k1,...,kd (repeatable); default sweeps the validation set",
    )
    args = parser.parse_args(argv)
    targets = args.config or SWEEP

    rows = []
    all_ok = True
    for dim, kappa in targets:
        config = make_config(dim, kappa)
        print(f"== d={dim} kappa={kappa} suite={args.suite}")
        started = time.perf_counter()
        reports = run_suites(config, None, which=args.suite)
        elapsed = time.perf_counter() - started
        for rep in reports:
            print("  " + rep.line())
        passed = sum(r.passed for r in reports)
        rows.append((dim, kappa, passed, len(reports), elapsed))
        all_ok = all_ok and passed == len(reports)
        print()

    print(f"{'config':<24} {'passed':>8} {'seconds':>9}")
    for dim, kappa, passed, total, elapsed in rows:
        tag = f"d={dim} kappa={kappa}"
        print(f"{tag:<24} {passed:>4}/{total:<3} {elapsed:>9.1f}")
    return 0 if all_ok else 1


if __name__ == "__main__":
    sys.exit(main())
