#!/usr/bin/env python3
"""Run the full oracle-vs-closed-form verification battery and print a table.

Exit code 0 when every check passes, 1 otherwise. Equivalent to
``gaussgeo verify`` but with a human-oriented table instead of JSON.

Usage: python scripts/verify_all.py [group]
"""

import sys

from gaussgeo.oracle import run_verification


def main() -> int:
    only = sys.argv[1] if len(sys.argv) > 1 else None
    results = run_verification(only=only)
    width = max(len(f"{r.group}/{r.name}") for r in results)
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(
            f"[{status}] {r.group + '/' + r.name:<{width}}  "
            f"residual {r.residual:10.3e}  tolerance {r.tolerance:8.1e}  "
            f"{r.seconds:6.2f}s"
        )
    failed = [r for r in results if not r.passed]
    print(f"\n{len(results) - len(failed)}/{len(results)} checks passed")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
