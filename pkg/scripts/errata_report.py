#!/usr/bin/env python3
"""Show each corrected catalog entry's witness: the uncorrected variant's
value against the true value at the witness point.

Usage:
    python scripts/errata_report.py
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from fubini.registry import PASS, REGISTRY, verify


def main() -> int:
    ok = True
    for identity in sorted(REGISTRY):
        entry = REGISTRY[identity]
        if not entry.corrected:
            continue
        print(f"{identity}")
        print(f"  corrected statement: {entry.statement}")
        for report in verify(identity, profile="quick"):
            if "printed" not in report.params:
                continue
            point = ", ".join(
                f"{k}={v}" for k, v in sorted(report.params.items()) if k != "printed"
            )
            verdict = "differs as expected" if report.status == PASS else "UNEXPECTEDLY AGREES"
            ok &= report.status == PASS
            print(f"  witness at {point}:")
            print(f"    uncorrected value: {report.lhs}")
            print(f"    true value:        {report.rhs}")
            print(f"    -> {verdict}")
        print()
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
