#!/usr/bin/env python3
"""End-to-end check of the CLI exit-code contract.

Spawns the CLI as a real subprocess for each case and compares exit codes:
0 success, 1 invalid table, 2 usage error, 3 group-only verb on a non-group,
4 --exact outside the group path.
"""

from __future__ import annotations

import subprocess
import sys
import tempfile
from pathlib import Path

BROKEN_TABLE = """\
elements: 0 1
table:
1 1
1 0
"""

GOOD_TABLE = """\
elements: e a
table:
e a
a e
"""


def main() -> int:
    tmp = Path(tempfile.mkdtemp(prefix="semorient-exit-"))
    broken = tmp / "broken.tbl"
    broken.write_text(BROKEN_TABLE)
    good = tmp / "good.tbl"
    good.write_text(GOOD_TABLE)

    cases = [
        (["check", "--family", "cyclic:4"], 0),
        (["check", "--table", str(good)], 0),
        (["check", "--table", str(broken)], 1),
        (["orientable", "--table", str(broken)], 1),
        (["check"], 2),  # no input source
        (["check", "--table", str(good), "--family", "cyclic:2"], 2),
        (["check", "--family", "nosuch:9"], 2),
        (["orientable", "--family", "cyclic:3", "--bound", "0"], 2),
        (["witness", "--family", "cyclic:3", "--element", "zz"], 2),
        (["nosuchverb"], 2),
        (["commutator", "--family", "leftzero:3"], 3),
        (["abelianization", "--family", "null:3"], 3),
        (["verify", "--family", "leftzero:3", "--suite", "theorems"], 3),
        (["sigma", "--family", "leftzero:3", "--exact"], 4),
        (["orientable", "--family", "fulltransformation:2", "--exact"], 4),
        (["quotient", "--family", "null:3", "--exact"], 4),
        (["witness", "--family", "cyclic:4", "--element", "1", "--exact"], 0),
        (["verify", "--family", "quaternion8", "--suite", "all"], 0),
        (["orientable", "--family", "symmetric:3", "--bound", "3", "--format", "json"], 0),
        (["quotient", "--family", "symmetric:3", "--exact"], 0),
    ]

    failures = 0
    for argv, expected in cases:
        proc = subprocess.run(
            [sys.executable, "-m", "semorient", *argv],
            capture_output=True,
            text=True,
        )
        ok = proc.returncode == expected
        status = "PASS" if ok else "FAIL"
        print(f"[{status}] exit {proc.returncode} (expected {expected}): semorient {' '.join(argv)}")
        if not ok:
            failures += 1
            sys.stderr.write(proc.stderr)
        elif proc.returncode != 0 and not proc.stderr.startswith("error:") and "usage:" not in proc.stderr:
            # non-argparse errors must carry the one-line machine-readable reason
            failures += 1
            print(f"       missing machine-readable reason on stderr: {proc.stderr!r}")

    print(f"{len(cases) - failures} of {len(cases)} exit-code cases passed")
    return 0 if failures == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
