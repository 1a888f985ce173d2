#!/usr/bin/env python3
"""Run every verification suite on the reference moduli and print a summary.

Writes the full certificates to reference_certificates.jsonl next to this
script unless another path is given.
"""

import sys
from pathlib import Path

from prymkit.jsonio import dumps
from prymkit.verify import RunConfig, run_suites


def main() -> int:
    out_path = Path(sys.argv[1]) if len(sys.argv) > 1 else (
        Path(__file__).resolve().parent / "reference_certificates.jsonl"
    )
    cfg = RunConfig((9, 2, 8), 3, 4, "k15")
    certs = run_suites(cfg)
    with open(out_path, "w") as fh:
        for cert in certs:
            fh.write(dumps(cert.to_json()) + "\n")
    width = max(len(c.suite) for c in certs)
    ok = True
    for cert in certs:
        ok &= cert.status == "pass"
        print(f"{cert.suite:<{width}}  {cert.status:>4}  "
              f"{len(cert.checks):>3} checks  {cert.wall_time:7.3f}s")
    print(f"certificates: {out_path}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
