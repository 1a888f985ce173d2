#!/usr/bin/env python3
"""Print the Kodaira fiber tables of the five reference families."""

from prymkit.fibration import classify_fibers, fiber_inventory, total_ord_delta
from prymkit.verify import RunConfig, families


def main():
    cfg = RunConfig((9, 2, 8), 3, 4, "k15")
    for name, fam in families(cfg).items():
        reports = classify_fibers(fam)
        print(f"== {name}  (sum ord Delta = {total_ord_delta(reports)})")
        for r in sorted(reports, key=lambda r: str(r.to_json()["place"])):
            d = r.to_json()
            print(f"   {d['type']:<4} ord {d['ord_delta']}  x{d['mult']}  at {d['place']}")
        print(f"   inventory: {fiber_inventory(reports)}")


if __name__ == "__main__":
    main()
