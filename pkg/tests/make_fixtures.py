"""Regenerate fixtures/oracle_values.json from the brute-force oracles.

    python tests/make_fixtures.py
"""
import json
import pathlib

from oracles import bs_scan, peter_weyl_total

PW_CASES = [(1, 0), (1, 3), (1, 5), (2, 0), (2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (4, 1)]
BS_CASES = [(1, 2), (2, 0), (2, 1), (2, 2)]


def main():
    doc = {
        "peter_weyl_total": {f"{n},{N}": peter_weyl_total(n, N) for n, N in PW_CASES},
        "bs_count": {
            variant: {f"{n},{N}": len(bs_scan(n, N, variant == "strict")) for n, N in BS_CASES}
            for variant in ("closure", "strict")
        },
        "bs_points_strict_2_1": [list(v) for v in bs_scan(2, 1, True)],
    }
    path = pathlib.Path(__file__).with_name("fixtures") / "oracle_values.json"
    path.write_text(json.dumps(doc, indent=2) + "\n")
    print(json.dumps(doc, indent=2))


if __name__ == "__main__":
    main()
