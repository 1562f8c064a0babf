#!/usr/bin/env python3
"""Regenerate the bundled random-index table.

Writes src/triadkit/data/random_index.json with the seed and sample count
pinned alongside the values, so the table can be reproduced exactly.
"""
import argparse
import json
import pathlib
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from triadkit.consistency import compute_random_index  # noqa: E402
from triadkit.pcm import MAX_ORDER, MIN_ORDER  # noqa: E402


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=200_000)
    ap.add_argument("--seed", type=int, default=20250810)
    ap.add_argument(
        "--out",
        default=str(pathlib.Path(__file__).resolve().parents[1]
                    / "src" / "triadkit" / "data" / "random_index.json"),
    )
    args = ap.parse_args()

    values = {}
    for n in range(MIN_ORDER, MAX_ORDER + 1):
        t0 = time.time()
        values[str(n)] = compute_random_index(n, args.samples, args.seed)
        print(f"order {n:2d}: RI = {values[str(n)]:.6f}  ({time.time() - t0:.1f}s)")

    doc = {"schema": 1, "seed": args.seed, "samples": args.samples, "values": values}
    with open(args.out, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")
    print(f"wrote {args.out}")


if __name__ == "__main__":
    main()
