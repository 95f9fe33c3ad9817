"""Float-mode accuracy of each pivot strategy on Hilbert matrices.

    python scripts/hilbert_sweep.py --max-order 10 --json sweep.json
"""

import argparse
import json

from pivotlab.bench import format_table, run_bench, to_records


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--min-order", type=int, default=2)
    parser.add_argument("--max-order", type=int, default=10)
    parser.add_argument("--epsilon", type=float, default=None)
    parser.add_argument("--json", default=None, help="also write records to this path")
    args = parser.parse_args()

    rows = run_bench("hilbert", range(args.min_order, args.max_order + 1), modes=("float",), epsilon=args.epsilon)
    print(format_table(rows))

    best = {}
    for r in rows:
        if r.singular:
            continue
        if r.n not in best or r.residual < best[r.n].residual:
            best[r.n] = r
    print()
    for n, r in sorted(best.items()):
        print(f"n={n:<3} lowest residual: {r.strategy} ({r.residual:.2e})")

    if args.json:
        with open(args.json, "w") as fh:
            json.dump(to_records(rows), fh, indent=2)


if __name__ == "__main__":
    main()
