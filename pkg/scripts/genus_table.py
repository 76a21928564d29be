"""Print genus and gonality of C(k, l) over a grid of odd k, l.

    python3 scripts/genus_table.py --max 15 --format csv
"""

import argparse
import csv
import sys
from dataclasses import dataclass

from charvar.geometry import invariants


@dataclass
class TableConfig:
    max_kl: int = 15
    signed: bool = False
    fmt: str = "text"


def rows(cfg: TableConfig):
    vals = list(range(3, cfg.max_kl + 1, 2))
    if cfg.signed:
        vals += [-v for v in vals]
    for k in vals:
        for l in vals:
            rep = invariants(k, l)
            for comp in rep.components:
                yield {
                    "k": k,
                    "l": l,
                    "component": comp["label"],
                    "bidegree": "x".join(map(str, comp["bidegree"])),
                    "genus": comp["genus"],
                    "gonality": comp["gonality"],
                }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max", dest="max_kl", type=int, default=15)
    ap.add_argument("--signed", action="store_true", help="include negative k, l")
    ap.add_argument("--format", dest="fmt", choices=["text", "csv"], default="text")
    cfg = TableConfig(**vars(ap.parse_args(argv)))
    data = list(rows(cfg))
    if cfg.fmt == "csv":
        w = csv.DictWriter(sys.stdout, fieldnames=list(data[0]))
        w.writeheader()
        w.writerows(data)
        return
    print(f"{'k':>4} {'l':>4} {'component':>10} {'bideg':>6} {'genus':>6} {'gon':>4}")
    for r in data:
        print(f"{r['k']:>4} {r['l']:>4} {r['component']:>10} {r['bidegree']:>6} {r['genus']:>6} {r['gonality']:>4}")


if __name__ == "__main__":
    main()
