"""Write the CSV atlas for a corpus and print a one-line summary.

    python scripts/sweep_atlas.py --max-order 400 --families nilpotent --out atlas.csv
"""

import argparse
import sys

from diffgraph.cli import main


def parse_args(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-order", type=int, default=120)
    ap.add_argument("--families", default="default")
    ap.add_argument("--out", default="atlas.csv")
    ap.add_argument("--jobs", type=int, default=1)
    return ap.parse_args(argv)


if __name__ == "__main__":
    a = parse_args()
    sys.exit(main(["sweep", "--max-order", str(a.max_order), "--families", a.families,
                   "--out", a.out, "--jobs", str(a.jobs)]))
