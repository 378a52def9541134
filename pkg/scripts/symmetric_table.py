"""Observed and predicted classes of D(S_n) and D(A_n) for the groups in reach."""

import argparse
import time

from diffgraph.groupspec import realize
from diffgraph.theorems import CLASSES, verify


def row(spec: str) -> str:
    t = time.perf_counter()
    r = verify(realize(spec))
    cells = []
    for c in CLASSES:
        res = r.classes[c]
        obs = res.observed.status.value[0].upper()
        pred = "" if res.predicted is None else "/" + ("T" if res.predicted else "F")
        cells.append(f"{obs + pred:>6}")
    stats = r.graph_stats
    return (f"{spec:<4} {stats['vertex_count']:>6} {stats['edge_count']:>6} "
            + " ".join(cells) + f"  {time.perf_counter() - t:5.1f}s")


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-s", type=int, default=7)
    ap.add_argument("--max-a", type=int, default=8)
    a = ap.parse_args(argv)
    print(f"{'G':<4} {'|V|':>6} {'|E|':>6} " + " ".join(f"{c[:6]:>6}" for c in CLASSES))
    for n in range(3, a.max_s + 1):
        print(row(f"S{n}"))
    for n in range(4, a.max_a + 1):
        print(row(f"A{n}"))
    print("cells: observed T/F/V, then /T or /F when a theorem predicts the class")


if __name__ == "__main__":
    main()
