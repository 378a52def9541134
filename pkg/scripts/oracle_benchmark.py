"""Time the recognizers on seeded random graphs and compare with brute force."""

import argparse
import random
import time
from collections import defaultdict

from diffgraph.graphs import SimpleGraph
from diffgraph.recognizers import RECOGNIZERS, brute_force_class, check_verdict
from diffgraph.recognizers.oracle import FORBIDDEN_SETS


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--graphs", type=int, default=1000)
    ap.add_argument("--max-n", type=int, default=12)
    ap.add_argument("--seed", type=int, default=20240101)
    a = ap.parse_args(argv)

    rng = random.Random(a.seed)
    spent = defaultdict(float)
    disagree = defaultdict(int)
    for _ in range(a.graphs):
        n = rng.randint(1, a.max_n)
        p = rng.choice((0.2, 0.5, 0.8))
        g = SimpleGraph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)
                                       if rng.random() < p])
        for cls, rec in RECOGNIZERS.items():
            t = time.perf_counter()
            v = rec(g)
            spent[cls] += time.perf_counter() - t
            check_verdict(g, cls, v)
            if cls in FORBIDDEN_SETS:
                t = time.perf_counter()
                want = brute_force_class(g, cls)
                spent["brute " + cls] += time.perf_counter() - t
                disagree[cls] += v.value != want
    for key in sorted(spent):
        extra = f"  disagreements {disagree[key]}" if key in FORBIDDEN_SETS else ""
        print(f"{key:<18} {1e3 * spent[key]:9.1f} ms{extra}")


if __name__ == "__main__":
    main()
