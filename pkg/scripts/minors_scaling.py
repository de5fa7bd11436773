"""Triangularize the adjacent 2x2 minors of a 2 x n matrix for growing n.

Prints one line per size: n, chain count, dimension, number of top chains,
width and wall time. With --strip the width is that of the stripped network.
Ranks 2i and 2i+1 hold the two entries of column i.
"""

import argparse
import logging
import sys
import time
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from chordalnet.chordal import complete_with_order, support_graph  # noqa: E402
from chordalnet.network import TriangulateOptions, chordal_triangularize  # noqa: E402
from chordalnet.queries import dim_census, dimension  # noqa: E402
from chordalnet.ring import Ring  # noqa: E402


def minors(ring: Ring, cols: int):
    x = ring.gen
    return [x(2 * i) * x(2 * i + 3) - x(2 * i + 1) * x(2 * i + 2) for i in range(cols - 1)]


def main() -> int:
    ap = argparse.ArgumentParser(description="Scaling run for 2 x n adjacent minors (binomial mode)")
    ap.add_argument("--min-cols", type=int, default=3)
    ap.add_argument("--max-cols", type=int, default=10)
    ap.add_argument("--prime", type=int, default=65521)
    ap.add_argument("--strip", action="store_true", help="Drop inequations and merge before measuring width")
    ap.add_argument("--progress", action="store_true", help="Per-size progress bar (needs tqdm)")
    ap.add_argument("-v", "--verbose", action="store_true")
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr)

    sizes = range(args.min_cols, args.max_cols + 1)
    if args.progress:
        try:
            from tqdm import tqdm
        except ImportError:
            print("tqdm not installed; continuing without progress bar", file=sys.stderr)
        else:
            sizes = tqdm(sizes, desc="sizes", unit="size")

    print("cols\tchains\tdim\ttop\twidth\tseconds")
    for cols in sizes:
        ring = Ring(2 * cols, args.prime)
        F = minors(ring, cols)
        cs = complete_with_order(support_graph(F, ring.n))
        t0 = time.perf_counter()
        net = chordal_triangularize(F, cs, TriangulateOptions(mode="binomial", strip=args.strip), ring=ring)
        elapsed = time.perf_counter() - t0
        d = dimension(net)
        print(f"{cols}\t{net.chain_count()}\t{d}\t{dim_census(net)[d]}\t{net.width()}\t{elapsed:.2f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
