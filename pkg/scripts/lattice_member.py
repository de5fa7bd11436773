"""Radical membership for the cyclic lattice-walk binomials.

For each n, triangularizes I_n = <x_i x_(i+3) - x_(i+1) x_(i+2) (indices mod n)>
and tests f_n = x0 x1^2 ... x(n-1)^n - x0^n x1^(n-1) ... x(n-1). Prints n, the
answer and the two timings as JSON lines.
"""

import argparse
import json
import sys
import time
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from chordalnet.chordal import complete_with_order, support_graph  # noqa: E402
from chordalnet.errors import ChordalNetError  # noqa: E402
from chordalnet.network import TriangulateOptions, chordal_triangularize  # noqa: E402
from chordalnet.queries import MemberOptions, radical_member  # noqa: E402
from chordalnet.ring import Ring  # noqa: E402


def lattice_system(ring: Ring):
    n = ring.n
    x = ring.gen
    return [x(i) * x((i + 3) % n) - x((i + 1) % n) * x((i + 2) % n) for i in range(n)]


def walk_poly(ring: Ring):
    n = ring.n
    up = ring.monomial({i: i + 1 for i in range(n)})
    down = ring.monomial({i: n - i for i in range(n)})
    return up - down


def main() -> int:
    ap = argparse.ArgumentParser(description="Lattice-walk radical membership runs")
    ap.add_argument("sizes", nargs="*", type=int, default=[5, 10])
    ap.add_argument("--prime", type=int, default=65521)
    ap.add_argument("--trials", type=int, default=20)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    for n in args.sizes:
        ring = Ring(n, args.prime)
        F = lattice_system(ring)
        cs = complete_with_order(support_graph(F, n))
        t0 = time.perf_counter()
        try:
            net = chordal_triangularize(F, cs, TriangulateOptions(mode="binomial"), ring=ring)
            t1 = time.perf_counter()
            ok = radical_member(net, walk_poly(ring), MemberOptions(trials=args.trials, seed=args.seed))
        except ChordalNetError as e:
            print(json.dumps({"n": n, "error": str(e)}))
            continue
        t2 = time.perf_counter()
        print(json.dumps({"n": n, "vanishes": ok, "triangulate_s": round(t1 - t0, 3), "member_s": round(t2 - t1, 3)}))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
