"""Line-oriented text dump of a chordal network.

    ranks=4 p=13 mode=zerodim squarefree=1 floor=0
    order 0 1 2 3
    clique 0 0,2
    ...
    node 7 rank=0 eqs=x0^3 - x0;x2 ineqs=
    arc 7 12

Printing a loaded dump reproduces it byte for byte.
"""

from __future__ import annotations

import os
import re
import tempfile
from pathlib import Path
from typing import Dict, List, Optional

from ..chordal import ChordalStructure
from ..errors import ParseError
from ..network import ChordalNetwork
from ..ring import PolySystem, Ring, format_poly, parse_poly

_HEADER = re.compile(r"^ranks=(\d+) p=(\d+) mode=(\w+) squarefree=([01]) floor=(\d+)$")
_NODE = re.compile(r"^node (\d+) rank=(\d+) eqs=(.*) ineqs=(.*)$")
_ARC = re.compile(r"^arc (\d+) (\d+)$")


def dump_network(net: ChordalNetwork) -> str:
    lines = [
        f"ranks={net.n} p={net.ring.p} mode={net.mode} squarefree={int(net.squarefree)} floor={net.floor}",
        "order " + " ".join(str(i) for i in net.cs.order),
    ]
    for l, X in enumerate(net.cs.cliques):
        lines.append(f"clique {l} " + ",".join(str(v) for v in sorted(X)))
    for v in sorted(net.nodes.values(), key=lambda v: (v.rank, v.id)):
        eqs = ";".join(format_poly(f) for f in v.content.eqs)
        ineqs = ";".join(format_poly(h) for h in v.content.ineqs)
        lines.append(f"node {v.id} rank={v.rank} eqs={eqs} ineqs={ineqs}")
    for u, w in net.arcs():
        lines.append(f"arc {u} {w}")
    return "\n".join(lines) + "\n"


def _polys(text: str, ring: Ring, lineno: int):
    out = []
    for part in text.split(";"):
        if part.strip():
            try:
                out.append(parse_poly(part, ring))
            except ParseError as e:
                raise ParseError(str(e), line=lineno) from e
    return out


def load_network(text: str) -> ChordalNetwork:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty network dump")
    m = _HEADER.match(lines[0])
    if not m:
        raise ParseError("bad network header", line=1)
    n, p, mode, sq, floor = int(m.group(1)), int(m.group(2)), m.group(3), m.group(4) == "1", int(m.group(5))
    ring = Ring(n, p)
    order: Optional[List[int]] = None
    cliques: Dict[int, List[int]] = {}
    nodes = []
    arcs = []
    for lineno, line in enumerate(lines[1:], start=2):
        if line.startswith("order "):
            order = [int(t) for t in line.split()[1:]]
        elif line.startswith("clique "):
            _, l, vs = line.split(" ", 2)
            cliques[int(l)] = [int(t) for t in vs.split(",") if t]
        elif (mm := _NODE.match(line)) is not None:
            nodes.append((int(mm.group(1)), int(mm.group(2)), mm.group(3), mm.group(4), lineno))
        elif (mm := _ARC.match(line)) is not None:
            arcs.append((int(mm.group(1)), int(mm.group(2))))
        else:
            raise ParseError(f"unrecognized line {line[:40]!r}", line=lineno)
    if sorted(cliques) != list(range(n)):
        raise ParseError(f"expected clique lines for ranks 0..{n - 1}")
    cs = ChordalStructure.from_cliques([cliques[l] for l in range(n)], order)
    net = ChordalNetwork(cs, ring, mode=mode, squarefree=sq, floor=floor)
    for node_id, rank, eqs, ineqs, lineno in nodes:
        net.add_node(rank, PolySystem.of(_polys(eqs, ring, lineno), _polys(ineqs, ring, lineno)), node_id=node_id)
    for u, w in arcs:
        net.add_arc(u, w)
    return net


def write_network(net: ChordalNetwork, path: str | Path) -> Path:
    """Write the dump atomically (temp file in the same directory, then rename)."""
    p = Path(path)
    p.parent.mkdir(parents=True, exist_ok=True)
    fd, tmpname = tempfile.mkstemp(prefix=p.name + ".", dir=str(p.parent))
    os.close(fd)
    tmp = Path(tmpname)
    try:
        tmp.write_text(dump_network(net), encoding="utf-8")
        tmp.replace(p)
    finally:
        if tmp.exists():
            tmp.unlink()
    return p


def read_network(path: str | Path) -> ChordalNetwork:
    return load_network(Path(path).read_text(encoding="utf-8"))
