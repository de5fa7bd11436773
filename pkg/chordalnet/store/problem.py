"""Problem files: one polynomial per line plus ``p``/``n``/``order`` directives.

    # 3-coloring of a triangle
    p = 13
    order = 0 1 2
    x0^3 - 1
    x0^2 + x0*x1 + x1^2
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Tuple

from ..errors import ParseError
from ..ring import Poly, Ring, format_poly
from ..ring.parse import RawTerm, build_poly, max_index, parse_terms
from ..utils.env import default_prime

_DIRECTIVE = re.compile(r"^\s*(p|n|order)\s*=\s*(.*?)\s*(?:#.*)?$")


@dataclass
class Problem:
    ring: Ring
    polys: List[Poly]
    order: Optional[Tuple[int, ...]] = None


def parse_problem_text(text: str, prime: Optional[int] = None) -> Problem:
    p: Optional[int] = None
    n: Optional[int] = None
    order: Optional[Tuple[int, ...]] = None
    raws: List[Tuple[int, List[RawTerm]]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        m = _DIRECTIVE.match(line)
        if m:
            key, val = m.group(1), m.group(2)
            try:
                if key == "order":
                    order = tuple(int(t) for t in val.split())
                elif key == "p":
                    p = int(val)
                else:
                    n = int(val)
            except ValueError as e:
                raise ParseError(f"bad value for {key}: {val!r}", line=lineno, column=line.index("=") + 2) from e
            continue
        raws.append((lineno, parse_terms(line, line=lineno)))

    if not raws:
        raise ParseError("no polynomials in problem file")
    top = max(max_index(raw) for _, raw in raws)
    if n is None:
        n = max(top + 1, len(order) if order else 0, 1)
    if top >= n:
        raise ParseError(f"variable x{top} out of range for n = {n}")
    if order is not None and sorted(order) != list(range(n)):
        raise ParseError(f"order must list each of 0..{n - 1} exactly once")
    ring = Ring(n, prime or p or default_prime())
    polys = []
    for lineno, raw in raws:
        try:
            polys.append(build_poly(raw, ring))
        except ParseError as e:
            raise ParseError(str(e), line=lineno) from e
    return Problem(ring, polys, order)


def parse_problem(path: str | Path, prime: Optional[int] = None) -> Problem:
    """Read a problem file; ``prime`` overrides the file's ``p`` directive."""
    return parse_problem_text(Path(path).read_text(encoding="utf-8"), prime)


def format_problem(problem: Problem) -> str:
    lines = [f"p = {problem.ring.p}", f"n = {problem.ring.n}"]
    if problem.order is not None:
        lines.append("order = " + " ".join(str(i) for i in problem.order))
    lines.extend(format_poly(f) for f in problem.polys)
    return "\n".join(lines) + "\n"
