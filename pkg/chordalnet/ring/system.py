from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Tuple

from .base import Poly, format_poly, is_constant, monic, mvar, poly_key


def _canonical(polys: Iterable[Poly]) -> Tuple[Poly, ...]:
    seen = {}
    for f in polys:
        if not f:
            continue
        g = monic(f)
        seen.setdefault(poly_key(g), g)
    return tuple(
        g for _, g in sorted(seen.items(), key=lambda kv: (mvar(kv[1]) if not is_constant(kv[1]) else 1 << 30, kv[0]))
    )


@dataclass(frozen=True, eq=False)
class PolySystem:
    """Equations F and inequations H; its zero set is the quasi-variety Z(F, H).

    Members are stored monic, deduplicated and sorted (largest main variable
    first), so two systems with equal :meth:`key` are presented identically.
    """

    eqs: Tuple[Poly, ...] = ()
    ineqs: Tuple[Poly, ...] = ()

    @staticmethod
    def of(eqs: Iterable[Poly] = (), ineqs: Iterable[Poly] = ()) -> "PolySystem":
        ineqs = [h for h in ineqs if not is_constant(h)]
        return PolySystem(_canonical(eqs), _canonical(ineqs))

    def key(self) -> Tuple:
        return (tuple(poly_key(f) for f in self.eqs), tuple(poly_key(h) for h in self.ineqs))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PolySystem) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __add__(self, other: "PolySystem") -> "PolySystem":
        return PolySystem.of(self.eqs + other.eqs, self.ineqs + other.ineqs)

    def is_empty(self) -> bool:
        return not self.eqs and not self.ineqs

    def polys(self) -> List[Poly]:
        return list(self.eqs) + list(self.ineqs)

    def without_ineqs(self) -> "PolySystem":
        return PolySystem(self.eqs, ())

    def label(self) -> str:
        s = ", ".join(format_poly(f) for f in self.eqs) or "0"
        if self.ineqs:
            s += " / " + ", ".join(format_poly(h) for h in self.ineqs)
        return s
