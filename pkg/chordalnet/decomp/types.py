from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, Optional, Tuple

from ..ring import Poly, PolySystem, format_poly, mdeg, monic, mvar, poly_key


@dataclass(frozen=True, eq=False)
class TriangularSet:
    """Polynomials with pairwise distinct main variables, largest main variable first."""

    polys: Tuple[Poly, ...] = ()

    @staticmethod
    def of(polys: Iterable[Poly]) -> "TriangularSet":
        by_rank: Dict[int, Poly] = {}
        for f in polys:
            if not f:
                continue
            r = mvar(f)
            if r in by_rank:
                raise ValueError(f"two members with main variable x{r}")
            by_rank[r] = monic(f)
        return TriangularSet(tuple(by_rank[r] for r in sorted(by_rank)))

    def __iter__(self) -> Iterator[Poly]:
        return iter(self.polys)

    def __len__(self) -> int:
        return len(self.polys)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, TriangularSet) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def key(self) -> Tuple:
        return tuple(poly_key(f) for f in self.polys)

    def ranks(self) -> Tuple[int, ...]:
        return tuple(mvar(f) for f in self.polys)

    def at(self, rank: int) -> Optional[Poly]:
        for f in self.polys:
            if mvar(f) == rank:
                return f
        return None

    def degree(self) -> int:
        d = 1
        for f in self.polys:
            d *= mdeg(f)
        return d

    def __str__(self) -> str:
        return "(" + ", ".join(format_poly(f) for f in self.polys) + ")"


@dataclass(frozen=True, eq=False)
class RegularSystem:
    """A triangular set T with inequations U; its zero set is Z(T, U)."""

    T: TriangularSet
    U: Tuple[Poly, ...] = ()

    def as_system(self) -> PolySystem:
        return PolySystem.of(self.T.polys, self.U)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RegularSystem) and self.as_system() == other.as_system()

    def __hash__(self) -> int:
        return hash(self.as_system())

    def __str__(self) -> str:
        s = str(self.T)
        if self.U:
            s += " / " + ", ".join(format_poly(h) for h in self.U)
        return s
