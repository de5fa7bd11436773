"""Text grammar for polynomials.

    term   = [coeff][*] factor (* factor)*  |  coeff
    factor = x<idx>[^<exp>]

Terms are joined by ``+`` or ``-`` (``−`` is accepted as well); whitespace is
insignificant. Columns reported in errors are 1-based positions in the input.
"""

from __future__ import annotations

from typing import Dict, List, Tuple

from ..errors import ParseError
from .base import Poly, Ring

RawTerm = Tuple[int, Dict[int, int]]

_MINUS = ("-", "−")


class _Scanner:
    def __init__(self, text: str, line: int):
        self.chars = [(ch, col) for col, ch in enumerate(text, start=1) if not ch.isspace()]
        self.pos = 0
        self.line = line
        self.end_col = len(text) + 1

    def peek(self) -> str:
        return self.chars[self.pos][0] if self.pos < len(self.chars) else ""

    def col(self) -> int:
        return self.chars[self.pos][1] if self.pos < len(self.chars) else self.end_col

    def take(self) -> str:
        ch = self.peek()
        self.pos += 1
        return ch

    def fail(self, msg: str) -> ParseError:
        return ParseError(msg, line=self.line, column=self.col())

    def number(self, what: str) -> int:
        if not self.peek().isdigit():
            got = self.peek() or "end of input"
            raise self.fail(f"expected {what}, got {got!r}")
        digits = []
        while self.peek().isdigit():
            digits.append(self.take())
        return int("".join(digits))


def _factor(sc: _Scanner, exps: Dict[int, int]) -> None:
    sc.take()  # 'x'
    idx = sc.number("variable index")
    e = 1
    if sc.peek() == "^":
        sc.take()
        e = sc.number("exponent")
    exps[idx] = exps.get(idx, 0) + e


def parse_terms(text: str, line: int = 0) -> List[RawTerm]:
    """Parse into raw (coefficient, {index: exponent}) terms without a ring."""
    sc = _Scanner(text, line)
    if not sc.peek():
        raise sc.fail("empty polynomial")
    out: List[RawTerm] = []
    sign = 1
    if sc.peek() == "+" or sc.peek() in _MINUS:
        sign = -1 if sc.take() in _MINUS else 1
    while True:
        coeff = None
        exps: Dict[int, int] = {}
        if sc.peek().isdigit():
            coeff = sc.number("coefficient")
            if sc.peek() == "*":
                sc.take()
                if sc.peek() != "x":
                    raise sc.fail("expected variable after '*'")
        if sc.peek() == "x":
            _factor(sc, exps)
            while sc.peek() == "*":
                sc.take()
                if sc.peek() != "x":
                    raise sc.fail("expected variable after '*'")
                _factor(sc, exps)
        if coeff is None and not exps:
            raise sc.fail(f"expected term, got {sc.peek() or 'end of input'!r}")
        out.append((sign * (1 if coeff is None else coeff), exps))
        if not sc.peek():
            return out
        ch = sc.take()
        if ch == "+":
            sign = 1
        elif ch in _MINUS:
            sign = -1
        else:
            sc.pos -= 1
            raise sc.fail(f"unexpected character {ch!r}")


def max_index(raw: List[RawTerm]) -> int:
    return max((i for _, exps in raw for i in exps), default=-1)


def build_poly(raw: List[RawTerm], ring: Ring) -> Poly:
    f = ring.zero
    for c, exps in raw:
        if any(i >= ring.n for i in exps):
            raise ParseError(f"variable index out of range for n={ring.n}")
        f += ring.monomial(exps, c)
    return f


def parse_poly(text: str, ring: Ring) -> Poly:
    return build_poly(parse_terms(text), ring)
