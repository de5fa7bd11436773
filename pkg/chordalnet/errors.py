"""Exception hierarchy shared by every chordalnet module.

All domain failures derive from :class:`ChordalNetError` so that callers (and
the CLI, which maps them to exit code 1) can catch them in one place.
"""

from __future__ import annotations

from typing import Optional


class ChordalNetError(RuntimeError):
    """Base class; ``rank`` is filled in when the driver knows where it failed."""

    rank: Optional[int] = None


class ConstantPolynomial(ChordalNetError):
    pass


class BudgetExceeded(ChordalNetError):
    pass


class InseparableDegree(ChordalNetError):
    pass


class NotZeroDimensional(ChordalNetError):
    pass


class NotBinomial(ChordalNetError):
    pass


class UnsupportedPolynomial(ChordalNetError):
    pass


class NotZeroDimensionalNetwork(ChordalNetError):
    pass


class NonSplittingSpecialization(ChordalNetError):
    def __init__(self, rank: int, roots: int, degree: int):
        super().__init__(
            f"specialized polynomial at rank {rank} has {roots} roots in GF(p) but degree {degree}; "
            "retry with a prime for which it splits (p = 1 mod q for q-coloring systems)"
        )
        self.rank = rank


class FieldTooSmall(ChordalNetError):
    def __init__(self, p: int, bound: int):
        super().__init__(f"field too small for randomized membership: p={p} < 2nq={bound}")
        self.p = p
        self.bound = bound


class NotTriangularNetwork(ChordalNetError):
    pass


class NotPathDecomposable(ChordalNetError):
    pass


class PrimalityUnknown(ChordalNetError):
    def __init__(self, chain: str):
        super().__init__(f"cannot decide whether the saturated ideal of chain ({chain}) is prime")
        self.chain = chain


class NonPrimeChain(ChordalNetError):
    def __init__(self, chain: str):
        super().__init__(f"saturated ideal of chain ({chain}) is not prime")
        self.chain = chain


class ParseError(ChordalNetError, ValueError):
    def __init__(self, message: str, line: int = 0, column: int = 0):
        where = f"line {line}, column {column}: " if line else (f"column {column}: " if column else "")
        super().__init__(where + message)
        self.line = line
        self.column = column


class NonPrimeModulus(ChordalNetError, ValueError):
    pass


class NotSquarefree(UserWarning):
    """Counting on a network that was not refined to squarefree chains (result is an upper bound)."""
