"""Exception types shared across the package."""

from __future__ import annotations


class GeamError(Exception):
    """Base class for every library error."""


class DimensionMismatch(GeamError):
    """Operands live on Hilbert spaces of different dimension."""


class InvalidBloch(GeamError):
    """Bloch vector lies outside the unit ball beyond tolerance."""


class InvalidRank(GeamError):
    """Requested state rank is not in 1..d."""


class DomainError(GeamError):
    """Scalar argument outside the mathematical domain of the function."""


class AlphaOutOfRange(GeamError):
    """Entropy order outside the range for which the relation is proven."""


class DegenerateFrame(GeamError):
    """Self-overlap equals intra-group overlap, so averaging weights blow up."""


class BadWeights(GeamError):
    """Group weights are nonpositive or do not sum to one."""


class InconsistentCrossOverlap(GeamError):
    """Cross-group overlap ratio is not uniform over group pairs."""


class NotNormalized(GeamError):
    """A vector expected to have unit norm does not."""


class UnequalOutcomeCounts(GeamError):
    """Relation requires every POVM to have the same number of outcomes."""


class NotPrime(GeamError):
    """Basis construction is only available for prime dimensions."""


class NonQubit(GeamError):
    """Operation is defined for dimension 2 only."""


class UnknownId(GeamError):
    """No catalog entry with the requested id."""


class ParseError(GeamError):
    """Input file does not match the expected schema."""


class NotSymmetric(GeamError):
    """A POVM collection violates one of the symmetry conditions."""

    def __init__(self, condition: str, residual: float, mu: int | None = None,
                 i: int | None = None, j: int | None = None):
        self.condition = condition
        self.residual = residual
        self.mu = mu
        self.i = i
        self.j = j
        where = "" if mu is None else f" (group {mu}" + (
            f", elements {i},{j})" if i is not None else ")")
        super().__init__(f"symmetry condition '{condition}' fails{where}, "
                         f"residual {residual:.3e}")


class NotEquiangular(GeamError):
    """Operator groups violate one of the equiangular-measurement conditions."""

    def __init__(self, condition: str, residual: float, mu: int | None = None):
        self.condition = condition
        self.residual = residual
        self.mu = mu
        where = "" if mu is None else f" (group {mu})"
        super().__init__(f"equiangular condition '{condition}' fails{where}, "
                         f"residual {residual:.3e}")


class NotConicalDesign(GeamError):
    """Per-group design constants differ, so no conical 2-design is formed."""

    def __init__(self, residual: float, mu: int | None = None,
                 message: str | None = None):
        self.residual = residual
        self.mu = mu
        super().__init__(message or "group design constants are not uniform, "
                                    f"residual {residual:.3e}")
