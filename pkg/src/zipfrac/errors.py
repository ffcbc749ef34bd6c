"""Exception hierarchy.

Interval numbers in messages are 1-based to match how subintervals are
usually written (I_1 ... I_{n-1}); the ``index`` attribute is the 0-based
array position.
"""

from __future__ import annotations


class ZipfracError(ValueError):
    """Base class for all validation and evaluation errors."""


class NonIncreasingKnots(ZipfracError):
    def __init__(self, index: int):
        self.index = index
        super().__init__(
            f"knots must be strictly increasing: t[{index}] >= t[{index + 1}]"
        )


class LengthMismatch(ZipfracError):
    def __init__(self, what: str, expected: int, got: int):
        self.what = what
        self.expected = expected
        self.got = got
        super().__init__(f"{what}: expected length {expected}, got {got}")


class TooFewPoints(ZipfracError):
    def __init__(self, n: int):
        self.n = n
        super().__init__(f"need at least 3 data points, got {n}")


class NonFiniteValue(ZipfracError):
    def __init__(self, what: str):
        self.what = what
        super().__init__(f"{what} contains non-finite entries")


class InvalidSignature(ZipfracError):
    def __init__(self, index: int, value):
        self.index = index
        super().__init__(f"signature entry {index + 1} must be 0 or 1, got {value!r}")


class IntervalError(ZipfracError):
    """An error attributable to one subinterval."""

    def __init__(self, index: int, detail: str):
        self.index = index
        self.interval = index + 1
        super().__init__(f"interval {self.interval}: {detail}")


class NonContractiveScaling(IntervalError):
    pass


class NonPositiveDenominatorParam(IntervalError):
    pass


class LambdaOutOfBounds(IntervalError):
    pass


class IndexOutOfRange(ZipfracError):
    pass


class ThetaOutOfRange(ZipfracError):
    pass


class GridMismatch(ZipfracError):
    pass


class OutOfDomain(ZipfracError):
    pass


class NotClassical(ZipfracError):
    pass


class NonPositiveData(ZipfracError):
    pass


class NotConverged(ZipfracError):
    def __init__(self, iterations: int, change: float):
        self.iterations = iterations
        self.change = change
        super().__init__(
            f"fixed-point iteration did not converge after {iterations} "
            f"iterations (last sup-norm change {change:.3e})"
        )
