"""Exception types raised across the package."""


class QQSchurError(Exception):
    """Base class for all errors raised by qqschur."""


class NotDivisible(QQSchurError, ArithmeticError):
    """Exact division failed: the quotient does not exist in the ring."""


class NotInSpan(QQSchurError, ValueError):
    """Target vector is not in the column span."""


class NotIntegral(QQSchurError, ArithmeticError):
    """A solution exists over the fraction field but not over the base ring."""


class NotMinimalRep(QQSchurError, ValueError):
    """Permutation is not a minimal length double coset representative."""


class BadDecoration(QQSchurError, ValueError):
    """A Clifford decoration sits on an empty block."""


class RingNotInvertible(QQSchurError, ArithmeticError):
    """Operation needs q to be invertible in the coefficient ring."""


class NotInModule(QQSchurError, ValueError):
    """Element fails a module membership test."""


class SizeGuard(QQSchurError, RuntimeError):
    """Computation refused because it exceeds a configured size bound."""

    def __init__(self, guard, value, bound):
        self.guard = guard
        self.value = value
        self.bound = bound
        super().__init__(f"size guard {guard!r}: {value} exceeds bound {bound}")


class RankTooSmall(QQSchurError, ValueError):
    """n < r where n >= r is required."""
