"""Exception types raised by the engine."""


class QppError(Exception):
    """Base class for every engine error."""


class NonUnitConstantTerm(QppError, ZeroDivisionError):
    """The q^0 coefficient is not an invertible monomial."""


class ZeroSubstitutionWithNegativeExponent(QppError, ZeroDivisionError):
    pass


class OrderExceeded(QppError, IndexError):
    pass


class NonIntegralOffset(QppError, ValueError):
    pass


class DivergentFormalProduct(QppError, ValueError):
    pass


class ValuationViolation(QppError, ValueError):
    """A summand has lower q-valuation than its index allows."""


class DivisionByZeroParameter(QppError, ZeroDivisionError):
    pass


class TableTooSmall(QppError, ValueError):
    pass


class NotPentagonal(QppError, ValueError):
    pass


class UnknownCheckId(QppError, KeyError):
    pass


class UnknownSeriesName(QppError, KeyError):
    pass


class EnumerationBudgetExceeded(QppError, ValueError):
    pass
