"""Exception classes.

Everything a caller can trigger with bad input derives from ``FFCFError``
(a ``ValueError``).  ``IterationBudgetExceeded`` is the one resource error;
the CLI maps it to exit status 2.
"""


class FFCFError(ValueError):
    pass


class NotPrime(FFCFError):
    pass


class EvenCharacteristic(FFCFError):
    pass


class ReducibleModulus(FFCFError):
    pass


class DivisionByZero(FFCFError, ZeroDivisionError):
    pass


class BothZero(FFCFError):
    pass


class ConstantInput(FFCFError):
    pass


class ZeroInput(FFCFError):
    pass


class ZeroDivisor(FFCFError, ZeroDivisionError):
    """No nonzero coefficient is known before the precision bound."""


class OddValuation(FFCFError):
    pass


class NonSquareLeadingCoeff(FFCFError):
    pass


class InsufficientPrecision(FFCFError):
    pass


class SquareDiscriminant(FFCFError):
    """The would-be surd is rational."""


class NotInLaurentField(FFCFError):
    """The square root does not exist in F_q((1/Y))."""


class SingularMatrix(FFCFError):
    pass


class NotInM(FFCFError):
    """Argument is not in the maximal ideal M = {v >= 1}."""


class NotReduced(FFCFError):
    pass


class ReducibleP(FFCFError):
    pass


class ConstantDigit(FFCFError):
    pass


class ParseError(FFCFError):
    pass


class IterationBudgetExceeded(RuntimeError):
    pass
