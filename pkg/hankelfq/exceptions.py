# -*- coding: utf-8 -*-
"""hankelfq Exceptions"""

class HankelFqError(Exception):
    """Base class for every error raised by hankelfq"""

class FieldError(HankelFqError, ValueError):
    """Invalid field description or element code"""

class PolynomialError(HankelFqError, ValueError):
    """Invalid polynomial operation (mismatched fields, zero divisor, degree too large)"""

class SingularMatrixError(HankelFqError, ValueError):
    """A nonsingular matrix was required"""
    def __init__(self, what: str = "matrix") -> None:
        HankelFqError.__init__(self, "{} is singular".format(what))

class PairError(HankelFqError, ValueError):
    """A Pade, Hermite or coprime pair violates its invariants"""

class ParameterError(HankelFqError, ValueError):
    """Counting or stratum parameters out of range"""

class ParseError(HankelFqError, ValueError):
    """Malformed text input"""

class InconsistencyError(HankelFqError):
    """Exception class indicating that an identity the library relies on was violated"""
    def __init__(self, identity: str) -> None:
        HankelFqError.__init__(self, "internal inconsistency: {} does not hold".format(identity))

class BudgetExceeded(HankelFqError):
    """Exception class indicating that an exhaustive enumeration is larger than allowed"""
    def __init__(self, required: int, budget: int) -> None:
        HankelFqError.__init__(self,
                "enumeration of {} objects exceeds the budget of {}".format(required, budget))
        self.required = required
        self.budget = budget
