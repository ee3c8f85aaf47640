class IntegrityError(ArithmeticError):
    """An exact computation produced a value its algebra rules out.

    Raised instead of returning a wrong answer, e.g. when a closed form that
    must divide exactly by 2*sqrt(2) leaves a remainder.  Always a bug.
    """


class QuarantinedIdentityError(LookupError):
    """Evaluation was requested for an identity that references an undefined symbol."""
