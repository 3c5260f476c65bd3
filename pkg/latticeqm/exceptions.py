class DomainError(ValueError):
    """A parameter lies outside the domain where the construction is defined"""


class DimensionMismatchError(ValueError):
    """Operands live in Hilbert spaces of different dimension"""


class ContractViolationError(ValueError):
    """An input or a flagged value breaks the invariant it promises (normality, unitarity, normalization)"""


class SingularSumError(ArithmeticError):
    """A closed-form lattice sum was requested exactly at one of its singular points"""
