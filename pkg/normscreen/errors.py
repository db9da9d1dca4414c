"""Exceptions raised by normscreen.

Every domain error subclasses both :class:`NormScreenError` and
:class:`ValueError`, so callers can catch either the package-wide base or the
builtin they would expect from a numeric routine.
"""


class NormScreenError(Exception):
    """Base class of all normscreen errors."""


class EmptyInputError(NormScreenError, ValueError):
    """No observations were supplied."""


class NonFiniteValueError(NormScreenError, ValueError):
    """An observation is NaN or infinite.

    Parameters
    ----------
    index : int
        Position of the offending value in the raw (unsorted) input.
    value : float
        The offending value.
    """

    def __init__(self, index: int, value: float) -> None:
        self.index = index
        self.value = value
        super().__init__(
            f"Observation at index {index} is not finite ({value})."
        )


class TooFewObservationsError(NormScreenError, ValueError):
    """The sample is too small for the requested operation."""


class DegenerateSampleError(NormScreenError, ValueError):
    """The sample has zero spread (all observations identical)."""


class DomainError(NormScreenError, ValueError):
    """An argument lies outside the domain of a function."""


class DegenerateBinningError(NormScreenError, ValueError):
    """Fewer than two frequency classes survive merging."""


class InsufficientDFError(NormScreenError, ValueError):
    """The chi-squared test is left with less than one degree of freedom."""


class NumericalUnderflowError(NormScreenError, ValueError):
    """A model probability rounds to exactly 0 or 1.

    Parameters
    ----------
    value : float
        Observation whose model probability underflowed.
    """

    def __init__(self, value: float) -> None:
        self.value = value
        super().__init__(
            f"Model probability of observation {value} rounds to 0 or 1."
        )


class SampleSizeOutOfRangeError(NormScreenError, ValueError):
    """The sample size is outside the validity range of an algorithm."""


class ParseError(NormScreenError, ValueError):
    """An input file could not be parsed.

    Parameters
    ----------
    line : int
        1-based line number of the offending record.
    message : str
        Description of the problem.
    """

    def __init__(self, line: int, message: str) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}")


class ConfigError(NormScreenError, ValueError):
    """A run configuration is inconsistent."""


__all__ = [
    "NormScreenError",
    "EmptyInputError",
    "NonFiniteValueError",
    "TooFewObservationsError",
    "DegenerateSampleError",
    "DomainError",
    "DegenerateBinningError",
    "InsufficientDFError",
    "NumericalUnderflowError",
    "SampleSizeOutOfRangeError",
    "ParseError",
    "ConfigError",
]
