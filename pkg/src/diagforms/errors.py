"""Exception hierarchy. The CLI maps these onto exit codes."""


class DiagformsError(Exception):
    """Base class for all package errors."""


class InputError(DiagformsError, ValueError):
    """Malformed or out-of-contract input (CLI exit code 2)."""


class ParameterError(InputError):
    """A parameter combination violates a selection constraint."""


class RankError(DiagformsError):
    """No nonzero form of the requested degree vanishes on the points."""

    def __init__(self, rank: int, size: int):
        self.rank = rank
        self.size = size
        super().__init__(
            f"monomial evaluation matrix has full rank {rank} = s; "
            f"no nonzero form of this degree vanishes on all points"
        )


class BudgetError(DiagformsError, RuntimeError):
    """A memory or time budget would be exceeded (CLI exit code 3)."""
