"""
Exception hierarchy for grpwild.

Every error raised on purpose by the library derives from GroupError, so the
CLI can map the whole family onto exit code 3 and a structured error body
(see main.py). Errors that signal an internal inconsistency (a linear system
that should be solvable but is not) are kept distinct so that they surface as
bugs rather than as usage problems.

Version: 0.4.0
License: MIT
"""


class GroupError(Exception):
    """Base class for all grpwild errors."""

    error_type = "group_error"


class LimitExceededError(GroupError):
    """A configured size limit (enumeration, brute-force Aut, closure) was hit."""

    error_type = "limit_exceeded"

    def __init__(self, what: str, size: int | str, limit: int):
        super().__init__(f"{what}: size {size} exceeds limit {limit}")
        self.what = what
        self.size = size
        self.limit = limit


class NotAGroupError(GroupError):
    """A table, subset or permutation set fails a group axiom."""

    error_type = "not_a_group"


class NotNormalError(GroupError):
    """A subgroup required to be normal is not."""

    error_type = "not_normal"


class UnknownAtomError(GroupError):
    """A catalog atom name is not recognised."""

    error_type = "unknown_atom"


class InvalidParameterError(GroupError):
    """A parameter is outside its valid range (non-prime p, bad block index...)."""

    error_type = "invalid_parameter"


class ParentMismatchError(GroupError):
    """Elements or automorphisms of different groups were combined."""

    error_type = "parent_mismatch"


class PreconditionError(GroupError):
    """An operation's documented precondition does not hold."""

    error_type = "precondition"


class EquivarianceError(GroupError):
    """A linear map on B does not commute with the action of A."""

    error_type = "equivariance"

    def __init__(self, basis_index: int, generator: int):
        super().__init__(
            f"linear map is not A-equivariant: fails on basis vector {basis_index} "
            f"and generator {generator}"
        )
        self.basis_index = basis_index
        self.generator = generator


class InfeasibleSystemError(GroupError):
    """A linear system that is guaranteed solvable had no solution."""

    error_type = "infeasible_system"


class TripletError(GroupError):
    """(G, D0, D1) is not an ordinary triplet."""

    error_type = "triplet"

    def __init__(self, message: str, missing: dict[str, int] | None = None):
        super().__init__(message)
        self.missing = missing or {}


class ExprSyntaxError(GroupError):
    """A group expression could not be parsed."""

    error_type = "syntax"

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class UsageError(GroupError):
    """Bad command-line arguments or input files."""

    error_type = "usage"
