class LatticeError(Exception):
    """Base class of every error raised by the lattice toolkit."""


class InputError(LatticeError):
    """Malformed record, unknown name or parameter out of range."""


class DegenerateLatticeError(LatticeError):
    pass


class IndefiniteFormError(LatticeError):
    pass


class OddLatticeError(LatticeError):
    pass


class NonIntegralError(LatticeError):
    pass


class DependentVectorsError(LatticeError):
    def __init__(self, message, dependency=None):
        super().__init__(message)
        self.dependency = dependency


class BoundExceededError(LatticeError):
    def __init__(self, message, size=None, bound=None):
        super().__init__(message)
        self.size = size
        self.bound = bound


class EnumerationCapError(LatticeError):
    """Raised when an enumeration visits more nodes than allowed.

    ``partial`` holds the vectors found in the finished branches and
    ``next_branch`` is the index from which ``short_vectors(resume=...)``
    continues.
    """

    def __init__(self, message, partial=None, next_branch=0, cap=None):
        super().__init__(message)
        self.partial = partial if partial is not None else []
        self.next_branch = next_branch
        self.cap = cap


class GroupCapError(LatticeError):
    pass


class GlueError(LatticeError):
    def __init__(self, message, element=None):
        super().__init__(message)
        self.element = element


class PropertyViolation(LatticeError):
    """A verification check found a property that does not hold."""

    def __init__(self, message, check=None):
        super().__init__(message)
        self.check = check
