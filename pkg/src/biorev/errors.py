"""Exception hierarchy shared by all modules."""


class BiorevError(Exception):
    pass


class FormulaSyntaxError(BiorevError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at offset {position}")
        self.position = position


class UnknownAtomError(BiorevError):
    def __init__(self, name: str, position: int):
        super().__init__(f"unknown atom {name!r} at offset {position}")
        self.name = name
        self.position = position


class ProblemFileError(BiorevError):
    """Malformed interpretation/problem file."""


class InvariantError(BiorevError):
    """A structural precondition or invariant does not hold (not anchored, wrong class, ...)."""


class SizeGuardError(BiorevError):
    """Exhaustive enumeration requested over too many atoms."""
