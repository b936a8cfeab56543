"""Exception hierarchy.

``AlgebraError`` covers anything wrong with the *input* (bad file syntax,
ideals that are not admissible, malformed module expressions); the CLI maps
it to exit code 2.  ``UnsupportedOperationError`` marks operations that are
only defined for a restricted class of algebras (exit code 1).
"""


class DellkitError(Exception):
    pass


class AlgebraError(DellkitError):
    pass


class AlgebraSyntaxError(AlgebraError):
    """Syntax error in an algebra file, with a 1-based line number."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotAdmissibleError(AlgebraError):
    """The monomial ideal leaves infinitely many nonzero paths."""


class ModuleExprError(AlgebraError):
    """Malformed module expression."""


class UnsupportedOperationError(DellkitError):
    """Operation not defined for this kind of algebra."""
