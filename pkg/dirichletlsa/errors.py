"""Exceptions raised by dirichletlsa.

Input problems derive from ValueError and numerical failures derive from
ArithmeticError, so callers (and the command line) can tell "fix your input"
apart from "raise the precision or the iteration budget".

"""


################################################################################
#### INPUT ERRORS ##############################################################
#
class ValidationError(ValueError):
    """A value or a piece of text is malformed or out of range.

    Attributes:
        reason (str): The message without its position prefix.
        line (int or None): 1-based line number in the source document, when
            the error came from parsing a spec file.
        column (int or None): 1-based column of the offending text.

    """
    def __init__(self, msg, line=None, column=None):
        self.reason = msg
        self.line = line
        self.column = column
        if line is not None and column is not None:
            msg = "line " + str(line) + ", column " + str(column) + ": " + msg
        elif line is not None:
            msg = "line " + str(line) + ": " + msg
        elif column is not None:
            msg = "column " + str(column) + ": " + msg
        super(ValidationError, self).__init__(msg)
#
#
class ClassificationError(ValueError):
    """The rational rank of a set of exponents cannot be decided exactly."""
    pass
#
#
class DomainError(ValueError):
    """An operation was handed an object outside the set it is defined on."""
    pass


################################################################################
#### NUMERICAL FAILURES ########################################################
#
class PrecisionExhaustedError(ArithmeticError):
    """Interval certification failed even at the maximum working precision."""
    pass
#
#
class IndeterminateError(ArithmeticError):
    """A certified comparison could not be decided at the working precision."""
    pass
#
#
class ConvergenceError(ArithmeticError):
    """An iteration did not converge within its budget.

    Attributes:
        partial: Whatever result had been assembled when the budget ran out.
        unconverged (list of int): Indices of the items that did not converge.

    """
    def __init__(self, msg, partial=None, unconverged=()):
        self.partial = partial
        self.unconverged = list(unconverged)
        super(ConvergenceError, self).__init__(msg)
#
#### EOF #######################################################################
################################################################################
