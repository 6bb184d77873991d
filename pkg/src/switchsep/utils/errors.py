"""
Exceptions raised by switchsep.

Plain invalid arguments raise ``ValueError``; the classes below carry
extra context (a byte offset, a line number) or mark failures that are
not caused by a bad argument value.
"""


class Graph6ParseError(ValueError):
    """
    A graph6 string is malformed.

    Args:
        msg (str): description of the problem.
        offset (int): byte offset in the input where the problem starts.
    """

    def __init__(self, msg, offset):
        super(Graph6ParseError, self).__init__(
            '%s (at byte offset %d)' % (msg, offset))
        self.offset = offset


class EdgeListParseError(ValueError):
    """
    An edge-list text is malformed.

    Args:
        msg (str): description of the problem.
        line (int): 1-based line number.
    """

    def __init__(self, msg, line):
        super(EdgeListParseError, self).__init__(
            '%s (at line %d)' % (msg, line))
        self.line = line


class PreconditionError(ValueError):
    """
    An operation was called on input violating its precondition.
    """


class ScaleLimitError(RuntimeError):
    """
    The requested computation exceeds the configured desk-scale bound.
    """


class CheckpointError(RuntimeError):
    """
    A search state file is unreadable or belongs to another search.
    """
