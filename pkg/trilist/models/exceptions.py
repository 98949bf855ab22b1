class TrilistException(RuntimeError):
    """ Trilist base class for all exceptions. """
    def __init__(self, message=''):
        super().__init__(message)
        self.message = message

    def __str__(self):
        return self.message

    def __repr__(self):
        return "<{} - {}>".format(type(self).__name__, self.message)


class ConfigLoadError(TrilistException):
    """ Raise this if there is a configuration loading error. """
    pass


class ConfigFieldError(TrilistException):
    pass


class GraphReadError(TrilistException):
    pass


class EdgeListParseError(TrilistException):
    def __init__(self, line_number, line):
        """ Initialize the exception for malformed edge list lines.

        Args:
            line_number (int): The 1-based number of the offending line.
            line (str): The content of the offending line.
        """
        super().__init__('Line {}: expected two integer labels, got {!r}'.format(
            line_number, line))
        self.line_number = line_number
        self.line = line


class FormatParseError(TrilistException):
    def __init__(self, what, line_number, reason):
        super().__init__('{} line {}: {}'.format(what, line_number, reason))
        self.line_number = line_number


class GraphSizeError(TrilistException):
    pass


class OrderingInvalid(TrilistException):
    pass


class OrderingMismatch(TrilistException):
    pass


class OrderingMethodUnknown(TrilistException):
    pass


class AlgorithmUnknown(TrilistException):
    pass


class GuardExceeded(TrilistException):
    def __init__(self, what, actual, limit):
        """ Initialize the exception for oracle inputs above their size guard.

        Args:
            what (str): The name of the guarded quantity.
            actual (int): The size of the input.
            limit (int): The configured guard.
        """
        super().__init__('{} is {} but the guard allows at most {}'.format(
            what, actual, limit))
        self.actual = actual
        self.limit = limit


class NaeFormulaInvalid(TrilistException):
    pass


class SetCoverInvalid(TrilistException):
    pass


class SetCoverUncoverable(TrilistException):
    pass


class MultisetEmpty(TrilistException):
    pass


class GadgetInvalid(TrilistException):
    pass


class GadgetSizeExceeded(TrilistException):
    pass


class GraphInvalid(TrilistException):
    pass
