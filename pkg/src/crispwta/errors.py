"""Exception types shared across the package."""


class WtaError(Exception):
    """Base class for all errors raised by crispwta."""


class BudgetExceeded(WtaError):
    """A budgeted search gave up; the underlying object may be infinite.

    ``explored`` records how many distinct items were found before giving up.
    """

    def __init__(self, message="budget exceeded", explored=None):
        super().__init__(message)
        self.explored = explored


class SafetyCapExceeded(WtaError):
    pass


class NotEstablished(WtaError):
    """The finite order property could not be established within budget.

    ``stage`` is ``"closure"`` when the multiplicative closure did not
    saturate and ``"order"`` when some element's additive orbit did not close.
    """

    def __init__(self, stage, message=None):
        super().__init__(message or f"finite order property not established ({stage})")
        self.stage = stage


class NotCrispDeterministic(WtaError):
    pass


class AlphabetMismatch(WtaError):
    pass


class NotRepresentable(WtaError):
    pass


class MalformedAcceptor(WtaError):
    pass


class ParseError(WtaError):
    def __init__(self, message, line=None, column=None):
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)
        self.line = line
        self.column = column
