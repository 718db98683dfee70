class ArrangeCountError(Exception):
    """Base class of every error raised by arrangecount on a domain condition."""

    pass


class BudgetExceeded(ArrangeCountError):
    """An enumeration would exceed its configured budget."""

    pass


class InvalidParams(ArrangeCountError):
    """Parameters outside the domain of a family or construction."""

    pass
