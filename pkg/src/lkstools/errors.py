"""Exception types shared by every module."""


class ToolkitError(Exception):
    pass


class InputError(ToolkitError):
    """Malformed or out-of-contract input (bad vertex id, bad file, bad range)."""


class PreconditionError(ToolkitError):
    """A documented operation precondition does not hold for this input."""


class InternalContradictionError(ToolkitError):
    """A guaranteed-to-exist object could not be constructed.

    Raised only where a proven statement promises existence; hitting this
    means either a bug or a violated (unchecked) hypothesis upstream.
    """
