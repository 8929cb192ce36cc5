"""Exception hierarchy shared by all vstatspec modules."""


class VstatspecError(Exception):
    """Base class for all errors raised by this package."""


class InputError(VstatspecError, ValueError):
    """Invalid user input: bad symbols, malformed tables, out-of-range values."""


class UnsupportedFormError(VstatspecError):
    """Operation not defined for the kernel form or parameters given."""


class BudgetError(VstatspecError):
    """An enumeration or summation would exceed its configured budget."""


class DegenerateRootsError(InputError):
    """Repeated (or non-real) roots where the closed-form analysis needs distinct real ones."""


class ReducibleChainError(InputError):
    """Transition matrix has more than one recurrent class; stationary vector is ambiguous."""

    def __init__(self, classes):
        self.classes = [sorted(c) for c in classes]
        super().__init__(
            "transition matrix is reducible; recurrent classes: "
            + ", ".join(str(c) for c in self.classes)
        )


class StationarityError(InputError):
    """A Markov chain fails the stationarity requirement p P = p."""


class EmptyFiberError(VstatspecError):
    """No measure in the class attains the requested mean value."""


class SolverError(VstatspecError):
    """Constrained solver failed to converge from every start."""

    def __init__(self, message, diagnostics=None):
        self.diagnostics = diagnostics or {}
        super().__init__(message)
