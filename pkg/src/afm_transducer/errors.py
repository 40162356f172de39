"""Exception types shared across the package."""


class SpinFlopError(ValueError):
    """Static field exceeds the spin-flop threshold of the collinear state.

    The lower resonance branch would become imaginary; the assumed ground
    state is unstable and none of the uniform-mode results apply.
    """


class ClosedFormValidityError(ValueError):
    """A closed-form expression was requested outside its validity domain.

    The Bogoliubov and magneto-optic closed forms hold only for a pure
    easy-axis material (zero hard-axis anisotropy).
    """


class UnstableHamiltonianError(ValueError):
    """The bosonic coefficient matrix is not positive definite.

    Signals an unstable magnetic ground state, as opposed to a numerical
    failure of the eigen-solver.
    """


class SingularMatrixError(ValueError):
    """The dynamics matrix could not be inverted at the probe frequency."""


class ConfigError(ValueError):
    """A run configuration is malformed.  Carries the offending line."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
