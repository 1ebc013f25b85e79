"""Exception types shared across the package."""


class KineticNoiseError(Exception):
    """Base class for all package errors."""


class ConfigError(KineticNoiseError):
    """A configuration violates one or more module preconditions.

    ``violations`` lists one message per violated constraint.
    """

    def __init__(self, violations):
        if isinstance(violations, str):
            violations = [violations]
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class DomainTooSmallError(KineticNoiseError):
    """The velocity (or space) grid cannot contain the requested data."""


class StepTooLargeError(KineticNoiseError):
    """The one-step characteristic map is not guaranteed invertible."""


class InvariantViolation(KineticNoiseError):
    """A structural invariant (sign, support, non-negativity) was breached.

    Carries the offending location so solver aborts are diagnosable.
    """

    def __init__(self, message, step=None, cell=None, value=None):
        self.step = step
        self.cell = cell
        self.value = value
        detail = message
        if step is not None:
            detail += f" (step {step}"
            if cell is not None:
                detail += f", cell {cell}"
            if value is not None:
                detail += f", value {value:.3e}"
            detail += ")"
        super().__init__(detail)


class QuadratureError(KineticNoiseError):
    """A quadrature refinement loop failed to converge."""


class AssemblyError(KineticNoiseError):
    """Sub-solution assembly failed a required bound."""
