"""Exception hierarchy shared by all wptsim modules.

Two broad families matter to callers (and to the CLI exit-code mapping):
input/validation problems and numerical failures encountered mid-computation.
"""


class WptError(Exception):
    """Base class for all wptsim errors."""


class ValidationError(WptError, ValueError):
    """Invalid input: violated invariants, bad configuration, malformed data."""


class ConfigError(ValidationError):
    """Run configuration file is malformed or violates the schema."""


class TouchstoneParseError(ValidationError):
    """Touchstone (.s2p) content could not be parsed."""


class DegenerateCouplingError(ValidationError):
    """Coupling inputs describe a system with no power transfer path."""


class NumericalError(WptError, RuntimeError):
    """A computation failed numerically on otherwise valid input."""


class SingularConfigurationError(NumericalError):
    """Geometry for which the Neumann integral is singular (coincident loops)."""


class BracketError(NumericalError):
    """Root bracketing failed: no sign change on the search interval."""


class SingularSystemError(NumericalError):
    """Impedance matrix is singular or the linear solve failed its residual check."""


class DegenerateNetworkError(NumericalError):
    """Two-port transform is undefined (for example singular I - S)."""
