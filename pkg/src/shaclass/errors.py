"""Exception types shared across the package."""


class ShaclassError(Exception):
    """Base class for all errors raised by this package."""


class SingularModel(ShaclassError):
    """Weierstrass model has discriminant zero."""


class BadReductionAtP(ShaclassError):
    """Operation requires good reduction at p."""


class NotOrdinary(ShaclassError):
    """Operation requires good ordinary reduction."""


class FactorizationTooHard(ShaclassError):
    """Remaining cofactor after trial division exceeds the rho cutoff."""


class GroupTooLarge(ShaclassError):
    """Matrix group closure exceeded the configured cap."""


class NotFound(ShaclassError):
    """No record for the requested curve label."""


class NetworkError(ShaclassError):
    """Remote database could not be reached."""


class SchemaDrift(ShaclassError):
    """Remote or fixture record is missing expected fields."""


class InsufficientData(ShaclassError):
    """Not enough arithmetic data to build Selmer scenarios."""


class LedgerNotApplicable(ShaclassError):
    """A theorem's hypothesis ledger has a failed or unknown condition."""


class InconsistentInputs(ShaclassError):
    """Certificates passed to the engine refer to different curves."""


class InvalidInput(ShaclassError):
    """Malformed user input (labels, coefficient lists, flags)."""
