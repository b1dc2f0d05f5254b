"""Exception hierarchy shared by every module of :mod:`groupca`."""


class CAError(Exception):
    """Base class for all library errors."""


class InvalidElementError(CAError, ValueError):
    """An element does not belong to the group it is used with."""


class UnsupportedError(CAError):
    """The requested operation is not available for this group family."""


class UnsupportedExactnessError(UnsupportedError):
    """Membership cannot be decided exactly for this configuration kind."""


class CapExceededError(CAError):
    """An exhaustive computation would exceed its configured size cap."""

    def __init__(self, what, required, allowed):
        self.required = required
        self.allowed = allowed
        super().__init__(f"{what}: requires {required}, cap is {allowed}")


class DomainError(CAError, ValueError):
    """An argument lies outside the domain an operation is defined on."""


class ConsistencyError(CAError):
    """An internal cross-check failed. This always indicates a bug."""


class OracleFaultError(CAError):
    """A black-box oracle returned different answers for the same input."""


class InvalidProbeError(CAError, ValueError):
    """A probe configuration is not a member of the subshift."""

    def __init__(self, probe):
        self.probe = probe
        super().__init__(f"probe is not a member of the subshift: {probe!r}")


class ClosureWitnessError(CAError):
    """A composite of subshift-preserving rules left the subshift."""

    def __init__(self, counterexample):
        self.counterexample = counterexample
        super().__init__(f"composite left the subshift on probe {counterexample!r}")
