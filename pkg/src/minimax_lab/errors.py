"""Exception hierarchy.

Domain errors are problems with the input (exit status 1 in the CLI);
resource errors mean an exact computation was refused because it exceeds
a size budget (exit status 2).
"""


class MinimaxLabError(Exception):
    pass


class DomainError(MinimaxLabError, ValueError):
    pass


class ResourceLimitError(MinimaxLabError, RuntimeError):
    pass


class UnsupportedCapabilityError(DomainError):
    """An oracle lacks a capability (e.g. pattern enumeration) an operation needs."""


class UnboundedError(DomainError):
    def __init__(self, message, elements=()):
        super().__init__(message)
        self.elements = tuple(elements)


class InfeasibleError(DomainError):
    pass


class CoverFailure(DomainError):
    """No mixed strategy reaches 1 - eps on the requested columns."""

    def __init__(self, value, eps):
        super().__init__(f"restricted game value {value} is below 1 - {eps}")
        self.value = value
        self.eps = eps


class GapInfeasible(DomainError):
    """The alternating construction hit a restricted game on the wrong side of the gap."""

    def __init__(self, step, player, value, bound):
        side = ">=" if player == "p" else "<="
        super().__init__(
            f"{player}-step {step}: restricted game value {value} is not {side} {bound}"
        )
        self.step = step
        self.player = player
        self.value = value
        self.bound = bound


class FoolingFailure(DomainError):
    def __init__(self, value, eps, horizon):
        super().__init__(
            f"truncated family game on 1..{horizon} has value {value} > eps {eps}"
        )
        self.value = value
        self.eps = eps
        self.horizon = horizon
