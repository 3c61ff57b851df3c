"""Exceptions raised by the analytic evaluators, the simulator and the experiment runner."""
from typing import Optional


class AoiTradeoffException(Exception):
    """Base class of every error raised by this package."""


class InadmissibleParameterError(AoiTradeoffException, ValueError):
    def __init__(self, error_message: str, field: str, value: object):
        self.field = field
        self.value = value

        super(InadmissibleParameterError, self).__init__(error_message)

    def with_prefix(self, prefix: str) -> "InadmissibleParameterError":
        """Return the same error with the field qualified by the config path."""
        field = "{}.{}".format(prefix, self.field)
        message = str(self).replace("`{}`".format(self.field), "`{}`".format(field))
        return InadmissibleParameterError(message, field, self.value)


class UnstableSystemError(AoiTradeoffException):
    def __init__(self, error_message: str, rho: float):
        self.rho = rho

        super(UnstableSystemError, self).__init__(error_message)


class DegeneratePreemptionError(AoiTradeoffException):
    def __init__(self, error_message: str, probability: float):
        self.probability = probability

        super(DegeneratePreemptionError, self).__init__(error_message)


class QuadratureError(AoiTradeoffException):
    def __init__(self, error_message: str, value: float, abserr: float):
        self.value = value
        self.abserr = abserr

        super(QuadratureError, self).__init__(error_message)


class EventBudgetExceededError(AoiTradeoffException):
    def __init__(self, error_message: str, n_events: int, time: float):
        self.n_events = n_events
        self.time = time

        super(EventBudgetExceededError, self).__init__(error_message)


class ReplicationError(AoiTradeoffException):
    def __init__(self, error_message: str, seed: int):
        self.seed = seed

        super(ReplicationError, self).__init__(error_message)

    def __reduce__(self):
        # raised inside worker processes, so it has to survive pickling
        return (ReplicationError, (str(self), self.seed))


class NoFinitePointError(AoiTradeoffException):
    pass


class ConfigError(AoiTradeoffException, ValueError):
    def __init__(self, error_message: str, field: Optional[str] = None):
        self.field = field

        super(ConfigError, self).__init__(error_message)
