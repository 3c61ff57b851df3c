from typing import Optional, Tuple

from ..packet import Packet
from ..policy import PolicyConfig, PolicyKind
from .discipline_template import Completions, DisciplineTemplate


class InfiniteServerDiscipline(DisciplineTemplate):
    """Every packet gets its own server, so packets may complete out of order."""
    KIND = PolicyKind.INFINITE_SERVER

    def __init__(self, policy: PolicyConfig):
        super(InfiniteServerDiscipline, self).__init__(policy)
        self._n_in_system = 0

    @staticmethod
    def supports(policy: PolicyConfig) -> bool:
        return policy.kind is PolicyKind.INFINITE_SERVER

    def arrive(self, packet: Packet, now: float) -> Completions:
        self._n_in_system += 1
        return [(now + packet.service_req, packet)]

    def complete(self, token: object, now: float) -> Tuple[Optional[Packet], Completions]:
        self._n_in_system -= 1
        delivered = self._deliver(token, now)
        # no waiting: the delay is the service time itself, without the
        # rounding of (gen_time + S) - gen_time
        delivered.delay = delivered.service_req
        return delivered, []

    @property
    def n_in_system(self) -> int:
        return self._n_in_system
