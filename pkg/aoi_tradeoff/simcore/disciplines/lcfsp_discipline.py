from typing import List, Optional, Tuple

from ..packet import Packet
from ..policy import PolicyConfig, PolicyKind, Preemption
from .discipline_template import Completions, DisciplineTemplate


class LcfspDiscipline(DisciplineTemplate):
    """Single server, last come first served with preemption.

    A new packet always takes the server. The displaced packet is pushed on a
    stack and is served again, newest first, once the server idles; under
    resume it keeps the work already received, under restart it starts over.
    Completions of displaced services are cancelled by bumping the token.
    """
    KIND = PolicyKind.LCFSP_SINGLE

    def __init__(self, policy: PolicyConfig):
        super(LcfspDiscipline, self).__init__(policy)
        self._resume = policy.preemption is Preemption.RESUME
        self._in_service: Optional[Packet] = None
        self._started_at = 0.0
        self._token = 0
        self._preempted: List[Packet] = []

    @staticmethod
    def supports(policy: PolicyConfig) -> bool:
        return policy.kind is PolicyKind.LCFSP_SINGLE

    def _start(self, packet: Packet, now: float) -> Completions:
        self._in_service = packet
        self._started_at = now
        self._token += 1
        return [(now + packet.remaining, self._token)]

    def arrive(self, packet: Packet, now: float) -> Completions:
        current = self._in_service
        if current is not None:
            if self._resume:
                current.remaining = max(current.remaining - (now - self._started_at), 0.0)
            else:
                current.remaining = current.service_req
            self._preempted.append(current)
        return self._start(packet, now)

    def complete(self, token: object, now: float) -> Tuple[Optional[Packet], Completions]:
        if token != self._token or self._in_service is None:
            return None, []
        delivered = self._deliver(self._in_service, now)
        self._in_service = None
        if self._preempted:
            return delivered, self._start(self._preempted.pop(), now)
        return delivered, []

    @property
    def n_in_system(self) -> int:
        return len(self._preempted) + (self._in_service is not None)
