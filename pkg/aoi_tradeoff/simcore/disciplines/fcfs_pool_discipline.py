from collections import deque
from typing import Dict, Optional, Tuple

from ..packet import Packet
from ..policy import PolicyConfig, PolicyKind
from .discipline_template import Completions, DisciplineTemplate


class FcfsPoolDiscipline(DisciplineTemplate):
    """M servers fed by one FCFS queue: whenever a server is free the packet
    at the head of the queue takes it."""
    KIND = PolicyKind.FCFS_POOL

    def __init__(self, policy: PolicyConfig):
        super(FcfsPoolDiscipline, self).__init__(policy)
        self._free_servers = policy.n_servers
        self._queue = deque()
        self._in_service: Dict[int, Packet] = {}

    @staticmethod
    def supports(policy: PolicyConfig) -> bool:
        return policy.kind is PolicyKind.FCFS_POOL

    def _start(self, packet: Packet, now: float) -> Completions:
        self._free_servers -= 1
        self._in_service[packet.id] = packet
        return [(now + packet.service_req, packet.id)]

    def arrive(self, packet: Packet, now: float) -> Completions:
        if self._free_servers > 0:
            return self._start(packet, now)
        self._queue.append(packet)
        return []

    def complete(self, token: object, now: float) -> Tuple[Optional[Packet], Completions]:
        delivered = self._deliver(self._in_service.pop(token), now)
        self._free_servers += 1
        if self._queue:
            return delivered, self._start(self._queue.popleft(), now)
        return delivered, []

    @property
    def n_in_system(self) -> int:
        return len(self._queue) + len(self._in_service)
