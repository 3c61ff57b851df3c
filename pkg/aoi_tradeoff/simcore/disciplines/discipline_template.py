from typing import List, Optional, Tuple

from ..packet import Packet
from ..policy import PolicyConfig

# (completion time, token) pairs the simulator has to schedule.
Completions = List[Tuple[float, object]]


class DisciplineTemplate:
    """Template of the queueing disciplines driven by the simulator.

    The simulator hands every new packet to `arrive` and every due completion
    token to `complete`; both return the completions to schedule. A
    discipline may invalidate a completion it scheduled earlier (a preempted
    service): `complete` then returns no packet.
    """
    KIND = None

    def __init__(self, policy: PolicyConfig):
        self._policy = policy

    @staticmethod
    def supports(policy: PolicyConfig) -> bool:
        raise NotImplementedError(
            "This discipline function has to be implemented by its subclass."
        )

    def arrive(self, packet: Packet, now: float) -> Completions:
        raise NotImplementedError(
            "This discipline function has to be implemented by its subclass."
        )

    def complete(self, token: object, now: float) -> Tuple[Optional[Packet], Completions]:
        raise NotImplementedError(
            "This discipline function has to be implemented by its subclass."
        )

    @property
    def n_in_system(self) -> int:
        raise NotImplementedError(
            "This discipline function has to be implemented by its subclass."
        )

    @staticmethod
    def _deliver(packet: Packet, now: float) -> Packet:
        packet.recv_time = now
        packet.delay = now - packet.gen_time
        packet.remaining = 0.0
        return packet
