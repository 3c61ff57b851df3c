from typing import Optional


class Packet:
    """An update packet.

    `remaining` is the work left for the preemptive-resume discipline;
    `delay` is set on delivery, normally `recv_time - gen_time`.
    """

    __slots__ = ("id", "gen_time", "service_req", "remaining", "recv_time", "delay")

    def __init__(self, packet_id: int, gen_time: float, service_req: float):
        self.id = packet_id
        self.gen_time = gen_time
        self.service_req = service_req
        self.remaining = service_req
        self.recv_time: Optional[float] = None
        self.delay: Optional[float] = None

    def __repr__(self) -> str:
        return "Packet(id={}, gen_time={}, service_req={}, remaining={}, recv_time={})".format(
            self.id, self.gen_time, self.service_req, self.remaining, self.recv_time
        )
