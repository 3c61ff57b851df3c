from typing import List, Optional, Tuple


class AgeIntegrator:
    """Piecewise linear age process A(t) and its area over [warmup, now].

    The age starts at 0 at time 0, as if a fresh packet had just been
    received, grows with slope 1 and drops only on the reception of an
    informative packet, one generated after the freshest packet received so
    far.
    """

    __slots__ = ("current_age", "last_event_time", "area", "max_gen_received", "warmup", "trace")

    def __init__(self, warmup: float = 0.0, record_trace: bool = False):
        self.current_age = 0.0
        self.last_event_time = 0.0
        self.area = 0.0
        self.max_gen_received = 0.0
        self.warmup = warmup
        self.trace: Optional[List[Tuple[float, float]]] = [(0.0, 0.0)] if record_trace else None

    def advance(self, now: float):
        """Let the age grow up to `now`, accumulating the area past warmup."""
        elapsed = now - self.last_event_time
        if now > self.warmup:
            start = self.last_event_time if self.last_event_time > self.warmup else self.warmup
            width = now - start
            age_at_start = self.current_age + (start - self.last_event_time)
            self.area += width * (age_at_start + 0.5 * width)
        self.current_age += elapsed
        self.last_event_time = now

    def receive(self, gen_time: float, now: float) -> bool:
        """Deliver a packet generated at `gen_time`, returning whether it was
        informative. The age must already be advanced to `now`."""
        if gen_time <= self.max_gen_received:
            return False
        if self.trace is not None:
            self.trace.append((now, self.current_age))
        self.max_gen_received = gen_time
        self.current_age = now - gen_time
        if self.trace is not None:
            self.trace.append((now, self.current_age))
        return True

    def close(self, horizon: float):
        self.advance(horizon)
        if self.trace is not None:
            self.trace.append((horizon, self.current_age))
