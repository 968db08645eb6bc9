"""
Cascade spreading of order decisions over the interaction network
"""

from __future__ import annotations

from typing import Optional

import numpy as np

from ..core import OrderKind, Side
from ..networks import Topology
from .agents import sample_waiting_time
from .events import EventQueue, FollowUp


class Spreader:
    """
    Each neighbour of the deciding agent, except the one it heard the decision
    from, follows with probability q after an exponential delay of mean
    lambda_f. There is no deduplication: cycles may bring a decision back to an
    earlier participant, who then places another order.
    """

    def __init__(
        self,
        topology: Topology,
        q: float,
        lambda_f: float,
        rng: np.random.Generator,
        queue: EventQueue,
    ):
        self.topology = topology
        self.q = q
        self.lambda_f = lambda_f
        self.rng = rng
        self.queue = queue

    def propagate(
        self,
        origin_agent: int,
        order_kind: OrderKind,
        direction: Side,
        excluded_sender: Optional[int],
        cascade_id: int,
        depth: int,
        now: float,
    ) -> int:
        """Schedule follow-ups from `origin_agent`; returns how many were scheduled."""
        if self.q <= 0.0:
            return 0
        rng = self.rng
        scheduled = 0
        for neighbor in self.topology.neighbors(origin_agent):
            if neighbor == excluded_sender:
                continue
            if rng.random() < self.q:
                delay = sample_waiting_time(self.lambda_f, rng)
                self.queue.schedule(
                    now + delay,
                    FollowUp(
                        agent=neighbor,
                        order_kind=order_kind,
                        direction=direction,
                        sender=origin_agent,
                        cascade_id=cascade_id,
                        depth=depth + 1,
                    ),
                )
                scheduled += 1
        return scheduled
