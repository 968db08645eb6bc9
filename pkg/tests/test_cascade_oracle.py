"""
Cascade sizes of the spreading protocol on a tree against a Galton-Watson
branching process with the same offspring law.
"""

import numpy as np
import pytest
from galton_watson import expected_cascade_size, sample_cascade_sizes, total_variation

from netlob.core import OrderKind, Side
from netlob.kernel import EventQueue, Spreader

BRANCHING = 8
Q = 0.0625
MAX_DEPTH = 10


class LazyTree:
    """
    Regular tree grown on demand: the root has `branching` children, every
    other node `branching - 1`, so each node has `branching` neighbours.
    Nodes at `max_depth` are leaves.
    """

    def __init__(self, branching: int, max_depth: int):
        self.branching = branching
        self.max_depth = max_depth
        self.parent = {0: None}
        self.depth = {0: 0}
        self.children = {}

    def neighbors(self, node):
        if node not in self.children:
            kids = []
            if self.depth[node] < self.max_depth:
                count = self.branching if node == 0 else self.branching - 1
                for _ in range(count):
                    child = len(self.parent)
                    self.parent[child] = node
                    self.depth[child] = self.depth[node] + 1
                    kids.append(child)
            self.children[node] = tuple(kids)
        parent = self.parent[node]
        return self.children[node] if parent is None else (parent, *self.children[node])


def simulate_cascade(rng):
    """Followers of one source decision at the root of a fresh tree."""
    queue = EventQueue()
    spreader = Spreader(LazyTree(BRANCHING, MAX_DEPTH), Q, 1.0, rng, queue)
    size = spreader.propagate(0, OrderKind.MARKET, Side.BID, None, 0, 0, 0.0)
    while queue:
        event = queue.pop()
        follow = event.payload
        size += spreader.propagate(
            follow.agent,
            follow.order_kind,
            follow.direction,
            follow.sender,
            follow.cascade_id,
            follow.depth,
            event.time,
        )
    return size


def compare(trials, seed):
    rng = np.random.default_rng(seed)
    simulated = np.array([simulate_cascade(rng) for _ in range(trials)])
    reference = sample_cascade_sizes(BRANCHING, Q, MAX_DEPTH, trials, rng)
    return simulated, reference


class TestCascadeOracle:
    def test_expected_size(self):
        assert expected_cascade_size(BRANCHING, Q, MAX_DEPTH) == pytest.approx(0.8887, abs=1e-3)

    def test_matches_branching_process(self):
        simulated, reference = compare(20_000, seed=31)
        assert total_variation(simulated, reference) < 0.02
        expected = expected_cascade_size(BRANCHING, Q, MAX_DEPTH)
        assert simulated.mean() == pytest.approx(expected, rel=0.05)

    def test_depth_is_bounded(self):
        rng = np.random.default_rng(2)
        queue = EventQueue()
        spreader = Spreader(LazyTree(2, 3), 1.0, 1.0, rng, queue)
        size = spreader.propagate(0, OrderKind.LIMIT, Side.ASK, None, 0, 0, 0.0)
        depths = []
        while queue:
            event = queue.pop()
            depths.append(event.payload.depth)
            size += spreader.propagate(
                event.payload.agent,
                OrderKind.LIMIT,
                Side.ASK,
                event.payload.sender,
                0,
                event.payload.depth,
                event.time,
            )
        # a binary tree of depth 3 with certain following: 2 + 2 + 2 nodes
        assert size == 6
        assert max(depths) == 3

    @pytest.mark.slow
    def test_matches_branching_process_full(self):
        simulated, reference = compare(100_000, seed=32)
        assert total_variation(simulated, reference) < 0.01
        expected = expected_cascade_size(BRANCHING, Q, MAX_DEPTH)
        assert simulated.mean() == pytest.approx(expected, rel=0.02)
