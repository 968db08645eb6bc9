"""
Independent random substreams for one realization.

The master seed feeds a SeedSequence tree: one child for the network, one
for spreading (Bernoulli follow decisions, follow-up delays and follow-up
order draws), and one per agent split into market/limit/cancel clocks.
Follow-ups never touch an agent's source streams, so a q = 0 run replays the
exact source actions of a run without a network.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class AgentStreams:
    market: np.random.Generator
    limit: np.random.Generator
    cancel: np.random.Generator


@dataclass(frozen=True)
class RealizationStreams:
    network: np.random.Generator
    spread: np.random.Generator
    agents: tuple[AgentStreams, ...]


def spawn_streams(seed: int, n_agents: int) -> RealizationStreams:
    root = np.random.SeedSequence(seed)
    network_seq, spread_seq, agents_seq = root.spawn(3)
    agents = tuple(
        AgentStreams(*(np.random.default_rng(s) for s in child.spawn(3)))
        for child in agents_seq.spawn(n_agents)
    )
    return RealizationStreams(
        network=np.random.default_rng(network_seq),
        spread=np.random.default_rng(spread_seq),
        agents=agents,
    )


def network_rng(seed: int) -> np.random.Generator:
    """The network stream alone, without spawning every agent's clocks."""
    return np.random.default_rng(np.random.SeedSequence(seed).spawn(3)[0])
