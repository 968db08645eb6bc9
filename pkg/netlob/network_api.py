from __future__ import annotations

import inspect
from collections.abc import Callable
from typing import Any, Optional, Protocol

import numpy as np

from .contracts import NetworkKind, SimConfig
from .networks import (
    Graph,
    build_barabasi_albert,
    build_erdos_renyi,
    build_lattice_x,
)


class GraphBuilder(Protocol):
    """Protocol for generator functions."""

    def __call__(self, *args: Any, **kwargs: Any) -> Graph:
        ...


_BUILDERS: dict[NetworkKind, GraphBuilder] = {
    NetworkKind.LATTICE: build_lattice_x,
    NetworkKind.ER: build_erdos_renyi,
    NetworkKind.BA: build_barabasi_albert,
}


def _filter_kwargs(fn: Callable[..., Any], **kwargs: Any) -> dict[str, Any]:
    """Return only the kwargs that `fn` actually accepts."""
    sig = inspect.signature(fn)
    accepted = set(sig.parameters.keys())
    return {k: v for k, v in kwargs.items() if k in accepted}


def build(kind: NetworkKind | str, **kwargs: Any) -> Optional[Graph]:
    """
    Generic entrypoint:
      - dispatches by `kind` ("none" returns no graph: spreading disabled)
      - filters kwargs to the concrete generator signature, so one bag of
        parameters (rows, cols, n, m, m_attach, rng) serves every kind
    """
    kind = NetworkKind(kind)
    if kind is NetworkKind.NONE:
        return None
    fn = _BUILDERS[kind]
    return fn(**_filter_kwargs(fn, **kwargs))


def build_for_config(config: SimConfig, rng: np.random.Generator) -> Optional[Graph]:
    return build(
        config.network,
        rows=config.lattice_rows,
        cols=config.lattice_cols,
        n=config.n_agents,
        m=config.n_edges,
        m_attach=config.m_attach,
        rng=rng,
    )


def known_kinds() -> list[str]:
    return [kind.value for kind in NetworkKind]
