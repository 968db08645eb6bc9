# netlob/contracts.py - validated configuration models
from __future__ import annotations

from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

# === ENUMS ===


class NetworkKind(str, Enum):
    NONE = "none"
    LATTICE = "lattice"
    ER = "er"
    BA = "ba"


# === AGENTS ===


class AgentParams(BaseModel):
    """Behavioural parameters shared by every agent of a run."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    lambda_m: float = Field(20000.0, gt=0, description="mean wait between market orders")
    lambda_l: float = Field(5000.0, gt=0, description="mean wait between limit orders")
    lambda_c: float = Field(40000.0, gt=0, description="mean wait between cancellations")
    lambda_f: float = Field(1000.0, gt=0, description="mean follow-up delay")
    m_s: float = Field(5.0, gt=0, description="mean order volume (shares)")
    d_s: float = Field(1.5, gt=0, description="order volume std (shares)")
    d_p: float = Field(2.0, gt=0, description="price std at the reference price")


# === SIMULATION ===


class _SimFields(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    n_agents: int = Field(1000, ge=1)
    network: NetworkKind = NetworkKind.NONE
    lattice_rows: int = Field(25, ge=3)
    lattice_cols: int = Field(40, ge=3)
    n_edges: int = Field(4000, ge=0, description="Erdős–Rényi edge count M")
    m_attach: int = Field(4, ge=1, description="Barabási–Albert edges per arrival")
    q: float = Field(0.0625, ge=0, le=1, description="follow probability")
    tick_size: float = Field(0.01, gt=0)
    p_ref: float = Field(100.0, gt=0, description="initial reference price")
    horizon: float = Field(720000.0, ge=0)
    burn_in: float = Field(72000.0, ge=0)
    max_events: Optional[int] = Field(None, ge=1)

    @model_validator(mode="after")
    def _check_invariants(self):
        # horizon == burn_in == 0 is the degenerate empty run
        empty_run = self.horizon == 0 and self.burn_in == 0
        if not empty_run and self.burn_in >= self.horizon:
            raise ValueError(
                f"burn_in ({self.burn_in}) must be smaller than horizon ({self.horizon})"
            )
        if self.network is NetworkKind.LATTICE:
            if self.lattice_rows * self.lattice_cols != self.n_agents:
                raise ValueError(
                    f"lattice_rows * lattice_cols ({self.lattice_rows}x{self.lattice_cols})"
                    f" must equal n_agents ({self.n_agents})"
                )
        elif self.network is NetworkKind.ER:
            max_edges = self.n_agents * (self.n_agents - 1) // 2
            if self.n_edges > max_edges:
                raise ValueError(f"n_edges must be <= {max_edges}, got {self.n_edges}")
        elif self.network is NetworkKind.BA:
            if self.n_agents <= self.m_attach:
                raise ValueError(
                    f"n_agents ({self.n_agents}) must exceed m_attach ({self.m_attach})"
                )
        return self


class SimConfig(_SimFields):
    """Everything one realization of the kernel needs."""

    agent_params: AgentParams = Field(default_factory=AgentParams)
    seed: int = Field(0, ge=0)

    @property
    def sigma_log(self) -> float:
        """Std of the log-price multiplier, frozen at run start."""
        return self.agent_params.d_p / self.p_ref


# === STATS ===


class StatsOptions(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    delta: float = Field(10.0, gt=0, description="mid-price sampling interval")
    acf_max_lag: int = Field(500, ge=1)
    sign_max_lag: int = Field(300, ge=1)
    return_bins: int = Field(101, ge=1)
    waiting_bins_per_decade: int = Field(10, ge=1)
    burst_window: float = Field(10000.0, gt=0, description="activity count window")
    sign_fit_lo: int = Field(1, ge=1)
    sign_fit_hi: int = Field(50, ge=1)
    abs_fit_lo: int = Field(1, ge=1)
    abs_fit_hi: int = Field(50, ge=1)

    @model_validator(mode="after")
    def _check_ranges(self):
        if self.sign_fit_lo >= self.sign_fit_hi:
            raise ValueError("sign_fit_lo must be smaller than sign_fit_hi")
        if self.sign_fit_hi > self.sign_max_lag:
            raise ValueError("sign_fit_hi must not exceed sign_max_lag")
        if self.abs_fit_lo >= self.abs_fit_hi:
            raise ValueError("abs_fit_lo must be smaller than abs_fit_hi")
        if self.abs_fit_hi > self.acf_max_lag:
            raise ValueError("abs_fit_hi must not exceed acf_max_lag")
        return self


# === RUN ===


class RunConfig(_SimFields):
    """Flat view of a config document: one field per key."""

    lambda_m: float = Field(20000.0, gt=0)
    lambda_l: float = Field(5000.0, gt=0)
    lambda_c: float = Field(40000.0, gt=0)
    lambda_f: float = Field(1000.0, gt=0)
    m_s: float = Field(5.0, gt=0)
    d_s: float = Field(1.5, gt=0)
    d_p: float = Field(2.0, gt=0)

    realizations: int = Field(5, ge=1)
    base_seed: int = Field(0, ge=0)
    scenario: Optional[str] = Field(None, min_length=1, pattern=r"^[A-Za-z0-9_.-]+$")

    delta: float = Field(10.0, gt=0)
    acf_max_lag: int = Field(500, ge=1)
    sign_max_lag: int = Field(300, ge=1)
    return_bins: int = Field(101, ge=1)
    waiting_bins_per_decade: int = Field(10, ge=1)
    burst_window: float = Field(10000.0, gt=0)
    sign_fit_lo: int = Field(1, ge=1)
    sign_fit_hi: int = Field(50, ge=1)
    abs_fit_lo: int = Field(1, ge=1)
    abs_fit_hi: int = Field(50, ge=1)

    output_dir: str = "results"
    jobs: int = Field(1, ge=1)
    gnuplot: bool = False

    @model_validator(mode="after")
    def _check_stats(self):
        self.stats_options()
        return self

    @property
    def scenario_name(self) -> str:
        return self.scenario or self.network.value

    def agent_params(self) -> AgentParams:
        return AgentParams(**{name: getattr(self, name) for name in AgentParams.model_fields})

    def stats_options(self) -> StatsOptions:
        return StatsOptions(
            **{name: getattr(self, name) for name in StatsOptions.model_fields}
        )

    def sim_config(self, realization: int) -> SimConfig:
        fields = {name: getattr(self, name) for name in _SimFields.model_fields}
        return SimConfig(
            **fields,
            agent_params=self.agent_params(),
            seed=self.base_seed + realization,
        )

    def seeds(self) -> list[int]:
        return [self.base_seed + r for r in range(self.realizations)]
