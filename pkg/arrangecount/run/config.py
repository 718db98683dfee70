from __future__ import annotations

import os
from typing import Any, Literal, Optional

import yaml
from pydantic import BaseModel, Field

THREADS_ENV = "ARRANGE_THREADS"


def _from_file(path: str, typ: Any) -> Any:
    with open(path, "r") as f:
        raw_config = yaml.load(f, Loader=yaml.SafeLoader) or {}
        return typ(**raw_config)


class BudgetConfig(BaseModel):
    """
    Size limits of the exhaustive computations.
    """

    whitney_hyperplanes: int = Field(22, gt=0)
    """Largest arrangement handed to the Whitney subset sum."""
    poset_hyperplanes: int = Field(18, gt=0)
    """Largest arrangement whose intersection poset is built."""
    offpoint_points: int = Field(10**8, gt=0)
    """Largest q^n scanned by the finite-field off-point count."""
    factor_limit: int = Field(10**6, gt=1)
    """Trial division bound of the multiplicative independence test."""

    class Config:
        extra = "forbid"

    @classmethod
    def from_file(cls, path: str) -> BudgetConfig:
        """Load the configuration from a YAML file."""
        return _from_file(path, BudgetConfig)  # type: ignore

    @classmethod
    def extended(cls) -> BudgetConfig:
        """Budgets for the extended, tens-of-minutes reproduction runs."""
        return BudgetConfig(offpoint_points=10**9)


class PipelineConfig(BaseModel):
    """
    Settings of the sample-interpolate-validate pipeline.
    """

    prime_floor: int = Field(100, ge=0)
    """Samples start at the first prime above this value."""
    max_retries: int = Field(4, ge=0)
    """How often the prime floor is doubled before giving up."""

    class Config:
        extra = "forbid"


class RunConfig(BaseModel):
    """
    Configuration of one command line invocation.
    """

    threads: int = Field(1, gt=0)
    """Worker processes for enumeration and sampling."""
    budget_nodes: int = Field(50_000_000, gt=0)
    """Cap on the nodes expanded by one independent-set enumeration."""
    output_format: Literal["json", "csv", "text"] = "json"
    """Rendering of the payload written to stdout."""
    seed: int = 0
    """Seed of the randomised property commands."""
    log_level: str = "WARNING"
    """Level of the diagnostics written to stderr."""
    budgets: BudgetConfig = BudgetConfig()
    pipeline: PipelineConfig = PipelineConfig()

    class Config:
        extra = "forbid"

    @classmethod
    def from_file(cls, path: str) -> RunConfig:
        """Load the configuration from a YAML file."""
        return _from_file(path, RunConfig)  # type: ignore

    @classmethod
    def resolve(cls, path: Optional[str] = None, **flags: Any) -> RunConfig:
        """Merge defaults, a YAML file, the environment and explicit flags.

        Flags that are None are treated as not given. Precedence is
        flag > ``ARRANGE_THREADS`` > file > default.
        """
        data: dict = {}
        if path is not None:
            with open(path, "r") as f:
                data = yaml.load(f, Loader=yaml.SafeLoader) or {}
        env_threads = os.environ.get(THREADS_ENV)
        if env_threads:
            data["threads"] = env_threads
        pipeline = dict(data.get("pipeline", {}))
        prime_floor = flags.pop("prime_floor", None)
        if prime_floor is not None:
            pipeline["prime_floor"] = prime_floor
        if pipeline:
            data["pipeline"] = pipeline
        data.update({k: v for k, v in flags.items() if v is not None})
        return cls(**data)
