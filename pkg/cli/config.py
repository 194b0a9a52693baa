"""Validated run configuration shared by every subcommand."""

from pathlib import Path

from pydantic import BaseModel, ConfigDict, Field

from routing import DEFAULT_PATH_CAP, DemandMode

SUBCOMMANDS = ("gen", "search", "metrics", "product", "route", "compose", "simulate", "compare", "scaling")


class RunConfig(BaseModel):
    """Inputs, outputs and knobs of one CLI invocation.

    `seed` is always populated (defaulted when the user gives none) so it can
    be written into every artifact header.
    """

    model_config = ConfigDict(frozen=True)

    subcommand: str = Field(pattern=f"^({'|'.join(SUBCOMMANDS)})$")
    inputs: tuple[Path, ...] = ()
    output: Path | None = None
    seed: int = Field(1, ge=0, lt=2**64)
    demand_mode: DemandMode = DemandMode.UNORDERED
    cap: int = Field(DEFAULT_PATH_CAP, ge=1)
    budget: int = Field(2_000_000, gt=0)
    restarts: int = Field(8, ge=1)
    threads: int = Field(1, ge=1)
    verbose: bool = False
    header: bool = True
