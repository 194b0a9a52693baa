"""Configuration models for topology search and annealing schedules."""

from fractions import Fraction

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class AnnealSchedule(BaseModel):
    """Geometric cooling: T <- T * decay every `steps_per_temp` moves, reheating below `min_temp`."""

    model_config = ConfigDict(frozen=True)

    initial_temp: float = Field(2.0, gt=0)
    decay: float = Field(0.95, gt=0, lt=1)
    steps_per_temp: int = Field(1000, ge=1)
    min_temp: float = Field(0.01, gt=0)


class SearchConfig(BaseModel):
    """Parameters of one (N,k) minimal-MPL search."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    n: int = Field(ge=3, le=64)
    k: int = Field(ge=2)
    budget: int = Field(2_000_000, gt=0)
    restarts: int = Field(8, ge=1)
    seed: int = Field(1, ge=0, lt=2**64)
    schedule: AnnealSchedule = AnnealSchedule()
    target_mpl: Fraction | None = None

    @field_validator("target_mpl", mode="before")
    @classmethod
    def _parse_target(cls, value):
        if value is None or isinstance(value, Fraction):
            return value
        return Fraction(str(value))

    @model_validator(mode="after")
    def _check_handshake(self):
        if (self.n * self.k) % 2:
            raise ValueError(f"n*k must be even (handshake lemma), got n={self.n}, k={self.k}")
        if self.k >= self.n:
            raise ValueError(f"degree k={self.k} must be below n={self.n}")
        return self
