from typing import List, Tuple

from pydantic import Field, root_validator, validator

from driftpool.schemas.base import BaseSchemaConfig


class ConceptSpec(BaseSchemaConfig):
    level: float = 0.0
    amplitude: float = 0.0
    period: int = Field(default=24, title="sine period in points")
    noise_sigma: float = 0.0

    @validator("period")
    def _positive_period(cls, value):
        if value < 1:
            raise ValueError(f"period must be >= 1, got {value}")
        return value

    @validator("noise_sigma")
    def _non_negative_noise(cls, value):
        if value < 0:
            raise ValueError(f"noise_sigma must be >= 0, got {value}")
        return value


class SyntheticSpec(BaseSchemaConfig):
    concepts: List[ConceptSpec]
    schedule: List[Tuple[int, int]] = Field(title="(concept index, duration in points) segments")
    seed: int = 0

    @validator("concepts")
    def _has_concepts(cls, value):
        if not value:
            raise ValueError("at least one concept is required")
        return value

    @root_validator(skip_on_failure=True)
    def _valid_schedule(cls, values):
        schedule = values.get("schedule") or []
        n_concepts = len(values.get("concepts") or [])
        if not schedule:
            raise ValueError("schedule must contain at least one segment")
        for position, (concept, duration) in enumerate(schedule):
            if not 0 <= concept < n_concepts:
                raise ValueError(
                    f"schedule[{position}] refers to concept {concept}, valid range is 0..{n_concepts - 1}"
                )
            if duration < 1:
                raise ValueError(f"schedule[{position}] duration must be positive, got {duration}")
        return values

    @property
    def length(self) -> int:
        return sum(duration for _, duration in self.schedule)
