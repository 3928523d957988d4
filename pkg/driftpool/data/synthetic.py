"""recurring-concept streams with ground-truth labels.

every point of a segment with concept c is
    level_c + amplitude_c * sin(2 * pi * i / period_c) + N(0, noise_sigma_c^2)
where i is the global stream index. noise comes from one numpy PCG64
generator seeded with the spec seed and drawn segment by segment, in
schedule order, with `Generator.normal`.
"""
from dataclasses import dataclass

import numpy as np

from driftpool.schemas.synthetic import ConceptSpec, SyntheticSpec

DEFAULT_SEGMENT_LENGTH = 3000


@dataclass(frozen=True)
class LabeledStream:
    values: np.ndarray
    labels: np.ndarray


def default_spec(
    seed: int = 0,
    noise_sigma: float = 0.25,
    segment_length: int = DEFAULT_SEGMENT_LENGTH,
) -> SyntheticSpec:
    """three concepts at levels 0, 8 and -8 on the schedule A-B-A-C-B-A."""
    concepts = [
        ConceptSpec(level=level, amplitude=1.0, period=24, noise_sigma=noise_sigma)
        for level in (0.0, 8.0, -8.0)
    ]
    schedule = [(concept, segment_length) for concept in (0, 1, 0, 2, 1, 0)]
    return SyntheticSpec(concepts=concepts, schedule=schedule, seed=seed)


def generate(spec: SyntheticSpec) -> LabeledStream:
    rng = np.random.default_rng(spec.seed)
    values = np.empty(spec.length, dtype=np.float64)
    labels = np.empty(spec.length, dtype=np.int64)

    start = 0
    for concept_index, duration in spec.schedule:
        concept = spec.concepts[concept_index]
        index = np.arange(start, start + duration, dtype=np.float64)
        noise = rng.normal(0.0, concept.noise_sigma, size=duration)
        values[start : start + duration] = (
            concept.level + concept.amplitude * np.sin(2.0 * np.pi * index / concept.period) + noise
        )
        labels[start : start + duration] = concept_index
        start += duration
    return LabeledStream(values=values, labels=labels)


def segment_bounds(spec: SyntheticSpec):
    """(concept, start, stop) per schedule segment."""
    bounds = []
    start = 0
    for concept, duration in spec.schedule:
        bounds.append((concept, start, start + duration))
        start += duration
    return bounds
