import pytest
from pydantic import ValidationError

from driftpool.schemas.synthetic import ConceptSpec, SyntheticSpec


def test_synthetic_spec_length():
    spec = SyntheticSpec(concepts=[ConceptSpec(), ConceptSpec(level=5.0)], schedule=[(0, 10), (1, 20), (0, 5)])
    assert spec.length == 35


def test_synthetic_spec_rejects_unknown_concept():
    with pytest.raises(ValidationError):
        SyntheticSpec(concepts=[ConceptSpec()], schedule=[(1, 10)])


def test_synthetic_spec_rejects_empty_segments():
    with pytest.raises(ValidationError):
        SyntheticSpec(concepts=[ConceptSpec()], schedule=[(0, 0)])
    with pytest.raises(ValidationError):
        SyntheticSpec(concepts=[ConceptSpec()], schedule=[])


def test_concept_spec_ranges():
    with pytest.raises(ValidationError):
        ConceptSpec(period=0)
    with pytest.raises(ValidationError):
        ConceptSpec(noise_sigma=-0.1)
