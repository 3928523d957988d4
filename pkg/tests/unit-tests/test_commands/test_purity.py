import numpy as np
import pytest

from driftpool.commands.purity import compute_purity, cmd_purity, instance_label
from driftpool.evolution.engine import run
from driftpool.schemas.results import ResultsBundle
from driftpool.services.exceptions import LabelMismatch


def make_bundle(result, lookback=60, tau_safe=15):
    return ResultsBundle(
        schema_version=1,
        config_hash="0" * 64,
        manifest={"lookback": str(lookback), "tau_safe": str(tau_safe)},
        result=result,
    )


def test_instance_label():
    labels = np.array([0] * 10 + [1] * 10)
    assert instance_label(labels, 0, 10) == (0, False)
    assert instance_label(labels, 4, 10) == (0, True)
    assert instance_label(labels, 7, 10) == (1, True)
    assert instance_label(labels, 5, 10) == (0, True)


def test_single_entry_single_concept():
    report = compute_purity([0] * 10, [2] * 10)
    assert report.purity == 1.0
    assert report.entries[0].majority_label == 2


def test_majority_ties_go_to_the_smallest_label():
    report = compute_purity([0, 0], [1, 0])
    assert report.entries[0].majority_label == 0
    assert report.purity == 0.5


def test_length_mismatch():
    with pytest.raises(LabelMismatch):
        compute_purity([0, 1], [0])


def test_random_labels_give_chance_purity():
    purities = []
    for seed in range(10):
        rng = np.random.default_rng(seed)
        entry_ids = np.repeat([0, 1, 2], 1000).tolist()
        labels = rng.integers(0, 3, size=3000).tolist()
        purities.append(compute_purity(entry_ids, labels).purity)
    assert abs(np.mean(purities) - 1 / 3) < 0.05


def test_every_served_instance_is_scored_by_default(recurring_stream, naive_config):
    bundle = make_bundle(run(recurring_stream.values, naive_config))
    report = cmd_purity(bundle, recurring_stream.labels)

    assert report.n_excluded == 0
    assert report.n_scored == len(bundle.result.records)
    assert report.purity >= 0.9
    assert {entry.majority_label for entry in report.entries} == {0, 1}


def test_boundary_windows_are_the_only_impure_ones(recurring_stream, naive_config):
    bundle = make_bundle(run(recurring_stream.values, naive_config))
    everything = cmd_purity(bundle, recurring_stream.labels)
    inside = cmd_purity(bundle, recurring_stream.labels, exclude_straddling=True)

    assert inside.purity == 1.0
    assert inside.n_excluded > 0
    assert inside.n_scored + inside.n_excluded == everything.n_scored
    assert inside.purity >= everything.purity


def test_exclude_safe_skips_young_entries(recurring_stream, naive_config):
    bundle = make_bundle(run(recurring_stream.values, naive_config))
    everything = cmd_purity(bundle, recurring_stream.labels)
    settled = cmd_purity(bundle, recurring_stream.labels, exclude_safe=True)

    assert everything.n_excluded == 0
    assert settled.n_excluded >= 15
    assert settled.n_scored < everything.n_scored


def test_labels_must_cover_the_run(recurring_stream, naive_config):
    bundle = make_bundle(run(recurring_stream.values, naive_config))
    with pytest.raises(LabelMismatch):
        cmd_purity(bundle, recurring_stream.labels[:1000])
