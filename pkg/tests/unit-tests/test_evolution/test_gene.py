import math

import numpy as np
import pytest

from driftpool.evolution.gene import (
    GeneState,
    GeneVector,
    compute_gene,
    ema_update,
    gene_distance,
    global_update,
    mix_gene,
    mle_cost,
)
from driftpool.services.exceptions import (
    ConfigurationError,
    EmptyWindow,
    InternalStateError,
    NonFiniteInput,
    NumericError,
)


def test_compute_gene_is_population_moments():
    assert compute_gene([1.0, 2.0, 3.0, 4.0], scope=4) == GeneVector(mu=2.5, sigma=math.sqrt(1.25))


def test_compute_gene_uses_the_last_scope_values():
    gene = compute_gene([100.0, -100.0, 1.0, 3.0], scope=2)
    assert gene.mu == 2.0
    assert gene.sigma == 1.0


def test_compute_gene_scope_longer_than_window():
    assert compute_gene([1.0, 3.0], scope=10) == compute_gene([1.0, 3.0], scope=2)


def test_compute_gene_constant_window():
    assert compute_gene([5.0] * 8, scope=8) == GeneVector(mu=5.0, sigma=0.0)


def test_compute_gene_matches_batch_statistics():
    window = np.random.default_rng(3).normal(2.0, 3.0, size=200)
    gene = compute_gene(window, scope=120)
    assert gene.mu == pytest.approx(np.mean(window[-120:]), rel=1e-12)
    assert gene.sigma == pytest.approx(np.std(window[-120:], ddof=0), rel=1e-12)


def test_compute_gene_errors():
    with pytest.raises(EmptyWindow):
        compute_gene([], scope=4)
    with pytest.raises(NonFiniteInput):
        compute_gene([1.0, float("nan")], scope=2)
    with pytest.raises(ConfigurationError):
        compute_gene([1.0, 2.0], scope=0)


def test_ema_update():
    updated = ema_update(GeneVector(0.0, 1.0), GeneVector(10.0, 3.0), tau_l=0.2)
    assert updated.mu == pytest.approx(2.0)
    assert updated.sigma == pytest.approx(1.4)


def test_ema_update_with_ratio_one_replaces_the_gene():
    assert ema_update(GeneVector(0.0, 1.0), GeneVector(4.0, 2.0), tau_l=1.0) == GeneVector(4.0, 2.0)


@pytest.mark.parametrize("seed", range(100))
def test_global_update_matches_two_pass_statistics(seed):
    rng = np.random.default_rng(seed)
    means = rng.normal(rng.uniform(-5.0, 5.0), rng.uniform(0.1, 3.0), size=int(rng.integers(1, 1001)))
    gene, n = GeneVector(float(means[0]), 0.0), 1
    for mean in means[1:]:
        gene, n = global_update(gene, n, GeneVector(float(mean), 1.0))

    assert n == means.size
    assert gene.mu == pytest.approx(np.mean(means), rel=1e-9, abs=1e-12 * means.size)
    assert gene.sigma == pytest.approx(np.std(means), rel=1e-9)


def test_global_update_ignores_instance_sigma():
    first, _ = global_update(GeneVector(0.0, 0.0), 1, GeneVector(2.0, 0.5))
    second, _ = global_update(GeneVector(0.0, 0.0), 1, GeneVector(2.0, 50.0))
    assert first == second == GeneVector(1.0, 1.0)


def test_global_update_rejects_zero_count():
    with pytest.raises(InternalStateError):
        global_update(GeneVector(0.0, 0.0), 0, GeneVector(1.0, 1.0))


def test_gene_state_rejects_zero_count():
    with pytest.raises(InternalStateError):
        GeneState(local=GeneVector(0.0, 1.0), global_=GeneVector(0.0, 1.0), n=0)


def test_mix_gene_weights_the_local_part():
    state = GeneState(local=GeneVector(10.0, 2.0), global_=GeneVector(0.0, 1.0), n=5)
    mixed = mix_gene(state, tau_gene=0.8)
    assert mixed.mu == pytest.approx(8.0)
    assert mixed.sigma == pytest.approx(1.8)


def test_mix_gene_single_parts():
    state = GeneState(local=GeneVector(10.0, 2.0), global_=GeneVector(0.0, 1.0), n=5)
    assert mix_gene(state, 0.8, use_global=False) == state.local
    assert mix_gene(state, 0.8, use_local=False) == state.global_
    with pytest.raises(ConfigurationError):
        mix_gene(state, 0.8, use_local=False, use_global=False)


def test_gene_vector_rejects_negative_sigma():
    with pytest.raises(NumericError):
        GeneVector(0.0, -1.0)


def test_gene_distance():
    assert gene_distance(GeneVector(0.0, 0.0), GeneVector(3.0, 4.0)) == 5.0


def test_mle_cost_formula():
    cost = mle_cost(GeneVector(1.0, 2.0), GeneVector(3.0, 1.0))
    assert cost == pytest.approx(2.0 * math.log(2.0) + 1.0 / 4.0 + 4.0 / 4.0)


def test_mle_cost_prefers_the_matching_spread():
    sample = GeneVector(0.0, 1.0)
    assert mle_cost(GeneVector(0.0, 1.0), sample) < mle_cost(GeneVector(0.0, 5.0), sample)
    assert mle_cost(GeneVector(0.0, 1.0), sample) < mle_cost(GeneVector(0.0, 0.2), sample)


def test_mle_cost_floors_a_constant_candidate():
    assert math.isfinite(mle_cost(GeneVector(0.0, 0.0), GeneVector(0.0, 0.0)))


@pytest.mark.parametrize("tau_l", [0.05, 0.2, 0.7, 1.0])
def test_ema_update_matches_the_closed_form(tau_l):
    rng = np.random.default_rng(int(tau_l * 100))
    start = GeneVector(float(rng.normal()), float(rng.uniform(0.1, 2.0)))
    genes = [GeneVector(float(mu), float(sigma)) for mu, sigma in zip(rng.normal(size=50), rng.uniform(0.1, 2.0, 50))]

    local = start
    for gene in genes:
        local = ema_update(local, gene, tau_l)

    k = len(genes)
    weights = tau_l * (1.0 - tau_l) ** np.arange(k - 1, -1, -1)
    expected_mu = (1.0 - tau_l) ** k * start.mu + np.dot(weights, [gene.mu for gene in genes])
    expected_sigma = (1.0 - tau_l) ** k * start.sigma + np.dot(weights, [gene.sigma for gene in genes])
    assert local.mu == pytest.approx(expected_mu, rel=1e-12, abs=1e-12)
    assert local.sigma == pytest.approx(expected_sigma, rel=1e-12, abs=1e-12)


def test_mix_gene_is_a_convex_combination():
    rng = np.random.default_rng(21)
    for _ in range(1000):
        local = GeneVector(float(rng.normal(0, 5)), float(rng.uniform(0, 3)))
        global_ = GeneVector(float(rng.normal(0, 5)), float(rng.uniform(0, 3)))
        tau_gene = float(rng.uniform())
        mixed = mix_gene(GeneState(local=local, global_=global_, n=3), tau_gene)

        for part in ("mu", "sigma"):
            low, high = sorted((getattr(local, part), getattr(global_, part)))
            assert low - 1e-12 <= getattr(mixed, part) <= high + 1e-12

    state = GeneState(local=GeneVector(3.0, 1.0), global_=GeneVector(-2.0, 0.5), n=4)
    assert mix_gene(state, 1.0) == state.local
    assert mix_gene(state, 0.0) == state.global_


def test_gene_distance_is_a_metric():
    rng = np.random.default_rng(22)
    for _ in range(1000):
        a, b, c = (GeneVector(float(rng.normal(0, 5)), float(rng.uniform(0, 3))) for _ in range(3))
        assert gene_distance(a, a) == 0.0
        assert gene_distance(a, b) == gene_distance(b, a)
        assert gene_distance(a, c) <= gene_distance(a, b) + gene_distance(b, c) + 1e-12


@pytest.mark.parametrize("seed", range(20))
def test_compute_gene_follows_shift_and_scale(seed):
    rng = np.random.default_rng(seed)
    window = rng.normal(rng.uniform(-3, 3), rng.uniform(0.5, 2.0), size=60)
    shift, scale = float(rng.uniform(-100, 100)), float(rng.uniform(-10, 10))
    base = compute_gene(window, scope=40)

    shifted = compute_gene(window + shift, scope=40)
    assert shifted.mu == pytest.approx(base.mu + shift, rel=1e-9, abs=1e-9)
    assert shifted.sigma == pytest.approx(base.sigma, rel=1e-9, abs=1e-9)

    scaled = compute_gene(window * scale, scope=40)
    assert scaled.mu == pytest.approx(base.mu * scale, rel=1e-9, abs=1e-9)
    assert scaled.sigma == pytest.approx(base.sigma * abs(scale), rel=1e-9, abs=1e-9)


def test_mle_cost_is_lowest_at_the_sample_mean():
    rng = np.random.default_rng(23)
    for _ in range(1000):
        sample = GeneVector(float(rng.normal(0, 5)), float(rng.uniform(0.1, 3)))
        sigma = float(rng.uniform(0.1, 5))
        offset = float(rng.uniform(0.01, 5)) * float(rng.choice([-1.0, 1.0]))
        at_mean = mle_cost(GeneVector(sample.mu, sigma), sample)
        assert at_mean < mle_cost(GeneVector(sample.mu + offset, sigma), sample)
