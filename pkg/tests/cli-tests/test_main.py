import argparse
import json

import pytest

from driftpool.core.config import settings
from driftpool.data.loader import load_csv, write_csv
from driftpool.main import build_parser, main


@pytest.fixture
def stream_path(tmp_path):
    path = tmp_path / "stream.csv"
    assert main(["generate", "--segment-length", "400", "--seed", "1", "--out", str(path)]) == 0
    return path


def test_parser_lists_every_command():
    parser = build_parser()
    subcommands = next(action for action in parser._actions if isinstance(action, argparse._SubParsersAction))
    assert parser.prog == settings.APP_NAME
    assert set(subcommands.choices) == {"run", "compare", "sweep", "generate", "purity"}

    args = parser.parse_args(["run", "--synthetic", "default", "--tau-mu", "2.5", "--local-only"])
    assert args.command == "run"
    assert args.tau_mu == 2.5
    assert args.local_only


def test_generate_writes_values_and_labels(stream_path):
    labels_path = stream_path.with_name("stream_labels.csv")
    assert load_csv(stream_path, column="value").length == 2400
    labels = load_csv(labels_path, column="label").values
    assert labels.size == 2400
    assert set(labels.tolist()) == {0.0, 1.0, 2.0}


def test_run_writes_every_output(tmp_path, stream_path):
    out = tmp_path / "cep"
    assert main(["run", "--data", str(stream_path), "--out", str(out)]) == 0

    for name in ("results.json", "records.csv", "trajectories.csv", "events.csv", "manifest.txt"):
        assert (out / name).is_file()

    results = json.loads((out / "results.json").read_text(encoding="utf-8"))
    assert results["schemaVersion"] == settings.RESULTS_SCHEMA_VERSION
    assert results["baseline"] is False
    assert results["result"]["summary"]["nInstances"] == len(results["result"]["records"])
    assert "out" in results["manifest"]

    records = load_csv(out / "records.csv", column="mse").values
    assert records.tolist() == [record["mse"] for record in results["result"]["records"]]
    assert "lookback = 60" in (out / "manifest.txt").read_text(encoding="utf-8")


def test_run_from_a_manifest_file(tmp_path, stream_path):
    manifest = tmp_path / "cep.txt"
    manifest.write_text(f"data = {stream_path}\nforecaster = naive\nlookback = 48\n", encoding="utf-8")
    out = tmp_path / "from-file"
    assert main(["run", "--config", str(manifest), "--horizon", "24", "--out", str(out)]) == 0

    text = (out / "manifest.txt").read_text(encoding="utf-8")
    assert "lookback = 48" in text
    assert "horizon = 24" in text
    assert "forecaster = naive" in text


def test_baseline_run(tmp_path, stream_path):
    out = tmp_path / "base"
    assert main(["run", "--data", str(stream_path), "--baseline", "--out", str(out)]) == 0
    results = json.loads((out / "results.json").read_text(encoding="utf-8"))
    assert results["baseline"] is True
    assert results["result"]["summary"]["totalEvolutions"] == 0


def test_compare_and_sweep(tmp_path, stream_path):
    first, second = tmp_path / "cep.txt", tmp_path / "no_evolution.txt"
    first.write_text(f"data = {stream_path}\n", encoding="utf-8")
    second.write_text(f"data = {stream_path}\nevolution = false\n", encoding="utf-8")

    assert main(["compare", str(first), str(second), "--out", str(tmp_path / "cmp")]) == 0
    comparison = load_csv(tmp_path / "cmp" / "comparison.csv", column="mean_mse")
    assert comparison.length == 2

    out = tmp_path / "sweep"
    assert main(["sweep", "--config", str(first), "--knob", "tau_mu", "--values", "2,3", "--out", str(out)]) == 0
    assert load_csv(out / "sweep.csv", column="mean_mse").length == 2


def test_purity(tmp_path, stream_path):
    out = tmp_path / "cep"
    assert main(["run", "--data", str(stream_path), "--out", str(out)]) == 0
    assert main(["purity", str(out), str(stream_path.with_name("stream_labels.csv"))]) == 0
    assert main(["purity", str(out / "results.json"), str(stream_path.with_name("stream_labels.csv"))]) == 0
    assert main(["purity", str(out), str(stream_path.with_name("stream_labels.csv")), "--exclude-straddling"]) == 0


def test_purity_with_short_labels(tmp_path, stream_path):
    out = tmp_path / "cep"
    assert main(["run", "--data", str(stream_path), "--out", str(out)]) == 0
    labels = write_csv(tmp_path / "short_labels.csv", {"label": [0] * 100})
    assert main(["purity", str(out), str(labels)]) == 2


def test_invalid_manifest_value_exits_with_2():
    assert main(["run", "--synthetic", "default", "--tau-l", "1.5"]) == 2


def test_two_data_sources_exit_with_2(stream_path):
    assert main(["run", "--synthetic", "default", "--data", str(stream_path)]) == 2


def test_unknown_flag_exits_with_2():
    assert main(["run", "--no-such-flag"]) == 2


def test_mismatched_manifests_exit_with_2(tmp_path, stream_path):
    first, second = tmp_path / "a.txt", tmp_path / "b.txt"
    first.write_text(f"data = {stream_path}\n", encoding="utf-8")
    second.write_text(f"data = {stream_path}\nlookback = 30\n", encoding="utf-8")
    assert main(["compare", str(first), str(second)]) == 2


def test_short_series_exits_with_3(tmp_path):
    path = write_csv(tmp_path / "short.csv", {"value": [float(i % 7) for i in range(100)]})
    assert main(["run", "--data", str(path)]) == 3


def test_missing_file_exits_with_4(tmp_path):
    assert main(["run", "--data", str(tmp_path / "missing.csv")]) == 4


def test_missing_manifest_exits_with_4(tmp_path):
    assert main(["run", "--config", str(tmp_path / "missing.txt")]) == 4


def test_unparsable_value_exits_with_4(tmp_path):
    path = tmp_path / "broken.csv"
    path.write_text("value\n1.0\nabc\n", encoding="utf-8")
    assert main(["run", "--data", str(path)]) == 4
