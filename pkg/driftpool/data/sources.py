from pathlib import Path
from typing import Optional

import numpy as np

from driftpool.data.loader import SeriesSource, load_csv
from driftpool.data.synthetic import default_spec, generate
from driftpool.data.transforms import normalize
from driftpool.schemas.manifest import RunManifest
from driftpool.schemas.synthetic import SyntheticSpec

DEFAULT_SPEC_NAME = "default"


def load_synthetic_spec(name: str, seed: Optional[int] = None) -> SyntheticSpec:
    """the built-in recurring stream for `default`, otherwise a JSON spec file."""
    if name == DEFAULT_SPEC_NAME:
        spec = default_spec()
    else:
        spec = SyntheticSpec.parse_file(Path(name))
    if seed is not None:
        spec = spec.copy(update={"seed": seed})
    return spec


def resolve_series(manifest: RunManifest) -> SeriesSource:
    if manifest.synthetic:
        spec = load_synthetic_spec(manifest.synthetic, manifest.synthetic_seed)
        stream = generate(spec)
        return SeriesSource(
            values=stream.values,
            name=manifest.synthetic,
            origin={"kind": "synthetic", "spec": manifest.synthetic, "seed": str(spec.seed)},
        )
    return load_csv(manifest.data, column=manifest.column, has_header=manifest.has_header)


def prepare_series(manifest: RunManifest) -> np.ndarray:
    source = resolve_series(manifest)
    values, _, _ = normalize(source.values, stats_from=manifest.normalize, warm_ratio=manifest.engine.warm_ratio)
    return values
