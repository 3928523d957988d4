import hashlib
from enum import Enum
from typing import Dict, List, Mapping, Optional

from pydantic import Field, root_validator

from driftpool.schemas.base import BaseSchemaConfig
from driftpool.schemas.config import CepConfig, EngineConfig
from driftpool.services.formatters import format_float
from driftpool.services.validators import StatsScope

ENGINE_KEYS = [name for name in EngineConfig.__fields__ if name != "cep"]
CEP_KEYS = list(CepConfig.__fields__)
COMPARABLE_KEYS = ["data", "column", "has_header", "synthetic", "synthetic_seed", "normalize", "lookback", "horizon"]


def parse_key_values(text: str) -> Dict[str, str]:
    """`key = value` lines; blank lines and `#` comments are ignored."""
    pairs = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"line {number}: expected `key = value`, got `{raw.strip()}`")
        key, value = line.split("=", 1)
        pairs[key.strip()] = value.strip()
    return pairs


def format_value(value) -> str:
    if isinstance(value, Enum):
        value = value.value
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format_float(value)
    return str(value)


class RunManifest(BaseSchemaConfig):
    data: Optional[str] = Field(default=None, title="delimited text file holding the series")
    column: str = Field(default="value", title="column name or zero-based index")
    has_header: bool = True
    synthetic: Optional[str] = Field(default=None, title="`default` or a synthetic spec JSON file")
    synthetic_seed: Optional[int] = None
    normalize: StatsScope = StatsScope.warm_segment
    out: Optional[str] = Field(default=None, title="output directory")
    engine: EngineConfig = Field(default_factory=EngineConfig)

    @root_validator(skip_on_failure=True)
    def _one_data_source(cls, values):
        if bool(values.get("data")) == bool(values.get("synthetic")):
            raise ValueError("exactly one of `data` or `synthetic` must be given")
        return values

    @classmethod
    def from_mapping(cls, pairs: Mapping[str, str]) -> "RunManifest":
        top: Dict[str, object] = {}
        engine: Dict[str, object] = {}
        cep: Dict[str, object] = {}
        for key, value in pairs.items():
            if key in CEP_KEYS:
                cep[key] = value
            elif key in ENGINE_KEYS:
                engine[key] = value
            else:
                top[key] = value
        engine["cep"] = cep
        top["engine"] = engine
        return cls.parse_obj(top)

    @classmethod
    def from_text(cls, text: str, overrides: Optional[Mapping[str, str]] = None) -> "RunManifest":
        pairs = parse_key_values(text)
        pairs.update(overrides or {})
        return cls.from_mapping(pairs)

    def to_pairs(self, include_out: bool = True) -> Dict[str, str]:
        pairs = {}
        for name in self.__fields__:
            if name == "engine" or (name == "out" and not include_out):
                continue
            value = getattr(self, name)
            if value is not None:
                pairs[name] = format_value(value)
        for name in ENGINE_KEYS:
            value = getattr(self.engine, name)
            if value is not None:
                pairs[name] = format_value(value)
        for name in CEP_KEYS:
            value = getattr(self.engine.cep, name)
            if value is not None:
                pairs[name] = format_value(value)
        return pairs

    def to_text(self, include_out: bool = True) -> str:
        return "".join(f"{key} = {value}\n" for key, value in self.to_pairs(include_out).items())

    def config_hash(self) -> str:
        """digest of the canonical manifest, output directory excluded."""
        return hashlib.sha256(self.to_text(include_out=False).encode("utf-8")).hexdigest()

    def differing_keys(self, other: "RunManifest") -> List[str]:
        mine, theirs = self.to_pairs(), other.to_pairs()
        return [key for key in COMPARABLE_KEYS if mine.get(key) != theirs.get(key)]
