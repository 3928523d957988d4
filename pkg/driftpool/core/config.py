from functools import lru_cache

from decouple import config

from driftpool.core.environments.base import BaseConfig
from driftpool.core.environments.development import DevelopmentConfig
from driftpool.core.environments.production import ProductionConfig


class SettingsFactory:
    def __init__(self, mode: str):
        self.mode = mode

    def __call__(self) -> BaseConfig:
        if self.mode == "production":
            return ProductionConfig()
        else:
            return DevelopmentConfig()


@lru_cache()
def get_settings() -> BaseConfig:
    return SettingsFactory(mode=config("DRIFTPOOL_MODE", default="development", cast=str))()


settings: BaseConfig = get_settings()
