from pydantic import BaseSettings, Field


class BaseConfig(BaseSettings):
    APP_NAME: str = "driftpool"
    MODE: str
    DEBUG: bool

    # logging config
    LOG_LEVEL: str = Field(default="WARNING", env="DRIFTPOOL_LOG")

    # results config
    RESULTS_SCHEMA_VERSION: int = 1

    # parallel runs for compare and sweep
    DEFAULT_JOBS: int = Field(default=1, env="DRIFTPOOL_JOBS")

    class Config:
        env_file = ".env"
