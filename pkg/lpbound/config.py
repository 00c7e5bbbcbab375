# lpbound/config.py
import os
from functools import lru_cache

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from .errors import InvalidParameterError

# Pick up a local .env (if any) before reading the environment.
load_dotenv()

LOG_LEVELS = ("CRITICAL", "ERROR", "WARNING", "INFO", "DEBUG")

# field name -> environment variable
ENV_VARS = {
    "dense_limit": "LPBOUND_DENSE_LIMIT",
    "lp_limit": "LPBOUND_LP_LIMIT",
    "oracle_limit": "LPBOUND_ORACLE_LIMIT",
    "log_level": "LPBOUND_LOG_LEVEL",
    "jobs": "LPBOUND_JOBS",
}


class Settings(BaseModel):
    model_config = ConfigDict(frozen=True)

    dense_limit: int = Field(24, ge=1)
    lp_limit: int = Field(64, ge=1)
    oracle_limit: int = Field(10, ge=1)
    log_level: str = "WARNING"
    jobs: int = Field(1, ge=1)

    @field_validator("log_level", mode="before")
    @classmethod
    def _known_level(cls, value):
        level = str(value).strip().upper()
        if level not in LOG_LEVELS:
            raise ValueError(f"expected one of {', '.join(LOG_LEVELS)}")
        return level


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    raw = {field: os.environ[var] for field, var in ENV_VARS.items() if var in os.environ}
    try:
        return Settings(**raw)
    except ValidationError as e:
        problems = []
        for err in e.errors():
            field = str(err["loc"][0]) if err["loc"] else ""
            problems.append(f"{ENV_VARS.get(field, field)}={raw.get(field)!r}: {err['msg']}")
        raise InvalidParameterError(f"bad environment setting: {'; '.join(problems)}") from e
