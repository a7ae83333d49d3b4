"""Analysis configuration for the command-line front end."""

import logging
import os
import sys
from typing import Any, Dict

from pydantic import BaseModel, Field, field_validator

LOG_LEVEL_ENV = 'BCN_LOG_LEVEL'
LOG_FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'


class AnalysisConfig(BaseModel):
    """Configuration management; command-line flags override these defaults."""

    max_n: int = Field(default=20, ge=1)
    max_rows: int = Field(default=65536, ge=1)
    json_output: bool = False
    quiet: bool = False
    show_timing: bool = False
    log_level: str = 'WARNING'

    @field_validator('log_level')
    @classmethod
    def _known_level(cls, value: str) -> str:
        level = value.upper()
        if level not in logging.getLevelNamesMapping():
            raise ValueError(f"unknown log level '{value}'")
        return level

    @classmethod
    def from_env(cls, **overrides: Any) -> 'AnalysisConfig':
        """Defaults, then ``BCN_LOG_LEVEL``, then any non-``None`` override."""
        values: Dict[str, Any] = {'log_level': os.getenv(LOG_LEVEL_ENV, 'WARNING')}
        values.update({key: value for key, value in overrides.items() if value is not None})
        return cls(**values)

    def get_logging_params(self) -> Dict[str, Any]:
        """Keyword arguments for ``logging.basicConfig``; logs go to stderr, reports to stdout."""
        return {
            'level': self.log_level,
            'format': LOG_FORMAT,
            'stream': sys.stderr,
        }
