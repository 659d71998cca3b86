"""
Environment-driven settings for the CLI, the web API and the scripts.

Values come from the process environment, optionally seeded from a ``.env``
file in the working directory. Library modules never read these; entry
points pass the values down explicitly.
"""

import logging
import os
from dataclasses import dataclass

from dotenv import load_dotenv

# Load environment variables
load_dotenv()

VERSION = '1.0.0'
SERVICE_NAME = 'Surface Word Bialgebra'


def _env_bool(name: str, default: bool) -> bool:
    value = os.environ.get(name)
    if value is None:
        return default
    return value.strip().lower() in ('1', 'true', 'yes', 'on')


def _env_int(name: str, default: int) -> int:
    value = os.environ.get(name)
    if value is None or not value.strip():
        return default
    try:
        return int(value)
    except ValueError:
        logging.getLogger(__name__).warning(f"Ignoring non-integer {name}={value!r}, using {default}")
        return default


@dataclass(frozen=True)
class Settings:
    log_level: str = 'INFO'
    lp1_extended_windows: bool = False
    max_word_length: int = 24
    max_check_samples: int = 500
    port: int = 5000
    debug: bool = False

    @classmethod
    def from_env(cls) -> 'Settings':
        """Read settings from the environment, falling back to the defaults."""
        return cls(
            log_level=os.environ.get('LOG_LEVEL', 'INFO').upper(),
            lp1_extended_windows=_env_bool('LP1_EXTENDED_WINDOWS', False),
            max_word_length=_env_int('MAX_WORD_LENGTH', 24),
            max_check_samples=_env_int('MAX_CHECK_SAMPLES', 500),
            port=_env_int('PORT', 5000),
            debug=os.environ.get('FLASK_ENV') == 'development',
        )


def configure_logging(level: str, fmt: str = None):
    """Configure the root logger once for an entry point."""
    kwargs = {'level': getattr(logging, level.upper(), logging.INFO)}
    if fmt:
        kwargs['format'] = fmt
    logging.basicConfig(**kwargs)
