import logging
import os
import sys
from typing import Dict, Optional

from dotenv import load_dotenv

DEFAULT_LOG_LEVEL = "WARNING"

LOG_FORMAT = "%(asctime)s [%(levelname)8s] %(name)s: %(message)s"


def load_env() -> Dict[str, Optional[str]]:
    """Load environment variables from .env file if present"""
    load_dotenv()
    return {key: os.getenv(key) for key in ["UMBRAL_LOG_LEVEL"]}


def resolve_log_level(debug: bool = False) -> int:
    """
    Pick the logging level for a run

    Args:
        debug: True when --debug was given; wins over the environment

    Returns:
        The numeric logging level
    """
    if debug:
        return logging.DEBUG
    name = (load_env().get("UMBRAL_LOG_LEVEL") or DEFAULT_LOG_LEVEL).upper()
    level = logging.getLevelName(name)
    if not isinstance(level, int):
        # unknown names come back as "Level FOO"
        return logging.WARNING
    return level


def configure_logging(level: int) -> None:
    """Route all log records to stderr; stdout is kept for the output document"""
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr, force=True)
