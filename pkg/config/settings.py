from dotenv import load_dotenv
from typing import Any, Dict, Optional
import logging
import os

from models.report_models import Caps, RunConfig

logger = logging.getLogger(__name__)

ENV_PREFIX = "RINGINV_"


def _split(value: str):
    return [item.strip() for item in value.split(",") if item.strip()]


def log_level(default: str = "INFO") -> int:
    name = os.getenv(f"{ENV_PREFIX}LOG_LEVEL", default).upper()
    return getattr(logging, name, logging.INFO)


def load_config(overrides: Optional[Dict[str, Any]] = None) -> RunConfig:
    """Defaults, then RINGINV_* variables (a .env file is honoured), then explicit overrides."""
    load_dotenv()
    values: Dict[str, Any] = {}
    caps = Caps()
    if os.getenv(f"{ENV_PREFIX}CAPS"):
        caps = Caps.parse(os.environ[f"{ENV_PREFIX}CAPS"])
    if os.getenv(f"{ENV_PREFIX}SEED"):
        values["seed"] = int(os.environ[f"{ENV_PREFIX}SEED"])
    if os.getenv(f"{ENV_PREFIX}JOBS"):
        values["jobs"] = int(os.environ[f"{ENV_PREFIX}JOBS"])
    if os.getenv(f"{ENV_PREFIX}OUT"):
        values["out"] = os.environ[f"{ENV_PREFIX}OUT"]
    if os.getenv(f"{ENV_PREFIX}THEOREMS"):
        values["theorems"] = _split(os.environ[f"{ENV_PREFIX}THEOREMS"])
    if os.getenv(f"{ENV_PREFIX}MASKS"):
        values["masks"] = _split(os.environ[f"{ENV_PREFIX}MASKS"])

    overrides = {k: v for k, v in (overrides or {}).items() if v is not None}
    if "caps" in overrides:
        caps = Caps.parse(overrides.pop("caps"), base=caps)
    values.update(overrides)
    config = RunConfig(caps=caps, **values)
    logger.debug(f"run config: {config.model_dump(mode='json')}")
    return config
