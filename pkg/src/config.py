"""
Configuration loading and logging setup

Settings live in configs/base_config.yaml. Every section is optional; missing
keys fall back to the pydantic model defaults below, which are also the
keyword defaults used throughout the library.
"""

import logging
import sys
from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from loguru import logger as loguru_logger
from pydantic import BaseModel, Field, field_validator

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_PATH = Path(__file__).parent.parent / "configs" / "base_config.yaml"


class FieldConfig(BaseModel):
    p: int = 2


class HomologyConfig(BaseModel):
    horizon: int = Field(20, ge=1)


class ModrepConfig(BaseModel):
    iso_exhaustive_log2: int = 16
    iso_samples: int = 64
    decompose_exhaustive_dim: int = 12
    decompose_samples: int = 64


class TautiltConfig(BaseModel):
    fac_cover_max_power: int = Field(3, ge=1)
    fac_cover_samples: int = Field(4, ge=0)


class DellConfig(BaseModel):
    budget_modules: int = Field(64, ge=1)
    budget_max_dim: int = Field(24, ge=1)
    max_level: int = Field(6, ge=0)


class EnumerationConfig(BaseModel):
    max_dim: int = Field(4, ge=1)
    brute_force_limit_log2: int = 22


class SuiteConfig(BaseModel):
    seed: int = 0
    workers: int = Field(1, ge=1)
    combination_cap: int = Field(64, ge=0)
    ideal_cap: int = Field(64, ge=1)
    ext2_samples: int = Field(3, ge=0)


class LoggingConfig(BaseModel):
    level: str = "INFO"
    format: str = "{time} | {level} | {message}"
    file: Optional[str] = None

    @field_validator("level")
    @classmethod
    def _upper_level(cls, value: str) -> str:
        return value.upper()


class Settings(BaseModel):
    """Root configuration object"""

    field: FieldConfig = FieldConfig()
    homology: HomologyConfig = HomologyConfig()
    modrep: ModrepConfig = ModrepConfig()
    tautilt: TautiltConfig = TautiltConfig()
    dell: DellConfig = DellConfig()
    enumeration: EnumerationConfig = EnumerationConfig()
    suite: SuiteConfig = SuiteConfig()
    logging: LoggingConfig = LoggingConfig()


def load_config(config_path: Optional[str] = None) -> Settings:
    """
    Load settings from YAML

    Args:
        config_path: Path to a YAML file; the bundled base config when omitted

    Returns:
        Validated Settings (defaults when the file is absent)
    """
    path = Path(config_path) if config_path else DEFAULT_CONFIG_PATH
    if not path.exists():
        if config_path:
            logger.warning(f"Config file {path} not found, using defaults")
        return Settings()

    with open(path, "r", encoding="utf-8") as f:
        raw: Dict[str, Any] = yaml.safe_load(f) or {}
    return Settings.model_validate(raw)


class _InterceptHandler(logging.Handler):
    """Route stdlib logging records into loguru"""

    def emit(self, record: logging.LogRecord) -> None:
        try:
            level: Any = loguru_logger.level(record.levelname).name
        except ValueError:
            level = record.levelno
        loguru_logger.opt(exception=record.exc_info).log(level, record.getMessage())


def configure_logging(cfg: LoggingConfig, verbose: bool = False) -> None:
    """Install loguru sinks per config and capture library logging"""
    level = "DEBUG" if verbose else cfg.level
    loguru_logger.remove()
    loguru_logger.add(sys.stderr, level=level, format=cfg.format)
    if cfg.file:
        Path(cfg.file).parent.mkdir(parents=True, exist_ok=True)
        loguru_logger.add(cfg.file, level=level, format=cfg.format)
    logging.basicConfig(handlers=[_InterceptHandler()], level=0, force=True)
