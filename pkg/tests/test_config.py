import logging

import pytest
from pydantic import ValidationError

from src.config import DEFAULT_CONFIG_PATH, LoggingConfig, Settings, configure_logging, load_config


def test_bundled_config_matches_defaults():
    assert DEFAULT_CONFIG_PATH.exists()
    assert load_config() == Settings()


def test_missing_config_falls_back_to_defaults(tmp_path):
    settings = load_config(str(tmp_path / "absent.yaml"))
    assert settings.homology.horizon == 20
    assert settings.enumeration.max_dim == 4


def test_partial_config_keeps_other_defaults(tmp_path):
    path = tmp_path / "cfg.yaml"
    path.write_text("homology:\n  horizon: 5\nsuite:\n  workers: 2\n", encoding="utf-8")
    settings = load_config(str(path))
    assert settings.homology.horizon == 5
    assert settings.suite.workers == 2
    assert settings.dell.max_level == 6


def test_empty_config_file(tmp_path):
    path = tmp_path / "empty.yaml"
    path.write_text("", encoding="utf-8")
    assert load_config(str(path)) == Settings()


def test_invalid_values_are_rejected(tmp_path):
    path = tmp_path / "bad.yaml"
    path.write_text("homology:\n  horizon: 0\n", encoding="utf-8")
    with pytest.raises(ValidationError):
        load_config(str(path))


def test_logging_level_is_normalized():
    assert LoggingConfig(level="debug").level == "DEBUG"


def test_configure_logging_writes_file(tmp_path):
    log_file = tmp_path / "logs" / "run.log"
    configure_logging(LoggingConfig(level="INFO", file=str(log_file), format="{level} | {message}"))
    logging.getLogger("src.tests").info("hello from the library")
    assert log_file.exists()
    assert "hello from the library" in log_file.read_text(encoding="utf-8")
