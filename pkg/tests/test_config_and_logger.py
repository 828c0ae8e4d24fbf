# -*- coding: utf-8 -*-
"""Tests for the tolerance configuration and the logger."""

import json
import logging
from pathlib import Path

from src.utils.config_manager import CONFIG_FILE_NAME, ConfigManager, Tolerances
from src.utils.logger import Logger, format_fields, parse_level


def test_missing_config_falls_back_to_defaults(tmp_path):
    manager = ConfigManager(str(tmp_path / "config"))
    assert manager.get_tolerances() == Tolerances()
    assert manager.get_logging_config() == {"level": "WARNING", "log_dir": None}


def test_repository_config_matches_the_defaults():
    assert ConfigManager().get_tolerances() == Tolerances()


def test_json5_config_overrides_individual_tolerances(tmp_path):
    config_dir = tmp_path / "config"
    config_dir.mkdir()
    (config_dir / CONFIG_FILE_NAME).write_text(
        """
        {
            // 放宽公共点阈值
            "tolerances": {
                "meet_tol": 1e-8,
                "no_such_tol": 3,
            },
        }
        """,
        encoding="utf-8",
    )

    tolerances = ConfigManager(str(config_dir)).get_tolerances()
    assert tolerances.meet_tol == 1e-8
    assert tolerances.iso_tol == Tolerances().iso_tol
    assert not hasattr(tolerances, "no_such_tol")


def test_malformed_config_falls_back_to_defaults(tmp_path):
    config_dir = tmp_path / "config"
    config_dir.mkdir()
    (config_dir / CONFIG_FILE_NAME).write_text("{ tolerances: [", encoding="utf-8")
    assert ConfigManager(str(config_dir)).get_tolerances() == Tolerances()


def test_save_config_persists_and_reloads(tmp_path):
    config_dir = tmp_path / "nested" / "config"
    manager = ConfigManager(str(config_dir))
    config = {"tolerances": {"unit_tol": 1e-11}, "logging": {"level": "DEBUG", "log_dir": None}}

    assert manager.save_config(config) is True
    assert manager.get_tolerances().unit_tol == 1e-11

    saved = json.loads((config_dir / CONFIG_FILE_NAME).read_text(encoding="utf-8"))
    assert saved["tolerances"]["unit_tol"] == 1e-11

    reloaded = ConfigManager(str(config_dir))
    assert reloaded.get_tolerances().unit_tol == 1e-11
    assert reloaded.get_logging_config()["level"] == "DEBUG"


def test_tolerances_to_dict_round_trips():
    tolerances = Tolerances(meet_tol=1e-7)
    assert Tolerances.from_dict(tolerances.to_dict()) == tolerances
    assert set(tolerances.to_dict()) >= {"iso_tol", "meet_tol", "parallel_tol", "commuting_tol"}


def test_logger_writes_debug_messages_to_file(tmp_path):
    logger = Logger(name="hamilton_turns.test_file", level="ERROR", log_dir=str(tmp_path / "logs"))
    logger.debug("退化分解: w=[1, 0, 0]")
    for handler in logger.logger.handlers:
        handler.flush()

    assert logger.console_handler.level == logging.ERROR
    log_text = Path(logger.log_file).read_text(encoding="utf-8")
    assert "DEBUG" in log_text
    assert "退化分解" in log_text


def test_apply_logging_sets_level_and_file(tmp_path):
    config_dir = tmp_path / "config"
    manager = ConfigManager(str(config_dir))
    manager.save_config({"tolerances": {}, "logging": {"level": "INFO", "log_dir": str(tmp_path / "logs")}})

    logger = Logger(name="hamilton_turns.test_apply")
    manager.apply_logging(logger)
    assert logger.console_handler.level == logging.INFO
    assert logger.log_file is not None
    assert (tmp_path / "logs").exists()


def test_context_fields_are_appended_to_the_message(tmp_path):
    logger = Logger(name="hamilton_turns.test_fields", log_dir=str(tmp_path / "logs"))
    logger.debug("几何路径", measure="1.000e-01")
    for handler in logger.logger.handlers:
        handler.flush()

    assert "几何路径 | measure=1.000e-01" in Path(logger.log_file).read_text(encoding="utf-8")
    assert format_fields("msg", {}) == "msg"
    assert format_fields("msg", {"a": 1, "b": [0, 1]}) == "msg | a=1, b=[0, 1]"


def test_parse_level_accepts_names_and_numbers():
    assert parse_level("debug") == logging.DEBUG
    assert parse_level("INFO") == logging.INFO
    assert parse_level(logging.ERROR) == logging.ERROR
    assert parse_level("nonsense") == logging.WARNING


def test_recreating_a_logger_does_not_duplicate_handlers():
    Logger(name="hamilton_turns.test_reinit")
    logger = Logger(name="hamilton_turns.test_reinit")
    assert logger.logger.handlers == [logger.console_handler]
