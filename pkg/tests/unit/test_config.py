"""Tests for configuration loading and logging helpers."""

import logging

import pytest

from src.config import Config
from src.domain.value_objects.system_config import QueueKind, Scheme
from src.utils import parse_int_list, setup_logging


@pytest.fixture
def config_file(tmp_path):
    path = tmp_path / "config.yml"
    path.write_text(
        "system:\n"
        "  L: 2\n"
        "  K: 4\n"
        "  N: 5\n"
        "  scheme: MMF-RS\n"
        "  queue_kind: DSMQ\n"
        "  good_user_set: [0, 1]\n"
        "  channel_gains_db: [0, 0, -15, -15]\n"
        "simulation:\n"
        "  n_services: 100\n"
    )
    return path


def test_loads_scenario(config_file):
    config = Config(str(config_file), load_env=False)
    system = config.system_config()
    assert system.scheme is Scheme.MMF_RS
    assert system.queue_kind is QueueKind.DSMQ
    assert system.channel_gains[2] == pytest.approx(10 ** -1.5)
    assert config.section("simulation") == {"n_services": 100}
    assert not config.full_scale


def test_env_overrides(config_file, monkeypatch):
    monkeypatch.setenv("SIM_SERVICES", "250")
    monkeypatch.setenv("SIM_SEEDS", "0-2,9")
    monkeypatch.setenv("SIM_LOG_LEVEL", "DEBUG")
    config = Config(str(config_file))
    assert config.section("simulation")["n_services"] == 250
    assert config.section("simulation")["seeds"] == [0, 1, 2, 9]
    assert config.section("logging")["level"] == "DEBUG"


def test_unknown_section_rejected(tmp_path):
    path = tmp_path / "config.yml"
    path.write_text("system: {L: 2}\nmailbox: {}\n")
    with pytest.raises(ValueError, match="mailbox"):
        Config(str(path), load_env=False)


def test_missing_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        Config(str(tmp_path / "nope.yml"), load_env=False)


def test_presets_are_loadable():
    desk = Config.from_preset("desk", load_env=False)
    assert not desk.full_scale
    desk.system_config()
    assert Config.from_preset("reference-homogeneous", load_env=False).full_scale
    with pytest.raises(FileNotFoundError, match="desk"):
        Config.from_preset("nonexistent", load_env=False)


@pytest.mark.parametrize(
    "text, expected",
    [("3", [3]), ("0,1,2", [0, 1, 2]), ("0-3", [0, 1, 2, 3]), ("0-1,7", [0, 1, 7])],
)
def test_parse_int_list(text, expected):
    assert parse_int_list(text) == expected


def test_setup_logging_writes_file(tmp_path):
    root = logging.getLogger()
    saved_handlers, saved_level = list(root.handlers), root.level
    log_file = tmp_path / "logs" / "run.log"
    try:
        setup_logging("INFO", str(log_file))
        logging.getLogger("src.test").info("hello from the test")
        for handler in root.handlers:
            handler.flush()
        assert "hello from the test" in log_file.read_text()
        assert logging.getLogger("matplotlib").level == logging.WARNING
    finally:
        for handler in root.handlers:
            handler.close()
        root.handlers[:] = saved_handlers
        root.setLevel(saved_level)
