import logging

import pytest

from seaweed_index.lib.constants import INT64_MAX
from seaweed_index.lib.log import LOGGER, AppLogger
from seaweed_index.lib.report import CommandConfig, render_mapping, render_records, render_table
from seaweed_index.lib.settings import SettingsManager
from seaweed_index.lib.util import CountOverflowError, checked_count, ordered_map


def square(x: int) -> int:
    return x * x


def test_checked_count():
    assert checked_count(INT64_MAX) == INT64_MAX
    with pytest.raises(CountOverflowError):
        checked_count(INT64_MAX + 1)


def test_ordered_map_keeps_order():
    items = list(range(12))
    assert ordered_map(square, items) == [x * x for x in items]
    assert ordered_map(square, items, jobs=3) == [x * x for x in items]


def test_settings_defaults_and_coercion():
    settings = SettingsManager()
    settings.min_repeats = ("period/min_repeats", int, 3)
    assert settings.min_repeats.value == 3
    seen = []
    settings.min_repeats.connect(seen.append)
    settings.min_repeats.value = "4"
    assert settings.min_repeats.value == 4
    assert seen == [4]
    settings.reset()
    assert settings.min_repeats.value == 3
    assert settings.names() == ["min_repeats"]


def test_settings_unknown_name():
    settings = SettingsManager()
    with pytest.raises(AttributeError):
        settings.missing
    with pytest.raises(TypeError):
        settings.bad = 3


def test_logger_is_a_singleton(tmp_path):
    app_logger = AppLogger.get_instance()
    assert AppLogger.get_instance() is app_logger
    with pytest.raises(Exception):
        AppLogger()

    path = app_logger.add_file_handler(tmp_path / "run.log")
    LOGGER.debug("file handler attached")
    for handler in LOGGER.handlers:
        handler.flush()
    assert "file handler attached" in path.read_text()

    app_logger.remove_file_handler()
    assert not any(isinstance(handler, logging.FileHandler) for handler in LOGGER.handlers)
    LOGGER.debug("after removal")
    assert "after removal" not in path.read_text()
    app_logger.remove_file_handler()
    app_logger.set_stream_level(logging.WARN)


def test_render_formats():
    header, rows = ["n", "count"], [[1, 2], [10, 3]]
    assert render_table(header, rows, "csv") == "n,count\n1,2\n10,3\n"
    assert render_table(header, rows, "text") == " n  count\n 1      2\n10      3\n"
    assert render_records([], "csv") == "\n"
    assert render_mapping({"values": [7, 3], "flag": None}, "text") == "values=7 3\nflag=\n"


def test_command_config_validation():
    assert CommandConfig(command="index").output_format == "text"
    with pytest.raises(ValueError):
        CommandConfig(command="index", output_format="xml")
    with pytest.raises(ValueError):
        CommandConfig(command="index", jobs=0)
