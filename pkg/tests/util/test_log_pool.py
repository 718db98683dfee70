import logging
from math import factorial

import pytest

from arrangecount.util.log import LogManager
from arrangecount.util.pool import ordered_map


@pytest.fixture
def restore_level():
    level = LogManager.get_log_level()
    yield
    LogManager.set_log_level(level)


def test_child_loggers_share_the_root():
    logger = LogManager.get_logger("Enumerator")
    assert logger.name == "ArrangeCount.Enumerator"
    assert LogManager.get_logger() is logger.parent
    assert not LogManager.get_logger().propagate


def test_set_log_level(restore_level):
    LogManager.set_log_level("DEBUG")
    assert LogManager.get_log_level() == logging.DEBUG
    LogManager.set_log_level(logging.ERROR)
    assert LogManager.get_log_level() == logging.ERROR


def test_log_to_file(tmp_path, restore_level):
    path = tmp_path / "run.log"
    LogManager.log_to_file(str(path))
    LogManager.set_log_level("INFO")
    logger = LogManager.get_logger("Pipeline")
    try:
        logger.info("sampling above 100")
        logger.debug("not written")
    finally:
        root = LogManager.get_logger()
        for handler in [h for h in root.handlers if isinstance(h, logging.FileHandler)]:
            handler.close()
            root.removeHandler(handler)
    (line,) = path.read_text().splitlines()
    level, elapsed, name, message = line.split(":", 3)
    assert level == "INFO"
    assert elapsed.endswith("s")
    assert name == "ArrangeCount.Pipeline"
    assert message == "sampling above 100"


@pytest.mark.parametrize("workers", [1, 2, 3])
def test_ordered_map_keeps_input_order(workers):
    items = list(range(12, 0, -1))
    assert ordered_map(factorial, items, workers) == [factorial(i) for i in items]


def test_ordered_map_of_nothing():
    assert ordered_map(factorial, [], 4) == []
