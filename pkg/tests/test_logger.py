"""Tests for the loguru setup."""

import pytest
from loguru import logger

from src.catalog.registry import FixtureRegistry
from src.utils.logger import FILE_FORMAT, get_logger, package_filter, setup_logger


@pytest.fixture
def messages():
    """Collect formatted records from the toolkit's own modules."""
    setup_logger(log_level="WARNING", force=True)
    collected = []
    sink_id = logger.add(collected.append, format=FILE_FORMAT, filter=package_filter, level="DEBUG")
    yield collected
    logger.remove(sink_id)


class TestPackageFilter:

    @pytest.mark.parametrize("name, kept", [
        ("src.catalog.registry", True),
        ("src", True),
        ("__main__", True),
        ("tests.test_logger", False),
        ("srcs.other", False),
        ("rich.console", False),
    ])
    def test_names(self, name, kept):
        assert package_filter({"name": name}) is kept


class TestRecords:

    def test_command_defaults_to_dash(self, messages):
        FixtureRegistry().build("simple", 3)
        assert messages
        assert " | - | src.catalog.registry:build:" in messages[-1]

    def test_command_is_bound(self, messages):
        with logger.contextualize(command="catalog"):
            FixtureRegistry().build("top", 2)
        assert " | catalog | " in messages[-1]
        assert "Built fixture top at n=2" in messages[-1]

    def test_foreign_records_dropped(self, messages):
        logger.info("from the test module")
        assert not any("from the test module" in m for m in messages)

    def test_get_logger_is_configured(self):
        assert get_logger() is logger
