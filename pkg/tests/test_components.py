"""
KBlowup Component Test Suite
Smoke tests: every subsystem imports and the ambient stack is wired.
"""
import importlib

import pytest
from loguru import logger

import kblowup
from kblowup.core.config import Settings, get_settings, settings
from kblowup.core.logging import get_logger, json_formatter, setup_logging
from kblowup.core.stability import StabilizedDimension, is_stable
from kblowup.core.exceptions import StabilizationError

SUBSYSTEMS = [
    "kblowup.poly",
    "kblowup.groebner",
    "kblowup.algebra",
    "kblowup.geometry",
    "kblowup.differentials",
    "kblowup.cyclic",
    "kblowup.exactseq",
    "kblowup.ktheory",
    "kblowup.services",
]


def test_package_version():
    assert kblowup.__version__ == settings.APP_VERSION


@pytest.mark.parametrize("name", SUBSYSTEMS)
def test_subsystem_exports_resolve(name):
    module = importlib.import_module(name)
    for symbol in module.__all__:
        assert hasattr(module, symbol), f"{name} does not define {symbol}"


def test_settings_are_cached_and_overridable(monkeypatch):
    assert get_settings() is get_settings()
    monkeypatch.setenv("CECH_WINDOW", "4")
    assert Settings().CECH_WINDOW == 4
    assert not Settings(ENVIRONMENT="development").is_production


def test_json_log_lines():
    lines = []
    logger.remove()
    logger.add(lines.append, format=json_formatter, level="INFO")
    get_logger("tests").info("window {closed}")
    setup_logging("WARNING")
    assert '"message": "window {closed}"' in lines[0]
    assert '"level": "INFO"' in lines[0]


class TestStability:
    def test_needs_enough_repeats(self):
        assert not is_stable([1, 1], runs=3)
        assert is_stable([0, 2, 2, 2, 2], runs=3)
        assert not is_stable([1, 2, 2, 3], runs=2)

    def test_require_stable(self):
        ok = StabilizedDimension(value=2, stable=True, history=[1, 2, 2, 2, 2], bound=5)
        assert ok.require_stable() == 2
        bad = StabilizedDimension(value=4, stable=False, history=[1, 2, 3, 4], bound=4, label="H^1")
        assert bad.growing
        with pytest.raises(StabilizationError):
            bad.require_stable()
