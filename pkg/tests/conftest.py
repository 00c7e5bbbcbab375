import pytest

from lpbound.config import get_settings


@pytest.fixture(autouse=True)
def fresh_settings():
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def settings_env(monkeypatch):
    """Set LPBOUND_* variables for one test and rebuild the settings."""

    def apply(**values):
        for key, value in values.items():
            monkeypatch.setenv(f"LPBOUND_{key.upper()}", str(value))
        get_settings.cache_clear()
        return get_settings()

    return apply
