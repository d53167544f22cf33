import pytest

from src.cli import dependencies
from src.spectra.config import Settings


@pytest.fixture
def settings() -> Settings:
    return Settings()


@pytest.fixture(autouse=True)
def _fresh_components(monkeypatch: pytest.MonkeyPatch):
    monkeypatch.delenv("COSPECTRA_CONFIG_PATH", raising=False)
    monkeypatch.delenv("COSPECTRA_WORKERS", raising=False)
    dependencies.reset_components()
    yield
    dependencies.reset_components()