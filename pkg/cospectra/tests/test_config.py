from pathlib import Path

import pytest

from src.spectra.config import (
    DEFAULT_SETTINGS_PATH,
    Settings,
    default_workers,
    find_settings_path,
    load_presets,
    load_settings,
)
from src.spectra.util import digest, iter_bits, parse_n_range


@pytest.fixture
def isolated(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> Path:
    monkeypatch.chdir(tmp_path)
    monkeypatch.setenv("HOME", str(tmp_path / "home"))
    return tmp_path


def test_packaged_settings_are_the_defaults(isolated: Path) -> None:
    settings, meta = load_settings()
    assert meta == {"path": str(DEFAULT_SETTINGS_PATH)}
    assert settings == Settings()


def test_lookup_order(isolated: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    local = isolated / "cospectra.yaml"
    local.write_text("random_cap: 30\n", encoding="utf-8")
    assert find_settings_path() == Path("cospectra.yaml")
    assert load_settings()[0].random_cap == 30

    env_file = isolated / "env.yaml"
    env_file.write_text("options:\n  random_cap: 40\n", encoding="utf-8")
    monkeypatch.setenv("COSPECTRA_CONFIG_PATH", str(env_file))
    assert load_settings()[0].random_cap == 40

    explicit = isolated / "explicit.yaml"
    explicit.write_text("random_cap: 50\n", encoding="utf-8")
    assert load_settings(str(explicit))[0].random_cap == 50


def test_missing_explicit_path_warns(isolated: Path, caplog: pytest.LogCaptureFixture) -> None:
    missing = isolated / "nope.yaml"
    with caplog.at_level("WARNING", logger="src.spectra.config"):
        settings, meta = load_settings(str(missing))
    assert meta == {"path": str(DEFAULT_SETTINGS_PATH)}
    assert settings == Settings()
    assert any(str(missing) in r.getMessage() for r in caplog.records)


@pytest.mark.parametrize(
    "body",
    ["- just\n- a list\n", "enumeration_cap: 99\n", "jacobi_tol: -1\n", "log_level: loud\n", "key: [unclosed\n"],
)
def test_bad_settings_fall_back_to_defaults(isolated: Path, body: str) -> None:
    path = isolated / "bad.yaml"
    path.write_text(body, encoding="utf-8")
    settings, meta = load_settings(str(path))
    assert settings == Settings()
    assert meta["path"] == str(path)
    assert meta["error"]


def test_presets() -> None:
    presets = load_presets()
    assert set(presets) >= {"acceptance-exhaustive", "acceptance-random", "all-graphs", "determinism"}
    rnd = presets["acceptance-random"]
    assert (rnd.mode, rnd.n_min, rnd.n_max, rnd.samples, rnd.seed) == ("random", 20, 20, 1000, 1)
    assert presets["acceptance-exhaustive"].n_max == 10
    assert load_presets("/nonexistent/campaigns.yaml") == {}


def test_default_workers(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("COSPECTRA_WORKERS", "4")
    assert default_workers() == 4
    monkeypatch.setenv("COSPECTRA_WORKERS", "0")
    assert default_workers() == 1
    monkeypatch.setenv("COSPECTRA_WORKERS", "many")
    assert default_workers() >= 1


@pytest.mark.parametrize(
    ("text", "expected"),
    [("1..8", (1, 8)), ("20", (20, 20)), (" 3 .. 5 ", (3, 5)), ("2-4", (2, 4)), ("2:2", (2, 2))],
)
def test_parse_n_range(text: str, expected: tuple[int, int]) -> None:
    assert parse_n_range(text) == expected


@pytest.mark.parametrize("text", ["", "0", "5..2", "a..b", "1..", "-3"])
def test_parse_n_range_rejects(text: str) -> None:
    with pytest.raises(ValueError):
        parse_n_range(text)


def test_bit_helpers() -> None:
    assert list(iter_bits(0b101001)) == [0, 3, 5]
    assert digest({"b": 1, "a": [1, 2]}) == digest({"a": [1, 2], "b": 1})
