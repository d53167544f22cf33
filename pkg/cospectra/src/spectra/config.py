import logging
import os
from pathlib import Path
from typing import Any, Literal

import yaml
from pydantic import BaseModel, Field, ValidationError

from .model import CampaignMode

logger = logging.getLogger(__name__)

PROJECT_DIR = Path(__file__).resolve().parents[2]
DEFAULT_SETTINGS_PATH = PROJECT_DIR / "config.yaml"
DEFAULT_PRESETS_PATH = PROJECT_DIR / "config" / "campaigns.yaml"

CONFIG_ENV = "COSPECTRA_CONFIG_PATH"
WORKERS_ENV = "COSPECTRA_WORKERS"


class Settings(BaseModel):
    enumeration_cap: int = Field(default=12, ge=1, le=16)
    random_cap: int = Field(default=64, ge=1, le=258047)
    all_graphs_cap: int = Field(default=7, ge=1, le=7)
    jacobi_tol: float = Field(default=1e-9, gt=0)
    jacobi_max_sweeps: int = Field(default=100, ge=1)
    interlacing_tol: float = Field(default=1e-6, gt=0)
    interlacing_max_n: int = Field(default=12, ge=2)
    class_removal_max_n: int = Field(default=8, ge=1)
    log_level: Literal["debug", "info", "warning", "error"] = "info"


class CampaignPreset(BaseModel):
    n_min: int = Field(ge=1)
    n_max: int = Field(ge=1)
    mode: CampaignMode = "exhaustive"
    samples: int = Field(default=100, ge=1)
    seed: int = 0
    description: str = ""


def _candidate_paths(explicit_path: str | None) -> list[Path]:
    out: list[Path] = []
    if explicit_path:
        out.append(Path(explicit_path))
    env_path = os.environ.get(CONFIG_ENV)
    if env_path:
        out.append(Path(env_path))
    out.extend(
        [
            Path("cospectra.yaml"),
            Path.home() / ".config" / "cospectra" / "config.yaml",
            DEFAULT_SETTINGS_PATH,
        ]
    )
    # de-dup while preserving order
    seen: set[Path] = set()
    uniq: list[Path] = []
    for p in out:
        if p in seen:
            continue
        seen.add(p)
        uniq.append(p)
    return uniq


def find_settings_path(explicit_path: str | None = None) -> Path | None:
    if explicit_path and not Path(explicit_path).exists():
        logger.warning("Settings file %s not found, trying the default locations", explicit_path)
    for p in _candidate_paths(explicit_path):
        if p.exists():
            return p
    return None


def _read_mapping(path: Path) -> dict[str, Any]:
    with open(path, encoding="utf-8") as f:
        data = yaml.safe_load(f) or {}
    if not isinstance(data, dict):
        raise ValueError("root must be a mapping/object")
    return data


def load_settings(explicit_path: str | None = None) -> tuple[Settings, dict[str, Any]]:
    """
    Returns (settings, meta).
    meta includes: path, error (optional)
    """
    path = find_settings_path(explicit_path)
    if not path:
        return Settings(), {"path": None, "error": "No settings file found"}

    try:
        data = _read_mapping(path)
        # the packaged manifest nests values under "options"; override files may be flat
        options = data.get("options", data)
        return Settings.model_validate(options or {}), {"path": str(path)}
    except (OSError, ValueError, yaml.YAMLError, ValidationError) as e:
        logger.warning("Ignoring settings file %s: %s", path, e)
        return Settings(), {"path": str(path), "error": str(e)}


def load_presets(path: str | Path | None = None) -> dict[str, CampaignPreset]:
    p = Path(path) if path else DEFAULT_PRESETS_PATH
    if not p.exists():
        return {}
    data = _read_mapping(p)
    return {
        str(name): CampaignPreset.model_validate(body)
        for name, body in (data.get("presets") or {}).items()
    }


def default_workers() -> int:
    raw = os.environ.get(WORKERS_ENV, "")
    if raw.strip():
        try:
            return max(1, int(raw))
        except ValueError:
            logger.warning("Ignoring %s=%r; expected an integer", WORKERS_ENV, raw)
    return os.cpu_count() or 1
