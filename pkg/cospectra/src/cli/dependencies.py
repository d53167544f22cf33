"""Process-wide settings and engine for the command line."""

import logging
from dataclasses import dataclass
from typing import Any

from ..spectra.config import Settings, default_workers, load_settings
from ..spectra.lab import TheoremLab

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Components:
    settings: Settings
    settings_meta: dict[str, Any]
    lab: TheoremLab


_components: Components | None = None


def init_components(config_path: str | None = None) -> Components:
    global _components
    if _components is not None:
        return _components

    settings, meta = load_settings(config_path)
    if meta.get("error") and meta.get("path"):
        logger.warning("Settings from %s not usable, running on defaults", meta["path"])
    else:
        logger.debug("Settings loaded from %s", meta.get("path"))

    _components = Components(settings=settings, settings_meta=meta, lab=TheoremLab(settings))
    return _components


def reset_components() -> None:
    global _components
    _components = None


def get_settings() -> Settings:
    return init_components().settings


def get_lab() -> TheoremLab:
    return init_components().lab


def resolve_workers(requested: int | None) -> int:
    if requested is not None:
        return max(1, requested)
    return default_workers()
