"""Runtime settings read from the environment."""

from __future__ import annotations

import os
from collections.abc import Mapping
from dataclasses import dataclass

import voluptuous as vol

from .const import DEFAULT_CHUNK_SIZE, DEFAULT_WORKERS, ENV_CHUNK_SIZE, ENV_WORKERS
from .exceptions import MalformedInputError

SETTINGS_SCHEMA = vol.Schema(
    {
        vol.Optional(ENV_WORKERS, default=DEFAULT_WORKERS): vol.All(vol.Coerce(int), vol.Range(min=1)),
        vol.Optional(ENV_CHUNK_SIZE, default=DEFAULT_CHUNK_SIZE): vol.All(vol.Coerce(int), vol.Range(min=1)),
    },
    extra=vol.REMOVE_EXTRA,
)


@dataclass(frozen=True)
class Settings:
    """Resolved settings for census scans."""

    workers: int = DEFAULT_WORKERS
    chunk_size: int = DEFAULT_CHUNK_SIZE


def build_settings(env: Mapping[str, str] | None = None, workers: int | None = None) -> Settings:
    """Build Settings from the environment; an explicit workers value wins."""
    env = os.environ if env is None else env
    try:
        data = SETTINGS_SCHEMA({key: env[key] for key in (ENV_WORKERS, ENV_CHUNK_SIZE) if key in env})
    except vol.Invalid as error:
        raise MalformedInputError(f"invalid settings: {error}") from error
    return Settings(
        workers=workers if workers is not None else data[ENV_WORKERS],
        chunk_size=data[ENV_CHUNK_SIZE],
    )
