"""Content-addressed on-disk cache for semantic profiles.

Entries are keyed by the theory's content hash plus the model size; stale
tool versions are ignored; writes go through a temp file and an atomic
rename. Results never depend on the cache being present.
"""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path

from . import __version__
from .semantics import set_profile_store

ENV_VAR = "THDIST_CACHE_DIR"


class DiskProfileStore:
    def __init__(self, root: str | Path, version: str = __version__):
        self.root = Path(root)
        self.version = version
        self.root.mkdir(parents=True, exist_ok=True)

    def _path(self, key: str, k: int) -> Path:
        return self.root / key[:2] / f"{key}.{k}.json"

    def get(self, key: str, k: int):
        path = self._path(key, k)
        try:
            data = json.loads(path.read_text())
        except (OSError, ValueError):
            return None
        if data.get("version") != self.version:
            return None
        return data

    def put(self, key: str, k: int, payload: dict) -> None:
        path = self._path(key, k)
        path.parent.mkdir(parents=True, exist_ok=True)
        record = dict(payload, version=self.version)
        fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as fh:
                json.dump(record, fh)
            os.replace(tmp, path)
        except OSError:
            try:
                os.unlink(tmp)
            except OSError:
                pass


def cache_dir_from_env() -> Path | None:
    value = os.environ.get(ENV_VAR)
    if value:
        return Path(value)
    return None


def activate_cache(root: str | Path | None = None) -> DiskProfileStore | None:
    """Install the disk cache; with no argument, honor the environment
    variable and otherwise stay memory-only."""
    if root is None:
        root = cache_dir_from_env()
    if root is None:
        return None
    store = DiskProfileStore(root)
    set_profile_store(store)
    return store


def deactivate_cache() -> None:
    set_profile_store(None)
