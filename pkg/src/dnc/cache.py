"""On-disk cache of reduced Groebner bases.

One JSON file per key, written to a temporary file and renamed into place so
that concurrent processes never observe a partial entry.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
import warnings
from contextlib import contextmanager
from pathlib import Path

from .errors import CorruptCache
from .polycore import GB_CACHE

CACHE_VERSION = 1


def default_cache_dir() -> Path:
    env = os.environ.get("DNC_CACHE_DIR")
    if env:
        return Path(env)
    return Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "dnc"


class DiskCache:
    def __init__(self, directory: str | os.PathLike | None = None):
        self.directory = Path(directory) if directory is not None else default_cache_dir()
        self.hits = 0
        self.misses = 0

    def _path(self, key: str) -> Path:
        digest = hashlib.sha256(key.encode()).hexdigest()
        return self.directory / digest[:2] / f"{digest}.json"

    def _read(self, key: str):
        path = self._path(key)
        if not path.exists():
            return None
        try:
            entry = json.loads(path.read_text())
        except (OSError, ValueError) as exc:
            raise CorruptCache(f"unreadable cache entry {path}: {exc}") from exc
        if not isinstance(entry, dict) or entry.get("key") != key or "basis" not in entry:
            raise CorruptCache(f"malformed cache entry {path}")
        if entry.get("version") != CACHE_VERSION:
            return None
        return entry["basis"]

    def lookup(self, key: str):
        try:
            data = self._read(key)
        except CorruptCache as exc:
            warnings.warn(f"{exc}; recomputing", RuntimeWarning, stacklevel=2)
            data = None
        if data is None:
            self.misses += 1
        else:
            self.hits += 1
        return data

    def store(self, key: str, basis) -> None:
        path = self._path(key)
        entry = {"version": CACHE_VERSION, "key": key, "basis": basis}
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-", suffix=".json")
            with os.fdopen(fd, "w") as fh:
                json.dump(entry, fh, sort_keys=True)
            os.replace(tmp, path)
        except OSError as exc:
            warnings.warn(f"could not write cache entry {path}: {exc}", RuntimeWarning, stacklevel=2)


@contextmanager
def using_cache(cache: DiskCache | None):
    """Route Groebner computations in this context through ``cache``."""
    token = GB_CACHE.set(cache)
    try:
        yield cache
    finally:
        GB_CACHE.reset(token)
