"""A small on-disk cache: gzip-compressed JSON, written atomically.

Entries are keyed by strings; a version tag is embedded in every payload and
mismatches or corrupt files are treated as misses, so stale caches degrade to
recomputation instead of errors.
"""

from __future__ import annotations

import gzip
import json
import os
import tempfile

CACHE_VERSION = "1"


class CacheStore:
    def __init__(self, directory: str):
        self.directory = directory
        os.makedirs(directory, exist_ok=True)

    def _path(self, key: str) -> str:
        safe = "".join(c if c.isalnum() or c in "-_." else "_" for c in key)
        return os.path.join(self.directory, safe + ".json.gz")

    def get(self, key: str):
        path = self._path(key)
        try:
            with gzip.open(path, "rt", encoding="utf-8") as fh:
                wrapper = json.load(fh)
        except (OSError, ValueError, EOFError):
            return None
        if not isinstance(wrapper, dict) or wrapper.get("version") != CACHE_VERSION:
            return None
        return wrapper.get("payload")

    def put(self, key: str, payload) -> None:
        path = self._path(key)
        wrapper = {"version": CACHE_VERSION, "key": key, "payload": payload}
        fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "wb") as raw:
                with gzip.GzipFile(fileobj=raw, mode="wb", mtime=0) as gz:
                    gz.write(json.dumps(wrapper, sort_keys=True).encode("utf-8"))
            os.replace(tmp, path)
        except OSError:
            try:
                os.unlink(tmp)
            except OSError:
                pass

    def get_or_compute(self, key: str, compute):
        hit = self.get(key)
        if hit is not None:
            return hit
        value = compute()
        self.put(key, value)
        return value
