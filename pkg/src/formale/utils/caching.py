"""
Trace cache for formale.

Local data is keyed by curve and prime. The JSON file maps
"a1,a2,a3,a4,a6|p" to {"A_p", "t_p", "u_p", "type"}.
"""
import json
import threading
from pathlib import Path
from typing import Dict, Optional, Union

from ..curves.reduction import LocalData
from ..curves.weierstrass import WeierstrassCurve
from .exceptions import CacheError
from .logging import get_logger, log_with_context

logger = get_logger(__name__)


class TraceCache:
    """
    In-memory map (curve, p) -> LocalData with optional JSON persistence.

    Insertions are lock protected; concurrent writers of the same key store
    identical values, so last write wins.
    """

    def __init__(self, path: Optional[Union[str, Path]] = None) -> None:
        self.path = Path(path) if path is not None else None
        self._entries: Dict[str, LocalData] = {}
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    @staticmethod
    def key(curve: WeierstrassCurve, p: int) -> str:
        return f"{curve.key}|{p}"

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, item: object) -> bool:
        return item in self._entries

    def get(self, curve: WeierstrassCurve, p: int) -> Optional[LocalData]:
        with self._lock:
            data = self._entries.get(self.key(curve, p))
            if data is None:
                self.misses += 1
            else:
                self.hits += 1
            return data

    def put(self, curve: WeierstrassCurve, p: int, data: LocalData) -> None:
        if data.p != p:
            raise CacheError(f"local data for {data.p} stored under prime {p}")
        with self._lock:
            self._entries[self.key(curve, p)] = data

    def to_dict(self) -> Dict[str, Dict[str, object]]:
        with self._lock:
            return {key: self._entries[key].to_dict() for key in sorted(self._entries)}

    def load(self) -> int:
        """
        Merge entries from the cache file.

        A missing file is an empty cache. Returns the number of entries read.

        Raises:
            CacheError: If the file exists but is not a valid trace cache
        """
        if self.path is None or not self.path.exists():
            return 0
        try:
            with open(self.path, encoding="utf-8") as f:
                raw = json.load(f)
            if not isinstance(raw, dict):
                raise CacheError(f"cache file {self.path} does not hold a JSON object")
            loaded = {}
            for key, value in raw.items():
                _, _, prime = key.rpartition("|")
                loaded[key] = LocalData.from_dict(int(prime), value)
        except CacheError:
            raise
        except Exception as e:
            raise CacheError(f"Failed to read cache {self.path}: {str(e)}") from e

        with self._lock:
            self._entries.update(loaded)
        logger.debug("Loaded trace cache", **log_with_context(path=str(self.path), entries=len(loaded)))
        return len(loaded)

    def save(self) -> None:
        """Write every entry, keys sorted, so warm and cold runs serialise identically."""
        if self.path is None:
            return
        try:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with open(self.path, "w", encoding="utf-8") as f:
                json.dump(self.to_dict(), f, indent=2, sort_keys=True)
        except Exception as e:
            logger.error(
                "Cache operation failed",
                **log_with_context(path=str(self.path), error=str(e))
            )
            raise CacheError(f"Failed to write cache {self.path}: {str(e)}") from e
        logger.debug("Saved trace cache", **log_with_context(path=str(self.path), entries=len(self)))


def clear_cache(path: Union[str, Path]) -> None:
    """
    Delete a trace cache file.

    Raises:
        CacheError: If the path is a directory or cannot be removed
    """
    cache_file = Path(path)
    if not cache_file.exists():
        return
    if cache_file.is_dir():
        raise CacheError(f"Cache path is a directory: {cache_file}")
    try:
        cache_file.unlink()
        logger.info("Cleared cache", **log_with_context(path=str(cache_file)))
    except Exception as e:
        raise CacheError(f"Failed to delete cache file: {str(e)}") from e
