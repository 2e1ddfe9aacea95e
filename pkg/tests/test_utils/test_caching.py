"""
Tests for the trace cache.
"""
import json
import os
from pathlib import Path

import pytest

from formale.curves.reduction import LocalData, ReductionType, classify_reduction
from formale.curves.weierstrass import WeierstrassCurve
from formale.utils.caching import TraceCache, clear_cache
from formale.utils.exceptions import CacheError

CURVE = WeierstrassCurve(0, -1, -1, 0, 0)


@pytest.fixture
def temp_cache_dir(tmp_path: Path) -> Path:
    """Create a temporary cache directory."""
    cache_dir = tmp_path / "cache"
    cache_dir.mkdir()
    return cache_dir


def test_get_and_put():
    """Test hit and miss accounting."""
    cache = TraceCache()
    assert cache.get(CURVE, 5) is None
    cache.put(CURVE, 5, LocalData.good(5, 5))
    assert cache.get(CURVE, 5) == LocalData.good(5, 5)
    assert (cache.hits, cache.misses) == (1, 1)
    assert "0,-1,-1,0,0|5" in cache
    assert len(cache) == 1


def test_put_rejects_wrong_prime():
    """Test that data is only stored under its own prime."""
    with pytest.raises(CacheError):
        TraceCache().put(CURVE, 7, LocalData.good(5, 5))


def test_save_and_load(temp_cache_dir: Path):
    """Test that a saved cache reloads to the same entries."""
    path = temp_cache_dir / "traces.json"
    cache = TraceCache(path)
    for p in (2, 3, 5, 11):
        classify_reduction(CURVE, p, cache)
    cache.save()

    with open(path) as f:
        raw = json.load(f)
    assert raw["0,-1,-1,0,0|11"] == {"A_p": None, "t_p": 1, "u_p": 0, "type": "split"}
    assert raw["0,-1,-1,0,0|2"]["t_p"] == -2
    assert list(raw) == sorted(raw)

    reloaded = TraceCache(path)
    assert reloaded.load() == 4
    assert reloaded.to_dict() == cache.to_dict()
    assert reloaded.get(CURVE, 11).reduction is ReductionType.MULTIPLICATIVE_SPLIT


def test_save_is_deterministic(temp_cache_dir: Path):
    """Test that insertion order does not change the file."""
    first, second = temp_cache_dir / "a.json", temp_cache_dir / "b.json"
    forward, backward = TraceCache(first), TraceCache(second)
    for p in (2, 3, 5, 7):
        classify_reduction(CURVE, p, forward)
    for p in (7, 5, 3, 2):
        classify_reduction(CURVE, p, backward)
    forward.save()
    backward.save()
    assert first.read_text() == second.read_text()


def test_missing_file_is_empty(temp_cache_dir: Path):
    """Test that a cache file that does not exist yet loads nothing."""
    assert TraceCache(temp_cache_dir / "absent.json").load() == 0
    assert TraceCache().load() == 0


@pytest.mark.parametrize("content", [
    "not json",
    "[1, 2]",
    '{"0,0,0,1,0|5": {"A_p": 4}}',
    '{"0,0,0,1,0|5": {"A_p": 5, "t_p": 2, "u_p": 1, "type": "good"}}',
])
def test_corrupt_cache_file(temp_cache_dir: Path, content: str):
    """Test that malformed or inconsistent entries raise CacheError."""
    path = temp_cache_dir / "bad.json"
    path.write_text(content)
    with pytest.raises(CacheError):
        TraceCache(path).load()


def test_clear_cache(temp_cache_dir: Path):
    """Test cache clearing."""
    path = temp_cache_dir / "traces.json"
    path.write_text("{}")
    clear_cache(path)
    assert not path.exists()
    clear_cache(path)


def test_clear_cache_directory(temp_cache_dir: Path):
    """Test that a directory is never removed as a cache file."""
    with pytest.raises(CacheError):
        clear_cache(temp_cache_dir)


@pytest.mark.skipif(os.name == "nt", reason="File permissions work differently on Windows")
def test_save_failure(temp_cache_dir: Path):
    """Test that an unwritable location raises CacheError."""
    if hasattr(os, "geteuid") and os.geteuid() == 0:
        pytest.skip("root ignores directory permissions")
    read_only_dir = temp_cache_dir / "readonly"
    read_only_dir.mkdir()
    read_only_dir.chmod(0o555)
    try:
        cache = TraceCache(read_only_dir / "traces.json")
        cache.put(CURVE, 5, LocalData.good(5, 5))
        with pytest.raises(CacheError):
            cache.save()
    finally:
        read_only_dir.chmod(0o755)
