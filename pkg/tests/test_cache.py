"""Tests for the block count cache."""

from pathlib import Path

import pytest

from siltlab.schur.cache import CountCache


@pytest.fixture
def cache(tmp_path: Path):
    """Fresh cache in a temporary directory."""
    c = CountCache(tmp_path / "cache")
    yield c
    c.close()


class TestCountCache:
    """Tests for CountCache."""

    def test_put_and_get(self, cache: CountCache):
        """Test that a stored count is read back."""
        assert cache.put("D11", 2, 123)
        entry = cache.get("D11", 2)
        assert entry is not None
        assert entry.count == 123
        assert entry.complete
        assert entry.computed_at.tzinfo is not None

    def test_missing(self, cache: CountCache):
        """Test that an unknown key returns None."""
        assert cache.get("D11", 3) is None

    def test_insert_once(self, cache: CountCache):
        """Test that the first stored value wins."""
        assert cache.put("D11", 2, 1)
        assert not cache.put("D11", 2, 2)
        assert cache.get("D11", 2).count == 1

    def test_keyed_by_prime(self, cache: CountCache):
        """Test that the same block over different primes is separate."""
        cache.put("D11", 2, 1)
        cache.put("D11", 3, 2)
        assert cache.get("D11", 3).count == 2

    def test_clear_and_stats(self, cache: CountCache):
        """Test clearing and statistics."""
        cache.put("D11", 2, 1)
        cache.put("D12", 2, 1)
        stats = cache.stats()
        assert stats["total_entries"] == 2
        assert stats["db_size_bytes"] > 0
        cache.clear()
        assert cache.stats()["total_entries"] == 0

    def test_persists(self, tmp_path: Path):
        """Test that counts survive reopening the cache."""
        first = CountCache(tmp_path)
        first.put("D11", 2, 99)
        first.close()
        second = CountCache(tmp_path)
        assert second.get("D11", 2).count == 99
        second.close()

    @pytest.mark.asyncio
    async def test_async_access(self, cache: CountCache):
        """Test the async wrappers."""
        assert await cache.put_async("D13", 5, 7, complete=False)
        entry = await cache.get_async("D13", 5)
        assert entry is not None
        assert not entry.complete
