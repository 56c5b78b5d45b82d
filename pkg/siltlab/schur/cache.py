"""SQLite-backed store for block counts that had to be enumerated."""

from __future__ import annotations

import asyncio
import sqlite3
import threading
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path


@dataclass
class CountEntry:
    """A cached two-term silting count."""

    block: str
    p: int
    count: int
    complete: bool
    computed_at: datetime


class CountCache:
    """Persistent count cache with insert-once semantics.

    The first value stored for a ``(block, p)`` key wins; later writes for
    the same key are ignored.
    """

    def __init__(self, cache_dir: Path):
        """Initialize the cache.

        Args:
            cache_dir: Directory to store the cache database.
        """
        self.cache_dir = Path(cache_dir)
        self.db_path = self.cache_dir / "block_counts.db"
        self._lock = threading.Lock()
        self._conn: sqlite3.Connection | None = None
        self._init_db()

    def _init_db(self) -> None:
        self.cache_dir.mkdir(parents=True, exist_ok=True)
        self._conn = sqlite3.connect(str(self.db_path), check_same_thread=False)
        self._conn.execute("PRAGMA journal_mode=WAL")
        self._conn.execute("PRAGMA synchronous=NORMAL")
        with self._conn:
            self._conn.execute("""
                CREATE TABLE IF NOT EXISTS counts (
                    block TEXT NOT NULL,
                    p INTEGER NOT NULL,
                    count INTEGER NOT NULL,
                    complete INTEGER NOT NULL,
                    computed_at TEXT,
                    PRIMARY KEY (block, p)
                )
            """)

    def get(self, block: str, p: int) -> CountEntry | None:
        """Look up a stored count.

        Args:
            block: Morita class name, e.g. ``D6``.
            p: Characteristic.

        Returns:
            CountEntry if present, None otherwise.
        """
        assert self._conn is not None
        with self._lock:
            row = self._conn.execute(
                "SELECT block, p, count, complete, computed_at "
                "FROM counts WHERE block = ? AND p = ?",
                (block, p),
            ).fetchone()
        if row is None:
            return None
        return CountEntry(
            block=row[0],
            p=row[1],
            count=row[2],
            complete=bool(row[3]),
            computed_at=datetime.fromisoformat(row[4]),
        )

    def put(self, block: str, p: int, count: int, complete: bool = True) -> bool:
        """Store a count unless one is already present.

        Returns:
            True if this call inserted the row.
        """
        assert self._conn is not None
        computed_at = datetime.now(timezone.utc).isoformat()
        with self._lock:
            cursor = self._conn.execute(
                "INSERT OR IGNORE INTO counts "
                "(block, p, count, complete, computed_at) VALUES (?, ?, ?, ?, ?)",
                (block, p, count, int(complete), computed_at),
            )
            self._conn.commit()
            return cursor.rowcount == 1

    async def get_async(self, block: str, p: int) -> CountEntry | None:
        return await asyncio.to_thread(self.get, block, p)

    async def put_async(
        self, block: str, p: int, count: int, complete: bool = True
    ) -> bool:
        return await asyncio.to_thread(self.put, block, p, count, complete)

    def clear(self) -> None:
        """Remove every stored count."""
        assert self._conn is not None
        with self._lock:
            self._conn.execute("DELETE FROM counts")
            self._conn.commit()

    def close(self) -> None:
        with self._lock:
            if self._conn is not None:
                self._conn.close()
                self._conn = None

    def stats(self) -> dict[str, int]:
        """Get cache statistics.

        Returns:
            Dict with 'total_entries' and 'db_size_bytes' keys.
        """
        assert self._conn is not None
        with self._lock:
            total = self._conn.execute("SELECT COUNT(*) FROM counts").fetchone()[0]
        db_size = self.db_path.stat().st_size if self.db_path.exists() else 0
        return {"total_entries": total, "db_size_bytes": db_size}
