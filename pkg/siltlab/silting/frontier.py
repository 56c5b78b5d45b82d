"""Level-by-level queue of silting objects, deduplicated by key."""

import asyncio

from siltlab.logging import get_logger
from siltlab.silting.complexes import GVector, TwoTermComplex
from siltlab.silting.mutation import SiltingObject

_logger = get_logger()

Key = tuple[GVector, ...]


def _object_to_records(obj: SiltingObject) -> list[dict]:
    """Convert a SiltingObject to summand records for serialization."""
    return [s.to_record(obj.n) for s in obj.summands]


def _object_from_records(records: list[dict]) -> SiltingObject:
    summands = [TwoTermComplex.from_record(r) for r in records]
    return SiltingObject.from_summands(summands, len(summands))


class Frontier:
    """Breadth-first frontier of silting objects with key deduplication.

    Objects are numbered in discovery order. ``take_level`` hands out the
    current level in that order; objects added meanwhile form the next one.
    """

    def __init__(self) -> None:
        self._index: dict[Key, int] = {}
        self._objects: list[SiltingObject] = []
        self._current: list[int] = []
        self._next: list[int] = []
        self.level = 0
        self._lock = asyncio.Lock()

    def _insert(self, obj: SiltingObject) -> tuple[int, bool]:
        found = self._index.get(obj.key)
        if found is not None:
            return found, False
        idx = len(self._objects)
        self._index[obj.key] = idx
        self._objects.append(obj)
        self._next.append(idx)
        return idx, True

    async def add(self, obj: SiltingObject) -> tuple[int, bool]:
        """Insert ``obj`` unless its key is known.

        Returns the object's index and whether it was new.
        """
        async with self._lock:
            return self._insert(obj)

    async def take_level(self) -> list[int]:
        """Advance to the next level and return its object indices."""
        async with self._lock:
            self._current, self._next = self._next, []
            if self._current:
                self.level += 1
            return list(self._current)

    def __len__(self) -> int:
        return len(self._objects)

    def __getitem__(self, idx: int) -> SiltingObject:
        return self._objects[idx]

    @property
    def objects(self) -> list[SiltingObject]:
        return list(self._objects)

    def pending(self) -> int:
        """Objects waiting for their first expansion."""
        return len(self._next)

    def index_of(self, key: Key) -> int | None:
        return self._index.get(key)

    def get_state(self) -> dict:
        """Export frontier state for checkpointing.

        Only valid between levels: every object outside ``pending`` has been
        fully expanded.
        """
        return {
            "level": self.level,
            "objects": [_object_to_records(obj) for obj in self._objects],
            "pending": list(self._next),
        }

    def restore_state(self, state: dict) -> None:
        """Restore frontier state from a checkpoint."""
        self._objects = [_object_from_records(r) for r in state["objects"]]
        self._index = {obj.key: i for i, obj in enumerate(self._objects)}
        self._current = []
        self._next = list(state["pending"])
        self.level = int(state["level"])
        _logger.debug(
            "Frontier restored: %d objects, %d pending at level %d",
            len(self._objects),
            len(self._next),
            self.level,
        )
