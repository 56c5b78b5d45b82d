"""Checkpoint save/load for resumable enumerations."""

import json
import tempfile
from dataclasses import asdict, dataclass
from datetime import datetime, timezone
from pathlib import Path

from siltlab.errors import SiltlabError

CHECKPOINT_FILE = ".siltlab_checkpoint.json"


@dataclass
class ExplorerCheckpoint:
    """Snapshot of an enumeration taken between two BFS levels."""

    algebra: str
    p: int
    level: int
    objects: list[list[dict]]  # summand records per object, discovery order
    arrows: list[list[int]]
    pending: list[int]
    mutation_count: int
    timestamp: str


def save_checkpoint(path: Path, checkpoint: ExplorerCheckpoint) -> None:
    """Save checkpoint to JSON file atomically.

    Writes to a temp file first, then atomically replaces the target.

    Args:
        path: File path for checkpoint.
        checkpoint: Explorer state to save.
    """
    path = Path(path)
    fd, tmp_path = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
    try:
        with open(fd, "w") as f:
            json.dump(asdict(checkpoint), f)
        Path(tmp_path).replace(path)
    except BaseException:
        Path(tmp_path).unlink(missing_ok=True)
        raise


def load_checkpoint(path: Path) -> ExplorerCheckpoint | None:
    """Load checkpoint from JSON file.

    Returns:
        ExplorerCheckpoint if file exists, None otherwise.
    """
    path = Path(path)
    if not path.exists():
        return None
    with open(path) as f:
        data = json.load(f)
    try:
        return ExplorerCheckpoint(**data)
    except TypeError as exc:
        raise SiltlabError(f"Malformed checkpoint file: {path}", cause=exc) from exc


def delete_checkpoint(path: Path) -> None:
    """Delete checkpoint file if it exists."""
    path = Path(path)
    if path.exists():
        path.unlink()


def create_checkpoint(
    algebra: str,
    p: int,
    frontier_state: dict,
    arrows: list[tuple[int, int]],
    mutation_count: int,
) -> ExplorerCheckpoint:
    """Create a checkpoint from explorer state.

    Args:
        algebra: Algebra name the run belongs to.
        p: Characteristic of the run.
        frontier_state: Output of ``Frontier.get_state``.
        arrows: Hasse arrows found so far, in discovery indices.
        mutation_count: Left mutations computed so far.
    """
    return ExplorerCheckpoint(
        algebra=algebra,
        p=p,
        level=frontier_state["level"],
        objects=frontier_state["objects"],
        arrows=[[a, b] for a, b in arrows],
        pending=frontier_state["pending"],
        mutation_count=mutation_count,
        timestamp=datetime.now(timezone.utc).isoformat(),
    )
