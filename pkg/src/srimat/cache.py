"""On-disk JSON cache for count tables, keyed by family and n."""

from __future__ import annotations

import json
import logging
import os
import tempfile
from pathlib import Path
from typing import Callable, Optional

log = logging.getLogger(__name__)

ENV_VAR = "DM_CACHE_DIR"
DEFAULT_DIR = ".srimat-cache"
FAMILIES = ("T", "W", "I")


def resolve_dir(flag_value: Optional[str]) -> Path:
    return Path(flag_value or os.environ.get(ENV_VAR) or DEFAULT_DIR)


class TableCache:
    """Read-through cache; a disabled cache (``directory=None``) always recomputes."""

    def __init__(self, directory: Optional[Path] = None):
        self.directory = directory

    @property
    def enabled(self) -> bool:
        return self.directory is not None

    def path(self, family: str, n: int) -> Path:
        assert self.directory is not None
        return self.directory / f"{family}_n{n}.json"

    def _valid(self, obj, family: str, n: int) -> bool:
        if not isinstance(obj, dict) or obj.get("family") != family or obj.get("n") != n:
            return False
        counts = obj.get("counts")
        return (
            isinstance(counts, list)
            and len(counts) == n
            and all(isinstance(c, int) and not isinstance(c, bool) and c >= 0 for c in counts)
        )

    def load(self, family: str, n: int) -> Optional[list[int]]:
        if not self.enabled:
            return None
        p = self.path(family, n)
        try:
            obj = json.loads(p.read_text())
        except FileNotFoundError:
            return None
        except (OSError, ValueError) as exc:
            log.warning("ignoring unreadable cache file %s: %s", p, exc)
            return None
        if not self._valid(obj, family, n):
            log.warning("ignoring invalid cache file %s", p)
            return None
        return obj["counts"]

    def store(self, family: str, n: int, counts: list[int]) -> None:
        if not self.enabled:
            return
        assert self.directory is not None
        self.directory.mkdir(parents=True, exist_ok=True)
        payload = json.dumps({"family": family, "n": n, "counts": counts})
        fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        with os.fdopen(fd, "w") as fh:
            fh.write(payload)
        os.replace(tmp, self.path(family, n))

    def get(self, family: str, n: int, compute: Callable[[], list[int]]) -> list[int]:
        cached = self.load(family, n)
        if cached is not None:
            return cached
        counts = compute()
        self.store(family, n, counts)
        return counts
