"""
On-disk cache for expensive enumerations.

Entries are numpy ``.npz`` archives named by the sha256 of a canonical JSON
key (kind, group expression, relevant settings). Each archive carries the tool
version that wrote it; entries from another version are treated as misses.
Unreadable entries are logged and skipped, never fatal.

Version: 0.4.0
License: MIT
"""

import hashlib
import json
import logging
import zipfile
from pathlib import Path
from typing import Any

import numpy as np

# mypy: disable-error-code="no-redef"
try:
    from .models import TOOL_VERSION
    from .wildness import PCyclicClasses, p_cyclic_classes
except ImportError:
    from models import TOOL_VERSION
    from wildness import PCyclicClasses, p_cyclic_classes

logger = logging.getLogger(__name__)

VERSION_KEY = "__tool_version__"


class ResultCache:
    """
    Directory of npz entries.

    Args:
        cache_dir: Directory (created on first store)
        tool_version: Stamp written into every entry
    """

    def __init__(self, cache_dir: Path | str, *, tool_version: str = TOOL_VERSION):
        self.cache_dir = Path(cache_dir)
        self.tool_version = tool_version
        self.hits = 0
        self.misses = 0

    def __repr__(self) -> str:
        return f"ResultCache({self.cache_dir}, hits={self.hits}, misses={self.misses})"

    @staticmethod
    def key(kind: str, expression: str, config: dict[str, Any] | None = None) -> str:
        payload = json.dumps(
            {"kind": kind, "expression": expression, "config": config or {}},
            sort_keys=True,
            default=str,
        )
        return hashlib.sha256(payload.encode("utf-8")).hexdigest()

    def path(self, key: str) -> Path:
        return self.cache_dir / f"{key}.npz"

    def store(self, key: str, arrays: dict[str, np.ndarray]) -> Path:
        self.cache_dir.mkdir(parents=True, exist_ok=True)
        target = self.path(key)
        tmp = target.with_suffix(".tmp.npz")
        np.savez(tmp, **{VERSION_KEY: np.array(self.tool_version)}, **arrays)
        tmp.replace(target)
        logger.debug("cache store %s", target.name)
        return target

    def load(self, key: str) -> dict[str, np.ndarray] | None:
        """Arrays of an entry, or None on a miss, a version mismatch or a corrupt file."""
        target = self.path(key)
        if not target.exists():
            self.misses += 1
            logger.debug("cache miss %s", target.name)
            return None
        try:
            with np.load(target, allow_pickle=False) as data:
                arrays = {name: data[name] for name in data.files}
        except (OSError, ValueError, EOFError, zipfile.BadZipFile) as exc:
            self.misses += 1
            logger.warning("ignoring corrupt cache entry %s: %s", target, exc)
            return None
        version = arrays.pop(VERSION_KEY, None)
        if version is None or str(version) != self.tool_version:
            self.misses += 1
            logger.debug("cache entry %s written by %s, ignored", target.name, version)
            return None
        self.hits += 1
        logger.debug("cache hit %s", target.name)
        return arrays


def cached_p_cyclic_classes(
    cache: ResultCache | None,
    expression: str,
    G: Any,
    p: int,
    config: dict[str, Any] | None = None,
) -> PCyclicClasses:
    """p_cyclic_classes through the cache (computed directly when cache is None)."""
    if cache is None:
        return p_cyclic_classes(G, p)
    key = cache.key(f"p-classes-{p}", expression, config)
    entry = cache.load(key)
    if entry is not None:
        try:
            return PCyclicClasses(
                p=p,
                points=entry["points"],
                element_class=entry["element_class"],
                subgroup_id=entry["subgroup_id"],
                reps=[int(r) for r in entry["reps"]],
            )
        except KeyError as exc:
            logger.warning("cache entry for %s lacks %s, recomputing", expression, exc)
    classes = p_cyclic_classes(G, p)
    cache.store(
        key,
        {
            "points": classes.points,
            "element_class": classes.element_class,
            "subgroup_id": classes.subgroup_id,
            "reps": np.array(classes.reps, dtype=np.int64),
        },
    )
    return classes
