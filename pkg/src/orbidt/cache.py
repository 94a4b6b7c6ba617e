"""On-disk cache of partition records, one JSON-lines file per ``(r, N)``."""
from __future__ import annotations

import hashlib
import json
import os
from pathlib import Path

from .partitions import partition_record, partitions_up_to

FORMAT_VERSION = 1


def default_cache_dir() -> Path | None:
    env = os.environ.get("ORBIDT_CACHE_DIR")
    return Path(env) if env else None


def cache_key(**params) -> str:
    blob = json.dumps({"version": FORMAT_VERSION, **params}, sort_keys=True)
    return hashlib.sha256(blob.encode()).hexdigest()[:16]


def cache_path(cache_dir: Path, r: int, N: int) -> Path:
    return Path(cache_dir) / f"partitions-r{r}-N{N}-{cache_key(kind='partitions', r=r, N=N)}.jsonl"


def compute_records(r: int, N: int) -> list[dict]:
    return [partition_record(pi, r) for pi in partitions_up_to(N) if len(pi)]


def partition_records(r: int, N: int, cache_dir: Path | str | None = None) -> list[dict]:
    """Records ``{"boxes", "alpha", "index"}`` for all nonempty ``|pi| <= N``."""
    cache_dir = Path(cache_dir) if cache_dir is not None else default_cache_dir()
    if cache_dir is None:
        return compute_records(r, N)
    path = cache_path(cache_dir, r, N)
    if path.exists():
        with path.open() as f:
            return [json.loads(line) for line in f if line.strip()]
    recs = compute_records(r, N)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    with tmp.open("w") as f:
        for rec in recs:
            f.write(json.dumps(rec, sort_keys=True) + "\n")
    tmp.replace(path)
    return recs
