"""JSON-lines result cache keyed by (k, q, d, method, moduli).

Keying on the moduli text guards against representation changes: a
record computed against different tower moduli never satisfies a lookup,
so it is recomputed rather than reused.
"""

from __future__ import annotations

import json
import os
from pathlib import Path

CACHE_ENV = "SUPERIRR_CACHE"
DEFAULT_CACHE_PATH = "~/.cache/superirr/counts.jsonl"


def default_cache_path():
    return Path(os.environ.get(CACHE_ENV, DEFAULT_CACHE_PATH)).expanduser()


def record_key(record):
    return (record["k"], record["q"], record["d"], record["method"],
            ";".join(record["moduli"]))


class ResultCache:
    """Append-only JSON-lines store of count records."""

    def __init__(self, path=None):
        self.path = Path(path) if path is not None else default_cache_path()

    def records(self):
        if not self.path.exists():
            return []
        out = []
        with open(self.path, "r", encoding="utf-8") as handle:
            for line in handle:
                line = line.strip()
                if not line:
                    continue
                try:
                    record = json.loads(line)
                except json.JSONDecodeError:
                    continue
                if isinstance(record, dict) and "method" in record:
                    out.append(record)
        return out

    def lookup(self, k, q, d, method, moduli):
        key = (k, q, d, method, ";".join(moduli))
        for record in self.records():
            try:
                if record_key(record) == key:
                    return record
            except KeyError:
                continue
        return None

    def store(self, record):
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with open(self.path, "a", encoding="utf-8") as handle:
            handle.write(json.dumps(record, sort_keys=True) + "\n")
