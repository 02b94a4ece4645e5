"""On-disk cache of classification tables, one JSON document per length.

A cached table is used only when its format version and rule-set hash match
the running code; anything else (including unreadable files) is rebuilt.
"""

from __future__ import annotations

import json
import logging
import os
from pathlib import Path

from .formats import trace_to_json, verdict_from_json
from .rules import RULESET_HASH, ClassificationTable, Classifier, default_classifier
from .scoreseq import enumerate_sequences

log = logging.getLogger(__name__)

FORMAT_VERSION = 1
ENV_VAR = "TOURNALINK_CACHE"


def cache_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "tournalink"


def cache_path(n: int, directory: Path | None = None) -> Path:
    return (directory or cache_dir()) / f"table-n{n}.json"


def dump_table(table: ClassificationTable) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "ruleset": RULESET_HASH,
        "n": table.n,
        "records": [
            {"sequence": list(v.sequence), "status": v.status.value, "trace": trace_to_json(v.trace)}
            for v in table.entries.values()
        ],
    }


def load_table_doc(doc: dict) -> ClassificationTable:
    table = ClassificationTable(doc["n"])
    for item in doc["records"]:
        v = verdict_from_json(item)
        table.entries[v.sequence] = v
    return table


def _read(path: Path, n: int) -> ClassificationTable | None:
    try:
        doc = json.loads(path.read_text())
    except FileNotFoundError:
        return None
    except (OSError, ValueError) as exc:
        log.warning("cache file %s unreadable (%s); regenerating", path, exc)
        return None
    if not isinstance(doc, dict):
        log.warning("cache file %s malformed; regenerating", path)
        return None
    if doc.get("format_version") != FORMAT_VERSION:
        log.warning("cache file %s has format version %r; regenerating", path, doc.get("format_version"))
        return None
    if doc.get("ruleset") != RULESET_HASH:
        log.warning("cache file %s built with rule set %r; regenerating", path, doc.get("ruleset"))
        return None
    try:
        table = load_table_doc(doc)
    except (KeyError, TypeError, ValueError) as exc:
        log.warning("cache file %s malformed (%s); regenerating", path, exc)
        return None
    if table.n != n:
        log.warning("cache file %s holds n=%s; regenerating", path, table.n)
        return None
    return table


def cached_table(
    n: int,
    classifier: Classifier | None = None,
    use_cache: bool = True,
    directory: Path | None = None,
) -> ClassificationTable:
    """Classification table for length ``n``, read from or written to the cache."""
    classifier = classifier or default_classifier()
    if not use_cache:
        return classifier.table(n)
    path = cache_path(n, directory)
    table = _read(path, n)
    if table is not None and len(table) == len(enumerate_sequences(n, classifier.max_n)):
        return table
    table = classifier.table(n)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".tmp")
        tmp.write_text(json.dumps(dump_table(table)))
        tmp.replace(path)
    except OSError as exc:
        log.warning("could not write cache file %s: %s", path, exc)
    return table

