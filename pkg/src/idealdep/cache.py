"""Content-addressed result cache for Groebner bases.

Keys are SHA-256 hashes of the canonical computation request (field,
variable names, order, generator strings).  Entries are JSON files written
atomically (temp file + rename), so concurrent CLI invocations sharing a
cache directory are safe.  Corrupt or mismatched entries are discarded
with a warning and recomputed — a cache hit is never trusted blindly.

The cache is off unless `configure` is called with a directory; the
library itself never turns it on.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
import threading
import warnings
from pathlib import Path

_lock = threading.Lock()
_directory: Path | None = None
_hits = 0
_misses = 0

SCHEMA = 1


def configure(directory=None):
    """Enable the cache in ``directory`` (created if needed); None disables."""
    global _directory, _hits, _misses
    with _lock:
        if directory is None:
            _directory = None
        else:
            _directory = Path(directory)
            _directory.mkdir(parents=True, exist_ok=True)
        _hits = 0
        _misses = 0


def enabled() -> bool:
    return _directory is not None


def stats() -> dict:
    with _lock:
        return {"hits": _hits, "misses": _misses}


def _record(hit: bool):
    global _hits, _misses
    with _lock:
        if hit:
            _hits += 1
        else:
            _misses += 1


def groebner_key(ring, order, gens) -> str:
    payload = "\x1f".join(
        [
            "groebner",
            ring.field.label(),
            ",".join(ring.names),
            order.label(),
        ]
        + sorted(str(g) for g in gens)
    )
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()


def _path_for(key: str) -> Path:
    return _directory / f"{key}.json"


def get_groebner(key: str, ring, order):
    if _directory is None:
        return None
    path = _path_for(key)
    if not path.exists():
        _record(False)
        return None
    try:
        with open(path, "r", encoding="utf-8") as fh:
            payload = json.load(fh)
        if payload.get("schema") != SCHEMA or payload.get("kind") != "groebner":
            raise ValueError("wrong schema")
        if payload.get("field") != ring.field.label():
            raise ValueError("field mismatch")
        if tuple(payload.get("names", ())) != ring.names:
            raise ValueError("ring mismatch")
        if payload.get("order") != order.label():
            raise ValueError("order mismatch")
        from idealdep.groebner import GroebnerBasis, to_primitive
        from idealdep.problem import parse_polynomial

        prims = []
        for text in payload["elements"]:
            poly = parse_polynomial(ring, text)
            prim, _ = to_primitive(poly, order)
            if not prim:
                raise ValueError("zero element in cached basis")
            prims.append(prim)
        from idealdep import _kernel as K

        leads = [f[0][0] for f in prims]
        for i, a in enumerate(leads):
            for j, b in enumerate(leads):
                if i != j and K.mono_divides(a, b):
                    raise ValueError("cached basis is not reduced")
        gb = GroebnerBasis(ring, order, prims)
    except Exception as exc:  # corrupt entries are discarded, never trusted
        warnings.warn(f"discarding corrupt cache entry {path.name}: {exc}")
        try:
            os.remove(path)
        except OSError:
            pass
        _record(False)
        return None
    _record(True)
    return gb


def put_groebner(key: str, gb):
    if _directory is None:
        return
    payload = {
        "schema": SCHEMA,
        "kind": "groebner",
        "field": gb.ring.field.label(),
        "names": list(gb.ring.names),
        "order": gb.order.label(),
        "elements": gb.canonical_strings(),
    }
    _write_atomic(_path_for(key), payload)


def _write_atomic(path: Path, payload: dict):
    data = json.dumps(payload, indent=0, sort_keys=True)
    fd, tmp = tempfile.mkstemp(dir=str(path.parent), suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.remove(tmp)
        except OSError:
            pass
        raise
