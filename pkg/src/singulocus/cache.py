"""On-disk result cache: content-hash keys, byte-stable values, atomic writes."""

from __future__ import annotations

import hashlib
import os
import sys
import tempfile

VERSION_HEADER = "singulocus-cache v1"


def cache_dir() -> str:
    return os.environ.get("SINGULOCUS_CACHE", ".singulocus-cache")


def cache_key(*parts: str) -> str:
    h = hashlib.sha256()
    for p in parts:
        h.update(p.encode())
        h.update(b"\x00")
    return h.hexdigest()


def lookup(key: str):
    """Return the stored text, or None on miss/corruption/version mismatch."""
    path = os.path.join(cache_dir(), key)
    try:
        with open(path, encoding="utf-8") as fh:
            header = fh.readline().rstrip("\n")
            if header != VERSION_HEADER:
                return None
            return fh.read()
    except FileNotFoundError:
        return None
    except OSError as exc:
        print(f"warning: unreadable cache entry {key}: {exc}", file=sys.stderr)
        return None
    except UnicodeDecodeError:
        print(f"warning: corrupt cache entry {key}; recomputing", file=sys.stderr)
        return None


def store(key: str, text: str):
    d = cache_dir()
    os.makedirs(d, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".tmp-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(VERSION_HEADER + "\n")
            fh.write(text)
        os.replace(tmp, os.path.join(d, key))
    except OSError as exc:
        print(f"warning: cache write failed: {exc}", file=sys.stderr)
        try:
            os.unlink(tmp)
        except OSError:
            pass
