from __future__ import annotations

import sys
from contextlib import contextmanager


@contextmanager
def deep_recursion(depth: int, frames_per_level: int = 4):
    """Raise the interpreter recursion limit for algorithms recursing on tree depth."""
    old = sys.getrecursionlimit()
    need = frames_per_level * depth + 1000
    if need > old:
        sys.setrecursionlimit(need)
    try:
        yield
    finally:
        if need > old:
            sys.setrecursionlimit(old)
