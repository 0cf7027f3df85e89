"""Plain-text transition files and Graphviz export.

A file holds one line ``i j`` per node, meaning ``f(i) = j``, with node ids
``0..m-1``.  ``#`` starts a comment; blank lines are ignored.
"""

from __future__ import annotations

from pathlib import Path
from typing import Dict, Union

from .core import Fdds, FddsError

__all__ = ["parse_fdds", "format_fdds", "read_fdds", "write_fdds", "to_dot"]


def parse_fdds(text: str, source: str = "<input>") -> Fdds:
    succ: Dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise FddsError(f"{source}:{lineno}: expected 'i j', got {raw.strip()!r}")
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError:
            raise FddsError(f"{source}:{lineno}: node ids must be integers") from None
        if i < 0 or j < 0:
            raise FddsError(f"{source}:{lineno}: negative node id")
        if i in succ:
            raise FddsError(f"{source}:{lineno}: node {i} has a second successor")
        succ[i] = j
    m = len(succ)
    for i in range(m):
        if i not in succ:
            raise FddsError(f"{source}: node ids are not 0..{m - 1} (missing {i})")
    try:
        return Fdds([succ[i] for i in range(m)])
    except FddsError as exc:
        raise FddsError(f"{source}: {exc}") from None


def format_fdds(a: Fdds, canonical: bool = True) -> str:
    """Serialize, renumbering nodes canonically unless told otherwise."""
    if canonical:
        a = a.canonical_relabel()
    return "".join(f"{i} {j}\n" for i, j in a.edges())


def read_fdds(path: Union[str, Path]) -> Fdds:
    p = Path(path)
    try:
        data = p.read_bytes()
    except OSError as exc:
        raise FddsError(f"{path}: {exc.strerror}") from None
    try:
        text = data.decode("ascii")
    except UnicodeDecodeError:
        raise FddsError(f"{path}: not an ASCII file") from None
    return parse_fdds(text, str(path))


def write_fdds(a: Fdds, path: Union[str, Path]) -> None:
    Path(path).write_bytes(format_fdds(a).encode("ascii"))


def to_dot(a: Fdds, name: str = "fdds") -> str:
    """Graphviz digraph of the canonically renumbered system; cycle nodes drawn bold."""
    a = a.canonical_relabel()
    lines = [f"digraph {name} {{", "  node [shape=circle];"]
    for v, periodic in enumerate(a.periodic):
        lines.append(f"  {v} [style=bold];" if periodic else f"  {v};")
    lines.extend(f"  {i} -> {j};" for i, j in a.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"
