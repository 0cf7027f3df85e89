"""Finite discrete-time dynamical systems as functional digraphs."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .trees import Tree, attach_root

__all__ = [
    "Fdds",
    "Component",
    "FddsError",
    "validate",
    "components",
    "depth_fdds",
    "fdds_sum",
    "fdds_product",
    "fdds_power",
    "canonical_form",
    "is_isomorphic",
    "cycle",
    "fixed_point",
    "empty",
    "least_rotation",
]


class FddsError(ValueError):
    """Raised for malformed transition maps."""


@dataclass(frozen=True)
class Component:
    """One connected component: a cycle with a finite in-tree on each cycle node.

    ``cycle[i + 1] == succ(cycle[i])`` and ``trees[i]`` hangs on ``cycle[i]``
    (its root is that node; the cycle predecessor is not part of it).
    """

    cycle: Tuple[int, ...]
    trees: Tuple[Tree, ...]
    nodes: Tuple[int, ...]

    @property
    def period(self) -> int:
        return len(self.cycle)

    @property
    def size(self) -> int:
        return len(self.nodes)

    @property
    def depth(self) -> int:
        return max(t.depth for t in self.trees)

    def spine_sequence(self, start: int = 0) -> Tuple[Tree, ...]:
        """Hanging trees met when walking backwards along the cycle from ``cycle[start]``.

        This is the order in which they appear on the infinite branch of the
        unroll tree rooted at ``cycle[start]``.
        """
        p = self.period
        return tuple(self.trees[(start - i) % p] for i in range(p))

    @cached_property
    def code(self) -> Tuple[Tuple[int, ...], ...]:
        """Codes of the hanging trees in successor order, least rotation."""
        codes = [tuple(t.code()) for t in self.trees]
        r = least_rotation(codes)
        return tuple(codes[r:] + codes[:r])

    def signature(self) -> str:
        return "C" + "|".join(" ".join(map(str, c)) for c in self.code)


class Fdds:
    """An immutable functional digraph on nodes ``0..m-1``."""

    __slots__ = ("_succ", "__dict__")

    def __init__(self, succ: Sequence[int]):
        succ = tuple(int(v) for v in succ)
        m = len(succ)
        for i, j in enumerate(succ):
            if not 0 <= j < m:
                raise FddsError(f"node {i} maps to {j}, outside 0..{m - 1}")
        self._succ = succ

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, int]) -> "Fdds":
        return validate(mapping)

    @property
    def succ(self) -> Tuple[int, ...]:
        return self._succ

    def __len__(self) -> int:
        return len(self._succ)

    def __eq__(self, other: object) -> bool:
        # same labelled map; use is_isomorphic for equality up to relabelling
        if not isinstance(other, Fdds):
            return NotImplemented
        return self._succ == other._succ

    def __hash__(self) -> int:
        return hash(self._succ)

    def __repr__(self) -> str:
        if len(self) <= 12:
            return f"Fdds({list(self._succ)})"
        return f"Fdds(m={len(self)}, components={len(self.components)})"

    def __add__(self, other: "Fdds") -> "Fdds":
        return fdds_sum(self, other)

    def __mul__(self, other: "Fdds") -> "Fdds":
        return fdds_product(self, other)

    def __pow__(self, k: int) -> "Fdds":
        return fdds_power(self, k)

    # -- structure --------------------------------------------------------
    @cached_property
    def preimages(self) -> Tuple[Tuple[int, ...], ...]:
        pre: List[List[int]] = [[] for _ in self._succ]
        for v, w in enumerate(self._succ):
            pre[w].append(v)
        return tuple(tuple(p) for p in pre)

    @cached_property
    def periodic(self) -> Tuple[bool, ...]:
        m = len(self._succ)
        state = [0] * m  # 0 unseen, 1 on current walk, 2 done
        periodic = [False] * m
        for s in range(m):
            if state[s]:
                continue
            walk = []
            v = s
            while state[v] == 0:
                state[v] = 1
                walk.append(v)
                v = self._succ[v]
            if state[v] == 1:
                # v closes a new cycle
                w = v
                while True:
                    periodic[w] = True
                    w = self._succ[w]
                    if w == v:
                        break
            for w in walk:
                state[w] = 2
        return tuple(periodic)

    @property
    def alpha(self) -> int:
        """Number of periodic nodes (trees in the unroll)."""
        return sum(self.periodic)

    @cached_property
    def hanging(self) -> Tuple[Optional[Tree], ...]:
        """For every node, the tree of its transient preimages (rooted at it)."""
        m = len(self._succ)
        periodic = self.periodic
        pre = self.preimages
        out: List[Optional[Tree]] = [None] * m
        for root in range(m):
            if not periodic[root]:
                continue
            order = [root]
            i = 0
            while i < len(order):
                v = order[i]
                i += 1
                order.extend(w for w in pre[v] if not periodic[w])
            for v in reversed(order):
                acc: Dict[Tree, int] = {}
                for w in pre[v]:
                    if not periodic[w]:
                        t = out[w]
                        acc[t] = acc.get(t, 0) + 1  # type: ignore[index]
                out[v] = attach_root(acc)
        return tuple(out)

    @cached_property
    def components(self) -> Tuple[Component, ...]:
        m = len(self._succ)
        periodic = self.periodic
        comp_of = [-1] * m
        raw: List[Tuple[Tuple[int, ...], List[int]]] = []
        for s in range(m):
            if periodic[s] and comp_of[s] < 0:
                cyc = [s]
                v = self._succ[s]
                while v != s:
                    cyc.append(v)
                    v = self._succ[v]
                for v in cyc:
                    comp_of[v] = len(raw)
                raw.append((tuple(cyc), []))
        # every node reaches its cycle; label by the first labelled node met
        for s in range(m):
            if comp_of[s] >= 0:
                continue
            walk = []
            v = s
            while comp_of[v] < 0:
                walk.append(v)
                v = self._succ[v]
            for w in walk:
                comp_of[w] = comp_of[v]
        for v in range(m):
            raw[comp_of[v]][1].append(v)
        hanging = self.hanging
        comps = [
            Component(cycle=cyc, trees=tuple(hanging[v] for v in cyc), nodes=tuple(nodes))  # type: ignore[misc]
            for cyc, nodes in raw
        ]
        comps.sort(key=lambda c: (c.signature(), c.nodes))
        return tuple(comps)

    @cached_property
    def depth(self) -> int:
        return depth_fdds(self)

    def is_connected(self) -> bool:
        return len(self.components) == 1

    # -- canonical data ---------------------------------------------------
    @cached_property
    def canonical(self) -> bytes:
        return canonical_form(self)

    def canonical_relabel(self) -> "Fdds":
        """An isomorphic copy whose numbering depends only on the isomorphism class.

        Components come in canonical order; inside a component the cycle
        nodes come first (least rotation, successor order), then the transient
        nodes breadth-first with children in tree order.
        """
        new_succ: List[int] = []
        for comp in self.components:
            codes = [tuple(t.code()) for t in comp.trees]
            r = least_rotation(codes)
            trees = comp.trees[r:] + comp.trees[:r]
            base = len(new_succ)
            p = len(trees)
            new_succ.extend(base + (i + 1) % p for i in range(p))
            queue: List[Tuple[Tree, int]] = [(t, base + i) for i, t in enumerate(trees)]
            head = 0
            while head < len(queue):
                t, ident = queue[head]
                head += 1
                for child in t.ordered_children():
                    new_succ.append(ident)
                    queue.append((child, len(new_succ) - 1))
        return Fdds(new_succ)

    def edges(self) -> List[Tuple[int, int]]:
        return list(enumerate(self._succ))


def validate(raw: Mapping[int, int] | Sequence[int], m: Optional[int] = None) -> Fdds:
    """Check a transition map and return the corresponding :class:`Fdds`.

    ``raw`` is either a sequence (``raw[i]`` is the successor of ``i``) or a
    mapping over ``0..m-1``.  ``m`` defaults to the number of entries.
    """
    if isinstance(raw, Mapping):
        n = len(raw) if m is None else m
        missing = [i for i in range(n) if i not in raw]
        if missing:
            raise FddsError(f"missing successor for node {missing[0]}")
        extra = [k for k in raw if not (isinstance(k, int) and 0 <= k < n)]
        if extra:
            raise FddsError(f"node id {extra[0]} outside 0..{n - 1}")
        succ = [raw[i] for i in range(n)]
    else:
        succ = list(raw)
        if m is not None and m != len(succ):
            raise FddsError(f"expected {m} nodes, got {len(succ)}")
    return Fdds(succ)


def components(a: Fdds) -> Tuple[Component, ...]:
    return a.components


def depth_fdds(a: Fdds) -> int:
    """Largest depth of a tree hanging on a periodic node; 0 for permutations."""
    return max((t.depth for t in a.hanging if t is not None), default=0)


def fdds_sum(a: Fdds, b: Fdds) -> Fdds:
    """Disjoint union; ``b``'s nodes are shifted after ``a``'s."""
    off = len(a)
    return Fdds(a.succ + tuple(v + off for v in b.succ))


def fdds_product(a: Fdds, b: Fdds) -> Fdds:
    """Direct product; node ``(i, j)`` gets id ``i * len(b) + j``."""
    mb = len(b)
    bs = b.succ
    return Fdds([fi * mb + gj for fi in a.succ for gj in bs])


def fdds_power(a: Fdds, k: int) -> Fdds:
    if k < 0:
        raise ValueError("exponent must be non-negative")
    result = fixed_point()
    for _ in range(k):
        result = fdds_product(result, a)
    return result


def cycle(p: int) -> Fdds:
    if p < 1:
        raise ValueError("cycle length must be positive")
    return Fdds([(i + 1) % p for i in range(p)])


def fixed_point() -> Fdds:
    return Fdds([0])


def empty() -> Fdds:
    return Fdds([])


def least_rotation(seq: Sequence) -> int:
    """Start index of the lexicographically least rotation (Booth's algorithm)."""
    n = len(seq)
    if n <= 1:
        return 0
    s = list(seq) * 2
    f = [-1] * (2 * n)
    k = 0
    for j in range(1, 2 * n):
        sj = s[j]
        i = f[j - k - 1]
        while i != -1 and sj != s[k + i + 1]:
            if sj < s[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if sj != s[k + i + 1]:
            if sj < s[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return k % n


def canonical_form(a: Fdds) -> bytes:
    """Byte string that is equal for two systems iff they are isomorphic."""
    return "\n".join(c.signature() for c in a.components).encode("ascii")


def is_isomorphic(a: Fdds, b: Fdds) -> bool:
    if len(a) != len(b) or a.alpha != b.alpha:
        return False
    return a.canonical == b.canonical


def sum_all(parts: Iterable[Fdds]) -> Fdds:
    out: List[int] = []
    for p in parts:
        off = len(out)
        out.extend(v + off for v in p.succ)
    return Fdds(out)
