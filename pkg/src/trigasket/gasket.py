"""Explicit level-n graphs: the brute-force oracle behind the closed forms.

Level 1 is the plain triangle on {l, r, u}; each further level re-addresses
the edges of three copies and lets canonicalization merge the three shared
corners.  Vertex counts grow as (3^n + 3)/2, so building is capped (default
level 12); beyond the cap use `metric`, which needs no graph.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field

from .word import (
    LETTERS,
    DomainError,
    WordSpec,
    as_word,
    canonicalize,
    letter_at,
)

DEFAULT_ORACLE_CAP = 12


@dataclass
class FiniteGasket:
    """A built level-n graph; treat as read-only after construction."""

    level: int
    word: WordSpec
    marked: str
    adjacency: dict[str, tuple[str, ...]] = field(repr=False)

    @property
    def vertices(self) -> list[str]:
        return list(self.adjacency)  # insertion order is sorted

    @property
    def edges(self) -> list[tuple[str, str]]:
        out = [(a, b) for a, ns in self.adjacency.items() for b in ns if a < b]
        out.sort()
        return out


def build(w: WordSpec | str = "(l)", n: int = 1,
          max_level: int = DEFAULT_ORACLE_CAP) -> FiniteGasket:
    """Construct the level-n graph marked by the first n letters of w."""
    w = as_word(w)
    if n < 1:
        raise DomainError("level must be >= 1")
    if n > max_level:
        raise DomainError(
            f"oracle scale exceeded: level {n} above cap {max_level}; "
            "use the closed-form metric instead")
    edges = {("l", "r"), ("l", "u"), ("r", "u")}
    for _ in range(n - 1):
        nxt = set()
        for a, b in edges:
            for t in LETTERS:
                ca = canonicalize(a + t)
                cb = canonicalize(b + t)
                nxt.add((ca, cb) if ca < cb else (cb, ca))
        edges = nxt
    adj: dict[str, list[str]] = {}
    for a, b in edges:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    adjacency = {v: tuple(sorted(ns)) for v, ns in sorted(adj.items())}
    marked = canonicalize("".join(letter_at(w, i) for i in range(1, n + 1)))
    return FiniteGasket(level=n, word=w, marked=marked, adjacency=adjacency)


def _vertex_in(g: FiniteGasket, x: str) -> str:
    v = canonicalize(x)
    if v not in g.adjacency:
        raise DomainError(f"vertex {x!r} not in the level-{g.level} graph")
    return v


def bfs_distance(g: FiniteGasket, x: str, y: str) -> int:
    """Breadth-first shortest-path length; the reference for `metric.distance`."""
    src = _vertex_in(g, x)
    dst = _vertex_in(g, y)
    if src == dst:
        return 0
    dist = {src: 0}
    queue = deque([src])
    while queue:
        v = queue.popleft()
        d = dist[v] + 1
        for other in g.adjacency[v]:
            if other not in dist:
                if other == dst:
                    return d
                dist[other] = d
                queue.append(other)
    raise DomainError(f"no path from {src!r} to {dst!r}")  # never on a built graph


def bfs_distances_from(g: FiniteGasket, x: str) -> dict[str, int]:
    """Distances from x to every vertex, one breadth-first sweep."""
    src = _vertex_in(g, x)
    dist = {src: 0}
    queue = deque([src])
    while queue:
        v = queue.popleft()
        d = dist[v] + 1
        for other in g.adjacency[v]:
            if other not in dist:
                dist[other] = d
                queue.append(other)
    return dist


def degree(g: FiniteGasket, x: str) -> int:
    return len(g.adjacency[_vertex_in(g, x)])


def degree_in_limit(x: str, w: WordSpec | str = "(l)") -> int:
    """Degree of the vertex named x in the infinite graph of w: 2 or 4.

    Only a vertex that stays an extremal corner at every level keeps
    degree 2, i.e. x spells t^h and w repeats t forever past h.
    """
    w = as_word(w)
    v = canonicalize(x)
    h = len(v)
    t = v[0]
    if v != t * h:
        return 4
    horizon = max(h, len(w.prefix)) + len(w.cycle)
    if all(letter_at(w, i) == t for i in range(h + 1, horizon + 1)):
        return 2
    return 4


def export_dot(g: FiniteGasket) -> str:
    """Graphviz text, deterministic ordering, marked vertex double-circled."""
    lines = [f"graph level{g.level} {{"]
    for v in g.vertices:
        mark = " [peripheries=2]" if v == g.marked else ""
        lines.append(f'  "{v}"{mark};')
    for a, b in g.edges:
        lines.append(f'  "{a}" -- "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_json(g: FiniteGasket) -> str:
    payload = {
        "level": g.level,
        "word": str(g.word),
        "marked": g.marked,
        "vertices": g.vertices,
        "edges": [list(e) for e in g.edges],
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"
