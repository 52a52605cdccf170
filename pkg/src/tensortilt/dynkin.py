"""Dynkin diagrams, their orientations and diagram automorphisms.

Vertex labels (1-based in names, 0-based in code):

* ``A_n``: chain ``1 - 2 - ... - n``
* ``D_n``: chain ``1 - ... - (n-2)`` with ``n-1`` and ``n`` both attached to ``n-2``
* ``E_n``: chain ``1 - ... - (n-1)`` with ``n`` attached to ``3``
"""
from __future__ import annotations

import itertools
from typing import Iterator

from .algebra import Quiver


def dynkin_edges(kind: str, n: int) -> list[tuple[int, int]]:
    kind = kind.upper()
    if kind == "A":
        if n < 1:
            raise ValueError("A_n needs n >= 1")
        return [(i, i + 1) for i in range(n - 1)]
    if kind == "D":
        if n < 4:
            raise ValueError("D_n needs n >= 4")
        return [(i, i + 1) for i in range(n - 3)] + [(n - 3, n - 2), (n - 3, n - 1)]
    if kind == "E":
        if n not in (6, 7, 8):
            raise ValueError("E_n needs n in 6, 7, 8")
        return [(i, i + 1) for i in range(n - 2)] + [(2, n - 1)]
    raise ValueError(f"unknown Dynkin type {kind!r}")


def diagram_automorphism(kind: str, n: int) -> tuple[int, ...]:
    """The involution used to define symmetric orientations."""
    kind = kind.upper()
    if kind == "A":
        return tuple(n - 1 - i for i in range(n))
    if kind == "D":
        perm = list(range(n))
        if n % 2 == 1:
            perm[n - 2], perm[n - 1] = n - 1, n - 2
        return tuple(perm)
    if kind == "E" and n == 6:
        return (4, 3, 2, 1, 0, 5)
    return tuple(range(n))


def coxeter_number(kind: str, n: int) -> int:
    kind = kind.upper()
    if kind == "A":
        return n + 1
    if kind == "D":
        return 2 * n - 2
    return {6: 12, 7: 18, 8: 30}[n]


def _bipartite_colors(n: int, edges) -> list[int]:
    color = [-1] * n
    color[0] = 0
    changed = True
    while changed:
        changed = False
        for u, v in edges:
            if color[u] >= 0 and color[v] < 0:
                color[v] = 1 - color[u]
                changed = True
            elif color[v] >= 0 and color[u] < 0:
                color[u] = 1 - color[v]
                changed = True
    return color


def _branch_vertex(kind: str, n: int) -> int:
    kind = kind.upper()
    if kind == "D":
        return n - 3
    if kind == "E":
        return 2
    raise ValueError("all-in orientation is defined for D and E diagrams")


def dynkin_quiver(kind: str, n: int, orientation: str = "linear") -> Quiver:
    """Quiver on a Dynkin diagram.

    ``orientation`` is ``linear`` (each edge from smaller to larger label),
    ``bipartite``/``alternating`` (sources at even distance from vertex 1),
    ``symmetric`` (a canonical orientation invariant under the diagram
    automorphism), ``all-in`` (every edge points toward the branch vertex),
    or a string of ``>``/``<`` per edge in :func:`dynkin_edges` order.
    """
    edges = dynkin_edges(kind, n)
    orient = orientation.lower()
    if orient == "linear":
        arrows = edges
    elif orient in ("bipartite", "alternating"):
        color = _bipartite_colors(n, edges)
        arrows = [(u, v) if color[u] == 0 else (v, u) for u, v in edges]
    elif orient == "symmetric":
        if kind.upper() == "A" and n % 2 == 0 and n > 0:
            raise ValueError(f"A_{n} has no symmetric orientation")
        return dynkin_quiver(kind, n, "bipartite")
    elif orient in ("all-in", "allin"):
        c = _branch_vertex(kind, n)
        dist = _distances(n, edges, c)
        arrows = [(u, v) if dist[u] > dist[v] else (v, u) for u, v in edges]
    elif set(orientation) <= {"<", ">"} and len(orientation) == len(edges):
        arrows = [(u, v) if s == ">" else (v, u) for (u, v), s in zip(edges, orientation)]
    else:
        raise ValueError(f"bad orientation {orientation!r} for {kind}{n}")
    return Quiver(n, tuple((s, t, f"a{k + 1}") for k, (s, t) in enumerate(arrows)))


def _distances(n, edges, root):
    dist = [None] * n
    dist[root] = 0
    frontier = [root]
    while frontier:
        nxt = []
        for w in frontier:
            for u, v in edges:
                for a, b in ((u, v), (v, u)):
                    if a == w and dist[b] is None:
                        dist[b] = dist[w] + 1
                        nxt.append(b)
        frontier = nxt
    return dist


def all_orientations(kind: str, n: int) -> Iterator[tuple[str, Quiver]]:
    m = len(dynkin_edges(kind, n))
    for signs in itertools.product("><", repeat=m):
        s = "".join(signs)
        yield s, dynkin_quiver(kind, n, s)


def is_symmetric_orientation(q: Quiver, kind: str, n: int) -> bool:
    sigma = diagram_automorphism(kind, n)
    arrows = {(s, t) for s, t, _ in q.arrows}
    return all((sigma[s], sigma[t]) in arrows for s, t in arrows)


ADE_CHAIN = [("A", 1), ("A", 2), ("A", 3), ("D", 4), ("D", 5), ("E", 6), ("E", 7), ("E", 8)]


def ade_chain_member(n: int) -> tuple[str, int]:
    """The n-th member of A1, A2, A3, D4, D5, E6, E7, E8."""
    return ADE_CHAIN[n - 1]
