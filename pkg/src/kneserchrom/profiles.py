"""Rooted degree sequences of trees and the minimum-leaf profile.

A rooted vertex sequence of a tree T lists all vertices in non-decreasing
distance from a chosen root; in a tree every non-root vertex then has
exactly one neighbour that appears earlier (its parent), because adjacent
vertices always sit in consecutive breadth-first layers.  Reading off the
degrees along such a sequence gives a degree sequence of the rooting, and
r(T, v) is the lexicographically least one over all sequences rooted at v.

The least sequence is realised greedily: within each BFS layer the order of
vertices is free and contributes its degrees as a contiguous stretch, so
sorting every layer by ascending degree is optimal layer by layer and hence
globally (ties are broken by vertex label to fix one witness order).

r(T) = min over all vertices v of r(T, v); the vertices attaining the
minimum are the *minimum leaves* of T (for n >= 2 they are always leaves:
rooting at a leaf starts the sequence with degree 1, which beats any
internal root).  These profiles are the carrier of the tree-reconstruction
argument implemented in ``kneserchrom.reconstruct``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import SimpleGraph, is_tree

DegreeProfile = tuple[int, ...]


@dataclass(frozen=True)
class RootedOrder:
    """A concrete minimum rooted vertex sequence of a tree.

    ``order[i]`` is the vertex at (0-based) position i, ``parent_pos[i]``
    the position of its parent (-1 for the root), and ``profile`` the
    degree read-off, i.e. r(T, order[0]).
    """

    order: tuple[int, ...]
    parent_pos: tuple[int, ...]
    profile: DegreeProfile

    def position(self, v: int) -> int:
        return self.order.index(v)


def _require_tree(g: SimpleGraph) -> None:
    if not is_tree(g):
        raise ValueError("operation defined for trees only")


def rooted_order(g: SimpleGraph, root: int) -> RootedOrder:
    """The minimum rooted vertex sequence at ``root``.

    BFS layers from the root, each layer sorted by ascending degree with
    ties broken by vertex label.
    """
    _require_tree(g)
    if not 0 <= root < g.n:
        raise ValueError(f"root {root} out of range")
    adj = g.adjacency()
    deg = g.degrees()
    parent = {root: -1}
    order: list[int] = []
    parent_pos: list[int] = []
    pos: dict[int, int] = {}
    layer = [root]
    while layer:
        layer.sort(key=lambda v: (deg[v], v))
        nxt: list[int] = []
        for v in layer:
            pos[v] = len(order)
            order.append(v)
            parent_pos.append(pos[parent[v]] if parent[v] != -1 else -1)
            for w in adj[v]:
                if w not in parent:
                    parent[w] = v
                    nxt.append(w)
        layer = nxt
    profile = tuple(deg[v] for v in order)
    return RootedOrder(tuple(order), tuple(parent_pos), profile)


def min_rooted_degree_sequence(g: SimpleGraph, root: int) -> DegreeProfile:
    """r(T, root): the lexicographically least rooted degree sequence at ``root``."""
    return rooted_order(g, root).profile


def min_degree_sequence(g: SimpleGraph) -> DegreeProfile:
    """r(T) = min over all roots of r(T, root)."""
    _require_tree(g)
    return min(min_rooted_degree_sequence(g, v) for v in range(g.n))


def minimum_leaves(g: SimpleGraph) -> tuple[int, ...]:
    """All vertices attaining r(T), sorted by label.

    For n >= 2 these are leaves; for the one-vertex tree the sole vertex.
    """
    _require_tree(g)
    profiles = {v: min_rooted_degree_sequence(g, v) for v in range(g.n)}
    best = min(profiles.values())
    return tuple(sorted(v for v, p in profiles.items() if p == best))
