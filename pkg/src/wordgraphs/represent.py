"""Deciding which digraphs are graphs of words, and synthesizing witnesses.

A digraph is a word graph exactly when some walk traverses every edge at
least once; the visited vertex sequence is then a representational word.
Structurally, such a walk can never re-enter a strong component it has
left, so it crosses each component boundary exactly once: the condensation
must be a simple path whose consecutive components are joined by exactly
one original edge.  Strongly connected digraphs are the one-component case
and are always representable.
"""

from __future__ import annotations

from .connectivity import Condensation, condensation, strongly_connected
from .graphs import Digraph
from .words import Word


class NotRepresentableError(ValueError):
    """No edge-covering walk exists."""


class NotStronglyConnectedError(ValueError):
    """A covering walk inside a component needs a strongly connected graph."""


def _sort_key(label):
    return (type(label).__name__, label)


def _path_condensation(cond: Condensation) -> bool:
    k = len(cond.components)
    wanted = {(i, i + 1) for i in range(k - 1)}
    return set(cond.graph.edges) == wanted and all(
        m == 1 for m in cond.multiplicity.values()
    )


def is_representable(graph: Digraph) -> bool:
    """True when some walk covers every edge of the graph."""
    return _path_condensation(condensation(graph))


def covering_walk(graph: Digraph, start, end) -> list:
    """A walk from start to end traversing every edge of a strongly connected graph.

    Greedy: repeatedly route along shortest paths to the smallest uncovered
    edge and traverse it, then route to the requested end.  No minimality
    is promised.
    """
    if start not in graph.vertices or end not in graph.vertices:
        raise ValueError("start and end must be vertices")
    if not strongly_connected(graph):
        raise NotStronglyConnectedError("covering walk requires one strong component")
    adj: dict = {v: [] for v in graph.vertices}
    for u, v in sorted(graph.edges, key=lambda e: (_sort_key(e[0]), _sort_key(e[1]))):
        adj[u].append(v)

    def shortest_path(a, b) -> list:
        if a == b:
            return [a]
        parent = {a: a}
        queue = [a]
        while queue:
            u = queue.pop(0)
            for w in adj[u]:
                if w not in parent:
                    parent[w] = u
                    if w == b:
                        path = [b]
                        while path[-1] != a:
                            path.append(parent[path[-1]])
                        return path[::-1]
                    queue.append(w)
        raise NotStronglyConnectedError(f"no path from {a!r} to {b!r}")

    walk = [start]
    uncovered = set(graph.edges)

    def extend(path: list) -> None:
        for u, v in zip(path, path[1:]):
            uncovered.discard((u, v))
        walk.extend(path[1:])

    while uncovered:
        tail, head = min(uncovered, key=lambda e: (_sort_key(e[0]), _sort_key(e[1])))
        extend(shortest_path(walk[-1], tail))
        uncovered.discard((tail, head))
        walk.append(head)
    extend(shortest_path(walk[-1], end))
    return walk


def representational_walk(graph: Digraph) -> list:
    """A vertex walk whose adjacent distinct pairs are exactly the graph's edges.

    Walks each strong component from the head of its incoming boundary edge
    to the tail of its outgoing one; concatenating the component walks lets
    the seams realize the boundary edges themselves.
    """
    cond = condensation(graph)
    if not _path_condensation(cond):
        raise NotRepresentableError("condensation is not a single-edge path")
    component_index = {
        v: i for i, comp in enumerate(cond.components) for v in comp
    }
    # The unique original edge behind each consecutive component pair.
    boundary = {}
    for u, v in graph.edges:
        cu, cv = component_index[u], component_index[v]
        if cu != cv:
            boundary[(cu, cv)] = (u, v)

    walk: list = []
    k = len(cond.components)
    entry = None
    for i, members in enumerate(cond.components):
        internal = frozenset(
            (u, v) for u, v in graph.edges if u in members and v in members
        )
        sub = Digraph(members, internal)
        start = entry if entry is not None else min(members, key=_sort_key)
        if i < k - 1:
            exit_vertex, entry = boundary[(i, i + 1)]
        else:
            exit_vertex = start
        walk.extend(covering_walk(sub, start, exit_vertex))
    return walk


def synthesize_word(graph: Digraph) -> Word:
    """A word whose graph equals the input, letters indexing the sorted vertices.

    When the vertices already are dense 0-based ids (every graph built from
    a word), the rebuilt graph reproduces the input exactly.
    """
    walk = representational_walk(graph)
    index = {v: i for i, v in enumerate(sorted(graph.vertices, key=_sort_key))}
    return Word(tuple(index[v] for v in walk))
