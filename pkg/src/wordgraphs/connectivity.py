"""Strong and weak connectivity, components, bridges, and edge connectivity.

Edge connectivity is taken on the underlying undirected multigraph: every
directed edge contributes one undirected edge, so an antiparallel pair
contributes two parallel edges and can never be severed by a single
deletion.  Under that reading a bridge (a unidirectional edge whose removal
disconnects the graph) is exactly a 1-edge cut, and word graphs are
strongly connected precisely when no such cut exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Mapping

from .graphs import Digraph


class EmptyGraphError(ValueError):
    """Connectivity is undefined on an empty vertex set."""


def _sort_key(label: Hashable):
    return (type(label).__name__, label)


def _sorted_vertices(graph: Digraph) -> list:
    if not graph.vertices:
        raise EmptyGraphError("graph has no vertices")
    return sorted(graph.vertices, key=_sort_key)


def _adjacency(graph: Digraph) -> dict:
    adj = {v: [] for v in graph.vertices}
    for u, v in sorted(graph.edges, key=lambda e: (_sort_key(e[0]), _sort_key(e[1]))):
        adj[u].append(v)
    return adj


@dataclass(frozen=True)
class SccDecomposition:
    """Maximal strongly connected components, listed in topological order."""

    components: tuple[frozenset, ...]
    component_index: Mapping

    @property
    def count(self) -> int:
        return len(self.components)

    def component_of(self, vertex) -> int:
        return self.component_index[vertex]


def scc_decomposition(graph: Digraph) -> SccDecomposition:
    """Tarjan's algorithm, iterative, with components topologically sorted."""
    order = _sorted_vertices(graph)
    adj = _adjacency(graph)
    index: dict = {}
    lowlink: dict = {}
    on_stack: set = set()
    stack: list = []
    components: list[frozenset] = []
    counter = 0

    for root in order:
        if root in index:
            continue
        work = [(root, iter(adj[root]))]
        index[root] = lowlink[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, neighbours = work[-1]
            advanced = False
            for w in neighbours:
                if w not in index:
                    index[w] = lowlink[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(adj[w])))
                    advanced = True
                    break
                if w in on_stack:
                    lowlink[v] = min(lowlink[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[v])
            if lowlink[v] == index[v]:
                comp = set()
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.add(w)
                    if w == v:
                        break
                components.append(frozenset(comp))

    # Tarjan emits components in reverse topological order.
    components.reverse()
    component_index = {v: i for i, comp in enumerate(components) for v in comp}
    return SccDecomposition(tuple(components), component_index)


def strongly_connected(graph: Digraph) -> bool:
    """True when a directed path joins every ordered vertex pair."""
    return scc_decomposition(graph).count == 1


def weakly_connected(graph: Digraph) -> bool:
    """True when the underlying undirected graph is connected."""
    verts = _sorted_vertices(graph)
    und = {v: set() for v in graph.vertices}
    for u, v in graph.edges:
        und[u].add(v)
        und[v].add(u)
    seen = {verts[0]}
    frontier = [verts[0]]
    while frontier:
        u = frontier.pop()
        for w in und[u]:
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    return len(seen) == len(verts)


def _weakly_connected_skipping(graph: Digraph, removed: tuple) -> bool:
    """Weak connectivity after deleting one directed edge."""
    verts = graph.vertices
    und = {v: set() for v in verts}
    for u, v in graph.edges:
        if (u, v) == removed:
            continue
        und[u].add(v)
        und[v].add(u)
    start = next(iter(verts))
    seen = {start}
    frontier = [start]
    while frontier:
        u = frontier.pop()
        for w in und[u]:
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    return len(seen) == len(verts)


def bridges(graph: Digraph) -> list[tuple]:
    """Unidirectional edges whose removal disconnects the graph, sorted.

    Remove-and-retest: slow but plain, and it doubles as the ground truth
    for the 1-edge-connected case.
    """
    _sorted_vertices(graph)
    out = []
    for u, v in sorted(graph.edges, key=lambda e: (_sort_key(e[0]), _sort_key(e[1]))):
        if (v, u) in graph.edges:
            continue
        if not _weakly_connected_skipping(graph, (u, v)):
            out.append((u, v))
    return out


def edge_connectivity(graph: Digraph) -> int | None:
    """Minimum deletions disconnecting the underlying multigraph; None for one vertex.

    Zero for a weakly disconnected graph, one exactly when a bridge exists,
    otherwise a global minimum cut computed by fixing a source and taking
    the smallest max-flow to any other vertex.
    """
    verts = _sorted_vertices(graph)
    if len(verts) == 1:
        return None
    if not weakly_connected(graph):
        return 0
    if bridges(graph):
        return 1
    index = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    base = [[0] * n for _ in range(n)]
    for u, v in graph.edges:
        base[index[u]][index[v]] += 1
        base[index[v]][index[u]] += 1
    best = None
    for t in range(1, n):
        flow = _max_flow(base, 0, t)
        if best is None or flow < best:
            best = flow
    return best


def _max_flow(capacity: list[list[int]], source: int, sink: int) -> int:
    """Edmonds-Karp on a symmetric capacity matrix (copied, then mutated)."""
    n = len(capacity)
    residual = [row[:] for row in capacity]
    flow = 0
    while True:
        parent = [-1] * n
        parent[source] = source
        queue = [source]
        while queue and parent[sink] == -1:
            u = queue.pop(0)
            row = residual[u]
            for v in range(n):
                if row[v] > 0 and parent[v] == -1:
                    parent[v] = u
                    queue.append(v)
        if parent[sink] == -1:
            return flow
        bottleneck = None
        v = sink
        while v != source:
            u = parent[v]
            cap = residual[u][v]
            bottleneck = cap if bottleneck is None else min(bottleneck, cap)
            v = u
        v = sink
        while v != source:
            u = parent[v]
            residual[u][v] -= bottleneck
            residual[v][u] += bottleneck
            v = u
        flow += bottleneck


@dataclass(frozen=True)
class Condensation:
    """Quotient of a digraph by its strong components.

    Component indices follow the topological order of the decomposition, so
    every quotient edge goes from a lower index to a higher one and the
    quotient is acyclic by construction.  `multiplicity` counts the distinct
    original edges behind each quotient edge.
    """

    components: tuple[frozenset, ...]
    graph: Digraph
    multiplicity: Mapping[tuple[int, int], int]


def condensation(graph: Digraph) -> Condensation:
    decomp = scc_decomposition(graph)
    multiplicity: dict[tuple[int, int], int] = {}
    for u, v in graph.edges:
        cu = decomp.component_index[u]
        cv = decomp.component_index[v]
        if cu != cv:
            multiplicity[(cu, cv)] = multiplicity.get((cu, cv), 0) + 1
    quotient = Digraph(frozenset(range(decomp.count)), frozenset(multiplicity))
    return Condensation(decomp.components, quotient, multiplicity)
