"""Simple digraphs built from words, with deterministic DOT and JSON forms.

The graph of a word has the word's alphabet as vertices and one directed
edge for every non-identical adjacent symbol pair; repeated pairs collapse
because the graph is simple, and identical pairs ("aa") contribute nothing.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Hashable, Mapping

from .words import Word, symbol_name


class InvalidGraphError(ValueError):
    """Self-loop, unknown endpoint, or malformed serialized form."""


@dataclass(frozen=True)
class Digraph:
    """An immutable simple digraph without self-loops.

    Vertices carry arbitrary hashable labels (symbol ids for word graphs,
    strings for graphs read from JSON).
    """

    vertices: frozenset
    edges: frozenset

    def __post_init__(self) -> None:
        vertices = frozenset(self.vertices)
        edges = frozenset(tuple(e) for e in self.edges)
        for e in edges:
            if len(e) != 2:
                raise InvalidGraphError(f"edge {e!r} is not a pair")
            u, v = e
            if u == v:
                raise InvalidGraphError(f"self-loop at {u!r}")
            if u not in vertices or v not in vertices:
                raise InvalidGraphError(f"edge {e!r} uses an unknown vertex")
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", edges)

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.edges)


# A word graph is just a Digraph whose vertices are the word's symbol ids.
WordGraph = Digraph


def build_graph(word: Word) -> Digraph:
    """Graph of a word: vertices are its symbols, edges its adjacent distinct pairs."""
    edges = {
        (a, b) for a, b in zip(word.letters, word.letters[1:]) if a != b
    }
    return Digraph(frozenset(range(word.alphabet_size)), frozenset(edges))


def relabel(graph: Digraph, mapping: Mapping) -> Digraph:
    """Apply an injective vertex relabeling."""
    image = [mapping[v] for v in graph.vertices]
    if len(set(image)) != len(image):
        raise InvalidGraphError("relabeling is not injective")
    return Digraph(
        frozenset(image),
        frozenset((mapping[u], mapping[v]) for u, v in graph.edges),
    )


def letter_labeled(graph: Digraph) -> Digraph:
    """Relabel a word graph's symbol ids with their presentation text."""
    n = graph.vertex_count
    if graph.vertices != frozenset(range(n)):
        raise InvalidGraphError("expected dense integer symbol ids")
    return relabel(graph, {v: symbol_name(v, n) for v in graph.vertices})


def _sort_key(label: Hashable):
    return (type(label).__name__, label)


def _dot_id(label) -> str:
    text = str(label)
    if text.isalnum():
        return text
    return '"' + text.replace('"', '\\"') + '"'


def to_dot(graph: Digraph) -> str:
    """Render as a DOT digraph block, one statement per line, sorted."""
    lines = ["digraph {"]
    for v in sorted(graph.vertices, key=_sort_key):
        lines.append(f"  {_dot_id(v)};")
    for u, v in sorted(graph.edges, key=lambda e: (_sort_key(e[0]), _sort_key(e[1]))):
        lines.append(f"  {_dot_id(u)} -> {_dot_id(v)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(graph: Digraph) -> str:
    """Render as the compact JSON interchange form with sorted string labels.

    Round-trips exactly through from_json when the labels are strings.
    """
    vertices = sorted(str(v) for v in graph.vertices)
    if len(set(vertices)) != len(vertices):
        raise InvalidGraphError("labels collide when rendered as strings")
    edges = sorted([str(u), str(v)] for u, v in graph.edges)
    return json.dumps({"vertices": vertices, "edges": edges}, separators=(",", ":"))


def from_json(text: str) -> Digraph:
    """Parse the JSON interchange form, rejecting malformed documents."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidGraphError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict) or set(doc) != {"vertices", "edges"}:
        raise InvalidGraphError('expected an object with "vertices" and "edges"')
    vertices = doc["vertices"]
    edges = doc["edges"]
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise InvalidGraphError("vertices must be an array of strings")
    if len(set(vertices)) != len(vertices):
        raise InvalidGraphError("duplicate vertex")
    if not isinstance(edges, list):
        raise InvalidGraphError("edges must be an array")
    seen: set[tuple[str, str]] = set()
    for e in edges:
        if (
            not isinstance(e, list)
            or len(e) != 2
            or not all(isinstance(x, str) for x in e)
        ):
            raise InvalidGraphError(f"edge {e!r} is not a pair of strings")
        pair = (e[0], e[1])
        if pair in seen:
            raise InvalidGraphError(f"duplicate edge {e!r}")
        seen.add(pair)
    return Digraph(frozenset(vertices), frozenset(seen))
