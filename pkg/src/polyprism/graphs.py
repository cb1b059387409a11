"""Graph construction: linear polyomino chains, strong products, standard families.

Vertex numbering is part of the contract. A chain with n squares has vertices
u_1..u_{n+1} (ids 0..n, the top rail) followed by v_1..v_{n+1} (ids n+1..2n+1,
the bottom rail). Its strong prism keeps that order for the unprimed copy and
appends the primed copy as ids 2n+2..4n+3, so the twin of vertex i is always
i + (2n+2). Matrix code relies on these blocks being contiguous.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import InvalidParameterError


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices 0..n_vertices-1."""

    n_vertices: int
    edges: frozenset[tuple[int, int]]
    labels: tuple[str, ...] = ()
    adjacency: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n_vertices < 1:
            raise InvalidParameterError("graph needs at least one vertex")
        nbrs: list[list[int]] = [[] for _ in range(self.n_vertices)]
        for e in self.edges:
            a, b = e
            if a == b:
                raise InvalidParameterError(f"self-loop at vertex {a}")
            if not (0 <= a < b < self.n_vertices):
                raise InvalidParameterError(f"edge {e} not in canonical (a<b) vertex range")
            nbrs[a].append(b)
            nbrs[b].append(a)
        if self.labels and len(self.labels) != self.n_vertices:
            raise InvalidParameterError("label count does not match vertex count")
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(s)) for s in nbrs))

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    def has_edge(self, a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in self.edges

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels else str(v)

    def is_connected(self) -> bool:
        seen = [False] * self.n_vertices
        seen[0] = True
        stack = [0]
        count = 1
        while stack:
            x = stack.pop()
            for y in self.adjacency[x]:
                if not seen[y]:
                    seen[y] = True
                    count += 1
                    stack.append(y)
        return count == self.n_vertices


def _graph(n: int, edge_list, labels=()) -> Graph:
    edges = frozenset((min(a, b), max(a, b)) for a, b in edge_list)
    if len(edges) != len(list(edge_list)):
        raise InvalidParameterError("duplicate edge in construction")
    return Graph(n, edges, tuple(labels))


def linear_polyomino(n: int) -> Graph:
    """Chain of n unit squares glued in a row: 2n+2 vertices, 3n+1 edges."""
    if n < 1:
        raise InvalidParameterError("chain length n must be >= 1")
    edges = []
    for i in range(n):
        edges.append((i, i + 1))                  # top rail u_i - u_{i+1}
        edges.append((n + 1 + i, n + 2 + i))      # bottom rail v_i - v_{i+1}
    for i in range(n + 1):
        edges.append((i, n + 1 + i))              # rung u_i - v_i
    labels = [f"u{i + 1}" for i in range(n + 1)] + [f"v{i + 1}" for i in range(n + 1)]
    return _graph(2 * n + 2, edges, labels)


def strong_product(g: Graph, h: Graph) -> Graph:
    """Strong product: (a,x)~(b,y) iff each coordinate is equal or adjacent.

    Pair (a,x) gets id a*h.n_vertices + x, so h runs fastest within each
    g-vertex block.
    """
    nh = h.n_vertices
    n = g.n_vertices * nh

    def vid(a, x):
        return a * nh + x

    edges = []
    for a in range(g.n_vertices):
        for x in range(nh):
            for y in h.adjacency[x]:
                if y > x:
                    edges.append((vid(a, x), vid(a, y)))
            for b in g.adjacency[a]:
                if b > a:
                    edges.append((vid(a, x), vid(b, x)))
                    for y in h.adjacency[x]:
                        edges.append((vid(a, x), vid(b, y)))
    labels = [f"({g.label(a)},{h.label(x)})" for a in range(g.n_vertices) for x in range(nh)]
    return _graph(n, edges, labels)


def _primed(label: str) -> str:
    return label[0] + "'" + label[1:] if label and label[0].isalpha() else label + "'"


def strong_prism(g: Graph) -> Graph:
    """Strong product of g with a single edge, laid out copy-block first.

    Vertex i of the base keeps id i; its twin in the second copy gets
    id i + g.n_vertices, so the two copies occupy contiguous index blocks.
    """
    nv = g.n_vertices
    edges = []
    for (a, b) in g.edges:
        edges.append((a, b))
        edges.append((a + nv, b + nv))
        edges.append((a, b + nv))
        edges.append((b, a + nv))
    for a in range(nv):
        edges.append((a, a + nv))
    labels = [g.label(i) for i in range(nv)] + [_primed(g.label(i)) for i in range(nv)]
    return _graph(2 * nv, edges, labels)


def strong_prism_polyomino(n: int) -> Graph:
    """Strong prism of the n-square chain: 4n+4 vertices, 14n+6 edges."""
    if n < 1:
        raise InvalidParameterError("chain length n must be >= 1")
    return strong_prism(linear_polyomino(n))


def twin_pairing(g: Graph) -> tuple[int, ...]:
    """The vertex involution i <-> i + half for a prism laid out in two blocks."""
    if g.n_vertices % 2:
        raise InvalidParameterError("twin pairing needs an even vertex count")
    half = g.n_vertices // 2
    return tuple((i + half) % g.n_vertices for i in range(g.n_vertices))


def standard_graph(kind: str, n: int) -> Graph:
    """Path, cycle, or complete graph on n vertices with natural vertex order."""
    if n < 1:
        raise InvalidParameterError("n must be >= 1")
    if kind == "path":
        return _graph(n, [(i, i + 1) for i in range(n - 1)])
    if kind == "cycle":
        if n < 3:
            raise InvalidParameterError("a cycle needs n >= 3")
        return _graph(n, [(i, (i + 1) % n) for i in range(n)])
    if kind == "complete":
        return _graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    raise InvalidParameterError(f"unknown graph kind {kind!r}")


def to_dot(g: Graph, name: str = "G") -> str:
    """Render as an undirected DOT graph with vertex labels."""
    lines = [f"graph {name} {{"]
    for v in range(g.n_vertices):
        lines.append(f'  {v} [label="{g.label(v)}"];')
    for a, b in sorted(g.edges):
        lines.append(f"  {a} -- {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(g: Graph) -> str:
    """Render as JSON with nodes (id, label) and edges arrays."""
    payload = {
        "nodes": [{"id": v, "label": g.label(v)} for v in range(g.n_vertices)],
        "edges": [[a, b] for a, b in sorted(g.edges)],
    }
    return json.dumps(payload, indent=2) + "\n"
