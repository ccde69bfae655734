"""Undirected power graphs, induced subgraphs, and graph import/export."""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from .errors import InvalidVertex, NoOrderSixSubgroup, ParseError
from .groups import FiniteGroup, cyclic_subgroup, cyclic_subgroups_of_order


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph with labeled vertices.

    Edges are stored as a sorted tuple of index pairs (u < v) so iteration
    order is deterministic across runs.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        norm = sorted({(min(u, v), max(u, v)) for u, v in self.edges})
        if any(u == v for u, v in norm):
            raise InvalidVertex("loops are not allowed")
        if norm and not (0 <= norm[0][0] and norm[-1][1] < self.n):
            raise InvalidVertex("edge endpoint out of range")
        object.__setattr__(self, "edges", tuple(norm))
        if not self.labels:
            object.__setattr__(self, "labels", tuple(str(i) for i in range(self.n)))
        elif len(self.labels) != self.n:
            raise InvalidVertex("label count does not match vertex count")

    @property
    def m(self) -> int:
        return len(self.edges)

    def adjacency(self) -> list[set[int]]:
        adj = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def degree(self, v: int) -> int:
        return sum(1 for u, w in self.edges if v in (u, w))

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in set(self.edges)

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


def complete_bipartite(m: int, n: int) -> Graph:
    edges = tuple((i, m + j) for i in range(m) for j in range(n))
    labels = tuple(f"a{i}" for i in range(m)) + tuple(f"b{j}" for j in range(n))
    return Graph(m + n, edges, labels)


def power_graph(g: FiniteGroup) -> Graph:
    """Vertices are group elements; x ~ y iff x != y and x in <y> or y in <x>."""
    n = g.order
    gen_sets = [set(cyclic_subgroup(g, x).members) for x in range(n)]
    edges = []
    for x in range(n):
        for y in range(x + 1, n):
            if x in gen_sets[y] or y in gen_sets[x]:
                edges.append((x, y))
    labels = tuple(_element_label(g, x) for x in range(n))
    return Graph(n, tuple(edges), labels)


def _element_label(g: FiniteGroup, x: int) -> str:
    if x == 0:
        return "e"
    return f"g{x}"


def induced(graph: Graph, vertices) -> Graph:
    """Induced subgraph; vertex labels are preserved."""
    verts = sorted(set(vertices))
    if verts and not (0 <= verts[0] and verts[-1] < graph.n):
        raise InvalidVertex("vertex out of range")
    remap = {v: i for i, v in enumerate(verts)}
    keep = set(verts)
    edges = tuple((remap[u], remap[v]) for u, v in graph.edges if u in keep and v in keep)
    labels = tuple(graph.labels[v] for v in verts)
    return Graph(len(verts), edges, labels)


def hexagon_union_graph(g: FiniteGroup) -> Graph:
    """Induced subgraph of the power graph on the union of all cyclic
    subgroups of order 6."""
    subs = cyclic_subgroups_of_order(g, 6)
    if not subs:
        raise NoOrderSixSubgroup("group has no cyclic subgroup of order 6")
    union: set[int] = set()
    for s in subs:
        union |= set(s.members)
    return induced(power_graph(g), union)


# ---------------------------------------------------------------------------
# export / import
# ---------------------------------------------------------------------------

def to_edge_list(graph: Graph) -> str:
    """Flat edge-list format: header 'n m', then one 'u v' line per edge."""
    lines = [f"{graph.n} {graph.m}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if not lines:
        raise ParseError("empty edge list")
    try:
        n, m = (int(v) for v in lines[0].split())
    except ValueError:
        raise ParseError("expected 'n m' header") from None
    if len(lines) != m + 1:
        raise ParseError(f"expected {m} edges, got {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        try:
            u, v = (int(x) for x in ln.split())
        except ValueError:
            raise ParseError(f"bad edge line: {ln!r}") from None
        edges.append((u, v))
    return Graph(n, tuple(edges))


def to_dot(graph: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(graph.n):
        lines.append(f'  {v} [label="{graph.labels[v]}"];')
    for u, v in graph.edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
