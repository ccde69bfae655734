"""Graph-topology engine: blocks, Euler bounds, closed-form oracles for
complete and complete bipartite graphs, planarity, and exact genus /
crosscap computation via embedding search with certificates.

Conventions: the crosscap number of a planar graph is 0.  A lower-bound
certificate records how the bound was proved (``euler_bound``,
``formula_oracle``, ``subgraph_bound``, or ``exhaustive_search``); an
upper-bound certificate carries a concrete embedding and its face trace.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import ceil, inf

import networkx as nx

from .embed import (Budget, FaceTrace, RotationSystem, SignedRotationSystem,
                    search_embedding, trace_faces)
from .errors import Disconnected, InexactInput, InvalidParameter
from .powergraph import Graph, induced


# ---------------------------------------------------------------------------
# closed-form oracles
# ---------------------------------------------------------------------------

def kn_genus(n: int) -> int:
    """Orientable genus of the complete graph on n vertices."""
    if n < 3:
        return 0
    return ceil((n - 3) * (n - 4) / 12)


def kn_crosscap(n: int) -> int:
    """Nonorientable genus of K_n; the n = 7 exception is hard-coded."""
    if n < 3:
        return 0
    if n == 7:
        return 3
    return ceil((n - 3) * (n - 4) / 6)


def kmn_genus(m: int, n: int) -> int:
    """Orientable genus of the complete bipartite graph K_{m,n}."""
    if m < 2 or n < 2:
        return 0
    return ceil((m - 2) * (n - 2) / 4)


def kmn_crosscap(m: int, n: int) -> int:
    """Nonorientable genus of K_{m,n}."""
    if m < 2 or n < 2:
        return 0
    return ceil((m - 2) * (n - 2) / 2)


# ---------------------------------------------------------------------------
# elementary invariants
# ---------------------------------------------------------------------------

def girth(graph: Graph):
    """Length of a shortest cycle; math.inf for forests."""
    adj = graph.adjacency()
    best = inf
    for src in range(graph.n):
        dist = {src: 0}
        parent = {src: -1}
        frontier = [src]
        while frontier:
            nxt = []
            for v in frontier:
                for w in adj[v]:
                    if w not in dist:
                        dist[w] = dist[v] + 1
                        parent[w] = v
                        nxt.append(w)
                    elif w != parent[v]:
                        # non-tree edge closes a cycle through src
                        best = min(best, dist[v] + dist[w] + 1)
            if frontier and 2 * dist[frontier[0]] + 1 >= best:
                break
            frontier = nxt
    return best


def clique_number(graph: Graph) -> int:
    """Maximum clique size, by branch and bound with a greedy coloring
    bound (Tomita-style)."""
    if graph.n == 0:
        return 0
    adj = graph.adjacency()
    best = 1

    def expand(clique_size: int, cand: list[int]):
        nonlocal best
        while cand:
            # greedy coloring of the candidates: color count bounds the
            # largest clique inside them
            color: dict[int, int] = {}
            order: list[int] = []
            for v in cand:
                used = {color[w] for w in adj[v] if w in color}
                c = 0
                while c in used:
                    c += 1
                color[v] = c
                order.append(v)
            order.sort(key=lambda v: color[v])
            v = order[-1]
            if clique_size + color[v] + 1 <= best:
                return
            cand = [w for w in cand if w != v]
            if clique_size + 1 > best:
                best = clique_size + 1
            expand(clique_size + 1, [w for w in cand if w in adj[v]])

    expand(0, list(range(graph.n)))
    return best


def euler_lower_bound(graph: Graph, surface: str = "orientable") -> int:
    """Smallest genus consistent with V - E + f = 2 - 2g (resp. 2 - k) and
    the face bound f <= floor(2E / girth).  Forests give 0."""
    if surface not in ("orientable", "nonorientable"):
        raise InvalidParameter(f"unknown surface {surface!r}")
    g = girth(graph)
    if g == inf:
        return 0
    eg = 2 - graph.n + graph.m - (2 * graph.m) // int(g)
    if eg <= 0:
        return 0
    return ceil(eg / 2) if surface == "orientable" else eg


# ---------------------------------------------------------------------------
# blocks and planarity
# ---------------------------------------------------------------------------

def blocks(graph: Graph) -> list[Graph]:
    """Biconnected components; every edge lands in exactly one block.
    Vertex labels carry over.  Deterministic order."""
    g = graph.to_networkx()
    if graph.n and not nx.is_connected(g):
        raise Disconnected("blocks are defined for connected graphs")
    comps = []
    for comp in nx.biconnected_component_edges(g):
        verts = sorted({v for e in comp for v in e})
        comps.append(induced(graph, verts) if len(verts) > 2
                     else _edge_block(graph, comp))
    comps.sort(key=lambda b: (b.labels, b.edges))
    return comps


def _edge_block(graph: Graph, comp) -> Graph:
    (u, v), = comp
    u, v = min(u, v), max(u, v)
    return Graph(2, ((0, 1),), (graph.labels[u], graph.labels[v]))


@dataclass(frozen=True)
class PlanarityResult:
    """Planarity decision with evidence: a planar rotation system, or a
    subgraph witnessing nonplanarity (a K5 or K3,3 subdivision)."""

    planar: bool
    rotation: RotationSystem | None = None
    witness: Graph | None = None

    def __bool__(self) -> bool:
        return self.planar


def is_planar(graph: Graph) -> PlanarityResult:
    g = graph.to_networkx()
    ok, cert = nx.check_planarity(g, counterexample=True)
    if not ok:
        verts = sorted(cert.nodes)
        edges = tuple((min(u, v), max(u, v)) for u, v in cert.edges())
        witness = induced(Graph(graph.n, edges, graph.labels), verts)
        return PlanarityResult(False, witness=witness)
    eindex = {frozenset(e): i for i, e in enumerate(graph.edges)}
    rots = []
    data = cert.get_data()
    for v in range(graph.n):
        darts = []
        for w in data.get(v, []):
            e = eindex[frozenset((v, w))]
            darts.append(2 * e if graph.edges[e][0] == v else 2 * e + 1)
        rots.append(tuple(darts))
    rs = RotationSystem(tuple(rots))
    if graph.m and nx.is_connected(g):
        # independent cross-check with our own face tracer
        tr = trace_faces(graph, rs)
        assert tr.euler_genus == 0 and tr.orientable
    return PlanarityResult(True, rotation=rs)


# ---------------------------------------------------------------------------
# exact genus with certificates
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GenusResult:
    """Exact value or bounds for a genus quantity, with certificates.

    kind 'exact' means lower == upper with both certificates present;
    'bounds' carries whatever was proved before the budget ran out.
    """

    kind: str  # 'exact' | 'bounds'
    lower: int
    upper: int
    lower_certificate: dict = field(default_factory=dict)
    upper_certificate: dict = field(default_factory=dict)

    def __post_init__(self):
        assert self.kind in ("exact", "bounds")
        assert self.lower <= self.upper
        if self.kind == "exact":
            assert self.lower == self.upper

    @property
    def value(self) -> int:
        if self.kind != "exact":
            raise InexactInput(f"bounds [{self.lower}, {self.upper}] are not exact")
        return self.lower


def _embedding_certificate(rs, tr: FaceTrace) -> dict:
    return {"method": "embedding", "rotation": rs, "trace": tr}


def _planar_result(graph: Graph, pl: PlanarityResult) -> GenusResult:
    upper = {"method": "embedding", "rotation": pl.rotation, "trace": None}
    if graph.m and pl.rotation is not None:
        gnx = graph.to_networkx()
        if nx.is_connected(gnx):
            upper["trace"] = trace_faces(graph, pl.rotation)
    return GenusResult("exact", 0, 0,
                       {"method": "euler_bound", "value": 0},
                       upper)


def genus_exact(graph: Graph, budget: Budget | None = None) -> GenusResult:
    """Exact orientable genus by level-by-level search; degrades to bounds
    when the budget runs out at some level (never silently wrong)."""
    budget = budget or Budget()
    pl = is_planar(graph)
    if pl.planar:
        return _planar_result(graph, pl)
    bound = euler_lower_bound(graph, "orientable")
    lower = max(bound, 1)
    if bound >= 1:
        lower_cert = {"method": "euler_bound", "value": bound}
    else:
        lower_cert = {"method": "subgraph_bound", "value": 1,
                      "detail": "nonplanar", "witness": pl.witness}
    level = lower
    while True:
        out = search_embedding(graph, 2 * level, signed=False, budget=budget)
        if out.status == "found":
            return GenusResult("exact", level, level, lower_cert,
                               _embedding_certificate(out.embedding, out.trace))
        if out.status == "exhausted":
            level += 1
            lower_cert = {"method": "exhaustive_search", "value": level,
                          "budget": budget, "completed": True,
                          "nodes": out.nodes}
            continue
        # budget ran out: report bounds with a cheap upper bound
        upper_rs, upper_tr = _fallback_orientable(graph)
        return GenusResult("bounds", level, upper_tr.genus, lower_cert,
                           _embedding_certificate(upper_rs, upper_tr))


def crosscap_exact(graph: Graph, budget: Budget | None = None,
                   known_lower: tuple[int, str] | None = None) -> GenusResult:
    """Exact nonorientable genus (crosscap number); planar graphs give 0.

    known_lower = (value, provenance) injects an externally proved lower
    bound, recorded as a subgraph_bound certificate.
    """
    budget = budget or Budget()
    pl = is_planar(graph)
    if pl.planar:
        return _planar_result(graph, pl)
    bound = euler_lower_bound(graph, "nonorientable")
    lower = max(bound, 1)
    if bound >= 1:
        lower_cert = {"method": "euler_bound", "value": bound}
    else:
        lower_cert = {"method": "subgraph_bound", "value": 1,
                      "detail": "nonplanar", "witness": pl.witness}
    if known_lower is not None and known_lower[0] > lower:
        lower = known_lower[0]
        lower_cert = {"method": "subgraph_bound", "value": lower,
                      "detail": known_lower[1]}
    level = lower
    while True:
        out = search_embedding(graph, level, signed=True, budget=budget,
                               require_nonorientable=True)
        if out.status == "found":
            return GenusResult("exact", level, level, lower_cert,
                               _embedding_certificate(out.embedding, out.trace))
        if out.status == "exhausted":
            level += 1
            lower_cert = {"method": "exhaustive_search", "value": level,
                          "budget": budget, "completed": True,
                          "nodes": out.nodes}
            continue
        upper_rs, upper_tr = _fallback_nonorientable(graph)
        return GenusResult("bounds", level, upper_tr.crosscap, lower_cert,
                           _embedding_certificate(upper_rs, upper_tr))


def _fallback_orientable(graph: Graph):
    """Any full orientable embedding: a quick upper bound."""
    from .embed import rotation_from_adjacency
    rs = rotation_from_adjacency(graph)
    return rs, trace_faces(graph, rs)


def _fallback_nonorientable(graph: Graph):
    """Any full nonorientable embedding: flip one non-bridge edge of an
    arbitrary orientable embedding; its crosscap is at most 2g + 2."""
    from .embed import rotation_from_adjacency
    rs = rotation_from_adjacency(graph)
    gnx = graph.to_networkx()
    bridges = {frozenset(e) for e in nx.bridges(gnx)}
    for e, edge in enumerate(graph.edges):
        if frozenset(edge) not in bridges:
            signs = tuple(-1 if i == e else 1 for i in range(graph.m))
            srs = SignedRotationSystem(rs.rotations, signs)
            tr = trace_faces(graph, srs)
            assert not tr.orientable
            return srs, tr
    raise Disconnected("graph has no cycle; crosscap fallback undefined")


# ---------------------------------------------------------------------------
# block composition
# ---------------------------------------------------------------------------

def compose_blocks(results: list[tuple[GenusResult, GenusResult]]
                   ) -> tuple[GenusResult, GenusResult]:
    """Genus of a connected graph from exact per-block (orientable,
    nonorientable) results.

    Orientable genus is additive over blocks.  The nonorientable genus is
    1 - n + sum(crosscaps) when every block satisfies crosscap = 2*genus + 1,
    and otherwise 2n - sum(mu) with mu = max(2 - 2*genus, 2 - crosscap).
    """
    if not results:
        raise InexactInput("no blocks given")
    for og, ng in results:
        if og.kind != "exact" or ng.kind != "exact":
            raise InexactInput("block composition requires exact per-block results")
    n = len(results)
    gs = [og.value for og, _ in results]
    ks = [ng.value for _, ng in results]
    total_g = sum(gs)
    if all(k == 2 * g + 1 for g, k in zip(gs, ks)):
        total_k = 1 - n + sum(ks)
        rule = "all blocks have crosscap = 2*genus + 1"
    else:
        total_k = 2 * n - sum(max(2 - 2 * g, 2 - k) for g, k in zip(gs, ks))
        rule = "general block formula via mu"
    cert_g = {"method": "formula_oracle", "detail": "block additivity",
              "blocks": gs}
    cert_k = {"method": "formula_oracle", "detail": rule, "blocks": ks}
    return (GenusResult("exact", total_g, total_g, cert_g, cert_g),
            GenusResult("exact", total_k, total_k, cert_k, cert_k))


# ---------------------------------------------------------------------------
# genus-invariant simplification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SimplifyResult:
    graph: Graph
    steps: tuple[str, ...]


def simplify(graph: Graph) -> SimplifyResult:
    """Iteratively delete degree-0/1 vertices and smooth degree-2 vertices
    (dropping a duplicate edge when smoothing closes a triangle); both
    operations preserve orientable and nonorientable genus."""
    labels = list(graph.labels)
    edges = {frozenset(e) for e in graph.edges}
    alive = set(range(graph.n))
    steps: list[str] = []
    changed = True
    while changed:
        changed = False
        for v in sorted(alive):
            nbrs = sorted({w for e in edges if v in e for w in e if w != v})
            if len(nbrs) == 0:
                alive.discard(v)
                steps.append(f"drop isolated {labels[v]}")
                changed = True
            elif len(nbrs) == 1:
                alive.discard(v)
                edges.discard(frozenset((v, nbrs[0])))
                steps.append(f"drop leaf {labels[v]}")
                changed = True
            elif len(nbrs) == 2:
                u, w = nbrs
                alive.discard(v)
                edges.discard(frozenset((v, u)))
                edges.discard(frozenset((v, w)))
                if frozenset((u, w)) in edges:
                    steps.append(f"smooth {labels[v]} (duplicate edge dropped)")
                else:
                    edges.add(frozenset((u, w)))
                    steps.append(f"smooth {labels[v]}")
                changed = True
    verts = sorted(alive)
    remap = {v: i for i, v in enumerate(verts)}
    out = Graph(len(verts),
                tuple(sorted((remap[min(e)], remap[max(e)]) for e in edges)),
                tuple(labels[v] for v in verts))
    return SimplifyResult(out, tuple(steps))
