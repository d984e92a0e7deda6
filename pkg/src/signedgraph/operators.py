"""Line graphs and total graphs of oriented signed graphs.

Both operators come in two flavors that differ only by a global sign
convention, selected by the ``variant`` argument:

* ``"C"``: adjacent edges e, f at vertex v get sign -eta(v,e)*eta(v,f),
  so the line graph of an all-positive graph is the all-positive line
  graph of unsigned graph theory.  Matrix form: A = 2I - B.T @ B.
* ``"S"``: sign +eta(v,e)*eta(v,f); matrix form A = B.T @ B - 2I.

Each variant has a matrix construction and a purely combinatorial one;
they agree edge for edge.  The total graph glues the graph, its line
graph and vertex-edge incidences into one signed graph on n + m
vertices: roots keep ids 0..n-1 and edge id e becomes vertex n + e.
"""

import numpy as np

from .core import Edge, GraphError, SignedGraph
from .orientation import Orientation, adjacency_matrix, incidence_matrix

VARIANTS = ("C", "S")


def _check_variant(variant: str) -> str:
    if variant not in VARIANTS:
        raise GraphError("variant must be 'C' or 'S', got %r" % (variant,))
    return variant


def from_adjacency(A) -> SignedGraph:
    """Decode a symmetric {-1,0,+1} matrix with zero diagonal."""
    M = np.asarray(A)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise GraphError("adjacency matrix must be square")
    n = M.shape[0]
    if not np.array_equal(M, M.T):
        raise GraphError("adjacency matrix must be symmetric")
    edges = []
    for u in range(n):
        if M[u, u] != 0:
            raise GraphError("adjacency diagonal must vanish at %d" % u)
        for v in range(u + 1, n):
            s = int(M[u, v])
            if s == 0:
                continue
            if s not in (1, -1):
                raise GraphError("entry (%d,%d) is %r, not a sign" % (u, v, s))
            edges.append(Edge(u, v, s))
    return SignedGraph(n, tuple(edges))


def line_graph_matrix(g: SignedGraph, eta: Orientation, variant: str) -> SignedGraph:
    """Line graph via the incidence matrix identity."""
    _check_variant(variant)
    eta.require_binding(g)
    B = incidence_matrix(g, eta)
    G = B.T @ B
    if variant == "C":
        A = 2 * np.eye(g.m, dtype=np.int64) - G
    else:
        A = G - 2 * np.eye(g.m, dtype=np.int64)
    return from_adjacency(A)


def line_graph_combinatorial(g: SignedGraph, eta: Orientation, variant: str) -> SignedGraph:
    """Line graph built edge pair by edge pair from incidence signs."""
    _check_variant(variant)
    eta.require_binding(g)
    flip = -1 if variant == "C" else 1
    edges = {}
    for v in range(g.n):
        incident = [eid for _w, eid in g.incidences[v]]
        for i in range(len(incident)):
            for j in range(i + 1, len(incident)):
                e, f = incident[i], incident[j]
                if e > f:
                    e, f = f, e
                edges[(e, f)] = flip * eta.eta(g, v, e) * eta.eta(g, v, f)
    out = [Edge(e, f, s) for (e, f), s in sorted(edges.items())]
    return SignedGraph(g.m, tuple(out))


def line_orientation(g: SignedGraph, eta: Orientation):
    """Orientation of the C-variant line graph inherited from eta.

    The line edge ef meeting at vertex v takes incidence signs
    (eta(v,e), eta(v,f)); with the C sign rule this satisfies the
    compatibility condition.  Returns (line graph, orientation).
    """
    lg = line_graph_combinatorial(g, eta, "C")
    pairs = []
    for e, f, _s in lg.edges:
        eu, ev = g.edges[e].u, g.edges[e].v
        fu, fv = g.edges[f].u, g.edges[f].v
        common = {eu, ev} & {fu, fv}
        if len(common) != 1:
            raise GraphError(
                "edges %d and %d share %d endpoints" % (e, f, len(common))
            )  # pragma: no cover - simple graphs meet in one vertex
        v = common.pop()
        pairs.append((eta.eta(g, v, e), eta.eta(g, v, f)))
    return lg, Orientation.from_pairs(lg, pairs)


def total_graph(g: SignedGraph, eta: Orientation, variant: str) -> SignedGraph:
    """Total graph from the block matrix [[A, B], [B.T, A_L]]."""
    _check_variant(variant)
    eta.require_binding(g)
    A = adjacency_matrix(g)
    B = incidence_matrix(g, eta)
    AL = adjacency_matrix(line_graph_matrix(g, eta, variant))
    top = np.hstack([A, B])
    bottom = np.hstack([B.T, AL])
    return from_adjacency(np.vstack([top, bottom]))


def total_graph_combinatorial(g: SignedGraph, eta: Orientation, variant: str) -> SignedGraph:
    """Total graph assembled directly from its three edge families."""
    _check_variant(variant)
    eta.require_binding(g)
    n = g.n
    edges = [(e.u, e.v, e.sign) for e in g.edges]
    for eid, e in enumerate(g.edges):
        edges.append((e.u, n + eid, eta.pairs[eid][0]))
        edges.append((e.v, n + eid, eta.pairs[eid][1]))
    lg = line_graph_combinatorial(g, eta, variant)
    for e in lg.edges:
        edges.append((n + e.u, n + e.v, e.sign))
    edges.sort(key=lambda t: (t[0], t[1]))
    return SignedGraph(n + g.m, tuple(Edge(u, v, s) for u, v, s in edges))
