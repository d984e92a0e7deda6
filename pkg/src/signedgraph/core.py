"""Signed graph data model, generators and basic invariants.

A signed graph is a simple undirected graph together with a sign in
{+1, -1} on every edge.  Vertices are integers 0..n-1 and edges keep the
position they were given at construction time: edge ids index into
``SignedGraph.edges`` and stay stable under sign flips, which matters
because line and total graph constructions reuse them as vertex ids.
"""

import hashlib
import itertools
import random
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple, Optional, Sequence, Union


class GraphError(ValueError):
    """Raised when a graph, orientation or operation argument is invalid."""


class Edge(NamedTuple):
    """Undirected signed edge with endpoints normalized to u < v."""

    u: int
    v: int
    sign: int


class TriangleCensus(NamedTuple):
    """Counts of positive and negative triangles."""

    positive: int
    negative: int

    @property
    def total(self) -> int:
        return self.positive + self.negative


EdgeInput = Union[Edge, Sequence[int]]


@dataclass(frozen=True)
class SignedGraph:
    """Immutable signed graph on vertices 0..n-1.

    Use :func:`new_graph` to build one from loose edge tuples; the
    constructor itself insists on normalized, validated edges.
    """

    n: int
    edges: tuple

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("vertex count must be nonnegative, got %r" % (self.n,))
        seen = set()
        for idx, e in enumerate(self.edges):
            if not isinstance(e, Edge):
                raise GraphError("edge %d is not an Edge: %r" % (idx, e))
            if not (0 <= e.u < self.n and 0 <= e.v < self.n):
                raise GraphError("edge %d endpoints out of range: %r" % (idx, e))
            if e.u == e.v:
                raise GraphError("edge %d is a loop: %r" % (idx, e))
            if e.u > e.v:
                raise GraphError("edge %d is not normalized (u < v): %r" % (idx, e))
            if e.sign not in (1, -1):
                raise GraphError("edge %d has sign outside {+1,-1}: %r" % (idx, e))
            key = (e.u, e.v)
            if key in seen:
                raise GraphError("parallel edge %d: %r" % (idx, e))
            seen.add(key)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def incidences(self) -> tuple:
        """Per-vertex tuple of (neighbor, edge id) pairs, in edge order."""
        inc = [[] for _ in range(self.n)]
        for eid, (u, v, _s) in enumerate(self.edges):
            inc[u].append((v, eid))
            inc[v].append((u, eid))
        return tuple(tuple(x) for x in inc)

    @cached_property
    def _sign_index(self) -> dict:
        return {(e.u, e.v): e.sign for e in self.edges}

    @cached_property
    def checksum(self) -> str:
        """Short content hash used to bind orientations to a graph."""
        blob = "%d;" % self.n + ";".join(
            "%d,%d,%d" % (e.u, e.v, e.sign) for e in self.edges
        )
        return hashlib.sha256(blob.encode("ascii")).hexdigest()[:12]

    def degree(self, v: int) -> int:
        return len(self.incidences[v])

    def degrees(self) -> tuple:
        return tuple(len(x) for x in self.incidences)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._sign_index

    def sign_of(self, u: int, v: int) -> int:
        """Sign of the edge uv; raises GraphError if absent."""
        try:
            return self._sign_index[(min(u, v), max(u, v))]
        except KeyError:
            raise GraphError("no edge between %d and %d" % (u, v)) from None

    def neighbors(self, v: int) -> tuple:
        return tuple(w for w, _e in self.incidences[v])

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.edges)


def new_graph(n: int, edges: Iterable[EdgeInput]) -> SignedGraph:
    """Build a SignedGraph, normalizing each edge to u < v.

    Signs may be given as +1/-1 or as the characters '+'/'-'.
    """
    normalized = []
    for item in edges:
        try:
            u, v, s = item
        except (TypeError, ValueError):
            raise GraphError("edge must be a (u, v, sign) triple: %r" % (item,))
        if u > v:
            u, v = v, u
        if s == "+":
            s = 1
        elif s == "-":
            s = -1
        normalized.append(Edge(u, v, s))
    return SignedGraph(n, tuple(normalized))


def negate(g: SignedGraph) -> SignedGraph:
    """Flip every edge sign."""
    return SignedGraph(g.n, tuple(Edge(e.u, e.v, -e.sign) for e in g.edges))


def underlying(g: SignedGraph) -> SignedGraph:
    """Forget the signature: same edges, all positive."""
    return SignedGraph(g.n, tuple(Edge(e.u, e.v, 1) for e in g.edges))


def _expand_signs(signs, m: int) -> list:
    """Resolve a sign pattern to a list of m values in {+1,-1}.

    Accepts a string of '+'/'-' characters repeated cyclically to cover
    all m edges (so "-" is all-negative and "+-" alternates), a single
    int, or a sequence of exactly m ints.
    """
    if isinstance(signs, str):
        if m > 0 and not signs:
            raise GraphError("empty sign pattern")
        out = []
        for i in range(m):
            ch = signs[i % len(signs)]
            if ch == "+":
                out.append(1)
            elif ch == "-":
                out.append(-1)
            else:
                raise GraphError("bad sign character %r" % ch)
        return out
    if isinstance(signs, int):
        if signs not in (1, -1):
            raise GraphError("sign must be +1 or -1, got %r" % (signs,))
        return [signs] * m
    out = list(signs)
    if len(out) != m:
        raise GraphError("expected %d signs, got %d" % (m, len(out)))
    return out


def path_graph(n: int, signs="+") -> SignedGraph:
    """Path on n vertices with edges (i, i+1)."""
    if n < 1:
        raise GraphError("path needs at least one vertex")
    ss = _expand_signs(signs, n - 1)
    return new_graph(n, [(i, i + 1, ss[i]) for i in range(n - 1)])


def cycle_graph(n: int, signs="+") -> SignedGraph:
    """Cycle on n >= 3 vertices; the closing edge is (0, n-1)."""
    if n < 3:
        raise GraphError("cycle needs at least three vertices")
    ss = _expand_signs(signs, n)
    edges = [(i, i + 1, ss[i]) for i in range(n - 1)]
    edges.append((0, n - 1, ss[n - 1]))
    return new_graph(n, edges)


def complete_graph(n: int, signs="+") -> SignedGraph:
    """Complete graph K_n, edges in lexicographic order."""
    if n < 1:
        raise GraphError("complete graph needs at least one vertex")
    pairs = list(itertools.combinations(range(n), 2))
    ss = _expand_signs(signs, len(pairs))
    return new_graph(n, [(u, v, s) for (u, v), s in zip(pairs, ss)])


def star_graph(leaves: int, signs="+") -> SignedGraph:
    """Star K_{1,leaves} with center 0."""
    if leaves < 0:
        raise GraphError("star needs a nonnegative leaf count")
    ss = _expand_signs(signs, leaves)
    return new_graph(leaves + 1, [(0, i + 1, ss[i]) for i in range(leaves)])


def random_graph(n: int, edge_prob: float, neg_prob: float, seed) -> SignedGraph:
    """G(n, p) with independent negative signs, deterministic in the seed.

    Pairs are visited in lexicographic order, one draw for presence and
    (if present) one for the sign, so identical seeds give identical
    graphs across runs and platforms.
    """
    if not (0.0 <= edge_prob <= 1.0 and 0.0 <= neg_prob <= 1.0):
        raise GraphError("probabilities must lie in [0, 1]")
    rng = random.Random(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < edge_prob:
                sign = -1 if rng.random() < neg_prob else 1
                edges.append((u, v, sign))
    return new_graph(n, edges)


def disjoint_union(graphs: Sequence[SignedGraph]) -> SignedGraph:
    """Disjoint union; vertex ids of later summands are shifted up."""
    offset = 0
    edges = []
    for g in graphs:
        for e in g.edges:
            edges.append((e.u + offset, e.v + offset, e.sign))
        offset += g.n
    return new_graph(offset, edges)


def components(g: SignedGraph) -> list:
    """Connected components as sorted vertex lists, ordered by minimum."""
    seen = [False] * g.n
    out = []
    for root in range(g.n):
        if seen[root]:
            continue
        comp = [root]
        seen[root] = True
        queue = [root]
        while queue:
            x = queue.pop()
            for y, _e in g.incidences[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    queue.append(y)
        comp.sort()
        out.append(comp)
    return out


def regular_degree(g: SignedGraph) -> Optional[int]:
    """Common degree if the graph is regular, else None."""
    degs = set(g.degrees())
    if len(degs) == 1:
        return degs.pop()
    return None


def triangle_census(g: SignedGraph) -> TriangleCensus:
    """Count positive and negative triangles by sign product."""
    nbr = [set() for _ in range(g.n)]
    for e in g.edges:
        nbr[e.u].add(e.v)
        nbr[e.v].add(e.u)
    pos = neg = 0
    for u, v, s in g.edges:
        for w in nbr[u] & nbr[v]:
            if w > v:
                prod = s * g.sign_of(u, w) * g.sign_of(v, w)
                if prod > 0:
                    pos += 1
                else:
                    neg += 1
    return TriangleCensus(pos, neg)


def _min_cover_size(edges: list, chosen: int, best: int) -> int:
    """Branch and bound on vertex cover size for the given edge list."""
    if not edges:
        return chosen
    # Lower bound: a greedy matching needs one cover vertex per edge.
    matched = set()
    lb = 0
    for u, v in edges:
        if u not in matched and v not in matched:
            matched.update((u, v))
            lb += 1
    if chosen + lb >= best:
        return best
    u, v = edges[0]
    for pick in (u, v):
        rest = [(a, b) for a, b in edges if a != pick and b != pick]
        best = min(best, _min_cover_size(rest, chosen + 1, best))
    return best


def vertex_cover_number(g: SignedGraph):
    """Minimum vertex cover size and a lexicographically first witness.

    Returns (tau, cover) where cover is a frozenset of vertices.  Exact
    search, intended for the small instances this library targets.
    """
    edge_pairs = [(e.u, e.v) for e in g.edges]
    if not edge_pairs:
        return 0, frozenset()
    tau = _min_cover_size(edge_pairs, 0, g.n)
    candidates = sorted({v for pair in edge_pairs for v in pair})
    for combo in itertools.combinations(candidates, tau):
        picked = set(combo)
        if all(u in picked or v in picked for u, v in edge_pairs):
            return tau, frozenset(combo)
    raise AssertionError("vertex cover search failed")  # pragma: no cover
