"""Orientations of signed graphs and the matrices they induce.

An orientation assigns to every edge e = uv a pair of incidence signs
(eta(u,e), eta(v,e)) in {+1,-1} subject to the compatibility rule

    eta(u,e) * eta(v,e) = -sign(e).

Positive edges therefore get one +1 and one -1 (a directed edge), while
negative edges get two equal entries (a bidirected extroverted or
introverted edge).  The incidence matrix B collects these entries and
satisfies B @ B.T = L, the signed Laplacian.
"""

import random
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .core import GraphError, SignedGraph


class BindingError(ValueError):
    """An orientation was used with a graph it was not built for."""


@dataclass(frozen=True)
class Orientation:
    """Incidence signs per edge, bound to a specific graph by checksum.

    ``pairs[e]`` is (eta at the smaller endpoint, eta at the larger one)
    for edge id e.  Build instances through :func:`orient`,
    :meth:`from_pairs` or :func:`reorient`; the raw constructor does not
    validate.
    """

    pairs: tuple
    binding: str

    @classmethod
    def from_pairs(cls, g: SignedGraph, pairs: Iterable) -> "Orientation":
        pl = tuple((int(a), int(b)) for a, b in pairs)
        if len(pl) != g.m:
            raise GraphError("expected %d incidence pairs, got %d" % (g.m, len(pl)))
        for eid, ((a, b), e) in enumerate(zip(pl, g.edges)):
            if a not in (1, -1) or b not in (1, -1):
                raise GraphError("incidence pair %d outside {+1,-1}: %r" % (eid, (a, b)))
            if a * b != -e.sign:
                raise GraphError(
                    "incidence pair %d violates eta_u*eta_v = -sign for edge %r"
                    % (eid, e)
                )
        return cls(pl, g.checksum)

    def require_binding(self, g: SignedGraph) -> None:
        if self.binding != g.checksum:
            raise BindingError(
                "orientation bound to %s, graph is %s" % (self.binding, g.checksum)
            )

    def eta(self, g: SignedGraph, vertex: int, edge_id: int) -> int:
        """Incidence sign of vertex at edge, 0 when not an endpoint."""
        e = g.edges[edge_id]
        if vertex == e.u:
            return self.pairs[edge_id][0]
        if vertex == e.v:
            return self.pairs[edge_id][1]
        return 0


def orient(g: SignedGraph, seed=None) -> Orientation:
    """Canonical orientation, or a seeded pseudorandom one.

    The canonical choice puts +1 at the smaller endpoint; the other
    entry is then forced.  With a seed, each edge flips its pair with
    probability one half, deterministically in the seed.
    """
    if seed is None:
        pairs = [(1, -e.sign) for e in g.edges]
    else:
        rng = random.Random(seed)
        pairs = []
        for e in g.edges:
            a = 1 if rng.random() < 0.5 else -1
            pairs.append((a, -e.sign * a))
    return Orientation.from_pairs(g, pairs)


def reorient(eta: Orientation, flips: Iterable[int]) -> Orientation:
    """Flip both incidence entries on the given edge ids.

    Negating a pair preserves the compatibility rule, so the result is
    again an orientation of the same graph.
    """
    flip_set = set(flips)
    m = len(eta.pairs)
    for e in flip_set:
        if not (0 <= e < m):
            raise GraphError("edge id %r out of range" % (e,))
    pairs = tuple(
        (-a, -b) if i in flip_set else (a, b) for i, (a, b) in enumerate(eta.pairs)
    )
    return Orientation(pairs, eta.binding)


def incidence_matrix(g: SignedGraph, eta: Orientation) -> np.ndarray:
    """n x m incidence matrix B with B[v,e] = eta(v,e)."""
    eta.require_binding(g)
    B = np.zeros((g.n, g.m), dtype=np.int64)
    for eid, (e, (a, b)) in enumerate(zip(g.edges, eta.pairs)):
        B[e.u, eid] = a
        B[e.v, eid] = b
    return B


def adjacency_matrix(g: SignedGraph) -> np.ndarray:
    """Symmetric signed adjacency matrix."""
    A = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v, s in g.edges:
        A[u, v] = s
        A[v, u] = s
    return A


def laplacian_matrix(g: SignedGraph) -> np.ndarray:
    """Signed Laplacian D - A with the plain degree diagonal."""
    L = -adjacency_matrix(g)
    for v, d in enumerate(g.degrees()):
        L[v, v] = d
    return L


def eulerian_orientation(g: SignedGraph) -> Orientation:
    """Orientation with zero incidence row sums, when one exists.

    Requires an all-positive signature and even degrees: each component
    then has an Euler circuit, and directing edges along it gives every
    vertex as many +1 as -1 entries.
    """
    for e in g.edges:
        if e.sign != 1:
            raise GraphError("eulerian orientation needs an all-positive graph")
    for v, d in enumerate(g.degrees()):
        if d % 2 != 0:
            raise GraphError("vertex %d has odd degree %d" % (v, d))

    used = [False] * g.m
    ptr = [0] * g.n
    tail = [0] * g.m  # vertex the edge is directed away from
    inc = g.incidences
    for root in range(g.n):
        if g.degree(root) == 0:
            continue
        stack = [root]
        while stack:
            x = stack[-1]
            advanced = False
            while ptr[x] < len(inc[x]):
                y, eid = inc[x][ptr[x]]
                ptr[x] += 1
                if not used[eid]:
                    used[eid] = True
                    tail[eid] = x
                    stack.append(y)
                    advanced = True
                    break
            if not advanced:
                stack.pop()

    pairs = []
    for eid, e in enumerate(g.edges):
        if tail[eid] == e.u:
            pairs.append((1, -1))
        else:
            pairs.append((-1, 1))
    return Orientation.from_pairs(g, pairs)


def is_eulerian(g: SignedGraph, eta: Orientation) -> bool:
    """True when every row of the incidence matrix sums to zero."""
    B = incidence_matrix(g, eta)
    return bool(np.all(B.sum(axis=1) == 0))
