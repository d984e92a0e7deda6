"""Balance, antibalance and the two frustration measures.

The frustration index is the fewest edge deletions that leave a
balanced graph, equivalently the fewest negative edges over all
switchings.  The frustration number is the vertex analogue.  Both are
computed exactly by exhaustive search inside the compute kernels, per
connected component, so they are meant for small instances.
"""

import warnings
from dataclasses import dataclass
from typing import Optional

from . import kernels
from .core import GraphError, SignedGraph, components, negate

# Above this component order the switching enumeration (2^(n-1) states)
# starts taking real time even compiled.
_FRUSTRATION_WARN_ORDER = 24


@dataclass(frozen=True)
class FrustrationResult:
    """Exact optimum plus a deterministic witness set.

    For the frustration index the witness holds edge ids, for the
    frustration number vertex ids; deleting it balances the graph.
    """

    value: int
    witness: frozenset


def balance_certificate(g: SignedGraph) -> Optional[frozenset]:
    """Switching set making every edge positive, or None if unbalanced.

    The certificate never contains the smallest vertex of a component,
    which makes it unique and reproducible.
    """
    pot = [0] * g.n
    for root in range(g.n):
        if pot[root] != 0:
            continue
        pot[root] = 1
        queue = [root]
        while queue:
            x = queue.pop()
            for y, eid in g.incidences[x]:
                want = pot[x] * g.edges[eid].sign
                if pot[y] == 0:
                    pot[y] = want
                    queue.append(y)
                elif pot[y] != want:
                    return None
    return frozenset(v for v in range(g.n) if pot[v] == -1)


def is_balanced(g: SignedGraph) -> bool:
    """True when every cycle has positive sign product."""
    return balance_certificate(g) is not None


def is_antibalanced(g: SignedGraph) -> bool:
    """True when the negated graph is balanced."""
    return is_balanced(negate(g))


def _component_arrays(g: SignedGraph):
    """Per component: (vertices, local us, local vs, signs, edge ids)."""
    out = []
    for comp in components(g):
        index = {v: i for i, v in enumerate(comp)}
        inside = set(comp)
        us, vs, signs, eids = [], [], [], []
        for eid, e in enumerate(g.edges):
            if e.u in inside:
                us.append(index[e.u])
                vs.append(index[e.v])
                signs.append(e.sign)
                eids.append(eid)
        out.append((comp, us, vs, signs, eids))
    return out


def _component_balanced(n: int, us, vs, signs) -> bool:
    """Balance check on local component arrays, sparing the enumeration."""
    adj = [[] for _ in range(n)]
    for u, v, s in zip(us, vs, signs):
        adj[u].append((v, s))
        adj[v].append((u, s))
    pot = [0] * n
    for root in range(n):
        if pot[root]:
            continue
        pot[root] = 1
        stack = [root]
        while stack:
            x = stack.pop()
            for y, s in adj[x]:
                want = pot[x] * s
                if pot[y] == 0:
                    pot[y] = want
                    stack.append(y)
                elif pot[y] != want:
                    return False
    return True


def frustration_index(g: SignedGraph) -> FrustrationResult:
    """Fewest edge deletions to balance, with a witness edge set.

    The witness is the set of edges left negative by the best switching;
    ties between optimal switchings break to the one whose vertex list
    is lexicographically smallest with the component root excluded.
    """
    value = 0
    witness = set()
    for comp, us, vs, signs, eids in _component_arrays(g):
        if len(comp) > _FRUSTRATION_WARN_ORDER:
            warnings.warn(
                "frustration index on a component of order %d may enumerate "
                "up to 2^%d switchings" % (len(comp), len(comp) - 1),
                RuntimeWarning,
                stacklevel=2,
            )
        if _component_balanced(len(comp), us, vs, signs):
            continue
        count, mask = kernels.min_negative_switching(len(comp), us, vs, signs)
        value += count
        for u, v, s, eid in zip(us, vs, signs, eids):
            crossing = ((mask >> u) & 1) != ((mask >> v) & 1)
            if (s < 0) != crossing:
                witness.add(eid)
    result = FrustrationResult(value, frozenset(witness))
    if len(result.witness) != value:  # pragma: no cover - consistency guard
        raise AssertionError("frustration witness size mismatch")
    return result


def frustration_number(g: SignedGraph) -> FrustrationResult:
    """Fewest vertex deletions to balance, with a witness vertex set.

    Per component the witness is the first optimal combination in
    lexicographic vertex order.
    """
    value = 0
    witness = set()
    for comp, us, vs, signs, _eids in _component_arrays(g):
        count, local = kernels.min_balancing_vertex_set(len(comp), us, vs, signs)
        value += count
        witness.update(comp[int(i)] for i in local)
    return FrustrationResult(value, frozenset(witness))


def line_clique_bound(g: SignedGraph) -> int:
    """Sum over vertices of floor((d-1)^2 / 4).

    Lower bound on the frustration index of the C-variant line graph:
    each vertex of degree d spawns a clique on d vertices whose
    signature is antibalanced there.
    """
    return sum((d - 1) ** 2 // 4 for d in g.degrees())


def _cycle_components(g: SignedGraph):
    for comp, us, _vs, signs, _eids in _component_arrays(g):
        if len(us) == len(comp):  # connected with n edges: one cycle
            yield comp, signs


def is_paths_and_cycles(g: SignedGraph) -> bool:
    """True when every component is a path or a cycle."""
    return all(d <= 2 for d in g.degrees())


def is_paths_and_positive_cycles(g: SignedGraph) -> bool:
    """True when every component is a path or a positive cycle."""
    if not is_paths_and_cycles(g):
        return False
    for _comp, signs in _cycle_components(g):
        prod = 1
        for s in signs:
            prod *= s
        if prod < 0:
            return False
    return True


def frustration_index_by_deletion(g: SignedGraph) -> int:
    """Independent frustration index oracle via edge subset deletion.

    Exponential in m; exists to cross-check the switching route.
    """
    import itertools

    edge_list = list(g.edges)
    for k in range(g.m + 1):
        for combo in itertools.combinations(range(g.m), k):
            drop = set(combo)
            rest = SignedGraph(
                g.n, tuple(e for i, e in enumerate(edge_list) if i not in drop)
            )
            if is_balanced(rest):
                return k
    raise GraphError("unreachable: deleting all edges always balances")
