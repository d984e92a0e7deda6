"""Cartesian products, multiset spectrum arithmetic and compositions.

The polynomial composition sum c_0 + c_1 x + ... + c_k x^k acts on a
signed graph by taking total-graph powers: x^i means the (i-1)-fold
S-variant total graph, a coefficient c_i means c_i disjoint copies, and
the terms combine by Cartesian product.  Spectra follow along: products
turn into multiset sums, copies into multiplicities.
"""

from typing import Sequence

from .core import (
    Edge,
    GraphError,
    SignedGraph,
    disjoint_union,
    regular_degree,
)
from .orientation import Orientation, orient
from .operators import total_graph
from .spectral import Spectrum, spectrum, total_values_from

K1 = SignedGraph(1, ())


def cartesian_product(g1: SignedGraph, g2: SignedGraph) -> SignedGraph:
    """Cartesian product with the coordinate-wise sign rule.

    Vertex (i, j) gets id i * g2.n + j.  An edge moves in exactly one
    coordinate and inherits the sign of the moving edge.
    """
    n2 = g2.n
    edges = []
    for i in range(g1.n):
        for e in g2.edges:
            edges.append((i * n2 + e.u, i * n2 + e.v, e.sign))
    for e in g1.edges:
        for j in range(n2):
            edges.append((e.u * n2 + j, e.v * n2 + j, e.sign))
    edges.sort(key=lambda t: (t[0], t[1]))
    return SignedGraph(g1.n * g2.n, tuple(Edge(u, v, s) for u, v, s in edges))


def multiset_sum(s1: Spectrum, s2: Spectrum) -> Spectrum:
    """All pairwise sums, with repetition."""
    return Spectrum.from_values(a + b for a in s1.values for b in s2.values)


def multiset_power(s: Spectrum, c: int) -> Spectrum:
    """Each element repeated c times; c = 0 gives the empty spectrum."""
    if c < 0:
        raise GraphError("multiset power needs c >= 0, got %r" % (c,))
    return Spectrum.from_values(x for x in s.values for _ in range(c))


def _check_coeffs(coeffs: Sequence[int]):
    cs = [int(c) for c in coeffs]
    if not cs or all(c == 0 for c in cs):
        raise GraphError("empty polynomial")
    if any(c < 0 for c in cs):
        raise GraphError("coefficients must be non-negative")
    if cs[-1] == 0:
        raise GraphError("leading coefficient must be nonzero")
    return cs


def total_power(g: SignedGraph, eta: Orientation, i: int) -> SignedGraph:
    """i-th power under the S-variant total graph operation.

    Power 0 is a single vertex, power 1 the graph itself; higher powers
    iterate the total graph.  The given orientation is used for the
    first step only; later iterates are re-oriented canonically, which
    changes nothing up to switching.
    """
    if i < 0:
        raise GraphError("power must be nonnegative, got %r" % (i,))
    if i == 0:
        return K1
    if i == 1:
        return g
    current = total_graph(g, eta, "S")
    for _ in range(i - 2):
        current = total_graph(current, orient(current), "S")
    return current


def polynomial_compose(coeffs: Sequence[int], g: SignedGraph, eta: Orientation) -> SignedGraph:
    """Apply the polynomial to a regular signed graph.

    Cartesian product over the nonzero terms, ascending degree, of
    c_i disjoint copies of the i-th total power.
    """
    cs = _check_coeffs(coeffs)
    if regular_degree(g) is None:
        raise GraphError("polynomial composition needs a regular graph")
    result = None
    for i, c in enumerate(cs):
        if c == 0:
            continue
        term = disjoint_union([total_power(g, eta, i)] * c)
        result = term if result is None else cartesian_product(result, term)
    return result


def iterated_params(r: int, n: int, i: int):
    """Degree and order of the i-th total power of an r-regular graph.

    Follows the recurrences r_i = 2 r_{i-1} and n_i = n_{i-1} + m_{i-1}
    starting from (r, n); defined for i >= 1.
    """
    if i < 1:
        raise GraphError("iterated parameters are defined for i >= 1")
    ri, ni = int(r), int(n)
    for _ in range(i - 1):
        if (ni * ri) % 2 != 0:  # pragma: no cover - handshake parity
            raise GraphError("odd vertex-degree product")
        ri, ni = 2 * ri, ni + ni * ri // 2
    return ri, ni


def polynomial_spectrum(coeffs: Sequence[int], g: SignedGraph) -> Spectrum:
    """Spectrum of the composed graph, by recurrence alone.

    Needs degree r >= 2.  The spectrum of each power is produced from
    the previous one via the S-variant total graph formula with the
    iterated parameters, never touching the composed graph itself.
    """
    cs = _check_coeffs(coeffs)
    r = regular_degree(g)
    if r is None:
        raise GraphError("polynomial spectrum needs a regular graph")
    if r < 2:
        raise GraphError("polynomial spectrum needs degree >= 2, got %d" % r)
    power_specs = [Spectrum.from_values([0.0]), spectrum(g)]
    ri, ni = r, g.n
    for _i in range(2, len(cs)):
        prev = power_specs[-1].values
        power_specs.append(Spectrum.from_values(total_values_from(prev, ri, "S")))
        ri, ni = 2 * ri, ni + ni * ri // 2
    result = None
    for i, c in enumerate(cs):
        if c == 0:
            continue
        term = multiset_power(power_specs[i], c)
        result = term if result is None else multiset_sum(result, term)
    return result
