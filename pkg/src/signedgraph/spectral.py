"""Spectra of signed graphs and closed forms for regular total graphs.

All eigensolves run through the Jacobi kernel on dense symmetric
matrices.  Spectra are plain sorted float tuples; comparisons sort both
sides and match pairwise with an absolute tolerance, so multiplicities
never need explicit bookkeeping.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .core import GraphError, SignedGraph, regular_degree
from .orientation import adjacency_matrix, laplacian_matrix

# Grouping tolerance for near-equal eigenvalues; two orders above the
# solver accuracy, far below spectral gaps at this scale.
GROUP_TOL = 1e-7


@dataclass(frozen=True)
class Spectrum:
    """Real spectrum as a descending tuple of floats."""

    values: tuple

    @classmethod
    def from_values(cls, values) -> "Spectrum":
        return cls(tuple(sorted((float(x) for x in values), reverse=True)))

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def multiplicities(self, tol: float = GROUP_TOL):
        """Distinct values with counts, as ((value, count), ...).

        Consecutive values closer than tol collapse into one group
        represented by the group mean.
        """
        groups = []
        for x in self.values:
            if groups and abs(groups[-1][-1] - x) <= tol:
                groups[-1].append(x)
            else:
                groups.append([x])
        return tuple((sum(grp) / len(grp), len(grp)) for grp in groups)

    def isclose(self, other, tol: float = GROUP_TOL) -> bool:
        """Multiset comparison: equal lengths, pairwise within tol."""
        vals = other.values if isinstance(other, Spectrum) else tuple(
            sorted((float(x) for x in other), reverse=True)
        )
        if len(self.values) != len(vals):
            return False
        return all(abs(a - b) <= tol for a, b in zip(self.values, vals))


@dataclass(frozen=True)
class MainSpectrum:
    """Main eigenvalues (descending) with squared projection weights.

    ``weights[i]`` is the squared norm of the projection of the all-ones
    vector onto the eigenspace of ``values[i]``.
    """

    values: tuple
    weights: tuple


def _check_square_symmetric(M) -> np.ndarray:
    A = np.asarray(M, dtype=np.float64)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise GraphError("matrix must be square")
    if not np.array_equal(A, A.T):
        raise GraphError("matrix must be symmetric")
    return A


def eigensystem(M):
    """Sorted eigendecomposition (w descending, V column eigenvectors)."""
    A = _check_square_symmetric(M)
    w, V = kernels.jacobi_eigh(A)
    trace_gap = abs(float(np.sum(w)) - float(np.trace(A)))
    if trace_gap > 1e-8 * max(A.shape[0], 1):  # pragma: no cover - solver guard
        raise ArithmeticError("eigenvalue sum drifted from trace by %g" % trace_gap)
    order = np.argsort(w)[::-1]
    return w[order], V[:, order]


def eigenvalues(M) -> Spectrum:
    """Spectrum of a symmetric matrix."""
    w, _V = eigensystem(M)
    return Spectrum.from_values(w)


def spectrum(g: SignedGraph, which: str = "adjacency") -> Spectrum:
    """Adjacency or Laplacian spectrum of a signed graph."""
    if which == "adjacency":
        return eigenvalues(adjacency_matrix(g))
    if which == "laplacian":
        return eigenvalues(laplacian_matrix(g))
    raise GraphError("which must be 'adjacency' or 'laplacian', got %r" % (which,))


def _require_regular(g: SignedGraph, at_least: int) -> int:
    r = regular_degree(g)
    if r is None:
        raise GraphError("graph is not regular")
    if r < at_least:
        raise GraphError("needs degree >= %d, graph is %d-regular" % (at_least, r))
    return r


def total_values_from(eigs, r: int, variant: str):
    """Total graph eigenvalues from root eigenvalues of an r-regular graph.

    Implements the closed form: a constant eigenvalue (2 for C, -2 for
    S) with multiplicity m - n, plus a quadratic pair per root
    eigenvalue.
    """
    n = len(eigs)
    m = n * r // 2
    out = []
    if variant == "C":
        out.extend([2.0] * (m - n))
        for lam in eigs:
            root = math.sqrt(max(r * r - 4.0 * lam + 4.0, 0.0))
            out.append(0.5 * (2.0 + 2.0 * lam - r + root))
            out.append(0.5 * (2.0 + 2.0 * lam - r - root))
    elif variant == "S":
        out.extend([-2.0] * (m - n))
        for lam in eigs:
            root = math.sqrt((r - 2.0 * lam) ** 2 + 4.0 * (lam + 1.0))
            out.append(0.5 * (r - 2.0 + root))
            out.append(0.5 * (r - 2.0 - root))
    else:
        raise GraphError("variant must be 'C' or 'S', got %r" % (variant,))
    return out


def total_spectrum_formula(g: SignedGraph, variant: str) -> Spectrum:
    """Spectrum of the total graph of a regular signed graph, r >= 2."""
    if variant not in ("C", "S"):
        raise GraphError("variant must be 'C' or 'S', got %r" % (variant,))
    r = _require_regular(g, 2)
    eigs = spectrum(g).values
    return Spectrum.from_values(total_values_from(eigs, r, variant))


def spectrum_interval(g: SignedGraph, variant: str):
    """Closed interval containing the total graph spectrum.

    Variant C needs r >= 4 (the upper eigenvalue map is monotone only
    then); variant S needs r >= 2.  Endpoints come from the total graph
    eigenvalue maps evaluated at the extreme root eigenvalues.
    """
    if variant == "C":
        r = _require_regular(g, 4)
        eigs = spectrum(g).values
        l1, ln = eigs[0], eigs[-1]
        lo = 0.5 * (2.0 + 2.0 * ln - r - math.sqrt(max(r * r - 4.0 * ln + 4.0, 0.0)))
        hi = 0.5 * (2.0 + 2.0 * l1 - r + math.sqrt(max(r * r - 4.0 * l1 + 4.0, 0.0)))
        return lo, hi
    if variant == "S":
        r = _require_regular(g, 2)
        eigs = spectrum(g).values
        ln = eigs[-1]
        f3 = math.sqrt((r - 2.0 * ln) ** 2 + 4.0 * (ln + 1.0))
        return 0.5 * (r - 2.0 - f3), 0.5 * (r - 2.0 + f3)
    raise GraphError("variant must be 'C' or 'S', got %r" % (variant,))


def main_eigenvalues(g: SignedGraph) -> MainSpectrum:
    """Eigenvalues whose eigenspace is not orthogonal to the all-ones vector.

    Eigenvalues are grouped within 1e-7; a group is main when the
    projection of the all-ones vector onto its eigenspace has norm
    above 1e-6 * sqrt(n).
    """
    if g.n == 0:
        raise GraphError("empty graph has no spectrum")
    w, V = eigensystem(adjacency_matrix(g))
    ones = np.ones(g.n)
    coeffs = V.T @ ones
    threshold = 1e-6 * math.sqrt(g.n)
    values, weights = [], []
    i = 0
    while i < len(w):
        j = i
        while j + 1 < len(w) and abs(w[j + 1] - w[i]) <= GROUP_TOL:
            j += 1
        weight = float(np.sum(coeffs[i : j + 1] ** 2))
        if math.sqrt(weight) > threshold:
            values.append(float(np.mean(w[i : j + 1])))
            weights.append(weight)
        i = j + 1
    if not values:  # pragma: no cover - the all-ones vector has norm sqrt(n)
        raise ArithmeticError("no main eigenvalue found")
    return MainSpectrum(tuple(values), tuple(weights))


def lambda_max_bound(g: SignedGraph) -> float:
    """Degree-based upper bound on the largest adjacency eigenvalue.

    Intended for total graphs, where every vertex lies on a negative
    triangle; that hypothesis makes the bound valid.  For each vertex of
    degree d with average neighbor degree a the candidate is
    (-d + sqrt(5 d^2 + 4 (d a - 4))) / 2 and the bound is the maximum
    over vertices with at least one neighbor.
    """
    best = None
    for v in range(g.n):
        d = g.degree(v)
        if d == 0:
            continue
        avg = sum(g.degree(w) for w in g.neighbors(v)) / d
        disc = 5.0 * d * d + 4.0 * (d * avg - 4.0)
        if disc < 0:  # pragma: no cover - needs d = 1 and a < 3/4, impossible
            raise ArithmeticError("negative discriminant in degree bound")
        cand = 0.5 * (-d + math.sqrt(disc))
        if best is None or cand > best:
            best = cand
    if best is None:
        raise GraphError("bound needs at least one edge")
    return best
