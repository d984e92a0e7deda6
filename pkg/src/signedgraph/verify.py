"""Property-based verification of the library's structural claims.

Each suite pins one identity or characterization, evaluates it on fixed
edge-case instances plus seeded random ones, and records failures with
replayable serialized counterexamples.  Suites are deterministic in the
seed; random streams are derived per suite so adding a suite never
shifts another one's instances.
"""

import math
import random
from dataclasses import dataclass, field

import numpy as np

from .balance import (
    frustration_index,
    frustration_index_by_deletion,
    frustration_number,
    is_antibalanced,
    is_balanced,
    is_paths_and_cycles,
    is_paths_and_positive_cycles,
    line_clique_bound,
)
from .core import (
    SignedGraph,
    complete_graph,
    cycle_graph,
    negate,
    new_graph,
    path_graph,
    random_graph,
    star_graph,
    triangle_census,
    underlying,
    vertex_cover_number,
)
from .fileformats import serialize_graph, serialize_orientation
from .operators import (
    line_graph_combinatorial,
    line_graph_matrix,
    line_orientation,
    total_graph,
    total_graph_combinatorial,
)
from .orientation import (
    Orientation,
    eulerian_orientation,
    incidence_matrix,
    is_eulerian,
    laplacian_matrix,
    orient,
    reorient,
)
from .product import (
    cartesian_product,
    iterated_params,
    multiset_sum,
    polynomial_compose,
    polynomial_spectrum,
)
from .spectral import (
    lambda_max_bound,
    main_eigenvalues,
    spectrum,
    spectrum_interval,
    total_spectrum_formula,
)
from .switching import switch, switching_equivalent

SPECTRUM_TOL = 1e-7
EXACT_TOL = 1e-9


@dataclass
class Failure:
    suite: str
    label: str
    detail: str
    artifacts: tuple


@dataclass
class SuiteResult:
    name: str
    claim: str
    tried: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


@dataclass
class VerifyReport:
    seed: int
    results: list

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def render(self) -> str:
        lines = []
        for r in self.results:
            status = "PASS" if r.passed else "FAIL (%d)" % len(r.failures)
            lines.append("%-24s %5d checks  %s" % (r.name, r.tried, status))
            if not r.passed:
                lines.append("    claim: %s" % r.claim)
                for f in r.failures[:3]:
                    lines.append("    counterexample %s: %s" % (f.label, f.detail))
        lines.append(
            "verdict: %s (%d suites, seed %d)"
            % ("all claims hold" if self.ok else "FAILURES", len(self.results), self.seed)
        )
        return "\n".join(lines)

    def write_counterexamples(self, out_dir) -> list:
        import os

        written = []
        os.makedirs(out_dir, exist_ok=True)
        for r in self.results:
            for i, f in enumerate(r.failures):
                for fname, text in f.artifacts:
                    path = os.path.join(out_dir, "%s-%d-%s" % (r.name, i, fname))
                    with open(path, "w", encoding="utf-8") as fh:
                        fh.write(text)
                    written.append(path)
        return written


class _Run:
    """Instance pools and failure recording for one suite execution."""

    def __init__(self, result: SuiteResult, rng: random.Random, n_max: int, trials: int):
        self.result = result
        self.rng = rng
        self.n_max = n_max
        self.trials = trials

    def check(self, ok, label, graph=None, eta=None, detail="claim violated"):
        self.result.tried += 1
        if ok:
            return
        artifacts = []
        if graph is not None:
            artifacts.append(("graph.sg", serialize_graph(graph)))
        if eta is not None:
            artifacts.append(("orientation.or", serialize_orientation(eta)))
        self.result.failures.append(
            Failure(self.result.name, label, detail, tuple(artifacts))
        )

    def seeded(self) -> int:
        return self.rng.getrandbits(32)

    def instances(self, min_n=1, max_n=None, trials=None):
        cap = min(self.n_max, max_n) if max_n else self.n_max
        for label, g in fixture_graphs(cap):
            if g.n >= min_n:
                yield label, g
        lo = max(2, min_n)
        for i in range(self.trials if trials is None else trials):
            n = self.rng.randint(lo, max(lo, cap))
            yield "rand-%d" % i, random_graph(n, 0.5, 0.5, self.seeded())

    def regular_instances(self, degrees, count, max_n=None, neg_prob=0.5):
        cap = min(self.n_max, max_n) if max_n else self.n_max
        menu = [r for r in degrees if any(n * r % 2 == 0 for n in range(r + 1, cap + 1))]
        if not menu:
            raise ValueError("no regular instances feasible under n_max %d" % cap)
        produced = 0
        while produced < count:
            r = menu[self.rng.randrange(len(menu))]
            sizes = [n for n in range(r + 1, cap + 1) if n * r % 2 == 0]
            n = sizes[self.rng.randrange(len(sizes))]
            pairs = _random_regular_pairs(self.rng, n, r)
            if pairs is None:
                continue
            edges = [
                (u, v, -1 if self.rng.random() < neg_prob else 1) for u, v in pairs
            ]
            yield "reg%d-%d" % (r, produced), new_graph(n, edges), r
            produced += 1


def _random_regular_pairs(rng, n, r):
    """One pairing-model draw of an r-regular simple graph, or None."""
    stubs = [v for v in range(n) for _ in range(r)]
    rng.shuffle(stubs)
    seen = set()
    for i in range(0, len(stubs), 2):
        u, v = stubs[i], stubs[i + 1]
        if u == v:
            return None
        key = (min(u, v), max(u, v))
        if key in seen:
            return None
        seen.add(key)
    return sorted(seen)


def c4_pendant_graph() -> SignedGraph:
    """Four-cycle with one negative chord-free edge plus a negative pendant."""
    return new_graph(5, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, -1), (1, 4, -1)])


def fixture_graphs(n_max: int):
    """Deterministic edge-case pool bounded by order."""
    items = [
        ("single-vertex", SignedGraph(1, ())),
        ("edgeless-4", SignedGraph(4, ())),
        ("k2-pos", path_graph(2, "+")),
        ("k2-neg", path_graph(2, "-")),
    ]
    for n in range(3, n_max + 1):
        alt = "".join("+" if i % 2 == 0 else "-" for i in range(n - 1))
        items.append(("path-%d-pos" % n, path_graph(n, "+")))
        items.append(("path-%d-alt" % n, path_graph(n, alt)))
        items.append(("cycle-%d-pos" % n, cycle_graph(n, "+")))
        items.append(("cycle-%d-neg" % n, cycle_graph(n, "-")))
        items.append(("cycle-%d-oneneg" % n, cycle_graph(n, "+" * (n - 1) + "-")))
    for k in range(2, min(n_max - 1, 4) + 1):
        items.append(("star-%d-pos" % k, star_graph(k, "+")))
        items.append(("star-%d-neg" % k, star_graph(k, "-")))
    for n in range(3, min(n_max, 5) + 1):
        items.append(("complete-%d-pos" % n, complete_graph(n, "+")))
        items.append(("complete-%d-neg" % n, complete_graph(n, "-")))
    if n_max >= 5:
        items.append(("c4-pendant", c4_pendant_graph()))
    return [(label, g) for label, g in items if g.n <= n_max]


# ---------------------------------------------------------------------------
# suites


def _suite_incidence_laplacian(run: _Run):
    for label, g in run.instances():
        for tag in ("canonical", "seeded"):
            eta = orient(g) if tag == "canonical" else orient(g, seed=run.seeded())
            B = incidence_matrix(g, eta)
            ok = np.array_equal(B @ B.T, laplacian_matrix(g))
            run.check(ok, "%s/%s" % (label, tag), graph=g, eta=eta,
                      detail="B B^T != D - A")


def _suite_line_constructions(run: _Run):
    for label, g in run.instances():
        eta = orient(g, seed=run.seeded())
        lc_m = line_graph_matrix(g, eta, "C")
        ls_m = line_graph_matrix(g, eta, "S")
        lc_c = line_graph_combinatorial(g, eta, "C")
        ls_c = line_graph_combinatorial(g, eta, "S")
        run.check(lc_m == lc_c, label + "/C", graph=g, eta=eta,
                  detail="matrix and combinatorial C line graphs differ")
        run.check(ls_m == ls_c, label + "/S", graph=g, eta=eta,
                  detail="matrix and combinatorial S line graphs differ")
        run.check(negate(ls_m) == lc_m, label + "/negation", graph=g, eta=eta,
                  detail="L_C != -L_S")
        lg, eta_l = line_orientation(g, eta)
        run.check(lg == lc_c, label + "/line-orientation-graph", graph=g, eta=eta,
                  detail="line orientation built on a different line graph")
        # Orientation.from_pairs already enforced the compatibility rule;
        # cross-check that it reproduces the line graph Laplacian.
        BL = incidence_matrix(lg, eta_l)
        run.check(np.array_equal(BL @ BL.T, laplacian_matrix(lg)),
                  label + "/line-orientation-incidence", graph=g, eta=eta,
                  detail="inherited line orientation breaks the incidence identity")


def _suite_line_negation(run: _Run):
    for label, g in run.instances(min_n=2):
        neg = negate(underlying(g))  # all-negative signature on the skeleton
        canon = orient(neg)  # every incidence pair is (+1, +1)
        lc = line_graph_matrix(neg, canon, "C")
        ls = line_graph_matrix(neg, canon, "S")
        run.check(all(e.sign == -1 for e in lc.edges), label + "/C-all-negative",
                  graph=neg, eta=canon, detail="L_C(-G) is not all-negative")
        run.check(all(e.sign == 1 for e in ls.edges), label + "/S-all-positive",
                  graph=neg, eta=canon, detail="L_S(-G) is not all-positive")
        eta = orient(neg, seed=run.seeded())
        run.check(is_antibalanced(line_graph_matrix(neg, eta, "C")),
                  label + "/C-antibalanced", graph=neg, eta=eta,
                  detail="L_C(-G) not antibalanced")
        run.check(is_balanced(line_graph_matrix(neg, eta, "S")),
                  label + "/S-balanced", graph=neg, eta=eta,
                  detail="L_S(-G) not balanced")


def _suite_line_balance(run: _Run):
    for label, g in run.instances():
        eta = orient(g, seed=run.seeded())
        lc = line_graph_combinatorial(g, eta, "C")
        ls = line_graph_combinatorial(g, eta, "S")
        run.check(is_balanced(lc) == is_paths_and_positive_cycles(g),
                  label + "/C", graph=g, eta=eta,
                  detail="L_C balance fails the paths-and-positive-cycles test")
        run.check(is_balanced(ls) == is_antibalanced(g),
                  label + "/S", graph=g, eta=eta,
                  detail="L_S balance does not match antibalance of the root")


def _suite_line_frustration(run: _Run):
    for label, g in run.instances(max_n=7):
        eta = orient(g, seed=run.seeded())
        ls = line_graph_combinatorial(g, eta, "S")
        lc = line_graph_combinatorial(g, eta, "C")
        nu_ls = frustration_number(ls)
        l_neg = frustration_index(negate(g))
        run.check(nu_ls.value == l_neg.value, label + "/nu-ls", graph=g, eta=eta,
                  detail="nu(L_S) = %d but l(-graph) = %d" % (nu_ls.value, l_neg.value))
        l_lc = frustration_index(lc)
        bound = line_clique_bound(g)
        run.check(l_lc.value >= bound, label + "/clique-bound", graph=g, eta=eta,
                  detail="l(L_C) = %d below clique bound %d" % (l_lc.value, bound))


def _suite_cycle_signs(run: _Run):
    for n in range(3, max(run.n_max, 8) + 1):
        patterns = (("pos", "+"), ("neg", "-"), ("oneneg", "+" * (n - 1) + "-"))
        for tag, signs in patterns:
            g = cycle_graph(n, signs)
            cycle_sign = 1
            for e in g.edges:
                cycle_sign *= e.sign
            eta = orient(g, seed=run.seeded())
            for variant in ("C", "S"):
                lg = line_graph_combinatorial(g, eta, variant)
                prod = 1
                for e in lg.edges:
                    prod *= e.sign
                expected = cycle_sign if variant == "C" else cycle_sign * (-1) ** n
                ok = (
                    lg.n == n
                    and lg.m == n
                    and all(d == 2 for d in lg.degrees())
                    and prod == expected
                )
                run.check(ok, "cycle-%d-%s/%s" % (n, tag, variant), graph=g,
                          eta=eta, detail="line cycle shape or sign off")


def _suite_reorientation_stability(run: _Run):
    for label, g in run.instances(min_n=2):
        eta = orient(g, seed=run.seeded())
        flips = [e for e in range(g.m) if run.rng.random() < 0.5]
        eta2 = reorient(eta, flips)
        B, B2 = incidence_matrix(g, eta), incidence_matrix(g, eta2)
        S = np.eye(g.m, dtype=np.int64)
        for e in flips:
            S[e, e] = -1
        run.check(np.array_equal(B2, B @ S), label + "/incidence", graph=g, eta=eta,
                  detail="reoriented incidence matrix is not B S")
        for variant in ("C", "S"):
            l1 = line_graph_combinatorial(g, eta, variant)
            l2 = line_graph_combinatorial(g, eta2, variant)
            run.check(switching_equivalent(l1, l2) is not None,
                      "%s/line-%s" % (label, variant), graph=g, eta=eta,
                      detail="line graphs of two orientations not switching equivalent")
            t1 = total_graph(g, eta, variant)
            t2 = total_graph(g, eta2, variant)
            run.check(switching_equivalent(t1, t2) is not None,
                      "%s/total-%s" % (label, variant), graph=g, eta=eta,
                      detail="total graphs of two orientations not switching equivalent")


def _switched_orientation(g2: SignedGraph, eta: Orientation, subset) -> Orientation:
    """Orientation of the switched graph with incidence matrix S B."""
    pairs = []
    for eid, e in enumerate(g2.edges):
        a, b = eta.pairs[eid]
        pairs.append((-a if e.u in subset else a, -b if e.v in subset else b))
    return Orientation.from_pairs(g2, pairs)


def _suite_switching_stability(run: _Run):
    for label, g in run.instances(min_n=2):
        eta = orient(g, seed=run.seeded())
        subset = {v for v in range(g.n) if run.rng.random() < 0.5}
        g2 = switch(g, subset)
        eta2 = _switched_orientation(g2, eta, subset)
        B, B2 = incidence_matrix(g, eta), incidence_matrix(g2, eta2)
        S = np.eye(g.n, dtype=np.int64)
        for v in subset:
            S[v, v] = -1
        run.check(np.array_equal(B2, S @ B), label + "/incidence", graph=g, eta=eta,
                  detail="switched incidence matrix is not S B")
        for variant in ("C", "S"):
            t1 = total_graph(g, eta, variant)
            t2 = total_graph(g2, eta2, variant)
            witness = switching_equivalent(t1, t2)
            run.check(witness is not None, "%s/total-%s" % (label, variant),
                      graph=g, eta=eta,
                      detail="total graphs across a root switching not equivalent")


def _suite_switch_invariants(run: _Run):
    for label, g in run.instances(max_n=7):
        subset = {v for v in range(g.n) if run.rng.random() < 0.5}
        g2 = switch(g, subset)
        run.check(spectrum(g).isclose(spectrum(g2), SPECTRUM_TOL),
                  label + "/spectrum", graph=g, detail="spectrum changed")
        run.check(frustration_index(g).value == frustration_index(g2).value,
                  label + "/frustration-index", graph=g,
                  detail="frustration index changed")
        run.check(frustration_number(g).value == frustration_number(g2).value,
                  label + "/frustration-number", graph=g,
                  detail="frustration number changed")
        run.check(triangle_census(g) == triangle_census(g2),
                  label + "/triangles", graph=g, detail="triangle census changed")
        run.check(is_balanced(g) == is_balanced(g2), label + "/balance", graph=g,
                  detail="balance changed")


def _suite_total_triangles(run: _Run):
    for label, g in run.instances(max_n=7):
        eta = orient(g, seed=run.seeded())
        census = triangle_census(g)
        expected_total = (
            2 * census.total
            + g.m
            + sum(math.comb(d + 1, 3) for d in g.degrees())
        )
        totals = {}
        for variant in ("C", "S"):
            t = total_graph(g, eta, variant)
            run.check(t.edges == total_graph_combinatorial(g, eta, variant).edges,
                      "%s/build-%s" % (label, variant), graph=g, eta=eta,
                      detail="matrix and combinatorial total graphs differ")
            totals[variant] = t
        tc = triangle_census(totals["C"])
        ts = triangle_census(totals["S"])
        run.check(tc.total == expected_total and ts.total == expected_total,
                  label + "/count", graph=g, eta=eta,
                  detail="total triangle count != 2t + m + sum C(d+1,3)")
        run.check(tc.positive == 2 * census.positive, label + "/positive-C",
                  graph=g, eta=eta,
                  detail="T_C positive triangles %d != 2 t+ = %d"
                  % (tc.positive, 2 * census.positive))
        run.check(ts.negative == census.total + g.m, label + "/negative-S",
                  graph=g, eta=eta,
                  detail="T_S negative triangles %d != t + m = %d"
                  % (ts.negative, census.total + g.m))


def _suite_total_balance(run: _Run):
    for label, g in run.instances():
        eta = orient(g, seed=run.seeded())
        no_adjacent = all(
            g.degree(e.u) == 1 and g.degree(e.v) == 1 for e in g.edges
        )
        for variant in ("C", "S"):
            t = total_graph(g, eta, variant)
            run.check(is_balanced(t) == (g.m == 0), "%s/balance-%s" % (label, variant),
                      graph=g, eta=eta,
                      detail="T balanced iff edgeless fails")
            expected_anti = no_adjacent if variant == "S" else is_antibalanced(g)
            run.check(is_antibalanced(t) == expected_anti,
                      "%s/antibalance-%s" % (label, variant), graph=g, eta=eta,
                      detail="antibalance characterization fails")


def _suite_total_frustration(run: _Run):
    for label, g in run.instances(max_n=6):
        eta = orient(g, seed=run.seeded())
        tau, _cover = vertex_cover_number(g)
        for variant in ("C", "S"):
            t = total_graph(g, eta, variant)
            lg = line_graph_combinatorial(g, eta, variant)
            l_t = frustration_index(t).value
            l_l = frustration_index(lg).value
            run.check(l_t >= g.m + l_l, "%s/l-lower-%s" % (label, variant),
                      graph=g, eta=eta,
                      detail="l(T) = %d below m + l(L) = %d" % (l_t, g.m + l_l))
            if variant == "S":
                run.check(l_t == g.m + l_l, label + "/l-equality-S", graph=g, eta=eta,
                          detail="S-variant equality l(T) = m + l(L) fails")
            elif is_paths_and_cycles(g):
                run.check(l_t == g.m + l_l, label + "/l-equality-C", graph=g, eta=eta,
                          detail="C equality on paths and cycles fails")
            expect_m = (
                is_antibalanced(g) if variant == "S"
                else is_paths_and_positive_cycles(g)
            )
            run.check((l_t == g.m) == expect_m, "%s/l-eq-m-%s" % (label, variant),
                      graph=g, eta=eta, detail="l(T) = m characterization fails")
            nu_t = frustration_number(t).value
            run.check(nu_t >= tau, "%s/nu-lower-%s" % (label, variant), graph=g,
                      eta=eta, detail="nu(T) = %d below tau = %d" % (nu_t, tau))
            if variant == "S" and is_antibalanced(g):
                run.check(nu_t == tau, label + "/nu-equality-S", graph=g, eta=eta,
                          detail="nu(T_S) = tau fails on antibalanced root")
            if variant == "S":
                nu_l = frustration_number(lg).value
                run.check(nu_t <= tau + nu_l, label + "/nu-upper-S", graph=g, eta=eta,
                          detail="nu(T_S) = %d above tau + nu(L_S) = %d"
                          % (nu_t, tau + nu_l))


def _suite_total_lambda_bound(run: _Run):
    for label, g in run.instances(min_n=2):
        if g.m == 0:
            continue
        eta = orient(g, seed=run.seeded())
        for variant in ("C", "S"):
            t = total_graph(g, eta, variant)
            lam_max = spectrum(t).values[0]
            bound = lambda_max_bound(t)
            run.check(lam_max <= bound + EXACT_TOL, "%s/%s" % (label, variant),
                      graph=g, eta=eta,
                      detail="lambda_max %.6f above bound %.6f" % (lam_max, bound))


def _suite_regular_total_spectrum(run: _Run):
    for label, g, _r in run.regular_instances((2, 3, 4), count=run.trials, max_n=10):
        eta = orient(g, seed=run.seeded())
        for variant in ("C", "S"):
            formula = total_spectrum_formula(g, variant)
            direct = spectrum(total_graph(g, eta, variant))
            run.check(formula.isclose(direct, SPECTRUM_TOL),
                      "%s/%s" % (label, variant), graph=g, eta=eta,
                      detail="closed-form total spectrum deviates from eigensolve")


def _suite_spectrum_interval(run: _Run):
    for label, g, r in run.regular_instances((2, 3, 4), count=run.trials, max_n=10):
        eta = orient(g, seed=run.seeded())
        for variant, r_min in (("C", 4), ("S", 2)):
            if r < r_min:
                continue
            lo, hi = spectrum_interval(g, variant)
            vals = spectrum(total_graph(g, eta, variant)).values
            ok = all(lo - EXACT_TOL <= x <= hi + EXACT_TOL for x in vals)
            run.check(ok, "%s/%s" % (label, variant), graph=g, eta=eta,
                      detail="eigenvalue escapes [%.6f, %.6f]" % (lo, hi))


def _modest_coeffs(rng, r, n):
    """Random polynomial (k <= 2, c_i <= 2) with the composed order capped.

    The direct eigensolve of the composed graph is the expensive side of
    the comparison; orders beyond ~150 would dominate the suite runtime.
    """
    orders = [1, n, iterated_params(r, n, 2)[1]]
    for _ in range(50):
        coeffs = [rng.randint(0, 2) for _ in range(rng.randint(1, 3))]
        if not any(coeffs) or coeffs[-1] == 0:
            continue
        size = 1
        for i, c in enumerate(coeffs):
            if c:
                size *= c * orders[i]
        if size <= 150:
            return coeffs
    return [1, 1]


def _suite_product_spectra(run: _Run):
    pool = list(run.instances(min_n=1, max_n=4, trials=max(run.trials // 2, 5)))
    for i in range(len(pool) - 1):
        (la, ga), (lb, gb) = pool[i], pool[i + 1]
        prod = cartesian_product(ga, gb)
        run.check(
            spectrum(prod).isclose(multiset_sum(spectrum(ga), spectrum(gb)), SPECTRUM_TOL),
            "%s-x-%s" % (la, lb), graph=prod,
            detail="product spectrum is not the multiset sum")
    for label, g, r in run.regular_instances((2, 3), count=max(run.trials // 5, 3),
                                             max_n=6):
        eta = orient(g, seed=run.seeded())
        coeffs = _modest_coeffs(run.rng, r, g.n)
        composed = polynomial_compose(coeffs, g, eta)
        by_formula = polynomial_spectrum(coeffs, g)
        run.check(spectrum(composed).isclose(by_formula, SPECTRUM_TOL),
                  "%s/poly-%s" % (label, coeffs), graph=g, eta=eta,
                  detail="recurrence spectrum deviates from composed eigensolve")
    expected = [(2, 3), (4, 6), (8, 18)]
    got = [iterated_params(2, 3, i) for i in (1, 2, 3)]
    run.check(got == expected, "iterated-params",
              detail="iterated params %r != %r" % (got, expected))


def _suite_main_eigenvalues(run: _Run):
    produced = 0
    for n in range(3, run.n_max + 1):
        if produced >= run.trials:
            break
        g = cycle_graph(n, "+")
        produced += 1
        _check_main(run, "cycle-%d" % n, g, 2)
    for label, g, r in run.regular_instances((2, 4), count=max(run.trials - produced, 0),
                                             max_n=10, neg_prob=0.0):
        _check_main(run, label, g, r)


def _check_main(run: _Run, label: str, g: SignedGraph, r: int):
    eta = eulerian_orientation(g)
    if not is_eulerian(g, eta):  # pragma: no cover - construction guarantee
        run.check(False, label + "/eulerian", graph=g, eta=eta,
                  detail="constructed orientation has nonzero row sums")
        return
    t = total_graph(g, eta, "S")
    mains = main_eigenvalues(t)
    got = sorted(mains.values)
    want = sorted([float(r), -2.0])
    ok = len(got) == 2 and all(abs(a - b) <= SPECTRUM_TOL for a, b in zip(got, want))
    run.check(ok, label, graph=g, eta=eta,
              detail="main eigenvalues %r, expected {%d, -2}" % (got, r))


def _suite_frustration_oracle(run: _Run):
    for label, g in run.instances(max_n=7):
        if g.m > 12:
            continue
        res = frustration_index(g)
        direct = frustration_index_by_deletion(g)
        run.check(res.value == direct, label + "/value", graph=g,
                  detail="switching route %d != deletion route %d"
                  % (res.value, direct))
        survivor = SignedGraph(
            g.n, tuple(e for i, e in enumerate(g.edges) if i not in res.witness)
        )
        run.check(len(res.witness) == res.value and is_balanced(survivor),
                  label + "/witness", graph=g,
                  detail="witness does not balance the graph")


SUITES = {
    "incidence-laplacian": (
        "B B^T equals the signed Laplacian for every orientation",
        _suite_incidence_laplacian,
    ),
    "line-constructions": (
        "matrix and combinatorial line graphs coincide and L_C = -L_S",
        _suite_line_constructions,
    ),
    "line-negation": (
        "all-negative roots give all-negative C / all-positive S line graphs",
        _suite_line_negation,
    ),
    "line-balance": (
        "L_C balanced iff paths and positive cycles; L_S balanced iff root antibalanced",
        _suite_line_balance,
    ),
    "line-frustration": (
        "nu(L_S) equals l of the negated root; l(L_C) >= clique bound",
        _suite_line_frustration,
    ),
    "cycle-signs": (
        "line graphs of cycles keep the length and transfer the sign by variant",
        _suite_cycle_signs,
    ),
    "reorientation-stability": (
        "reorientation leaves line and total graphs switching equivalent",
        _suite_reorientation_stability,
    ),
    "switching-stability": (
        "switching the root leaves total graphs switching equivalent",
        _suite_switching_stability,
    ),
    "switch-invariants": (
        "switching preserves spectrum, frustration measures and triangle census",
        _suite_switch_invariants,
    ),
    "total-triangles": (
        "total graphs have 2t + m + sum C(d+1,3) triangles with the stated sign split",
        _suite_total_triangles,
    ),
    "total-balance": (
        "T balanced iff root edgeless; antibalance by variant characterization",
        _suite_total_balance,
    ),
    "total-frustration": (
        "frustration bounds and equalities for total graphs",
        _suite_total_frustration,
    ),
    "total-lambda-bound": (
        "degree bound dominates lambda_max of every total graph",
        _suite_total_lambda_bound,
    ),
    "regular-total-spectrum": (
        "closed-form total spectra match eigensolves for regular roots",
        _suite_regular_total_spectrum,
    ),
    "spectrum-interval": (
        "total spectra lie inside the closed interval for admissible degree",
        _suite_spectrum_interval,
    ),
    "product-spectra": (
        "Cartesian products and polynomial compositions add spectra as multisets",
        _suite_product_spectra,
    ),
    "main-eigenvalues": (
        "Eulerian all-positive regular roots give main eigenvalues {r, -2}",
        _suite_main_eigenvalues,
    ),
    "frustration-oracle": (
        "switching enumeration equals the edge-deletion search",
        _suite_frustration_oracle,
    ),
}


def available_suites():
    return tuple(SUITES)


def run_suite(name: str, n_max: int = 6, trials: int = 50, seed: int = 1) -> SuiteResult:
    if name not in SUITES:
        raise KeyError("unknown suite %r; known: %s" % (name, ", ".join(SUITES)))
    claim, fn = SUITES[name]
    result = SuiteResult(name=name, claim=claim)
    rng = random.Random("%d:%s" % (seed, name))
    fn(_Run(result, rng, n_max, trials))
    return result


def run(suites=None, n_max: int = 6, trials: int = 50, seed: int = 1) -> VerifyReport:
    names = list(SUITES) if suites in (None, "all") else list(suites)
    results = [run_suite(name, n_max=n_max, trials=trials, seed=seed) for name in names]
    return VerifyReport(seed=seed, results=results)
