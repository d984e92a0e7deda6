"""Acceptance gate: twelve checks, one printed verdict line each.

Every check pins sizes, instance counts, tolerances and (where stated)
wall-clock limits.  Verdict lines are echoed again in the terminal
summary (see conftest) so a plain ``pytest -v`` run always shows them.
"""

import math
import random
import time

import numpy as np

from signedgraph.balance import (
    frustration_index,
    frustration_index_by_deletion,
    frustration_number,
    is_antibalanced,
    is_balanced,
    is_paths_and_cycles,
    is_paths_and_positive_cycles,
    line_clique_bound,
)
from signedgraph.core import (
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
from signedgraph.operators import (
    line_graph_combinatorial,
    line_graph_matrix,
    total_graph,
)
from signedgraph.orientation import (
    eulerian_orientation,
    incidence_matrix,
    laplacian_matrix,
    orient,
)
from signedgraph.product import (
    cartesian_product,
    iterated_params,
    multiset_sum,
    polynomial_compose,
    polynomial_spectrum,
)
from signedgraph.spectral import (
    lambda_max_bound,
    main_eigenvalues,
    spectrum,
    spectrum_interval,
    total_spectrum_formula,
)
from signedgraph.switching import switch, switching_equivalent
from signedgraph.verify import _random_regular_pairs


VERDICTS = []


def _verdict(num: int, ok: bool) -> None:
    line = "ACCEPTANCE %d: %s" % (num, "PASS" if ok else "FAIL")
    VERDICTS.append(line)
    print(line)


def _finish(num: int, failures: list, elapsed=None, limit=None) -> None:
    ok = not failures and (limit is None or elapsed < limit)
    _verdict(num, ok)
    assert not failures, "criterion %d: %d failures, first: %s" % (
        num,
        len(failures),
        failures[0],
    )
    if limit is not None:
        assert elapsed < limit, "criterion %d: %.2fs exceeds %.0fs" % (
            num,
            elapsed,
            limit,
        )


def _random_instances(rng, count, n_max, n_min=1):
    for i in range(count):
        n = rng.randint(n_min, n_max)
        yield random_graph(n, 0.5, 0.5, rng.getrandbits(32))


def _regular_draws(rng, count, degrees, n_max, neg_prob=0.5):
    out = []
    while len(out) < count:
        r = degrees[rng.randrange(len(degrees))]
        sizes = [n for n in range(r + 1, n_max + 1) if n * r % 2 == 0]
        n = sizes[rng.randrange(len(sizes))]
        pairs = _random_regular_pairs(rng, n, r)
        if pairs is None:
            continue
        edges = [(u, v, -1 if rng.random() < neg_prob else 1) for u, v in pairs]
        out.append((new_graph(n, edges), r))
    return out


def test_criterion_1_incidence_identity():
    rng = random.Random(101)
    failures = []
    start = time.perf_counter()
    for i, g in enumerate(_random_instances(rng, 500, n_max=10)):
        eta = orient(g, seed=rng.getrandbits(32))
        B = incidence_matrix(g, eta)
        if not np.array_equal(B @ B.T, laplacian_matrix(g)):
            failures.append("instance %d: B B^T != L" % i)
    _finish(1, failures, time.perf_counter() - start, 5.0)


def test_criterion_2_line_dual_construction():
    rng = random.Random(102)
    failures = []
    start = time.perf_counter()
    for i, g in enumerate(_random_instances(rng, 500, n_max=10)):
        eta = orient(g, seed=rng.getrandbits(32))
        for variant in ("C", "S"):
            a = line_graph_matrix(g, eta, variant)
            b = line_graph_combinatorial(g, eta, variant)
            if a != b:
                failures.append("instance %d variant %s differs" % (i, variant))
    _finish(2, failures, time.perf_counter() - start, 5.0)


def test_criterion_3_line_balance_theorems():
    rng = random.Random(103)
    failures = []
    for i, g in enumerate(_random_instances(rng, 200, n_max=8, n_min=2)):
        neg = negate(underlying(g))
        eta = orient(neg, seed=rng.getrandbits(32))
        if not is_balanced(line_graph_matrix(neg, eta, "S")):
            failures.append("instance %d: L_S(-G) unbalanced" % i)
        if not is_antibalanced(line_graph_matrix(neg, eta, "C")):
            failures.append("instance %d: L_C(-G) not antibalanced" % i)

    # both directions of the balance characterizations on fixed families
    families = []
    for n in range(2, 7):
        for signs in ("+", "-", "+-", "+" * max(1, n - 2) + "-"):
            families.append(path_graph(n, signs))
            if n >= 3:
                families.append(cycle_graph(n, signs))
                families.append(star_graph(n, signs))
                families.append(complete_graph(n, signs))
    seen = {("C", True): 0, ("C", False): 0, ("S", True): 0, ("S", False): 0}
    for g in families:
        eta = orient(g, seed=rng.getrandbits(32))
        want_c = is_paths_and_positive_cycles(g)
        want_s = is_antibalanced(g)
        seen[("C", want_c)] += 1
        seen[("S", want_s)] += 1
        if is_balanced(line_graph_matrix(g, eta, "C")) != want_c:
            failures.append("family graph: L_C balance mismatch (%s)" % (g,))
        if is_balanced(line_graph_matrix(g, eta, "S")) != want_s:
            failures.append("family graph: L_S balance mismatch (%s)" % (g,))
    if min(seen.values()) == 0:
        failures.append("families do not exercise both directions: %s" % seen)
    _finish(3, failures)


def test_criterion_4_frustration_identities():
    rng = random.Random(104)
    failures = []
    start = time.perf_counter()
    for i, g in enumerate(_random_instances(rng, 100, n_max=7)):
        eta = orient(g, seed=rng.getrandbits(32))
        ls = line_graph_combinatorial(g, eta, "S")
        nu = frustration_number(ls).value
        ell_neg = frustration_index(negate(g)).value
        if nu != ell_neg:
            failures.append("instance %d: nu(L_S)=%d != l(-S)=%d" % (i, nu, ell_neg))
        lc = line_graph_combinatorial(g, eta, "C")
        if frustration_index(lc).value < line_clique_bound(g):
            failures.append("instance %d: clique bound broken" % i)
    _finish(4, failures, time.perf_counter() - start, 60.0)


def test_criterion_5_switching_stability():
    rng = random.Random(105)
    failures = []
    for i, g in enumerate(_random_instances(rng, 100, n_max=7, n_min=2)):
        eta1 = orient(g, seed=rng.getrandbits(32))
        eta2 = orient(g, seed=rng.getrandbits(32))
        for variant in ("C", "S"):
            t1 = total_graph(g, eta1, variant)
            t2 = total_graph(g, eta2, variant)
            witness = switching_equivalent(t1, t2)
            if witness is None or switch(t1, witness) != t2:
                failures.append("instance %d: reorientation witness (%s)" % (i, variant))
    for i, g in enumerate(_random_instances(rng, 100, n_max=7, n_min=2)):
        subset = {v for v in range(g.n) if rng.random() < 0.5}
        g2 = switch(g, subset)
        eta1 = orient(g, seed=rng.getrandbits(32))
        eta2 = orient(g2, seed=rng.getrandbits(32))
        for variant in ("C", "S"):
            t1 = total_graph(g, eta1, variant)
            t2 = total_graph(g2, eta2, variant)
            witness = switching_equivalent(t1, t2)
            if witness is None or switch(t1, witness) != t2:
                failures.append("instance %d: switching witness (%s)" % (i, variant))
    _finish(5, failures)


def test_criterion_6_triangle_counts():
    rng = random.Random(106)
    failures = []
    for i, g in enumerate(_random_instances(rng, 200, n_max=7)):
        eta = orient(g, seed=rng.getrandbits(32))
        census = triangle_census(g)
        want = 2 * census.total + g.m + sum(
            math.comb(d + 1, 3) for d in g.degrees()
        )
        tc = triangle_census(total_graph(g, eta, "C"))
        ts = triangle_census(total_graph(g, eta, "S"))
        if tc.total != want or ts.total != want:
            failures.append("instance %d: triangle total" % i)
        if tc.positive != 2 * census.positive:
            failures.append("instance %d: T_C positive count" % i)
        if ts.negative != census.total + g.m:
            failures.append("instance %d: T_S negative count" % i)
    _finish(6, failures)


def test_criterion_7_structural_theorem():
    rng = random.Random(107)
    failures = []
    instances = list(_random_instances(rng, 60, n_max=6))
    for i, g in enumerate(instances):
        eta = orient(g, seed=rng.getrandbits(32))
        tau = vertex_cover_number(g)[0]
        no_adjacent = all(
            g.degree(e.u) == 1 and g.degree(e.v) == 1 for e in g.edges
        )
        for variant in ("C", "S"):
            t = total_graph(g, eta, variant)
            lg = line_graph_combinatorial(g, eta, variant)
            ell_t = frustration_index(t).value
            ell_l = frustration_index(lg).value
            nu_t = frustration_number(t).value
            # (i) balance happens only without edges
            if is_balanced(t) != (g.m == 0):
                failures.append("%d/%s: part i" % (i, variant))
            # (ii) antibalance characterization per variant
            want_anti = no_adjacent if variant == "S" else is_antibalanced(g)
            if is_antibalanced(t) != want_anti:
                failures.append("%d/%s: part ii" % (i, variant))
            # (iii) frustration index bound, with known equality cases
            if ell_t < g.m + ell_l:
                failures.append("%d/%s: part iii bound" % (i, variant))
            if variant == "S" and ell_t != g.m + ell_l:
                failures.append("%d/%s: part iii equality" % (i, variant))
            if variant == "C" and is_paths_and_cycles(g) and ell_t != g.m + ell_l:
                failures.append("%d/%s: part iii equality" % (i, variant))
            # (iv) minimum frustration characterization
            want_min = is_antibalanced(g) if variant == "S" else (
                is_paths_and_positive_cycles(g)
            )
            if (ell_t == g.m) != want_min:
                failures.append("%d/%s: part iv" % (i, variant))
            # (v) frustration number against vertex cover
            if nu_t < tau:
                failures.append("%d/%s: part v bound" % (i, variant))
            if variant == "S" and is_antibalanced(g) and nu_t != tau:
                failures.append("%d/%s: part v equality" % (i, variant))
            # (vi) upper bound for the S variant
            if variant == "S":
                nu_l = frustration_number(lg).value
                if nu_t > tau + nu_l:
                    failures.append("%d/%s: part vi" % (i, variant))
            # (vii) degree bound dominates
            if g.m and spectrum(t).values[0] > lambda_max_bound(t) + 1e-9:
                failures.append("%d/%s: part vii" % (i, variant))
    _finish(7, failures)


def test_criterion_8_regular_total_spectra():
    rng = random.Random(108)
    failures = []
    start = time.perf_counter()
    for i, (g, _r) in enumerate(_regular_draws(rng, 60, (2, 3, 4), n_max=10)):
        eta = orient(g, seed=rng.getrandbits(32))
        for variant in ("C", "S"):
            want = total_spectrum_formula(g, variant)
            got = spectrum(total_graph(g, eta, variant))
            if not want.isclose(got, tol=1e-7):
                failures.append("instance %d variant %s" % (i, variant))

    g3 = cycle_graph(3, "+")
    s_vals = total_spectrum_formula(g3, "S").values
    if max(abs(a - b) for a, b in zip(s_vals, (2.0,) * 3 + (-2.0,) * 3)) > 1e-9:
        failures.append("T_S(+C3) exact spectrum")
    r3 = math.sqrt(3.0)
    c_want = (2.0, 2.0, r3 - 1.0, r3 - 1.0, -r3 - 1.0, -r3 - 1.0)
    c_vals = total_spectrum_formula(g3, "C").values
    if max(abs(a - b) for a, b in zip(c_vals, c_want)) > 1e-9:
        failures.append("T_C(+C3) exact spectrum")
    _finish(8, failures, time.perf_counter() - start, 10.0)


def test_criterion_9_spectrum_intervals():
    rng = random.Random(109)
    failures = []
    checked = 0
    for g, r in _regular_draws(rng, 60, (2, 3, 4, 5), n_max=10):
        eta = orient(g, seed=rng.getrandbits(32))
        for variant, min_r in (("C", 4), ("S", 2)):
            if r < min_r:
                continue
            lo, hi = spectrum_interval(g, variant)
            vals = spectrum(total_graph(g, eta, variant)).values
            checked += 1
            if vals[-1] < lo - 1e-9 or vals[0] > hi + 1e-9:
                failures.append(
                    "escape %s: [%g, %g] vs [%g, %g]"
                    % (variant, vals[-1], vals[0], lo, hi)
                )
    for signs in ("+", "-"):
        for build in (lambda s: complete_graph(5, s), lambda s: complete_graph(6, s)):
            g = build(signs)
            eta = orient(g)
            for variant in ("C", "S"):
                lo, hi = spectrum_interval(g, variant)
                vals = spectrum(total_graph(g, eta, variant)).values
                checked += 1
                if vals[-1] < lo - 1e-9 or vals[0] > hi + 1e-9:
                    failures.append("escape %s on K%d" % (variant, g.n))
    if checked < 60:
        failures.append("only %d interval checks ran" % checked)
    _finish(9, failures)


def test_criterion_10_product_and_polynomial_spectra():
    rng = random.Random(110)
    failures = []
    start = time.perf_counter()
    pool = [
        cycle_graph(3, "+"),
        cycle_graph(4, "-"),
        path_graph(3, "+-"),
        star_graph(3, "-"),
        complete_graph(4, "+"),
    ]
    for i in range(20):
        a = pool[rng.randrange(len(pool))]
        b = pool[rng.randrange(len(pool))]
        got = spectrum(cartesian_product(a, b))
        want = multiset_sum(spectrum(a), spectrum(b))
        if not got.isclose(want, tol=1e-7):
            failures.append("product pair %d" % i)
    roots = [cycle_graph(3, "+"), cycle_graph(4, "-"), complete_graph(4, "+")]
    coeff_sets = [[0, 1], [1, 1], [0, 1, 1], [2, 0, 1], [0, 2]]
    for g in roots:
        eta = orient(g)
        for coeffs in coeff_sets:
            direct = spectrum(polynomial_compose(coeffs, g, eta))
            if not polynomial_spectrum(coeffs, g).isclose(direct, tol=1e-7):
                failures.append("poly %s on n=%d" % (coeffs, g.n))
    if [iterated_params(2, 3, i) for i in (1, 2, 3)] != [(2, 3), (4, 6), (8, 18)]:
        failures.append("iterated parameter goldens")
    _finish(10, failures, time.perf_counter() - start, 30.0)


def test_criterion_11_main_eigenvalues_of_eulerian_totals():
    rng = random.Random(111)
    failures = []
    done = 0
    while done < 50:
        r = (2, 4)[rng.randrange(2)]
        n = rng.randrange(r + 1, 11)
        pairs = _random_regular_pairs(rng, n, r)
        if pairs is None:
            continue
        g = new_graph(n, [(u, v, 1) for u, v in pairs])
        eta = eulerian_orientation(g)
        t = total_graph(g, eta, "S")
        mains = main_eigenvalues(t)
        got = sorted(round(v, 6) for v in mains.values)
        if got != [-2.0, float(r)]:
            failures.append("draw %d (r=%d): mains %s" % (done, r, mains.values))
        done += 1
    _finish(11, failures)


def test_criterion_12_frustration_oracle():
    rng = random.Random(112)
    failures = []
    fixtures = [
        cycle_graph(3, "-"),
        cycle_graph(5, "+"),
        complete_graph(4, "-"),
        complete_graph(5, "+-"),
        new_graph(5, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, -1), (1, 4, -1)]),
        path_graph(6, "+-"),
        star_graph(4, "-"),
    ]
    done = 0
    randoms = []
    while len(randoms) < 50:
        g = random_graph(rng.randint(1, 7), 0.5, 0.5, rng.getrandbits(32))
        if g.m <= 12:
            randoms.append(g)
    for i, g in enumerate(fixtures + randoms):
        res = frustration_index(g)
        oracle = frustration_index_by_deletion(g)
        if res.value != oracle:
            failures.append("instance %d: %d != oracle %d" % (i, res.value, oracle))
        kept = [e for j, e in enumerate(g.edges) if j not in res.witness]
        if not is_balanced(new_graph(g.n, kept)):
            failures.append("instance %d: witness does not balance" % i)
        done += 1
    if done != 57:
        failures.append("expected 57 instances, ran %d" % done)
    _finish(12, failures)
