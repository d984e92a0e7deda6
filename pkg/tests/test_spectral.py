import math

import numpy as np
import pytest
from hypothesis import given, settings

from signedgraph.core import (
    GraphError,
    SignedGraph,
    complete_graph,
    cycle_graph,
    negate,
    path_graph,
    star_graph,
)
from signedgraph.operators import total_graph
from signedgraph.orientation import adjacency_matrix, orient
from signedgraph.spectral import (
    Spectrum,
    eigensystem,
    eigenvalues,
    lambda_max_bound,
    main_eigenvalues,
    spectrum,
    spectrum_interval,
    total_spectrum_formula,
)

from .conftest import signed_graphs


class TestSpectrumType:
    def test_sorted_descending(self):
        s = Spectrum.from_values([1.0, 3.0, -2.0])
        assert s.values == (3.0, 1.0, -2.0)

    def test_multiplicities_group_close_values(self):
        s = Spectrum.from_values([2.0, 2.0 + 1e-9, -1.0])
        assert [(round(v, 6), c) for v, c in s.multiplicities()] == [(2.0, 2), (-1.0, 1)]

    def test_isclose(self):
        a = Spectrum.from_values([1.0, 2.0])
        b = Spectrum.from_values([2.0 + 5e-8, 1.0])
        assert a.isclose(b)
        assert not a.isclose(Spectrum.from_values([2.0, 1.1]))
        assert not a.isclose(Spectrum.from_values([2.0]))


class TestEigensystem:
    def test_rejects_asymmetric(self):
        with pytest.raises(GraphError):
            eigensystem(np.array([[0.0, 1.0], [0.5, 0.0]]))

    def test_rejects_non_square(self):
        with pytest.raises(GraphError):
            eigensystem(np.zeros((2, 3)))

    def test_empty_matrix(self):
        w, V = eigensystem(np.zeros((0, 0)))
        assert w.shape == (0,) and V.shape == (0, 0)

    @settings(max_examples=40, deadline=None)
    @given(signed_graphs(max_n=9))
    def test_matches_lapack_on_adjacency(self, g):
        A = adjacency_matrix(g).astype(float)
        got, _ = eigensystem(A)
        want = np.linalg.eigvalsh(A)[::-1]
        assert np.allclose(got, want, atol=1e-9)

    @settings(max_examples=40, deadline=None)
    @given(signed_graphs(max_n=9))
    def test_eigenvectors_reconstruct(self, g):
        A = adjacency_matrix(g).astype(float)
        w, V = eigensystem(A)
        assert np.allclose(V @ np.diag(w) @ V.T, A, atol=1e-8)
        assert np.allclose(V.T @ V, np.eye(g.n), atol=1e-8)

    def test_known_cycle_spectrum(self):
        w = eigenvalues(adjacency_matrix(cycle_graph(4, "+")).astype(float))
        assert np.allclose(w, [2.0, 0.0, 0.0, -2.0], atol=1e-9)


class TestGraphSpectrum:
    def test_laplacian_psd(self, c4_pendant):
        vals = spectrum(c4_pendant, "laplacian").values
        assert vals[-1] >= -1e-9

    def test_negation_flips_adjacency_spectrum(self, c4_pendant):
        a = spectrum(c4_pendant).values
        b = spectrum(negate(c4_pendant)).values
        assert np.allclose(a, [-x for x in reversed(b)], atol=1e-9)

    def test_unknown_kind(self, c4_pendant):
        with pytest.raises(GraphError):
            spectrum(c4_pendant, "seidel")


class TestTotalSpectrumFormula:
    def test_positive_triangle_s_variant_exact(self):
        g = cycle_graph(3, "+")
        got = total_spectrum_formula(g, "S").values
        assert got == pytest.approx((2.0,) * 3 + (-2.0,) * 3, abs=1e-9)

    def test_positive_triangle_c_variant_exact(self):
        g = cycle_graph(3, "+")
        got = total_spectrum_formula(g, "C").values
        r3 = math.sqrt(3.0)
        want = (2.0, 2.0, r3 - 1.0, r3 - 1.0, -r3 - 1.0, -r3 - 1.0)
        assert got == pytest.approx(want, abs=1e-9)

    @pytest.mark.parametrize("variant", ["C", "S"])
    @pytest.mark.parametrize(
        "g",
        [
            cycle_graph(5, "+"),
            cycle_graph(6, "+-"),
            complete_graph(4, "-"),
            complete_graph(5, "+"),
        ],
        ids=["c5", "c6-alt", "k4-neg", "k5"],
    )
    def test_formula_matches_eigensolver(self, g, variant):
        eta = orient(g, seed=1)
        direct = spectrum(total_graph(g, eta, variant))
        assert total_spectrum_formula(g, variant).isclose(direct, tol=1e-7)

    def test_rejects_irregular(self, c4_pendant):
        with pytest.raises(GraphError, match="regular"):
            total_spectrum_formula(c4_pendant, "S")

    def test_rejects_degree_below_two(self):
        with pytest.raises(GraphError):
            total_spectrum_formula(path_graph(2, "+"), "S")


class TestSpectrumInterval:
    @pytest.mark.parametrize("signs", ["+", "-"])
    def test_contains_k5_totals(self, signs):
        g = complete_graph(5, signs)
        eta = orient(g, seed=4)
        for variant in ("C", "S"):
            lo, hi = spectrum_interval(g, variant)
            vals = spectrum(total_graph(g, eta, variant)).values
            assert lo - 1e-9 <= vals[-1]
            assert vals[0] <= hi + 1e-9

    def test_k5_c_interval_endpoints_are_tight(self):
        g = complete_graph(5, "+")
        lo, hi = spectrum_interval(g, "C")
        vals = spectrum(total_graph(g, orient(g), "C")).values
        assert hi == pytest.approx(vals[0], abs=1e-9)
        assert lo == pytest.approx(vals[-1], abs=1e-9)

    def test_s_interval_symmetric_about_half_r_minus_two(self):
        g = cycle_graph(6, "+")
        lo, hi = spectrum_interval(g, "S")
        assert lo + hi == pytest.approx(2 * 2 - 2 - 2, abs=1e-12)

    def test_c_variant_needs_degree_four(self):
        with pytest.raises(GraphError):
            spectrum_interval(cycle_graph(4, "+"), "C")
        spectrum_interval(complete_graph(5, "+"), "C")

    def test_s_variant_needs_degree_two(self):
        with pytest.raises(GraphError):
            spectrum_interval(path_graph(2, "+"), "S")
        spectrum_interval(cycle_graph(3, "+"), "S")


class TestMainEigenvalues:
    def test_positive_triangle(self):
        mains = main_eigenvalues(cycle_graph(3, "+"))
        assert mains.values == pytest.approx((2.0,), abs=1e-9)
        assert mains.weights[0] == pytest.approx(3.0, abs=1e-6)

    def test_star_is_all_main(self):
        mains = main_eigenvalues(star_graph(2, "+"))
        assert len(mains.values) == 2

    def test_weights_sum_to_order(self, c4_pendant):
        mains = main_eigenvalues(c4_pendant)
        assert sum(mains.weights) <= c4_pendant.n + 1e-6

    def test_empty_graph_rejected(self):
        with pytest.raises(GraphError):
            main_eigenvalues(SignedGraph(0, ()))


class TestLambdaMaxBound:
    def test_dominates_on_totals(self, c4_pendant):
        eta = orient(c4_pendant)
        for variant in ("C", "S"):
            t = total_graph(c4_pendant, eta, variant)
            assert spectrum(t).values[0] <= lambda_max_bound(t) + 1e-9

    def test_regular_total_value(self):
        g = cycle_graph(4, "+")
        t = total_graph(g, orient(g), "S")
        d = 4
        mbar = 4.0
        want = (-d + math.sqrt(5 * d * d + 4 * (d * mbar - 4))) / 2
        assert lambda_max_bound(t) == pytest.approx(want, abs=1e-12)

    def test_edgeless_rejected(self):
        with pytest.raises(GraphError):
            lambda_max_bound(SignedGraph(3, ()))
