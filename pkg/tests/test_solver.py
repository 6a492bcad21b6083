import pytest
import math
import os
import sys

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.graph_core import INFINITY, ExtWeight, ParameterAlgebraError, WeightedGraph, generate_random_cactus
from src.dfs_cactus import block_decomposition, build_dfs_structure
from src.domination import (
    ExtractionError, NotATreeError, extract_dominating_set, solve_cactus, solve_tree,
)
from src.oracle import brute_force_gamma


def solve(g, root=0, **kwargs):
    return solve_cactus(g, build_dfs_structure(g, root), **kwargs)


def unit_graph(n, edges):
    return WeightedGraph.from_edges([1] * n, edges)


def integer_cactus(seed, max_n=16):
    """Random cactus with at most max_n vertices and integer weights in [1, 10]."""
    cycle_fraction = (seed % 4) / 3
    max_cycle_len = 3 + seed % 4
    n_target = 1 + seed % (max_n - max_cycle_len)
    return generate_random_cactus(seed, n_target, cycle_fraction, max_cycle_len, (1, 10),
                                  integer_weights=True)


class TestSmallGraphs:
    """Hand-checked instances."""

    def test_single_vertex(self):
        result = solve(WeightedGraph.from_edges([7], []))
        assert result.gamma == ExtWeight.finite(7)
        assert result.root_params.as_tuple() == (ExtWeight.finite(0), ExtWeight.finite(7),
                                                 INFINITY, ExtWeight.finite(7))
        assert result.counter.as_tuple() == (0, 0)

    def test_star(self):
        star = unit_graph(4, [(0, 1), (0, 2), (0, 3)])
        result = solve_tree(star, build_dfs_structure(star, 0))
        assert result.gamma == ExtWeight.finite(1)
        assert result.counter.as_tuple() == (12, 9)

    def test_p6(self):
        p6 = unit_graph(6, [(i, i + 1) for i in range(5)])
        assert solve_tree(p6, build_dfs_structure(p6, 0)).gamma == ExtWeight.finite(2)

    def test_triangle(self):
        triangle = WeightedGraph.from_edges([2, 3, 4], [(0, 1), (1, 2), (2, 0)])
        assert solve(triangle).gamma == ExtWeight.finite(2)

    def test_triangle_with_pendant(self):
        g = unit_graph(4, [(0, 1), (1, 2), (2, 0), (0, 3)])
        assert solve(g).gamma == ExtWeight.finite(1)

    def test_two_triangles_sharing_a_vertex(self):
        g = unit_graph(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])
        assert solve(g).gamma == ExtWeight.finite(1)
        assert solve(g, root=4).gamma == ExtWeight.finite(1)

    def test_cycle_root_with_subtrees_on_both_sides(self):
        g = WeightedGraph.from_edges([3, 1, 5, 2, 1, 4],
                                     [(0, 1), (0, 2), (2, 3), (3, 0), (0, 4), (4, 5)])
        assert solve(g, verify_relations=True).gamma == brute_force_gamma(g).gamma

    def test_solve_tree_rejects_cycles(self):
        triangle = unit_graph(3, [(0, 1), (1, 2), (2, 0)])
        with pytest.raises(NotATreeError):
            solve_tree(triangle, build_dfs_structure(triangle, 0))

    def test_structure_from_another_graph(self):
        small = unit_graph(2, [(0, 1)])
        big = unit_graph(3, [(0, 1), (1, 2)])
        with pytest.raises(ValueError):
            solve_cactus(big, build_dfs_structure(small, 0))

    def test_serialization(self):
        g = WeightedGraph.from_edges([1, 5], [(0, 1)])
        s = build_dfs_structure(g, 0)
        result = solve_cactus(g, s, extract_set=True)
        blocks = block_decomposition(s, g).block_count
        assert result.to_text(blocks) == "gamma=1\nadditions=4\nmin_ops=3\nblocks=1\n"
        assert result.to_text(blocks, include_set=True).endswith("set=0\n")


class TestOracleEquivalence:
    """Solver against exhaustive enumeration."""

    def test_integer_weights(self):
        for seed in range(500):
            g = integer_cactus(seed)
            assert g.vertex_count <= 16
            result = solve(g, verify_relations=True)
            assert result.gamma == brute_force_gamma(g).gamma, f"seed {seed}"

    def test_float_weights(self):
        for seed in range(100):
            g = generate_random_cactus(seed, 1 + seed % 12, 0.6, 4, (0.1, 7.3))
            expected = float(brute_force_gamma(g).gamma)
            assert math.isclose(float(solve(g).gamma), expected, rel_tol=1e-9)

    def test_gamma_does_not_depend_on_root(self):
        for seed in range(100):
            g = integer_cactus(seed, max_n=24)
            gammas = {solve(g, root=r).gamma for r in range(g.vertex_count)}
            assert len(gammas) == 1, f"seed {seed}"

    @pytest.mark.parametrize("n", range(1, 31))
    def test_unit_paths(self, n):
        path = unit_graph(n, [(i, i + 1) for i in range(n - 1)])
        result = solve(path)
        assert result.gamma == ExtWeight.finite(math.ceil(n / 3))
        if n <= 16:
            assert result.gamma == brute_force_gamma(path).gamma

    @pytest.mark.parametrize("n", range(3, 31))
    def test_unit_cycles(self, n):
        cycle = unit_graph(n, [(i, (i + 1) % n) for i in range(n)])
        result = solve(cycle)
        assert result.gamma == ExtWeight.finite(math.ceil(n / 3))
        if n <= 16:
            assert result.gamma == brute_force_gamma(cycle).gamma


class TestOperationCounts:
    """Exact counts on trees, linear bounds on cacti."""

    @pytest.mark.parametrize("n", [1, 2, 10, 100, 1000])
    def test_tree_counts(self, n):
        tree = generate_random_cactus(n, n, 0.0, 3, (1, 10))
        s = build_dfs_structure(tree, 0)
        expected = (4 * (n - 1), 3 * (n - 1))
        assert solve_tree(tree, s).counter.as_tuple() == expected
        assert solve_cactus(tree, s).counter.as_tuple() == expected

    def test_tree_solvers_agree(self):
        for seed in range(50):
            tree = generate_random_cactus(seed, 1 + seed, 0.0, 3, (1, 10))
            s = build_dfs_structure(tree, seed % tree.vertex_count)
            by_tree, by_cactus = solve_tree(tree, s), solve_cactus(tree, s)
            assert by_tree.root_params == by_cactus.root_params
            assert by_tree.counter == by_cactus.counter

    @staticmethod
    def _assert_bounds(g, root=0):
        s = build_dfs_structure(g, root)
        b = block_decomposition(s, g).block_count
        counter = solve_cactus(g, s).counter
        assert counter.additions <= 12 * g.vertex_count + 5 * b
        assert counter.min_ops <= 9 * g.vertex_count + 2 * b

    def test_bounds_on_many_cacti(self):
        for seed in range(1000):
            fraction = (0.0, 0.3, 0.7, 1.0)[seed % 4]
            n_target = 1 + (seed * 37) % 300
            self._assert_bounds(generate_random_cactus(seed, n_target, fraction, 3 + seed % 10, (1, 10)),
                                root=seed % n_target)

    def test_sums_skip_weight_validation(self, monkeypatch):
        g = generate_random_cactus(11, 2000, 0.5, 8, (1, 10))
        s = build_dfs_structure(g, 0)
        b = block_decomposition(s, g).block_count
        validated = []
        original = ExtWeight.__post_init__

        def counting(self):
            validated.append(self)
            original(self)

        monkeypatch.setattr(ExtWeight, "__post_init__", counting)
        result = solve_cactus(g, s)
        assert result.counter.additions > 3 * g.vertex_count
        assert len(validated) <= g.vertex_count + 2 * b

    def test_sum_overflow_is_an_algebra_error(self):
        with pytest.raises(ParameterAlgebraError):
            ExtWeight.finite(1e308) + ExtWeight.finite(1e308)

    @pytest.mark.parametrize("fraction", [0.0, 0.3, 0.7, 1.0])
    def test_bounds_at_large_size(self, fraction):
        self._assert_bounds(generate_random_cactus(17, 100_000, fraction, 8, (1, 10)))


class TestExtraction:
    """Rebuilding a minimum-weight dominating set."""

    def test_single_vertex(self):
        assert solve(WeightedGraph.from_edges([3], []), extract_set=True).dominating_set == {0}

    def test_p2(self):
        g = WeightedGraph.from_edges([1, 5], [(0, 1)])
        assert solve(g, extract_set=True).dominating_set == {0}

    def test_without_trace(self):
        g = WeightedGraph.from_edges([1, 5], [(0, 1)])
        result = solve(g)
        assert result.dominating_set is None
        with pytest.raises(ExtractionError):
            extract_dominating_set(g, result)

    def test_matches_oracle(self):
        for seed in range(500):
            g = integer_cactus(seed)
            result = solve(g, extract_set=True)
            chosen = result.dominating_set
            assert g.dominates(chosen)
            assert g.total_weight(chosen) == float(brute_force_gamma(g).gamma)

    def test_deep_cactus(self):
        g = generate_random_cactus(5, 20_000, 0.5, 6, (1, 10))
        result = solve(g, extract_set=True)
        assert g.dominates(result.dominating_set)
        assert math.isclose(g.total_weight(result.dominating_set), float(result.gamma), rel_tol=1e-9)

    @pytest.mark.parametrize("factor", [2, 3])
    def test_scaling_weights(self, factor):
        for seed in range(100):
            g = integer_cactus(seed, max_n=30)
            scaled = WeightedGraph.from_edges([w * factor for w in g.weights], g.edges)
            base, grown = solve(g, extract_set=True), solve(scaled, extract_set=True)
            assert float(grown.gamma) == factor * float(base.gamma)
            assert grown.dominating_set == base.dominating_set
