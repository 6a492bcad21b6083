import pytest
import os
import sys
from collections import Counter

import networkx as nx
import numpy as np

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.graph_core import (
    INFINITY, ZERO, DuplicateEdgeError, EdgeCountError, ExtWeight, MalformedEdgeError,
    MalformedHeaderError, NonPositiveWeightError, ParameterAlgebraError, SelfLoopError,
    VertexRangeError, WeightCountError, WeightedGraph, format_weight, generate_random_cactus,
    parse_graph, serialize_graph, validate_cactus,
)


class TestExtWeight:
    """Saturating arithmetic of the extended weights."""

    def test_addition_saturates(self):
        assert INFINITY + ExtWeight.finite(3) == INFINITY
        assert ExtWeight.finite(3) + INFINITY == INFINITY
        assert ExtWeight.finite(2) + ExtWeight.finite(3) == ExtWeight.finite(5)

    def test_ordering_puts_infinity_last(self):
        assert ExtWeight.finite(1e300) < INFINITY
        assert not INFINITY < INFINITY
        assert INFINITY <= INFINITY
        assert min(INFINITY, ExtWeight.finite(4)) == ExtWeight.finite(4)
        assert ZERO <= ExtWeight.finite(0)

    def test_rejects_negative_and_special_values(self):
        with pytest.raises(ValueError):
            ExtWeight.finite(-1)
        with pytest.raises(ValueError):
            ExtWeight.finite(float("inf"))
        with pytest.raises(ValueError):
            ExtWeight.finite(float("nan"))

    def test_minus_from_infinity_is_an_algebra_error(self):
        with pytest.raises(ParameterAlgebraError):
            INFINITY.minus(1.0)
        assert ExtWeight.finite(7).minus(4) == ExtWeight.finite(3)

    def test_printing(self):
        assert str(INFINITY) == "inf"
        assert str(ExtWeight.finite(5)) == "5"
        assert str(ExtWeight.finite(0.5)) == "0.5"
        assert float(INFINITY) == float("inf")
        assert format_weight(2.0) == "2"
        assert format_weight(0.1) == "0.1"


class TestParseGraph:
    """Text format parsing and serialization."""

    def test_single_vertex(self):
        g = parse_graph("1 0\n5\n")
        assert g.vertex_count == 1
        assert g.weights == (5.0,)
        assert g.adjacency == ((),)

    def test_comments_and_adjacency_order(self):
        text = "# path\n3 2\n1 2.5 3\n# edges follow\n1 2\n0 1\n"
        g = parse_graph(text)
        assert g.edges == ((1, 2), (0, 1))
        assert g.adjacency == ((1,), (2, 0), (1,))
        assert g.weights == (1.0, 2.5, 3.0)

    def test_serialize_single_vertex(self):
        assert serialize_graph(parse_graph("1 0\n5\n")) == "1 0\n5\n"

    def test_serialize_p2(self):
        text = serialize_graph(WeightedGraph.from_edges([1, 5], [(0, 1)]))
        assert text == "2 1\n1 5\n0 1\n"

    def test_generated_graphs_survive_text(self):
        for seed in range(20):
            g = generate_random_cactus(seed, 25, 0.5, 6, (0.5, 9.5))
            assert parse_graph(serialize_graph(g)) == g

    @pytest.mark.parametrize("text, error", [
        ("", MalformedHeaderError),
        ("x y\n1\n", MalformedHeaderError),
        ("0 0\n\n", MalformedHeaderError),
        ("2 0\n1\n", WeightCountError),
        ("2 0\n1 0\n", NonPositiveWeightError),
        ("1 0\n-3\n", NonPositiveWeightError),
        ("1 0\nabc\n", NonPositiveWeightError),
        ("2 1\n1 1\n0\n", MalformedEdgeError),
        ("2 1\n1 1\n0 2\n", VertexRangeError),
        ("2 1\n1 1\n1 1\n", SelfLoopError),
        ("2 2\n1 1\n0 1\n1 0\n", DuplicateEdgeError),
        ("2 1\n1 1\n", EdgeCountError),
        ("3 1\n1 1 1\n0 1\n1 2\n", EdgeCountError),
    ])
    def test_parse_errors(self, text, error):
        with pytest.raises(error):
            parse_graph(text)

    def test_parse_error_reports_line(self):
        with pytest.raises(SelfLoopError) as excinfo:
            parse_graph("# header next\n2 1\n1 1\n1 1\n")
        assert excinfo.value.line_number == 4
        assert "line 4" in str(excinfo.value)


class TestValidateCactus:
    """Cactus recognition."""

    @staticmethod
    def _unit(n, edges):
        return WeightedGraph.from_edges([1] * n, edges)

    @staticmethod
    def _cycle_oracle(g):
        """Cactus iff connected and no edge lies on two simple cycles."""
        graph = g.to_networkx()
        if not nx.is_connected(graph):
            return False
        usage = Counter()
        for cycle in nx.simple_cycles(graph):
            for u, v in zip(cycle, cycle[1:] + cycle[:1]):
                usage[frozenset((u, v))] += 1
        return all(count <= 1 for count in usage.values())

    def test_triangle(self):
        report = validate_cactus(self._unit(3, [(0, 1), (1, 2), (2, 0)]))
        assert report.is_cactus and report.is_connected
        assert report.witness is None

    def test_k4_has_witness(self):
        k4 = self._unit(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
        report = validate_cactus(k4)
        assert not report.is_cactus
        assert report.witness is not None
        assert report.witness in k4.edges

    def test_bowtie(self):
        bowtie = self._unit(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])
        assert validate_cactus(bowtie).is_cactus

    def test_disconnected_forest_of_cacti(self):
        report = validate_cactus(self._unit(4, [(0, 1), (2, 3)]))
        assert not report.is_cactus
        assert not report.is_connected
        assert report.witness is None

    def test_agrees_with_cycle_enumeration(self):
        rng = np.random.default_rng(2024)
        for _ in range(300):
            n = int(rng.integers(1, 9))
            p = float(rng.uniform(0.15, 0.6))
            edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
            g = self._unit(n, edges)
            assert validate_cactus(g).is_cactus == self._cycle_oracle(g)


class TestGenerator:
    """Seeded random cactus generation."""

    def test_single_vertex(self):
        g = generate_random_cactus(1, 1, 0.5, 5, (1, 1))
        assert g.vertex_count == 1
        assert g.weights == (1.0,)

    def test_zero_cycle_fraction_gives_tree(self):
        g = generate_random_cactus(7, 20, 0.0, 3, (1, 10))
        assert g.vertex_count == 20
        assert g.edge_count == 19
        assert validate_cactus(g).is_cactus

    def test_deterministic(self):
        assert generate_random_cactus(99, 50, 0.4, 7, (1, 10)) == \
            generate_random_cactus(99, 50, 0.4, 7, (1, 10))

    def test_soundness_over_many_seeds(self):
        for seed in range(1000):
            n_target = 1 + seed % 30
            g = generate_random_cactus(seed, n_target, (seed % 4) / 3, 6, (0.5, 4.0))
            assert n_target <= g.vertex_count <= n_target + 6
            assert validate_cactus(g).is_cactus
            assert all(0.5 <= w <= 4.0 for w in g.weights)

    def test_integer_weights(self):
        g = generate_random_cactus(3, 40, 0.5, 5, (1, 10), integer_weights=True)
        assert all(w.is_integer() and 1 <= w <= 10 for w in g.weights)

    @pytest.mark.parametrize("kwargs", [
        dict(n_target=0, cycle_fraction=0.5, max_cycle_len=4, weight_range=(1, 2)),
        dict(n_target=5, cycle_fraction=1.5, max_cycle_len=4, weight_range=(1, 2)),
        dict(n_target=5, cycle_fraction=0.5, max_cycle_len=2, weight_range=(1, 2)),
        dict(n_target=5, cycle_fraction=0.5, max_cycle_len=4, weight_range=(3, 2)),
        dict(n_target=5, cycle_fraction=0.5, max_cycle_len=4, weight_range=(0, 2)),
    ])
    def test_invalid_parameters(self, kwargs):
        with pytest.raises(ValueError):
            generate_random_cactus(seed=1, **kwargs)
