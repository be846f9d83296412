import random
from fractions import Fraction

import pytest

from richclub import (
    Characteristic,
    DegreeSequence,
    count_dyads,
    degree_sequence,
    dyadicity,
    expected_dyads,
    heterophilicity,
    ub_m10,
    ub_m10_basic,
    ub_m11,
    ub_m11_basic,
)
from richclub.errors import DomainError, UndefinedRatioError
from conftest import graph_from
from oracles import average_dyads_over_placements, random_simple_graph


class TestExpectedDyads:
    def test_k4_two(self, k4):
        exp = expected_dyads(k4, 2)
        assert exp.expected_m11 == 1
        assert exp.expected_m10 == 4

    def test_path_two(self, path3):
        exp = expected_dyads(path3, 2)
        assert exp.expected_m11 == Fraction(2, 3)
        assert exp.expected_m10 == Fraction(4, 3)

    def test_empty_club(self, star5):
        exp = expected_dyads(star5, 0)
        assert exp.expected_m11 == 0
        assert exp.expected_m10 == 0

    def test_single_node_graph_undefined(self):
        with pytest.raises(DomainError):
            expected_dyads(graph_from(1, []), 0)

    def test_matches_placement_average_exactly(self):
        # exact rational average over every C(N, n1) placement, small random graphs
        rng = random.Random(11)
        for _ in range(15):
            n = rng.randint(2, 7)
            m = rng.randint(0, n * (n - 1) // 2)
            edges = random_simple_graph(rng, n, m)
            g = graph_from(n, edges)
            for n1 in range(n + 1):
                want11, want10 = average_dyads_over_placements(n, edges, n1)
                exp = expected_dyads(g, n1)
                assert exp.expected_m11 == want11
                assert exp.expected_m10 == want10


class TestRatios:
    def test_path_club_pair(self, path3):
        c = Characteristic((1, 1, 0))
        counts = count_dyads(path3, c)
        exp = expected_dyads(path3, 2)
        assert dyadicity(counts, exp) == pytest.approx(1.5)
        assert heterophilicity(counts, exp) == pytest.approx(0.75)

    def test_k4_matches_expectation(self, k4):
        counts = count_dyads(k4, Characteristic((1, 1, 0, 0)))
        exp = expected_dyads(k4, 2)
        assert dyadicity(counts, exp) == 1.0
        assert heterophilicity(counts, exp) == 1.0

    def test_path_endpoints(self, path3):
        counts = count_dyads(path3, Characteristic((1, 0, 1)))
        exp = expected_dyads(path3, 2)
        assert dyadicity(counts, exp) == 0.0
        assert heterophilicity(counts, exp) == pytest.approx(1.5)

    def test_degenerate_club_undefined(self, path3):
        counts = count_dyads(path3, Characteristic((1, 0, 0)))
        with pytest.raises(UndefinedRatioError):
            dyadicity(counts, expected_dyads(path3, 1))

    def test_full_club_heterophilicity_undefined(self, path3):
        counts = count_dyads(path3, Characteristic((1, 1, 1)))
        with pytest.raises(UndefinedRatioError):
            heterophilicity(counts, expected_dyads(path3, 3))


class TestBasicBounds:
    def test_star_m11(self, star5):
        assert ub_m11_basic(star5, 3) == 3

    def test_k4_m11(self, k4):
        assert ub_m11_basic(k4, 4) == 6

    def test_singleton_club(self, k4):
        assert ub_m11_basic(k4, 1) == 0

    def test_star_m10(self, star5):
        assert ub_m10_basic(star5, 1) == 4

    def test_k4_m10(self, k4):
        assert ub_m10_basic(k4, 2) == 4

    def test_empty_club_m10(self, k4):
        assert ub_m10_basic(k4, 0) == 0


class TestStructuralBounds:
    def test_star_m11(self):
        ds = DegreeSequence((4, 1, 1, 1, 1))
        # the unique realization has exactly 2 edges among the 3 top-degree nodes
        assert ub_m11(ds, 3) == 2

    def test_k4_m11(self):
        assert ub_m11(DegreeSequence((3, 3, 3, 3)), 4) == 6

    def test_regular_m11(self):
        assert ub_m11(DegreeSequence((2, 2, 2, 2, 2, 2)), 4) == 4

    def test_star_m10(self):
        assert ub_m10(DegreeSequence((4, 1, 1, 1, 1)), 1) == 4

    def test_k4_m10(self):
        assert ub_m10(DegreeSequence((3, 3, 3, 3)), 2) == 4

    def test_empty_club(self):
        assert ub_m10(DegreeSequence((3, 3, 3, 3)), 0) == 0
        assert ub_m11(DegreeSequence((3, 3, 3, 3)), 0) == 0

    def test_ceiling_on_half_sum(self):
        # head degrees (3, 1): sum of min(d, 1) = 2, ceil(2/2) = 1
        assert ub_m11(DegreeSequence((3, 1, 1, 1)), 2) == 1
        # head degrees (1, 1, 1): sum min(d, 2) = 3, ceil(3/2) = 2
        assert ub_m11(DegreeSequence((1, 1, 1, 1)), 3) == 2

    def test_n1_out_of_range(self):
        with pytest.raises(DomainError):
            ub_m11(DegreeSequence((2, 2, 2)), 4)


class TestBoundProperties:
    def test_dominance_random_graphs(self):
        rng = random.Random(5)
        for _ in range(30):
            n = rng.randint(2, 9)
            m = rng.randint(1, n * (n - 1) // 2)
            g = graph_from(n, random_simple_graph(rng, n, m))
            ds = degree_sequence(g)
            for n1 in range(n + 1):
                assert ub_m11(ds, n1) <= ub_m11_basic(g, n1)
                assert ub_m10(ds, n1) <= ub_m10_basic(g, n1)

    def test_m11_bound_monotone_in_n1(self):
        rng = random.Random(6)
        for _ in range(30):
            n = rng.randint(2, 9)
            m = rng.randint(1, n * (n - 1) // 2)
            g = graph_from(n, random_simple_graph(rng, n, m))
            ds = degree_sequence(g)
            values = [ub_m11(ds, n1) for n1 in range(n + 1)]
            assert values == sorted(values)

    def test_bounds_hold_for_every_placement(self):
        rng = random.Random(7)
        for _ in range(20):
            n = rng.randint(2, 7)
            m = rng.randint(1, n * (n - 1) // 2)
            edges = random_simple_graph(rng, n, m)
            g = graph_from(n, edges)
            ds = degree_sequence(g)
            for mask in range(1 << n):
                flags = tuple((mask >> i) & 1 for i in range(n))
                d = count_dyads(g, Characteristic(flags))
                n1 = sum(flags)
                assert d.m11 <= ub_m11(ds, n1)
                assert d.m10 <= ub_m10(ds, n1)
