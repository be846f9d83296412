import random
from fractions import Fraction

import pytest

from richclub import (
    Graph,
    characteristic_from_threshold,
    characteristic_top_n,
    count_dyads,
    degree_sequence,
    density,
    is_graphic,
    load_edge_list,
)
from richclub.errors import (
    DisconnectedGraphError,
    DomainError,
    DuplicateEdgeError,
    EdgeListParseError,
    SelfLoopError,
)
from conftest import graph_from
from oracles import iter_all_graphs, realizable_degree_sequences


class TestLoadEdgeList:
    def test_small_path(self):
        g = load_edge_list(["a b", "b c"])
        assert g.node_count == 3
        assert g.edge_count == 2
        assert sorted(g.degrees, reverse=True) == [2, 1, 1]

    def test_duplicate_edge_rejected(self):
        with pytest.raises(DuplicateEdgeError):
            load_edge_list(["a b", "b a"])

    def test_self_loop_rejected(self):
        with pytest.raises(SelfLoopError):
            load_edge_list(["a a"])

    def test_comments_and_blanks_skipped(self):
        g = load_edge_list(["# header", "", "a b", "   ", "# trailing", "b c"])
        assert g.edge_count == 2

    def test_malformed_line_reports_number(self):
        with pytest.raises(EdgeListParseError, match="line 2"):
            load_edge_list(["a b", "a b c"])

    def test_disconnected_rejected_by_default(self):
        with pytest.raises(DisconnectedGraphError):
            load_edge_list(["a b", "c d"])

    def test_disconnected_allowed_with_flag(self):
        g = load_edge_list(["a b", "c d"], allow_disconnected=True)
        assert g.node_count == 4
        assert not g.is_connected()

    def test_first_appearance_indexing(self):
        g = load_edge_list(["x y", "y z"])
        assert g.index_of("x") == 0
        assert g.index_of("y") == 1
        assert g.label_of(2) == "z"

    def test_handshake(self):
        g = load_edge_list(["a b", "b c", "c a", "c d"])
        assert sum(g.degrees) == 2 * g.edge_count


class TestDegreeSequence:
    def test_star(self, star5):
        assert degree_sequence(star5).degrees == (4, 1, 1, 1, 1)

    def test_k4(self, k4):
        assert degree_sequence(k4).degrees == (3, 3, 3, 3)

    def test_path(self, path3):
        assert degree_sequence(path3).degrees == (2, 1, 1)

    def test_sum_is_twice_edges(self, star5):
        assert degree_sequence(star5).total == 2 * star5.edge_count

    def test_tie_break_by_node_index(self):
        g = graph_from(4, [(0, 1), (2, 3)])  # all degree 1
        assert degree_sequence(g).origin == (0, 1, 2, 3)

    def test_head_tail_examples(self):
        from richclub import DegreeSequence

        ds = DegreeSequence((4, 1, 1, 1, 1))
        assert ds.head(3).degrees == (4, 1, 1)
        assert ds.tail(2).degrees == (1, 1)
        assert ds.head(0).degrees == ()
        assert ds.tail(0).degrees == ()

    def test_head_out_of_bounds(self):
        from richclub import DegreeSequence

        ds = DegreeSequence((2, 1, 1))
        with pytest.raises(DomainError):
            ds.head(4)
        with pytest.raises(DomainError):
            ds.tail(4)

    def test_head_tail_closure(self):
        from richclub import DegreeSequence

        ds = DegreeSequence((5, 4, 4, 2, 1, 0))
        for n in range(len(ds) + 1):
            merged = sorted(ds.head(n).degrees + ds.tail(len(ds) - n).degrees, reverse=True)
            assert tuple(merged) == ds.degrees

    def test_increasing_input_rejected(self):
        from richclub import DegreeSequence

        with pytest.raises(DomainError):
            DegreeSequence((1, 2))


class TestCharacteristics:
    def test_threshold_star(self, star5):
        c = characteristic_from_threshold(star5, 1)
        assert c.values == (1, 0, 0, 0, 0)
        assert (c.n1, c.n0) == (1, 4)

    def test_threshold_k4_zero(self, k4):
        c = characteristic_from_threshold(k4, 0)
        assert c.n1 == 4

    def test_threshold_at_max_degree(self, star5):
        assert characteristic_from_threshold(star5, 4).n1 == 0

    def test_threshold_n1_nonincreasing_in_k(self, star5):
        sizes = [characteristic_from_threshold(star5, k).n1 for k in range(5)]
        assert sizes == sorted(sizes, reverse=True)

    def test_top_n_highest(self, star5):
        assert characteristic_top_n(star5, 1, "highest").values == (1, 0, 0, 0, 0)
        assert characteristic_top_n(star5, 5, "highest").n1 == 5

    def test_top_n_lowest_tie_break(self, path3):
        # endpoints a (index 0) and c (index 2) tie at degree 1; lower index wins
        assert characteristic_top_n(path3, 1, "lowest").values == (1, 0, 0)

    def test_top_n_bounds(self, path3):
        with pytest.raises(DomainError):
            characteristic_top_n(path3, 4)

    def test_bad_mode(self, path3):
        with pytest.raises(DomainError):
            characteristic_top_n(path3, 1, "middle")


class TestCountDyads:
    def test_path_example(self, path3):
        from richclub import Characteristic

        d = count_dyads(path3, Characteristic((1, 1, 0)))
        assert (d.m11, d.m10, d.m00) == (1, 1, 0)

    def test_all_ones(self, k4):
        from richclub import Characteristic

        d = count_dyads(k4, Characteristic((1, 1, 1, 1)))
        assert (d.m11, d.m10, d.m00) == (6, 0, 0)

    def test_k4_two_flagged(self, k4):
        from richclub import Characteristic

        d = count_dyads(k4, Characteristic((1, 1, 0, 0)))
        assert (d.m11, d.m10, d.m00) == (1, 4, 1)

    def test_conservation(self, cycle4):
        from richclub import Characteristic

        random.seed(3)
        for _ in range(10):
            flags = tuple(random.randint(0, 1) for _ in range(4))
            d = count_dyads(cycle4, Characteristic(flags))
            assert d.total == cycle4.edge_count

    def test_wrong_length_rejected(self, k4):
        from richclub import Characteristic

        with pytest.raises(DomainError):
            count_dyads(k4, Characteristic((1, 0)))


class TestDensity:
    def test_k4(self, k4):
        assert density(k4) == 1

    def test_path(self, path3):
        assert density(path3) == Fraction(2, 3)

    def test_edgeless(self):
        assert density(graph_from(5, [])) == 0

    def test_single_node_undefined(self):
        with pytest.raises(DomainError):
            density(graph_from(1, []))


class TestIsGraphic:
    def test_triangle(self):
        assert is_graphic([2, 2, 2]) is True

    def test_odd_sum(self):
        assert is_graphic([3, 1, 1]) is False

    def test_even_sum_but_unrealizable(self):
        # brute-force enumeration over all simple graphs on 4 nodes finds none
        assert (3, 3, 1, 1) not in realizable_degree_sequences(4)
        assert is_graphic([3, 3, 1, 1]) is False

    def test_unsorted_input(self):
        assert is_graphic([1, 2, 2, 1]) is True

    def test_negative_rejected(self):
        with pytest.raises(DomainError):
            is_graphic([2, -1, 1])

    def test_empty_and_zero(self):
        assert is_graphic([]) is True
        assert is_graphic([0, 0]) is True

    def test_matches_brute_force_up_to_5(self):
        from itertools import combinations_with_replacement

        for n in range(1, 6):
            realizable = realizable_degree_sequences(n)
            for seq in combinations_with_replacement(range(n), n):
                seq = tuple(sorted(seq, reverse=True))
                assert is_graphic(seq) == (seq in realizable), seq


class TestGraphInvariants:
    def test_constructor_rejects_self_loop(self):
        with pytest.raises(SelfLoopError):
            graph_from(3, [(0, 0)])

    def test_constructor_rejects_duplicate(self):
        with pytest.raises(DuplicateEdgeError):
            graph_from(3, [(0, 1), (1, 0)])

    def test_adjacency_symmetric(self):
        for edges in iter_all_graphs(4):
            g = graph_from(4, edges)
            for u in range(4):
                for v in g.neighbors(u):
                    assert u in g.neighbors(v)
