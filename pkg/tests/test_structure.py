import random

import pytest

from bipminor.families import bull, cycle, dog, h_tree, path
from bipminor.graph_core import GraphError, SizeCapExceeded, build
from bipminor.structure import (
    blocks,
    component_count,
    components,
    is_connected,
    is_induced_cycle,
    is_k_connected,
    is_nonseparating,
    is_subgraph,
    peripheral_cycles,
    subgraph_embedding,
)

from oracles import (
    brute_blocks,
    brute_peripheral,
    brute_subgraph,
    random_graph,
    random_sparse_connected,
)


class TestComponents:
    def test_cycle_is_one_component(self):
        assert component_count(cycle(4)) == 1

    def test_two_disjoint_edges(self):
        g = build(4, [(0, 1), (2, 3)])
        assert components(g) == (frozenset({0, 1}), frozenset({2, 3}))

    def test_empty_graph_has_zero_components(self):
        assert components(build(0, [])) == ()
        assert not is_connected(build(0, []))


class TestKConnectivity:
    def test_cycles_are_two_connected(self):
        for k in (3, 4, 5, 8):
            assert is_k_connected(cycle(k), 2)
            assert is_k_connected(cycle(k), 2, "standard")

    def test_bull_is_not_two_connected(self):
        assert not is_k_connected(bull(4, [1]), 2)

    def test_p3_middle_vertex_cuts(self):
        assert not is_k_connected(path(3), 2)
        assert not is_k_connected(path(3), 2, "standard")

    def test_single_edge_quirk_between_modes(self):
        k2 = build(2, [(0, 1)])
        assert is_k_connected(k2, 2, "paper")
        assert not is_k_connected(k2, 2, "standard")

    def test_k1_is_not_two_connected(self):
        assert not is_k_connected(build(1, []), 2, "paper")

    def test_dogs_are_two_connected(self):
        for d in (dog(5, [3, 3]), dog(6, [4, 4]), dog(8, [4, 4])):
            assert is_k_connected(d, 2, "paper")
            assert is_k_connected(d, 2, "standard")

    def test_bad_arguments(self):
        with pytest.raises(GraphError):
            is_k_connected(cycle(3), 0)
        with pytest.raises(GraphError):
            is_k_connected(cycle(3), 2, "loose")


class TestBlocks:
    def test_two_horned_bull(self):
        decomposition = blocks(bull(3, [1, 1]))
        kinds = [b.trivial for b in decomposition.blocks]
        assert sorted(kinds) == [False, True, True]
        triangle = next(b for b in decomposition.blocks if not b.trivial)
        assert triangle.vertices == {0, 1, 2}
        assert decomposition.cut_vertices == {0, 1}

    def test_cycle_is_one_block(self):
        decomposition = blocks(cycle(6))
        assert len(decomposition.blocks) == 1
        assert decomposition.blocks[0].edges == cycle(6).edges
        assert decomposition.cut_vertices == frozenset()

    def test_one_eared_dog_is_one_block(self):
        decomposition = blocks(dog(6, [4]))
        assert len(decomposition.blocks) == 1
        assert not decomposition.cut_vertices

    def test_matches_cycle_based_oracle(self):
        rng = random.Random(21)
        for _ in range(120):
            g = random_graph(rng, 8)
            got = blocks(g)
            want_blocks, want_cuts = brute_blocks(g)
            assert {b.edges for b in got.blocks} == want_blocks
            assert got.cut_vertices == want_cuts

    def test_blocks_partition_edges_and_are_two_connected(self):
        rng = random.Random(22)
        for _ in range(60):
            g = random_sparse_connected(rng, 9, extra=3)
            decomposition = blocks(g)
            all_edges = [e for b in decomposition.blocks for e in b.edges]
            assert len(all_edges) == g.edge_count
            assert set(all_edges) == set(g.edges)
            for a in decomposition.blocks:
                for b in decomposition.blocks:
                    if a is not b:
                        assert len(a.vertices & b.vertices) <= 1
                if not a.trivial:
                    assert is_k_connected(a.to_graph(), 2)

    def test_deterministic_order_by_smallest_vertex(self):
        decomposition = blocks(bull(3, [1, 1]))
        mins = [min(b.vertices) for b in decomposition.blocks]
        assert mins == sorted(mins)


class TestInducedCycles:
    def test_square_in_k4_has_chords(self):
        k4 = build(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
        assert not is_induced_cycle(k4, (0, 1, 2, 3))

    def test_dog_ear_is_induced(self):
        d = dog(6, [4, 4])
        assert is_induced_cycle(d, (0, 1, 6, 7))

    def test_dog_snout_is_induced(self):
        d = dog(6, [4, 4])
        assert is_induced_cycle(d, (0, 1, 2, 3, 4, 5))

    def test_not_a_cycle_is_rejected(self):
        with pytest.raises(GraphError, match="not a cycle"):
            is_induced_cycle(cycle(4), (0, 1, 2))
        with pytest.raises(GraphError, match="not a cycle"):
            is_induced_cycle(cycle(4), (0, 1))


class TestNonseparating:
    def test_whole_cycle_is_nonseparating(self):
        assert is_nonseparating(cycle(6), set(range(6)))

    def test_bull_triangle_separates_horn_tips(self):
        assert not is_nonseparating(bull(3, [1, 1]), {0, 1, 2})

    def test_dog_snout_separates(self):
        assert not is_nonseparating(dog(6, [4, 4]), set(range(6)))


class TestPeripheralCycles:
    def test_cycle_has_itself(self):
        assert peripheral_cycles(cycle(6)) == ((0, 1, 2, 3, 4, 5),)

    def test_trees_have_none(self):
        assert peripheral_cycles(path(6)) == ()
        assert peripheral_cycles(h_tree(3)) == ()

    def test_dog_has_exactly_its_ears(self):
        assert peripheral_cycles(dog(6, [4, 4])) == ((0, 1, 6, 7), (2, 3, 8, 9))

    def test_matches_exhaustive_enumeration(self):
        rng = random.Random(23)
        for _ in range(120):
            g = random_graph(rng, 8)
            assert set(peripheral_cycles(g)) == brute_peripheral(g)

    def test_cap(self):
        with pytest.raises(SizeCapExceeded):
            peripheral_cycles(cycle(15))
        assert peripheral_cycles(cycle(15), cap=15)


class TestSubgraph:
    def test_path_in_cycle(self):
        assert is_subgraph(path(3), cycle(4))

    def test_c4_not_in_c6(self):
        assert not is_subgraph(cycle(4), cycle(6))

    def test_h_trees_incomparable(self):
        assert not is_subgraph(h_tree(2), h_tree(3))
        assert not is_subgraph(h_tree(3), h_tree(2))

    def test_embedding_maps_edges_onto_edges(self):
        rng = random.Random(24)
        found = 0
        for _ in range(200):
            h = random_graph(rng, 4)
            g = random_graph(rng, 6)
            image = subgraph_embedding(h, g)
            if image is not None:
                found += 1
                assert len(set(image.values())) == h.vertex_count
                for u, v in h.edges:
                    assert g.has_edge(image[u], image[v])
        assert found > 20

    def test_matches_brute_force(self):
        rng = random.Random(25)
        for _ in range(200):
            h = random_graph(rng, 4)
            g = random_graph(rng, 6)
            assert is_subgraph(h, g) == brute_subgraph(h, g)

    def test_cap(self):
        with pytest.raises(SizeCapExceeded):
            is_subgraph(path(2), build(15, []))
