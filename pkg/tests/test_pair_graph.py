import random

import networkx as nx
import pytest

from bcnrecon import (
    StatePair,
    WeightedPairGraph,
    build_wpg,
    family_cycle_stayer,
    family_stay_stepper,
    random_bcn,
)


def to_nx(wpg):
    graph = nx.DiGraph()
    graph.add_nodes_from(wpg.vertices)
    graph.add_edges_from(wpg.edges)
    return graph


def random_graphs(count, n_states=6, n_inputs=3, n_outputs=2):
    for seed in range(count):
        yield build_wpg(random_bcn(n_states, n_inputs, n_outputs, seed))


class TestStatePair:
    def test_canonical_order(self):
        assert StatePair.of(4, 2) == StatePair(2, 4)
        assert str(StatePair(2, 4)) == "2,4"
        assert tuple(StatePair(2, 4)) == (2, 4)

    def test_rejects_equal_states(self):
        with pytest.raises(ValueError, match="differ"):
            StatePair.of(3, 3)

    def test_rejects_unsorted_or_nonpositive(self):
        with pytest.raises(ValueError):
            StatePair(4, 2)
        with pytest.raises(ValueError):
            StatePair(0, 1)

    def test_sort_order(self):
        assert sorted([StatePair(2, 4), StatePair(1, 5), StatePair(1, 2)]) == \
            [StatePair(1, 2), StatePair(1, 5), StatePair(2, 4)]


class TestConstructionChecks:
    def test_rejects_empty_weight(self):
        v = StatePair(1, 2)
        with pytest.raises(ValueError, match="empty weight"):
            WeightedPairGraph([v], {(v, v): ()}, 2)

    def test_rejects_unknown_endpoint(self):
        v, w = StatePair(1, 2), StatePair(1, 3)
        with pytest.raises(ValueError, match="vertex set"):
            WeightedPairGraph([v], {(v, w): {1}}, 2)

    def test_rejects_out_of_range_input(self):
        v = StatePair(1, 2)
        with pytest.raises(ValueError, match="outside"):
            WeightedPairGraph([v], {(v, v): {3}}, 2)

    def test_rejects_overlapping_weights(self):
        a, b, c = StatePair(1, 2), StatePair(1, 3), StatePair(2, 3)
        with pytest.raises(ValueError, match="overlapping"):
            WeightedPairGraph([a, b, c], {(a, b): {1}, (a, c): {1}}, 2)


class TestBuild:
    def test_example_matches_reference(self, ex5):
        wpg = build_wpg(ex5)
        assert wpg.vertices == (StatePair(1, 2), StatePair(1, 4),
                                StatePair(2, 4), StatePair(3, 5))
        assert wpg.edges == {
            (StatePair(1, 2), StatePair(1, 4)): frozenset({1}),
            (StatePair(1, 4), StatePair(2, 4)): frozenset({2}),
        }

    def test_injective_readout_gives_empty_graph(self, injective_readout):
        wpg = build_wpg(injective_readout)
        assert wpg.vertices == () and wpg.edges == {}

    def test_stay_stepper_4_spot_checks(self):
        wpg = build_wpg(family_stay_stepper(4))
        assert len(wpg.vertices) == 6
        assert wpg.edges[(StatePair(1, 2), StatePair(1, 2))] == frozenset({3, 4})
        assert wpg.edges[(StatePair(1, 2), StatePair(1, 3))] == frozenset({2})

    def test_constant_output_fills_vertex_set(self):
        for seed in range(5):
            bcn = random_bcn(6, 2, 1, seed)
            assert len(build_wpg(bcn).vertices) == 15


class TestOutdegree:
    def test_example_values(self, ex5):
        wpg = build_wpg(ex5)
        degrees = {str(v): wpg.outdegree(v) for v in wpg.vertices}
        assert degrees == {"1,2": 1, "1,4": 1, "2,4": 0, "3,5": 0}

    def test_cycle_stayer_all_two(self):
        wpg = build_wpg(family_cycle_stayer(4))
        assert all(wpg.outdegree(v) == 2 for v in wpg.vertices)

    def test_unknown_vertex_rejected(self, ex5):
        with pytest.raises(ValueError, match="unknown vertex"):
            build_wpg(ex5).outdegree(StatePair(1, 3))

    def test_never_exceeds_alphabet(self):
        for wpg in random_graphs(20):
            assert all(wpg.outdegree(v) <= wpg.n_inputs for v in wpg.vertices)


class TestDoomedSet:
    def test_example_all_doomed(self, ex5):
        wpg = build_wpg(ex5)
        assert wpg.doomed_set() == frozenset(wpg.vertices)

    def test_cycle_stayer_all_doomed(self):
        wpg = build_wpg(family_cycle_stayer(4))
        assert wpg.doomed_set() == frozenset(wpg.vertices)

    def test_saturated_graph_has_empty_doomed_set(self, swap_pair):
        wpg = build_wpg(swap_pair)
        assert wpg.doomed_set() == frozenset()

    def test_closure_property(self):
        # contains every low-outdegree vertex; closed under paths into it
        for wpg in random_graphs(30):
            doomed = wpg.doomed_set()
            for v in wpg.vertices:
                if wpg.outdegree(v) < wpg.n_inputs:
                    assert v in doomed
                for target in wpg.successors(v):
                    if target in doomed:
                        assert v in doomed


class TestCompleteSubgraph:
    def test_example_has_none(self, ex5):
        assert build_wpg(ex5).complete_subgraph() is None
        assert not build_wpg(ex5).has_complete_subgraph()

    def test_swap_pair_witness(self, swap_pair):
        assert build_wpg(swap_pair).complete_subgraph() == frozenset({StatePair(1, 2)})

    def test_empty_graph_has_none(self, injective_readout):
        assert not build_wpg(injective_readout).has_complete_subgraph()

    def test_witness_is_internally_complete(self):
        found = 0
        for wpg in random_graphs(60, n_outputs=1):
            witness = wpg.complete_subgraph()
            if witness is None:
                continue
            found += 1
            for v in witness:
                internal = {
                    u
                    for target, weight in wpg.successors(v).items()
                    if target in witness
                    for u in weight
                }
                assert len(internal) == wpg.n_inputs
        assert found > 0


class TestCycles:
    def test_example_acyclic(self, ex5):
        assert build_wpg(ex5).find_cycle() is None

    def test_self_loop_reported(self, swap_pair):
        wpg = build_wpg(swap_pair)
        assert wpg.find_cycle() == (StatePair(1, 2), StatePair(1, 2))

    def test_cycle_stayer_has_cycle(self):
        wpg = build_wpg(family_cycle_stayer(4))
        cycle = wpg.find_cycle()
        assert cycle is not None and cycle[0] == cycle[-1]
        for src, dst in zip(cycle, cycle[1:]):
            assert (src, dst) in wpg.edges

    def test_agrees_with_networkx(self):
        for wpg in random_graphs(40):
            assert wpg.has_cycle() == (not nx.is_directed_acyclic_graph(to_nx(wpg)))

    def test_acyclic_implies_no_complete_subgraph(self):
        for wpg in random_graphs(60):
            if not wpg.has_cycle():
                assert not wpg.has_complete_subgraph()


class TestStrongConnectivity:
    def test_stay_stepper_connected(self):
        assert build_wpg(family_stay_stepper(4)).is_strongly_connected()

    def test_example_not_connected(self, ex5):
        assert not build_wpg(ex5).is_strongly_connected()

    def test_single_self_loop_connected(self, swap_pair):
        assert build_wpg(swap_pair).is_strongly_connected()

    def test_empty_graph_rejected(self, injective_readout):
        with pytest.raises(ValueError, match="empty"):
            build_wpg(injective_readout).is_strongly_connected()

    def test_agrees_with_networkx(self):
        for wpg in random_graphs(40):
            if not wpg.vertices:
                continue
            assert wpg.is_strongly_connected() == \
                nx.is_strongly_connected(to_nx(wpg))


class TestLongestPath:
    def test_example_chain_length(self, ex5):
        assert build_wpg(ex5).longest_path_length() == 2

    def test_cyclic_graph_rejected(self, swap_pair):
        with pytest.raises(ValueError, match="cyclic"):
            build_wpg(swap_pair).longest_path_length()

    def test_agrees_with_networkx(self):
        for wpg in random_graphs(40):
            if wpg.has_cycle() or not wpg.vertices:
                continue
            assert wpg.longest_path_length() == nx.dag_longest_path_length(to_nx(wpg))


class TestDisjointWeights:
    def test_holds_on_all_built_graphs(self):
        for wpg in random_graphs(40):
            for v in wpg.vertices:
                weights = list(wpg.successors(v).values())
                union = set().union(*weights) if weights else set()
                assert len(union) == sum(len(w) for w in weights)
