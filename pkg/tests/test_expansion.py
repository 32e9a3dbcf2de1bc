import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bipower import (
    EmptyBagError,
    Graph,
    HoleNotInducedError,
    HoleTooShortError,
    bipartition,
    chordality,
    expand,
    induced_subgraph,
    is_induced_cycle,
    preserves_k_chordality_check,
    project_hole,
)

from conftest import cycle_graph, graphs


def test_all_ones_is_isomorphic_copy():
    g = cycle_graph(6)
    exp = expand(g, [1] * 6)
    assert exp.expanded == g
    assert exp.copy_to_base == tuple(range(6))


def test_single_edge_with_doubled_bag():
    g = Graph.from_edges(2, [(0, 1)])
    exp = expand(g, [2, 1])
    # copies 0,1 of base 0; copy 2 of base 1
    assert sorted(exp.expanded.edges()) == [(0, 2), (1, 2)]
    assert not exp.expanded.has_edge(0, 1)


def test_c4_with_one_doubled_bag():
    g = cycle_graph(4)
    exp = expand(g, [2, 1, 1, 1])
    assert exp.expanded.n == 5
    assert exp.expanded.edge_count() == 6
    assert sorted(exp.expanded.edges()) == [(0, 2), (0, 4), (1, 2), (1, 4), (2, 3), (3, 4)]


def test_empty_bag_rejected():
    with pytest.raises(EmptyBagError):
        expand(cycle_graph(4), [1, 0, 1, 1])
    with pytest.raises(ValueError):
        expand(cycle_graph(4), [1, 1, 1])


def test_blocks_are_contiguous_by_base_index():
    exp = expand(cycle_graph(4), [2, 3, 1, 2])
    assert exp.offsets == (0, 2, 5, 6)
    assert list(exp.copies_of(1)) == [2, 3, 4]
    assert exp.copy_to_base == (0, 0, 1, 1, 1, 2, 3, 3)


@given(graphs(max_n=6), st.data())
@settings(max_examples=60, deadline=None)
def test_conditions_a_and_b(g, data):
    sizes = data.draw(st.lists(st.integers(1, 3), min_size=g.n, max_size=g.n))
    exp = expand(g, sizes)
    assert exp.expanded.n == sum(sizes)
    for x in range(exp.expanded.n):
        for y in range(x + 1, exp.expanded.n):
            bx, by = exp.copy_to_base[x], exp.copy_to_base[y]
            expected = bx != by and g.has_edge(bx, by)
            assert exp.expanded.has_edge(x, y) == expected


@given(graphs(max_n=6), st.data())
@settings(max_examples=60, deadline=None)
def test_first_copies_induce_base(g, data):
    sizes = data.draw(st.lists(st.integers(1, 3), min_size=g.n, max_size=g.n))
    exp = expand(g, sizes)
    sub, mapping = induced_subgraph(exp.expanded, exp.first_copies())
    assert sub == g
    assert [exp.copy_to_base[v] for v in mapping] == list(range(g.n))


@given(graphs(max_n=6), st.data())
@settings(max_examples=60, deadline=None)
def test_same_bag_copies_share_neighborhoods(g, data):
    sizes = data.draw(st.lists(st.integers(1, 3), min_size=g.n, max_size=g.n))
    exp = expand(g, sizes)
    for v in range(g.n):
        copies = list(exp.copies_of(v))
        base_nbrs = exp.expanded.adj[copies[0]]
        for c in copies[1:]:
            assert exp.expanded.adj[c] == base_nbrs


@given(graphs(max_n=6), st.data())
@settings(max_examples=40, deadline=None)
def test_bipartite_base_gives_bipartite_expansion(g, data):
    try:
        bipartition(g)
    except ValueError:
        return
    sizes = data.draw(st.lists(st.integers(1, 3), min_size=g.n, max_size=g.n))
    exp = expand(g, sizes)
    bipartition(exp.expanded)  # must not raise


@given(graphs(max_n=6), st.data())
@settings(max_examples=40, deadline=None)
def test_chordality_preserved(g, data):
    sizes = data.draw(st.lists(st.integers(1, 3), min_size=g.n, max_size=g.n))
    exp = expand(g, sizes)
    base_c = chordality(g)
    expanded_c = chordality(exp.expanded)
    if base_c >= 4:
        assert expanded_c == base_c
    else:
        assert expanded_c <= 4
    assert preserves_k_chordality_check(exp, 4)
    assert preserves_k_chordality_check(exp, max(4, base_c))


class TestProjectHole:
    def test_identity_relabeling(self):
        exp = expand(cycle_graph(6), [1] * 6)
        assert project_hole(exp, [0, 1, 2, 3, 4, 5]) == [0, 1, 2, 3, 4, 5]

    def test_hole_avoiding_the_duplicate(self):
        exp = expand(cycle_graph(6), [2, 1, 1, 1, 1, 1])
        # copies: base 0 -> {0, 1}; base v -> {v + 1} for v >= 1
        hole = [0, 2, 3, 4, 5, 6]
        assert is_induced_cycle(exp.expanded, hole)
        assert project_hole(exp, hole) == [0, 1, 2, 3, 4, 5]

    def test_hole_through_second_copy(self):
        exp = expand(cycle_graph(6), [2, 1, 1, 1, 1, 1])
        hole = [1, 2, 3, 4, 5, 6]  # second copy of base 0
        assert is_induced_cycle(exp.expanded, hole)
        assert project_hole(exp, hole) == [0, 1, 2, 3, 4, 5]

    def test_length_5_hole_projects(self):
        exp = expand(cycle_graph(5), [1, 2, 1, 1, 1])
        hole = [0, 2, 3, 4, 5]
        assert is_induced_cycle(exp.expanded, hole)
        assert project_hole(exp, hole) == [0, 1, 2, 3, 4]

    def test_short_holes_rejected(self):
        # two copies of one endpoint plus two shared neighbors: a 4-hole
        # with no base image, which is exactly why short holes are refused
        g = Graph.from_edges(3, [(0, 1), (1, 2)])
        exp = expand(g, [1, 2, 1])
        four_hole = [0, 1, 3, 2]
        assert is_induced_cycle(exp.expanded, four_hole)
        with pytest.raises(HoleTooShortError):
            project_hole(exp, four_hole)

    def test_non_induced_input_rejected(self):
        exp = expand(cycle_graph(6), [1] * 6)
        with pytest.raises(HoleNotInducedError):
            project_hole(exp, [0, 1, 2, 3, 4])  # not even a cycle

    def test_projection_random_corpus(self):
        from bipower import largest_hole

        rng = random.Random(5)
        checked = 0
        for _ in range(200):
            n = rng.randint(5, 8)
            base = Graph.from_edges(
                n,
                [
                    (u, v)
                    for u in range(n)
                    for v in range(u + 1, n)
                    if rng.random() < 0.35
                ],
            )
            hole = largest_hole(base)
            if hole is None or len(hole) < 5:
                continue
            sizes = [rng.randint(1, 2) for _ in range(n)]
            exp = expand(base, sizes)
            lifted = [exp.offsets[v] for v in hole]
            assert is_induced_cycle(exp.expanded, lifted)
            assert project_hole(exp, lifted) == hole
            checked += 1
        assert checked >= 10
