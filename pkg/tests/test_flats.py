import random
from math import comb

import pytest

from thagkl.flats import (
    Graph,
    MAX_LATTICE_RANK,
    build_lattice,
    char_poly_lattice,
    closure,
    kl_generic,
    thagomizer_graph,
)
from thagkl.kl import char_poly_boolean, char_poly_thag, kl_poly
from thagkl.polynomials import ONE


def expected_rank_count(n: int, i: int) -> int:
    # flats picking one edge from i spikes, plus unions of i-1 spikes and the hub edge
    return comb(n, i) * 2**i + (comb(n, i - 1) if i >= 1 else 0)


def spike_edges(graph: Graph, j: int) -> tuple[int, int]:
    """Edge indices of the spike at outer vertex j (vertices are 2-based)."""
    a = graph.edges.index((0, j))
    b = graph.edges.index((1, j))
    return a, b


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(2, ((0, 0),))
    with pytest.raises(ValueError):
        Graph(2, ((0, 2),))
    Graph(3, ((0, 1), (0, 1)))  # parallel edges permitted


def test_thagomizer_graph_shapes():
    g0 = thagomizer_graph(0)
    assert (g0.num_vertices, len(g0.edges)) == (2, 1)
    g1 = thagomizer_graph(1)
    assert (g1.num_vertices, len(g1.edges)) == (3, 3)
    assert g1.rank() == 2  # a triangle
    g4 = thagomizer_graph(4)
    assert (g4.num_vertices, len(g4.edges)) == (6, 9)
    assert g4.rank() == 5


def test_closure_of_spike_pulls_in_hub_edge():
    g = thagomizer_graph(4)
    a4, b4 = spike_edges(g, 5)
    assert closure(g, frozenset({a4, b4})) == frozenset({0, a4, b4})


def test_closure_of_empty_set_is_empty():
    g = thagomizer_graph(3)
    assert closure(g, frozenset()) == frozenset()


def test_closure_of_cross_spike_pair_is_itself():
    g = thagomizer_graph(4)
    a1, _ = spike_edges(g, 2)
    _, b3 = spike_edges(g, 4)
    assert closure(g, frozenset({a1, b3})) == frozenset({a1, b3})


def test_closure_properties_randomized():
    rng = random.Random(4242)
    g = thagomizer_graph(4)
    universe = range(len(g.edges))
    for _ in range(60):
        sample = frozenset(rng.sample(universe, rng.randrange(0, 6)))
        closed = closure(g, sample)
        assert sample <= closed  # extensive
        assert closure(g, closed) == closed  # idempotent
        assert g.subset_rank(sample) == g.subset_rank(closed)  # rank-preserving
        bigger = sample | frozenset(rng.sample(universe, 2))
        assert closure(g, sample) <= closure(g, bigger)  # monotone


def test_single_edge_lattice():
    lattice = build_lattice(Graph(2, ((0, 1),)))
    assert len(lattice) == 2
    assert lattice.rank_counts() == [1, 1]


def test_lattice_census_small():
    lattice = build_lattice(thagomizer_graph(2))
    assert len(lattice) == 13
    assert lattice.rank_counts() == [1, 5, 6, 1]
    assert build_lattice(thagomizer_graph(3)).rank_counts()[1] == 7


def test_lattice_census_formula():
    for n in range(5):
        counts = build_lattice(thagomizer_graph(n)).rank_counts()
        assert counts == [expected_rank_count(n, i) for i in range(n + 2)]


def test_lattice_closure_idempotence_and_cover_ranks():
    g = thagomizer_graph(3)
    lattice = build_lattice(g)
    for flat, rank in zip(lattice.flats, lattice.ranks):
        assert closure(g, flat) == flat
        assert g.subset_rank(flat) == rank
    # rank strictly increases along containment
    for i, f in enumerate(lattice.flats):
        for j, g_ in enumerate(lattice.flats):
            if i != j and f < g_:
                assert lattice.ranks[i] < lattice.ranks[j]


def test_lattice_rejects_large_rank():
    with pytest.raises(ValueError):
        build_lattice(thagomizer_graph(MAX_LATTICE_RANK))  # rank n+1 = 9


def test_char_poly_of_bottom_flat():
    lattice = build_lattice(thagomizer_graph(2))
    assert char_poly_lattice(lattice, frozenset()) == ONE


def test_char_poly_of_full_flat():
    for n in range(4):
        lattice = build_lattice(thagomizer_graph(n))
        full = lattice.flats[-1]
        assert char_poly_lattice(lattice, full) == char_poly_thag(n)


def test_char_poly_of_first_type_flats_is_boolean():
    g = thagomizer_graph(3)
    lattice = build_lattice(g)
    for flat, rank in zip(lattice.flats, lattice.ranks):
        if 0 not in flat and all(
            not {a, b} <= flat for a, b in (spike_edges(g, j) for j in range(2, 5))
        ):
            assert char_poly_lattice(lattice, flat) == char_poly_boolean(rank)


def test_moebius_alternation():
    for n in range(4):
        lattice = build_lattice(thagomizer_graph(n))
        row = lattice.mu_row(0)
        for j, mu in row.items():
            assert mu != 0
            assert (mu > 0) == (lattice.ranks[j] % 2 == 0)


def test_kl_generic_base_cases():
    assert kl_generic(build_lattice(thagomizer_graph(0))) == ONE
    assert kl_generic(build_lattice(Graph(3, ((0, 1), (1, 2))))) == ONE  # Boolean


def test_kl_generic_matches_recursion():
    for n in range(5):
        lattice = build_lattice(thagomizer_graph(n))
        assert kl_generic(lattice) == kl_poly(n)


def test_kl_generic_semilength_five():
    lattice = build_lattice(thagomizer_graph(5))
    assert kl_generic(lattice).coeffs == (1, 26, 15)


def test_index_of_rejects_non_flat():
    lattice = build_lattice(thagomizer_graph(2))
    # a complete spike without the hub edge is not closed
    with pytest.raises(ValueError):
        lattice.index_of(frozenset({1, 2}))
