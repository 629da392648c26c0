"""Core graph model: balls, powers, twins, join, complement, enumeration,
isomorphism and the edge-list format."""

import itertools

import pytest

import brute
from idcodes.families import (
    band5_square_root,
    band_graph,
    complete_graph,
    cycle_graph,
    empty_graph,
    path_graph,
    star_graph,
)
from idcodes.graph import (
    Graph,
    ball_symmetric_difference,
    canonical_form,
    closed_ball,
    complement,
    delete_vertex,
    distances_from,
    edge_mask_of,
    enumerate_graphs,
    find_isomorphism,
    format_edge_list,
    graph_from_edge_mask,
    induced_subgraph,
    is_connected,
    is_isomorphic,
    is_twin_free,
    join,
    parse_edge_list,
    power,
    twin_pairs,
)


def test_graph_construction_and_accessors():
    g = Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert g.n == 4
    assert g.edges() == [(0, 1), (1, 2), (2, 3)]
    assert g.edge_count == 3
    assert g.neighbors(1) == [0, 2]
    assert g.degree(0) == 1 and g.degree(1) == 2
    assert g.max_degree() == 2
    assert g.has_edge(1, 2) and not g.has_edge(0, 3)


def test_graph_rejects_bad_edges():
    with pytest.raises(ValueError):
        Graph(3, [(0, 3)])
    with pytest.raises(ValueError):
        Graph(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph(-1)


def test_duplicate_edges_collapse():
    g = Graph(3, [(0, 1), (1, 0), (0, 1)])
    assert g.edge_count == 1


def test_closed_ball_band_graphs():
    # ball of the first vertex in the order-2 band graph (the 4-path)
    assert closed_ball(band_graph(2), 0, 1) == {0, 1}
    # ball of radius zero
    assert closed_ball(band_graph(2), 3, 0) == {3}
    # middle vertex of the order-3 band graph reaches five vertices
    assert closed_ball(band_graph(3), 2, 1) == {0, 1, 2, 3, 4}


def test_closed_ball_matches_naive_bfs():
    for g in [band_graph(3), cycle_graph(7), star_graph(4), band5_square_root()]:
        for r in range(4):
            for x in range(g.n):
                assert closed_ball(g, x, r) == brute.naive_ball(g, x, r)


def test_closed_ball_rejects_bad_vertex():
    with pytest.raises(ValueError):
        closed_ball(band_graph(2), 7, 1)


def test_ball_symmetric_difference():
    # consecutive vertices in a band graph are separated by a single vertex
    for k in range(2, 5):
        g = band_graph(k)
        for i in range(k - 1):
            assert ball_symmetric_difference(g, i, i + 1, 1) == {i + k}
    # twins have equal balls
    assert ball_symmetric_difference(complete_graph(3), 0, 1, 1) == frozenset()
    # inner pair of the 4-path
    assert ball_symmetric_difference(path_graph(4), 1, 2, 1) == {0, 3}


def test_ball_symmetric_difference_rejects_equal_pair():
    with pytest.raises(ValueError):
        ball_symmetric_difference(path_graph(4), 2, 2, 1)


def test_power_identity_and_idempotence():
    for g in [path_graph(5), cycle_graph(6), band_graph(2)]:
        assert power(g, 1) == g
    # power composition law over assorted graphs and exponents
    for g in [path_graph(7), cycle_graph(7), band5_square_root()]:
        for r, s in [(2, 2), (2, 3), (3, 2)]:
            assert power(power(g, r), s) == power(g, r * s)


def test_power_of_path_is_band_graph():
    assert power(path_graph(6), 2) == band_graph(3)
    assert is_isomorphic(power(path_graph(6), 2), band_graph(3))
    assert power(path_graph(8), 3) == band_graph(4)


def test_square_root_fixture_power():
    fix = band5_square_root()
    assert power(fix, 2) == band_graph(5)
    # distance-3 chord along the path spine
    assert fix.has_edge(1, 4)


def test_power_disconnected_pairs_never_joined():
    g = Graph(4, [(0, 1), (2, 3)])
    sq = power(g, 3)
    assert not sq.has_edge(0, 2) and not sq.has_edge(1, 3)


def test_twin_pairs():
    assert twin_pairs(complete_graph(2)) == [(0, 1)]
    assert twin_pairs(empty_graph(2)) == []
    for k in range(1, 6):
        assert twin_pairs(band_graph(k)) == []
    assert twin_pairs(complete_graph(4)) == list(itertools.combinations(range(4), 2))
    assert not is_twin_free(complete_graph(3))
    assert is_twin_free(path_graph(4))


def test_twin_pairs_match_naive():
    for g in enumerate_graphs(4):
        assert twin_pairs(g) == brute.naive_twin_pairs(g)


def test_join():
    c4 = join(band_graph(1), band_graph(1))
    assert is_isomorphic(c4, cycle_graph(4))
    assert c4.edge_count == 4
    star = join(Graph(1), empty_graph(3))
    assert is_isomorphic(star, star_graph(3))
    # edge count grows by the product of the part sizes
    g1, g2 = path_graph(3), cycle_graph(5)
    assert join(g1, g2).edge_count == g1.edge_count + g2.edge_count + g1.n * g2.n


def test_complement_involution_and_band_facts():
    for g in [path_graph(5), cycle_graph(6), band_graph(3), star_graph(4)]:
        assert complement(complement(g)) == g
    for k in range(2, 6):
        assert band_graph(k).max_degree() == 2 * k - 2
        assert is_connected(complement(band_graph(k)))
        assert is_connected(band_graph(k))
    # the order-1 band graph is the valid but disconnected two-vertex graph
    assert not is_connected(band_graph(1))


def test_delete_vertex_reindexes_and_reports_mapping():
    g = cycle_graph(5)
    h, mapping = delete_vertex(g, 2)
    assert h.n == 4
    assert mapping == {0: 0, 1: 1, 3: 2, 4: 3}
    assert h.edges() == [(0, 1), (2, 3), (3, 0)] or h.edges() == sorted([(0, 1), (2, 3), (0, 3)])
    # original graph untouched
    assert g.n == 5 and g.edge_count == 5


def test_induced_subgraph():
    g = band_graph(3)
    sub = induced_subgraph(g, [0, 2, 4, 5])
    # kept pairs at band distance <= 2: (0,2), (2,4), (4,5)
    assert sub.edges() == [(0, 1), (1, 2), (2, 3)]


def test_connectivity():
    assert is_connected(path_graph(1))
    assert is_connected(empty_graph(0))
    assert is_connected(cycle_graph(5))
    assert not is_connected(empty_graph(2))
    assert not is_connected(Graph(4, [(0, 1), (2, 3)]))


def test_distances():
    g = Graph(5, [(0, 1), (1, 2), (3, 4)])
    assert distances_from(g, 0) == [0, 1, 2, None, None]


def test_enumerate_graphs_counts():
    assert sum(1 for _ in enumerate_graphs(1)) == 1
    assert sum(1 for _ in enumerate_graphs(3)) == 8
    connected_twin_free = list(
        enumerate_graphs(3, predicate=lambda g: is_connected(g) and is_twin_free(g))
    )
    assert len(connected_twin_free) == 3
    assert all(is_isomorphic(g, path_graph(3)) for g in connected_twin_free)


def test_enumerate_graphs_order_is_lexicographic():
    first_four = list(itertools.islice(enumerate_graphs(3), 4))
    assert [g.edges() for g in first_four] == [[], [(0, 1)], [(0, 2)], [(0, 1), (0, 2)]]
    for mask, g in enumerate(enumerate_graphs(3)):
        assert edge_mask_of(g) == mask
        assert graph_from_edge_mask(3, mask) == g


def test_enumerate_graphs_dedup_matches_known_counts():
    # numbers of isomorphism classes of simple graphs on 3 and 4 vertices
    assert sum(1 for _ in enumerate_graphs(3, dedup=True)) == 4
    assert sum(1 for _ in enumerate_graphs(4, dedup=True)) == 11


def test_enumerate_graphs_cap():
    with pytest.raises(ValueError):
        next(enumerate_graphs(8))
    assert sum(1 for _ in enumerate_graphs(1, cap=1)) == 1


def test_canonical_form_invariant_under_relabeling():
    g = path_graph(4)
    relabeled = Graph(4, [(2, 0), (0, 3), (3, 1)])
    assert canonical_form(g) == canonical_form(relabeled)
    assert canonical_form(g) != canonical_form(cycle_graph(4))
    with pytest.raises(ValueError):
        canonical_form(empty_graph(9))


def test_isomorphism():
    assert is_isomorphic(band_graph(2), path_graph(4))
    assert not is_isomorphic(cycle_graph(4), path_graph(4))
    # reversing the band order is an automorphism
    for k in range(1, 5):
        g = band_graph(k)
        n = g.n
        relabeled = Graph(n, [(n - 1 - u, n - 1 - v) for u, v in g.edges()])
        assert relabeled == g
        mapping = find_isomorphism(g, g)
        assert mapping is not None and len(set(mapping)) == n


def test_isomorphism_witness_preserves_edges():
    g1 = cycle_graph(6)
    g2 = Graph(6, [(5, 3), (3, 1), (1, 4), (4, 2), (2, 0), (0, 5)])
    mapping = find_isomorphism(g1, g2)
    assert mapping is not None
    for u, v in g1.edges():
        assert g2.has_edge(mapping[u], mapping[v])
    with pytest.raises(ValueError):
        find_isomorphism(empty_graph(13), empty_graph(13))


def test_band_graph_automorphism_count():
    # identity plus the order reversal, nothing else
    for k in range(2, 5):
        assert brute.automorphism_count(band_graph(k)) == 2


def test_empty_symmetric_difference_means_twins_in_power():
    for g in enumerate_graphs(4):
        for r in (1, 2):
            pg = power(g, r)
            twins = set(twin_pairs(pg))
            for x in range(g.n):
                for y in range(x + 1, g.n):
                    empty = not ball_symmetric_difference(g, x, y, r)
                    assert empty == ((x, y) in twins)


def test_ball_equals_power_ball():
    for g in [path_graph(7), cycle_graph(8), band5_square_root()]:
        for r in (1, 2, 3):
            pg = power(g, r)
            for x in range(g.n):
                assert closed_ball(g, x, r) == closed_ball(pg, x, 1)


def test_edge_list_round_trip():
    for g in [band_graph(3), star_graph(4), empty_graph(2), Graph(1)]:
        assert parse_edge_list(format_edge_list(g)) == g


def test_edge_list_parsing_details():
    text = "# a comment\n3 2\n0 1  # trailing comment\n1 2\n"
    g = parse_edge_list(text)
    assert g.edges() == [(0, 1), (1, 2)]
    with pytest.raises(ValueError):
        parse_edge_list("3 2\n0 1\n")
    with pytest.raises(ValueError):
        parse_edge_list("3 1\n0 x\n")
    with pytest.raises(ValueError):
        parse_edge_list("")


def test_format_edge_list_sorted_header():
    g = Graph(4, [(3, 2), (1, 0)])
    assert format_edge_list(g) == "4 2\n0 1\n2 3\n"
