"""Graph construction and marked-configuration tests."""

import itertools

import pytest

from simplexsearch import (CASE_TAGS, InvalidSizeError, MarkedConfiguration,
                           build_complete, build_simplex, named_configuration,
                           parse_custom_config, partner, simplex_coordinate,
                           simplex_vertex_id)


def test_complete_graph_basic():
    g = build_complete(7)
    assert g.n_vertices == 7
    assert g.degree == 6
    for v in range(7):
        assert v not in g.neighbors[v]
        assert len(set(g.neighbors[v])) == 6


def test_complete_graph_too_small():
    with pytest.raises(InvalidSizeError):
        build_complete(1)


@pytest.mark.parametrize("m", [2, 3, 5, 8])
def test_simplex_regular_and_sized(m):
    g = build_simplex(m)
    assert g.n_vertices == m * (m + 1)
    assert all(len(nbrs) == m for nbrs in g.neighbors)
    # symmetry of the adjacency relation
    for v in range(g.n_vertices):
        for u in g.neighbors[v]:
            assert v in g.neighbors[u]


def test_simplex_one_edge_per_clique_pair():
    m = 6
    g = build_simplex(m)
    cross = {}
    for v in range(g.n_vertices):
        i, _ = simplex_coordinate(v, m)
        for u in g.neighbors[v]:
            j, _ = simplex_coordinate(u, m)
            if i < j:
                cross.setdefault((i, j), set()).add((v, u))
    assert set(cross) == set(itertools.combinations(range(m + 1), 2))
    assert all(len(edges) == 1 for edges in cross.values())


def test_coordinate_roundtrip_and_partner():
    m = 9
    for v in range(m * (m + 1)):
        i, j = simplex_coordinate(v, m)
        assert i != j
        assert simplex_vertex_id(i, j, m) == v
        p = partner(v, m)
        assert simplex_coordinate(p, m) == (j, i)
        assert partner(p, m) == v  # involution


def test_vertex_id_rejects_diagonal():
    with pytest.raises(ValueError):
        simplex_vertex_id(3, 3, 9)
    with pytest.raises(ValueError):
        simplex_vertex_id(0, 10, 9)


def test_marked_configuration_dedupes_and_sorts():
    cfg = MarkedConfiguration((5, 2, 5))
    assert cfg.vertices == (2, 5)
    assert cfg.k == 2
    with pytest.raises(ValueError):
        MarkedConfiguration(())


@pytest.mark.parametrize("case,expected_k", [
    ("two-a", 2), ("two-b", 2), ("two-c", 2), ("two-d", 2), ("two-e", 2),
    ("ring-1", 11), ("clique-plus-1", 11), ("ring-2", 22), ("ring-2-shift", 22),
])
def test_named_configuration_counts(case, expected_k):
    m = 10
    cfg = named_configuration(case, m)
    assert cfg.case_tag == case
    assert cfg.k == expected_k
    assert all(0 <= v < m * (m + 1) for v in cfg.vertices)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_k_in_clique_counts(k):
    cfg = named_configuration("k-in-clique", 8, k)
    assert cfg.k == k
    # all marked vertices live in clique 0
    assert all(simplex_coordinate(v, 8)[0] == 0 for v in cfg.vertices)


def test_named_configuration_errors():
    with pytest.raises(ValueError):
        named_configuration("nope", 10)
    with pytest.raises(InvalidSizeError):
        named_configuration("two-a", 4)
    with pytest.raises(ValueError):
        named_configuration("k-in-clique", 10)  # missing k
    with pytest.raises(ValueError):
        named_configuration("k-in-clique", 10, 10)  # k must be < M


def test_ring_configs_marked_per_clique():
    m = 7
    for case, per_clique in (("ring-1", 1), ("ring-2", 2), ("ring-2-shift", 2)):
        cfg = named_configuration(case, m)
        by_clique = {}
        for v in cfg.vertices:
            i, _ = simplex_coordinate(v, m)
            by_clique[i] = by_clique.get(i, 0) + 1
        assert set(by_clique) == set(range(m + 1))
        assert set(by_clique.values()) == {per_clique}


def test_ring2_partners_marked_ring2shift_not():
    m = 7
    ring2 = set(named_configuration("ring-2", m).vertices)
    assert all(partner(v, m) in ring2 for v in ring2)
    shift = set(named_configuration("ring-2-shift", m).vertices)
    assert not any(partner(v, m) in shift for v in shift)


def test_parse_custom_config():
    cfg = parse_custom_config("0:1, 1:0", 6)
    assert cfg.case_tag == "custom"
    assert cfg.vertices == named_configuration("two-b", 6).vertices
    with pytest.raises(ValueError):
        parse_custom_config("0:0", 6)


def test_case_tags_complete():
    assert len(CASE_TAGS) == 10
    assert CASE_TAGS[-1] == "k-in-clique"
