"""Equitable-partition, quotient, and classification tests."""

import numpy as np
import pytest

from simplexsearch import (MarkedConfiguration, build_complete, build_simplex,
                           classify_pairs, coarsest_equitable_partition,
                           lift_state, named_configuration, project_state,
                           quotient_adjacency, reduced_hamiltonian,
                           simplex_coordinate, uniform_state)

EXPECTED_DIMS = {
    "two-a": 8, "two-b": 4, "two-c": 8, "two-d": 11, "two-e": 13,
    "ring-1": 3, "clique-plus-1": 7, "ring-2": 2, "ring-2-shift": 3,
}


def test_complete_graph_partition_is_two_cells():
    g = build_complete(20)
    part = coarsest_equitable_partition(g, MarkedConfiguration((0, 1, 2)))
    assert part.dimension == 2
    assert sorted(part.sizes) == [3, 17]
    assert len(part.marked_cells) == 1


@pytest.mark.parametrize("case", sorted(EXPECTED_DIMS))
@pytest.mark.parametrize("m", [5, 9])
def test_named_case_dimensions(case, m):
    g = build_simplex(m)
    part = coarsest_equitable_partition(g, named_configuration(case, m))
    assert part.dimension == EXPECTED_DIMS[case]
    assert part.sizes.sum() == m * (m + 1)


def test_marked_cells_are_pure():
    m = 7
    g = build_simplex(m)
    cfg = named_configuration("two-e", m)
    part = coarsest_equitable_partition(g, cfg)
    marked = set(cfg.vertices)
    for idx in part.marked_cells:
        assert set(part.cells[idx]) <= marked
    covered = set()
    for idx in part.marked_cells:
        covered |= set(part.cells[idx])
    assert covered == marked


def test_cell_ordering_marked_first_then_size():
    g = build_simplex(6)
    part = coarsest_equitable_partition(g, named_configuration("two-a", 6))
    flags = [i in part.marked_cells for i in range(part.dimension)]
    assert flags == sorted(flags, reverse=True)
    unmarked_sizes = [len(part.cells[i]) for i in range(part.dimension)
                      if i not in part.marked_cells]
    assert unmarked_sizes == sorted(unmarked_sizes)


def test_quotient_adjacency_symmetric_and_regular():
    g = build_simplex(8)
    part = coarsest_equitable_partition(g, named_configuration("ring-1", 8))
    s = quotient_adjacency(part)
    assert np.allclose(s, s.T, atol=0)
    # row sums weighted by sqrt-sizes recover the degree M
    sq = np.sqrt(part.sizes.astype(float))
    assert np.allclose((s * sq[None, :]).sum(axis=1) / sq, 8.0)


def test_reduced_hamiltonian_matches_projected_full():
    # the reduced operator is the full H compressed onto cell vectors
    m = 6
    gamma = 0.21
    g = build_simplex(m)
    cfg = named_configuration("two-b", m)
    part = coarsest_equitable_partition(g, cfg)
    op = reduced_hamiltonian(part, gamma)

    from simplexsearch import build_hamiltonian
    h_full = build_hamiltonian(g, cfg, gamma).entries
    basis = np.zeros((g.n_vertices, part.dimension))
    for idx, cell in enumerate(part.cells):
        basis[list(cell), idx] = 1.0 / np.sqrt(len(cell))
    assert np.max(np.abs(basis.T @ h_full @ basis - op.matrix)) < 1e-13
    assert np.max(np.abs(project_state(uniform_state(g.n_vertices), part)
                         - op.start_vector)) < 1e-14


def test_project_lift_roundtrip():
    g = build_simplex(5)
    part = coarsest_equitable_partition(g, named_configuration("two-a", 5))
    vec = np.arange(1, part.dimension + 1, dtype=complex)
    vec /= np.linalg.norm(vec)
    assert np.max(np.abs(project_state(lift_state(vec, part), part) - vec)) < 1e-14


def test_classify_pairs_m5():
    classes = classify_pairs(5)
    assert len(classes) == 5
    sizes = sorted(count for _, _, count in classes)
    assert sum(sizes) == 435  # C(30, 2)
    assert 15 in sizes and 60 in sizes


def test_classify_pairs_distinguishes_same_clique():
    # the two 8-dimensional classes differ by same- vs different-clique
    classes = classify_pairs(5)
    dim8 = [(rep, count) for sig, rep, count in classes if len(sig[0]) == 8]
    assert len(dim8) == 2
    flags = set()
    for rep, count in dim8:
        cliques = {simplex_coordinate(v, 5)[0] for v in rep.vertices}
        flags.add(len(cliques) == 1)
        assert count == 60
    assert flags == {True, False}


def test_classify_pairs_stable_class_count():
    for m in (5, 6):
        assert len(classify_pairs(m)) == 5


def test_classify_pairs_rejects_small_m():
    with pytest.raises(ValueError):
        classify_pairs(4)
