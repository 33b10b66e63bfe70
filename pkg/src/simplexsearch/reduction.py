"""Equitable partitions and quotient (reduced) Hamiltonians.

The coarsest equitable partition refining the marked/unmarked split is
found by color refinement.  Uniform superpositions over its cells span an
invariant subspace of the search Hamiltonian, so the dynamics restricted
to that subspace is exact, not approximate.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .graphs import Graph, MarkedConfiguration


@dataclass(frozen=True)
class EquitablePartition:
    cells: tuple          # tuple of sorted vertex-id tuples
    cell_of: tuple        # vertex -> cell index
    counts: np.ndarray    # counts[P][Q] = neighbors in Q of any vertex of P
    marked_cells: frozenset
    n_vertices: int

    @property
    def dimension(self):
        return len(self.cells)

    @property
    def sizes(self):
        return np.array([len(c) for c in self.cells])


class NotEquitableError(ValueError):
    pass


def coarsest_equitable_partition(graph: Graph, marked: MarkedConfiguration) -> EquitablePartition:
    """Coarsest equitable partition refining the marked/unmarked coloring.

    Standard color refinement: repeatedly split color classes by the
    multiset of neighbor colors until stable.  Cells are ordered marked
    first, then by size ascending, then by minimal vertex id.
    """
    n = graph.n_vertices
    marked_set = set(marked.vertices)
    if max(marked.vertices) >= n:
        raise ValueError("marked vertex out of range")
    color = [1 if v in marked_set else 0 for v in range(n)]
    n_colors = 2 if marked_set and len(marked_set) < n else 1
    while True:
        sigs = {}
        new_color = [0] * n
        for v in range(n):
            nbr_counts = {}
            for u in graph.neighbors[v]:
                c = color[u]
                nbr_counts[c] = nbr_counts.get(c, 0) + 1
            sig = (color[v], tuple(sorted(nbr_counts.items())))
            if sig not in sigs:
                sigs[sig] = len(sigs)
            new_color[v] = sigs[sig]
        if len(sigs) == n_colors:
            break
        color = new_color
        n_colors = len(sigs)

    groups = {}
    for v in range(n):
        groups.setdefault(color[v], []).append(v)
    cells = sorted(
        (tuple(g) for g in groups.values()),
        key=lambda c: (0 if c[0] in marked_set else 1, len(c), c[0]),
    )
    cell_of = [0] * n
    for idx, cell in enumerate(cells):
        for v in cell:
            cell_of[v] = idx

    d = len(cells)
    counts = np.zeros((d, d), dtype=np.int64)
    for idx, cell in enumerate(cells):
        v0 = cell[0]
        for u in graph.neighbors[v0]:
            counts[idx, cell_of[u]] += 1
    # equitability guard: every vertex must see the same per-cell counts
    for idx, cell in enumerate(cells):
        for v in cell[1:]:
            row = np.zeros(d, dtype=np.int64)
            for u in graph.neighbors[v]:
                row[cell_of[u]] += 1
            if not np.array_equal(row, counts[idx]):
                raise NotEquitableError(f"cell {idx} is not equitable at vertex {v}")

    marked_cells = frozenset(cell_of[v] for v in marked.vertices)
    for idx in marked_cells:
        if any(v not in marked_set for v in cells[idx]):
            raise NotEquitableError(f"cell {idx} mixes marked and unmarked vertices")
    return EquitablePartition(tuple(cells), tuple(cell_of), counts, marked_cells, n)


@dataclass(frozen=True)
class ReducedOperator:
    matrix: np.ndarray       # dense real symmetric, includes -gamma and oracle
    gamma: float
    cell_sizes: np.ndarray
    start_vector: np.ndarray  # projection of the uniform state
    marked_cells: frozenset

    @property
    def dimension(self):
        return self.matrix.shape[0]


def quotient_adjacency(partition: EquitablePartition) -> np.ndarray:
    """Symmetric quotient of the adjacency matrix on unit cell vectors.

    Entry (P,Q) = b[P][Q] * sqrt(|P|/|Q|), computed from the integer
    edge count E_PQ = |P| * b[P][Q] so the result is exactly symmetric.
    """
    sizes = partition.sizes
    edges = partition.counts * sizes[:, None]   # E_PQ, symmetric integers
    if not np.array_equal(edges, edges.T):
        raise NotEquitableError("edge-count symmetry |P| b[P][Q] = |Q| b[Q][P] violated")
    scale = np.sqrt(sizes.astype(float))
    return edges / np.outer(scale, scale)


def reduced_hamiltonian(partition: EquitablePartition, gamma: float) -> ReducedOperator:
    """Search Hamiltonian restricted to the equitable-partition subspace."""
    sizes = partition.sizes
    h = -gamma * quotient_adjacency(partition)
    for p in partition.marked_cells:
        h[p, p] -= 1.0
    start = np.sqrt(sizes / partition.n_vertices)
    return ReducedOperator(h, gamma, sizes, start, partition.marked_cells)


def project_state(psi: np.ndarray, partition: EquitablePartition) -> np.ndarray:
    """Components of psi along the unit cell-superposition vectors."""
    if len(psi) != partition.n_vertices:
        raise ValueError("dimension mismatch")
    out = np.zeros(partition.dimension, dtype=complex)
    for idx, cell in enumerate(partition.cells):
        out[idx] = psi[list(cell)].sum() / np.sqrt(len(cell))
    return out


def lift_state(reduced: np.ndarray, partition: EquitablePartition) -> np.ndarray:
    """Cell-uniform full-space state with the given cell components."""
    if len(reduced) != partition.dimension:
        raise ValueError("dimension mismatch")
    psi = np.zeros(partition.n_vertices, dtype=complex)
    for idx, cell in enumerate(partition.cells):
        psi[list(cell)] = reduced[idx] / np.sqrt(len(cell))
    return psi


def _canonical_signature(partition: EquitablePartition):
    """Canonical form of (cell sizes, marked flags, quotient counts).

    Cells are first refined by color refinement on the quotient itself
    (initial color = (marked flag, size)), which leaves only genuinely
    symmetric cells tied; remaining ties are broken by brute force,
    keeping the lexicographically minimal flattened counts matrix.
    Gamma-free and exact (integer counts).
    """
    d = partition.dimension
    counts = [[int(x) for x in row] for row in partition.counts]
    color = [
        (0 if i in partition.marked_cells else 1, len(partition.cells[i]))
        for i in range(d)
    ]
    while True:
        new_color = [
            (color[i], tuple(sorted(
                (color[j], counts[i][j], counts[j][i])
                for j in range(d)
                if j != i and (counts[i][j] or counts[j][i])
            )))
            for i in range(d)
        ]
        if len(set(new_color)) == len(set(color)):
            break
        color = new_color

    order = sorted(range(d), key=lambda i: color[i])
    groups = [list(grp) for _, grp in itertools.groupby(order, key=lambda i: color[i])]
    best = None
    for perms in itertools.product(*(itertools.permutations(g) for g in groups)):
        perm = [i for p in perms for i in p]
        mat = tuple(counts[i][j] for i in perm for j in perm)
        if best is None or mat < best:
            best = mat
    keys = [
        (0 if i in partition.marked_cells else 1, len(partition.cells[i]))
        for i in range(d)
    ]
    sizes_flags = tuple(sorted(keys))
    return (sizes_flags, best)


def classify_pairs(graph_or_m, m: int | None = None):
    """Group all 2-element marked sets on simplex(M) by quotient structure.

    Returns a sorted list of (signature, representative MarkedConfiguration,
    class size).  Accepts either a simplex Graph or M itself.
    """
    from .graphs import build_simplex

    if isinstance(graph_or_m, Graph):
        graph = graph_or_m
        mval = graph.param
    else:
        mval = graph_or_m
        graph = build_simplex(mval)
    if mval < 5:
        raise ValueError("classification needs M >= 5")
    n = graph.n_vertices
    classes = {}
    for pair in itertools.combinations(range(n), 2):
        cfg = MarkedConfiguration(pair)
        part = coarsest_equitable_partition(graph, cfg)
        sig = _canonical_signature(part)
        if sig not in classes:
            classes[sig] = [cfg, 0]
        classes[sig][1] += 1
    return sorted(
        ((sig, rep, count) for sig, (rep, count) in classes.items()),
        key=lambda item: (len(item[0][0]), item[0]),
    )
