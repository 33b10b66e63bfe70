"""Closed-form reference matrices for the named configurations.

For each named case the quotient of the search Hamiltonian on the
coarsest equitable partition has a known closed form in M (and k for
k-in-clique).  These are stored here as golden data: the adjacency part
S, the cell sizes, the marked flags, and the conventional cell labels.
The full reduced Hamiltonian is H = -gamma * S - diag(marked).

validate_reduction() checks that the numerically computed quotient
matches the closed form up to a permutation of cells.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import build_simplex, named_configuration
from .reduction import coarsest_equitable_partition, quotient_adjacency


def _sq(x):
    return np.sqrt(float(x))


def reference_case(case: str, m: int, k: int | None = None):
    """Return (S, sizes, marked_flags, labels) for a named case.

    S is the quotient adjacency matrix; cells with size 0 (possible for
    k-in-clique with k = 1) are dropped.
    """
    if case in ("two-a", "k-in-clique"):
        if case == "two-a":
            k = 2
        if k is None:
            raise ValueError("k-in-clique requires k")
        mk, mk1 = m - k, m - k - 1
        s = np.array([
            [k - 1, _sq(k * mk), 1, 0, 0, 0, 0, 0],
            [_sq(k * mk), mk1, 0, 0, 1, 0, 0, 0],
            [1, 0, 0, _sq(mk), 0, 0, 0, _sq(k - 1)],
            [0, 0, _sq(mk), mk1, 0, 1, 0, _sq(mk * (k - 1))],
            [0, 1, 0, 0, 0, _sq(k), _sq(mk1), 0],
            [0, 0, 0, 1, _sq(k), k - 1, _sq(k * mk1), 0],
            [0, 0, 0, 0, _sq(mk1), _sq(k * mk1), mk1, 0],
            [0, 0, _sq(k - 1), _sq(mk * (k - 1)), 0, 0, 0, k - 1],
        ])
        sizes = [k, mk, k, k * mk, mk, k * mk, mk1 * mk, k * (k - 1)]
        marked = [True] + [False] * 7
        labels = list("abcdefgh")
    elif case == "two-b":
        s = np.array([
            [1, _sq(m - 1), 0, 0],
            [_sq(m - 1), m - 2, 1, 0],
            [0, 1, 1, _sq(2 * (m - 2))],
            [0, 0, _sq(2 * (m - 2)), m - 2],
        ])
        sizes = [2, 2 * (m - 1), 2 * (m - 1), (m - 1) * (m - 2)]
        marked = [True, False, False, False]
        labels = ["a", "b", "e", "g"]
    elif case == "two-c":
        m2, m3 = m - 2, m - 3
        s = np.array([
            [0, _sq(m2), 1, 0, 0, 0, 0, 1],
            [_sq(m2), m3, 0, 0, 1, 0, 0, _sq(m2)],
            [1, 0, 1, _sq(2 * m2), 0, 0, 0, 0],
            [0, 0, _sq(2 * m2), m3, 0, 1, 0, 0],
            [0, 1, 0, 0, 1, _sq(2), _sq(2 * m3), 0],
            [0, 0, 0, 1, _sq(2), 0, _sq(m3), 0],
            [0, 0, 0, 0, _sq(2 * m3), _sq(m3), m3, 0],
            [1, _sq(m2), 0, 0, 0, 0, 0, 1],
        ])
        sizes = [2, 2 * m2, 2, m2, 2 * m2, m2, m2 * m3, 2]
        marked = [True] + [False] * 7
        labels = ["a", "b", "c", "d", "e", "f", "g", "i"]
    elif case == "two-d":
        m3, m4 = m - 3, m - 4
        s = np.array([
            [0, _sq(m3), 1, 0, 0, 0, 0, 0, 1, 1, 0],
            [_sq(m3), m4, 0, 0, 1, 0, 0, 0, _sq(m3), _sq(m3), 0],
            [1, 0, 0, _sq(m3), 0, 0, 0, 1, 0, 0, 1],
            [0, 0, _sq(m3), m4, 0, 1, 0, _sq(m3), 0, 0, _sq(m3)],
            [0, 1, 0, 0, 1, 2, _sq(2 * m4), 0, 0, 0, 0],
            [0, 0, 0, 1, 2, 1, _sq(2 * m4), 0, 0, 0, 0],
            [0, 0, 0, 0, _sq(2 * m4), _sq(2 * m4), m4, 0, 0, 0, 0],
            [0, 0, 1, _sq(m3), 0, 0, 0, 1, 0, 0, 1],
            [1, _sq(m3), 0, 0, 0, 0, 0, 0, 1, 1, 0],
            [1, _sq(m3), 0, 0, 0, 0, 0, 0, 1, 0, 1],
            [0, 0, 1, _sq(m3), 0, 0, 0, 1, 0, 1, 0],
        ])
        sizes = [2, 2 * m3, 2, 2 * m3, 2 * m3, 2 * m3, m3 * m4, 2, 2, 2, 2]
        marked = [True] + [False] * 10
        labels = list("abcdefghijk")
    elif case == "two-e":
        m2, m3 = m - 2, m - 3
        s = np.array([
            [0, _sq(m2), 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0],
            [_sq(m2), m3, 0, 0, 1, 0, 0, 0, _sq(m2), 0, 0, 0, 0],
            [1, 0, 0, 1, 0, 0, 0, _sq(m2), 0, 0, 0, 0, 0],
            [0, 0, 1, 0, 0, 1, 0, _sq(m2), 0, 0, 0, 0, 0],
            [0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, _sq(m3)],
            [0, 0, 0, 1, 0, 0, _sq(m2), 0, 0, 1, 0, 0, 0],
            [0, 0, 0, 0, 0, _sq(m2), m3, 0, 0, _sq(m2), 1, 0, 0],
            [0, 0, _sq(m2), _sq(m2), 0, 0, 0, m3, 0, 0, 0, 1, 0],
            [1, _sq(m2), 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0],
            [0, 0, 0, 0, 0, 1, _sq(m2), 0, 1, 0, 0, 0, 0],
            [0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 1, _sq(m3)],
            [0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, _sq(m3)],
            [0, 0, 0, 0, _sq(m3), 0, 0, 0, 0, 0, _sq(m3), _sq(m3), m3],
        ])
        sizes = [1, m2, 1, 1, m2, 1, m2, m2, 1, 1, m2, m2, m2 * m3]
        marked = [True, False, False, True] + [False] * 9
        labels = list("abcdefghijklm")
    elif case == "ring-1":
        s = np.array([
            [0, _sq(m - 2), 2],
            [_sq(m - 2), m - 2, _sq(m - 2)],
            [2, _sq(m - 2), 0],
        ])
        sizes = [m + 1, (m + 1) * (m - 2), m + 1]
        marked = [True, False, False]
        labels = ["a", "b", "c"]
    elif case == "clique-plus-1":
        m1, m2 = m - 1, m - 2
        s = np.array([
            [0, _sq(m1), 1, 0, 0, 0, 0],
            [_sq(m1), m2, 0, 0, 1, 0, 0],
            [1, 0, 0, _sq(m1), 0, 0, 0],
            [0, 0, _sq(m1), m2, 0, 1, 0],
            [0, 1, 0, 0, 0, 1, _sq(m2)],
            [0, 0, 0, 1, 1, 0, _sq(m2)],
            [0, 0, 0, 0, _sq(m2), _sq(m2), m2],
        ])
        sizes = [1, m1, 1, m1, m1, m1, m1 * m2]
        marked = [True, True, True, False, False, False, False]
        labels = list("abcdefg")
    elif case == "ring-2":
        s = np.array([
            [2, _sq(2 * (m - 2))],
            [_sq(2 * (m - 2)), m - 2],
        ])
        sizes = [2 * (m + 1), (m + 1) * (m - 2)]
        marked = [True, False]
        labels = ["a", "b"]
    elif case == "ring-2-shift":
        s = np.array([
            [1, _sq(2 * (m - 4)), 3],
            [_sq(2 * (m - 4)), m - 4, _sq(2 * (m - 4))],
            [3, _sq(2 * (m - 4)), 1],
        ])
        sizes = [2 * (m + 1), (m - 4) * (m + 1), 2 * (m + 1)]
        marked = [True, False, False]
        labels = ["a", "b", "c"]
    else:
        raise ValueError(f"unknown case tag {case!r}")

    sizes = np.array(sizes)
    keep = sizes > 0
    if not keep.all():
        idx = np.flatnonzero(keep)
        s = s[np.ix_(idx, idx)]
        sizes = sizes[idx]
        marked = [marked[i] for i in idx]
        labels = [labels[i] for i in idx]
    return s, sizes, np.array(marked), labels


@dataclass(frozen=True)
class MatchReport:
    case: str
    m: int
    k: int | None
    matched: bool
    permutation: tuple | None   # permutation[p] = computed cell for reference cell p
    max_deviation: float
    detail: str = ""

    @property
    def labels_by_cell(self):
        """Map computed-partition cell index -> reference label."""
        if not self.matched:
            raise ValueError("no match; labels undefined")
        _, _, _, labels = reference_case(self.case, self.m, self.k)
        return {self.permutation[p]: lab for p, lab in enumerate(labels)}


def _match_permutation(s_num, sizes_num, marked_num, s_ref, sizes_ref, marked_ref, tol):
    """Backtracking search for a cell bijection aligning the two quotients."""
    d = len(sizes_ref)
    if len(sizes_num) != d:
        return None, np.inf

    candidates = []
    for p in range(d):
        cand = [
            q for q in range(d)
            if sizes_num[q] == sizes_ref[p]
            and marked_num[q] == marked_ref[p]
            and abs(s_num[q, q] - s_ref[p, p]) <= tol
        ]
        if not cand:
            return None, np.inf
        candidates.append(cand)

    order = sorted(range(d), key=lambda p: len(candidates[p]))
    perm = [-1] * d
    used = [False] * d

    def backtrack(i):
        if i == d:
            return True
        p = order[i]
        for q in candidates[p]:
            if used[q]:
                continue
            ok = True
            for j in range(i):
                pj = order[j]
                if abs(s_num[q, perm[pj]] - s_ref[p, pj]) > tol:
                    ok = False
                    break
            if ok:
                perm[p] = q
                used[q] = True
                if backtrack(i + 1):
                    return True
                perm[p] = -1
                used[q] = False
        return False

    if not backtrack(0):
        return None, np.inf
    aligned = s_num[np.ix_(perm, perm)]
    return tuple(perm), float(np.max(np.abs(aligned - s_ref)))


def validate_reduction(case: str, m: int, k: int | None = None,
                       gamma: float | None = None, tol: float = 1e-12) -> MatchReport:
    """Check the computed quotient against the closed-form reference.

    Compares the full reduced Hamiltonian at a test gamma (default 2/M),
    finding the cell permutation that aligns the two matrices.
    """
    if gamma is None:
        gamma = 2.0 / m
    graph = build_simplex(m)
    cfg = named_configuration(case, m, k)
    part = coarsest_equitable_partition(graph, cfg)
    s_num = quotient_adjacency(part)
    sizes_num = part.sizes
    marked_num = np.array([i in part.marked_cells for i in range(part.dimension)])

    s_ref, sizes_ref, marked_ref, _ = reference_case(case, m, k)

    if part.dimension != len(sizes_ref):
        return MatchReport(case, m, k, False, None, np.inf,
                           f"dimension {part.dimension} != expected {len(sizes_ref)}")

    # match on the full Hamiltonian so gamma and the oracle term are exercised
    h_num = -gamma * s_num - np.diag(marked_num.astype(float))
    h_ref = -gamma * s_ref - np.diag(marked_ref.astype(float))
    perm, dev = _match_permutation(h_num, sizes_num, marked_num,
                                   h_ref, sizes_ref, marked_ref, tol)
    if perm is None:
        return MatchReport(case, m, k, False, None, np.inf,
                           "no aligning cell permutation found")
    return MatchReport(case, m, k, dev < tol, perm, dev)


def cell_labels(case: str, m: int, k: int | None = None) -> dict:
    """Reference label (a, b, ...) for each computed-partition cell index."""
    report = validate_reduction(case, m, k)
    if not report.matched:
        raise ValueError(f"cannot label cells: {report.detail}")
    return report.labels_by_cell


@dataclass(frozen=True)
class CaseSubspace:
    """Reduced search space of a named case, built from the closed forms.

    Equivalent (up to cell permutation) to reducing the full graph with
    the coarsest equitable partition -- validate_reduction() certifies
    the equivalence -- but costs O(d^2) instead of O(N * M), which is
    what makes sweeps at M in the hundreds or thousands practical.
    """
    case: str
    m: int
    k: int | None
    adjacency: np.ndarray
    sizes: np.ndarray
    marked_flags: np.ndarray
    labels: tuple

    @property
    def dimension(self):
        return self.adjacency.shape[0]

    @property
    def n_vertices(self):
        return self.m * (self.m + 1)

    @property
    def marked_cells(self):
        return frozenset(np.flatnonzero(self.marked_flags).tolist())

    @property
    def start_vector(self):
        return np.sqrt(self.sizes / self.n_vertices)

    def hamiltonian(self, gamma: float) -> np.ndarray:
        return -gamma * self.adjacency - np.diag(self.marked_flags.astype(float))

    def cell_vector(self, labels) -> np.ndarray:
        """Unit vector supported uniformly on the given cell labels."""
        v = np.zeros(self.dimension)
        for lab in labels:
            v[self.labels.index(lab)] = 1.0
        return v / np.linalg.norm(v)


def case_subspace(case: str, m: int, k: int | None = None) -> CaseSubspace:
    s, sizes, marked, labels = reference_case(case, m, k)
    total = int(sizes.sum())
    if total != m * (m + 1):
        raise ValueError(f"cell sizes sum to {total}, expected {m * (m + 1)}")
    return CaseSubspace(case, m, k, s, sizes.astype(float), marked, tuple(labels))
