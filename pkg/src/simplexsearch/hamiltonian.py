"""Search Hamiltonian assembly and time evolution.

H = -gamma * A - sum_{i marked} |i><i|  (hbar = 1, adjacency form; both
graph families are regular so the Laplacian's degree term is a global
phase).  Propagation uses a full symmetric eigendecomposition, exact at
any time.  A fourth-order Runge-Kutta integrator is kept as an
independent cross-check oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import Graph, MarkedConfiguration

DENSE_SOLVER_CAP = 5000


class DimensionCapError(ValueError):
    """Raised when the full space is too large for dense diagonalization."""


@dataclass(frozen=True)
class HamiltonianMatrix:
    entries: np.ndarray
    gamma: float
    marked: MarkedConfiguration

    @property
    def dimension(self):
        return self.entries.shape[0]


@dataclass(frozen=True)
class TimeSeries:
    times: np.ndarray
    success_probability: np.ndarray
    cell_probabilities: np.ndarray | None = None  # shape (n_cells, n_times)
    cell_labels: tuple | None = None

    def to_csv(self, path):
        header = ["time", "success_probability"]
        cols = [self.times, self.success_probability]
        if self.cell_probabilities is not None:
            labels = self.cell_labels or [
                str(i) for i in range(self.cell_probabilities.shape[0])
            ]
            header += [f"cell_{lab}" for lab in labels]
            cols += list(self.cell_probabilities)
        data = np.column_stack(cols)
        with open(path, "w") as f:
            f.write(",".join(header) + "\n")
            for row in data:
                f.write(",".join(f"{x:.17g}" for x in row) + "\n")


def build_hamiltonian(graph: Graph, marked: MarkedConfiguration, gamma: float) -> HamiltonianMatrix:
    """Dense search Hamiltonian for a graph and marked set."""
    n = graph.n_vertices
    if max(marked.vertices) >= n:
        raise ValueError("marked vertex out of range")
    h = np.zeros((n, n))
    for v in range(n):
        for u in graph.neighbors[v]:
            if u > v:
                h[v, u] = h[u, v] = -gamma
    for v in marked.vertices:
        h[v, v] -= 1.0
    return HamiltonianMatrix(h, gamma, marked)


def uniform_state(n: int) -> np.ndarray:
    if n < 1:
        raise ValueError("n must be positive")
    return np.full(n, 1.0 / np.sqrt(n), dtype=complex)


def success_probability(psi: np.ndarray, marked: MarkedConfiguration) -> float:
    if max(marked.vertices) >= len(psi):
        raise ValueError("dimension mismatch")
    return float(np.sum(np.abs(psi[list(marked.vertices)]) ** 2))


def propagate(matrix: np.ndarray, psi0: np.ndarray, times) -> np.ndarray:
    """exp(-i H t) psi0 at each time, via eigendecomposition.

    Returns an array of shape (len(times), dim).
    """
    times = np.asarray(times, dtype=float)
    evals, evecs = np.linalg.eigh(matrix)
    coeffs = evecs.conj().T @ psi0
    phases = np.exp(-1j * np.outer(times, evals))
    return (phases * coeffs) @ evecs.T


def evolve_spectral(h: HamiltonianMatrix, psi0: np.ndarray, times,
                    return_states: bool = False):
    """TimeSeries of success probability under exp(-iHt) (exact)."""
    if h.dimension != len(psi0):
        raise ValueError("dimension mismatch between H and psi0")
    if h.dimension > DENSE_SOLVER_CAP:
        raise DimensionCapError(
            f"dimension {h.dimension} exceeds dense-solver cap {DENSE_SOLVER_CAP}; "
            "use the reduced dynamics instead"
        )
    states = propagate(h.entries, psi0, times)
    idx = list(h.marked.vertices)
    probs = np.sum(np.abs(states[:, idx]) ** 2, axis=1)
    series = TimeSeries(np.asarray(times, dtype=float), probs)
    if return_states:
        return series, states
    return series


def evolve_ode(h: HamiltonianMatrix, psi0: np.ndarray, t: float, dt: float) -> np.ndarray:
    """RK4 integration of the Schrodinger equation; verification oracle only."""
    degree = int(np.max(np.count_nonzero(h.entries, axis=1)))
    bound = 2.0 * abs(h.gamma) * degree + 1.0
    if dt * bound > 0.1:
        raise ValueError(
            f"dt too large for stability: need dt <= {0.1 / bound:.3e}"
        )
    n_steps = int(np.ceil(abs(t) / dt)) if t != 0 else 0
    step = t / n_steps if n_steps else 0.0
    mat = h.entries

    def deriv(psi):
        return -1j * (mat @ psi)

    psi = np.asarray(psi0, dtype=complex).copy()
    for _ in range(n_steps):
        k1 = deriv(psi)
        k2 = deriv(psi + 0.5 * step * k1)
        k3 = deriv(psi + 0.5 * step * k2)
        k4 = deriv(psi + step * k3)
        psi = psi + (step / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4)
    return psi
