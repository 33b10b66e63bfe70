"""Graph families and marked-vertex configurations.

Two families are supported: the complete graph K_N, and the "simplex of
complete graphs" -- the M-simplex with each of its M+1 vertices blown up
into a clique K_M.  The simplex has N = M(M+1) vertices and is M-regular:
every vertex has M-1 intra-clique neighbors plus exactly one inter-clique
"partner", so each pair of cliques is joined by a single edge.
"""

from __future__ import annotations

from dataclasses import dataclass, field

CASE_TAGS = (
    "two-a",
    "two-b",
    "two-c",
    "two-d",
    "two-e",
    "ring-1",
    "clique-plus-1",
    "ring-2",
    "ring-2-shift",
    "k-in-clique",
)


class InvalidSizeError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    n_vertices: int
    neighbors: tuple  # neighbors[v] = sorted tuple of adjacent vertex ids
    family: str       # "complete" or "simplex"
    param: int        # N for complete, M for simplex

    @property
    def degree(self):
        return len(self.neighbors[0])


@dataclass(frozen=True)
class MarkedConfiguration:
    vertices: tuple   # sorted flat vertex ids
    case_tag: str = "custom"

    def __post_init__(self):
        if not self.vertices:
            raise ValueError("marked set must be nonempty")
        object.__setattr__(self, "vertices", tuple(sorted(set(self.vertices))))

    @property
    def k(self):
        return len(self.vertices)


def build_complete(n: int) -> Graph:
    """Complete graph on n vertices."""
    if n < 2:
        raise InvalidSizeError(f"complete graph needs N >= 2, got {n}")
    nbrs = tuple(
        tuple(u for u in range(n) if u != v) for v in range(n)
    )
    return Graph(n, nbrs, "complete", n)


def simplex_vertex_id(clique: int, target: int, m: int) -> int:
    """Flat id of simplex vertex (clique, target), target != clique.

    Vertices of clique i occupy the block [i*M, (i+1)*M), ordered by
    increasing target.
    """
    if clique == target:
        raise ValueError("clique == target is not a vertex")
    if not (0 <= clique <= m and 0 <= target <= m):
        raise ValueError(f"coordinate ({clique},{target}) out of range for M={m}")
    rank = target - 1 if target > clique else target
    return clique * m + rank


def simplex_coordinate(v: int, m: int):
    """Inverse of simplex_vertex_id: flat id -> (clique, target)."""
    clique, rank = divmod(v, m)
    target = rank if rank < clique else rank + 1
    return clique, target


def partner(v: int, m: int) -> int:
    """The unique inter-clique neighbor: partner((i,j)) = (j,i)."""
    i, j = simplex_coordinate(v, m)
    return simplex_vertex_id(j, i, m)


def build_simplex(m: int) -> Graph:
    """Simplex of complete graphs: M+1 cliques K_M, one edge per clique pair."""
    if m < 2:
        raise InvalidSizeError(f"simplex needs M >= 2, got {m}")
    n = m * (m + 1)
    nbrs = []
    for v in range(n):
        i, _ = simplex_coordinate(v, m)
        block = range(i * m, (i + 1) * m)
        lst = [u for u in block if u != v]
        lst.append(partner(v, m))
        nbrs.append(tuple(sorted(lst)))
    return Graph(n, tuple(nbrs), "simplex", m)


def _coords_to_config(coords, m, tag):
    ids = tuple(simplex_vertex_id(i, j, m) for i, j in coords)
    return MarkedConfiguration(ids, tag)


def named_configuration(case: str, m: int, k: int | None = None) -> MarkedConfiguration:
    """Marked set for one of the named cases, in flat simplex vertex ids.

    Coordinates (clique, target):
      two-a          {(0,1),(0,2)}               both marked in one clique
      two-b          {(0,1),(1,0)}               endpoints of an inter-clique edge
      two-c          {(0,2),(1,2)}               partners meet in a common third clique
      two-d          {(0,2),(1,3)}               partners in two distinct other cliques
      two-e          {(0,1),(1,2)}               one marked vertex on the joining edge
      ring-1         {(i, i+1)}                  one marked per clique
      clique-plus-1  {(0,j): j=1..M} + {(1,0)}   one clique fully marked, plus one
      ring-2         {(i, i+1), (i, i-1)}        two marked per clique, partners marked
      ring-2-shift   {(i, i+1), (i, i+2)}        two marked per clique, partners unmarked
      k-in-clique    {(0,j): j=1..k}             k marked in one clique
    """
    if case not in CASE_TAGS:
        raise ValueError(f"unknown case tag {case!r}")
    if m < 5:
        raise InvalidSizeError(f"named cases need M >= 5, got {m}")
    mm = m + 1  # number of cliques
    if case == "two-a":
        return _coords_to_config([(0, 1), (0, 2)], m, case)
    if case == "two-b":
        return _coords_to_config([(0, 1), (1, 0)], m, case)
    if case == "two-c":
        return _coords_to_config([(0, 2), (1, 2)], m, case)
    if case == "two-d":
        return _coords_to_config([(0, 2), (1, 3)], m, case)
    if case == "two-e":
        return _coords_to_config([(0, 1), (1, 2)], m, case)
    if case == "ring-1":
        coords = [(i, (i + 1) % mm) for i in range(mm)]
        return _coords_to_config(coords, m, case)
    if case == "clique-plus-1":
        coords = [(0, j) for j in range(1, m + 1)] + [(1, 0)]
        return _coords_to_config(coords, m, case)
    if case == "ring-2":
        coords = [(i, (i + 1) % mm) for i in range(mm)]
        coords += [(i, (i - 1) % mm) for i in range(mm)]
        return _coords_to_config(coords, m, case)
    if case == "ring-2-shift":
        coords = [(i, (i + 1) % mm) for i in range(mm)]
        coords += [(i, (i + 2) % mm) for i in range(mm)]
        return _coords_to_config(coords, m, case)
    # k-in-clique
    if k is None:
        raise ValueError("k-in-clique requires k")
    if not 1 <= k < m:
        raise ValueError(f"k-in-clique needs 1 <= k < M, got k={k}, M={m}")
    return _coords_to_config([(0, j) for j in range(1, k + 1)], m, "k-in-clique")


def parse_custom_config(text: str, m: int) -> MarkedConfiguration:
    """Parse a comma-separated list of "i:j" simplex coordinates."""
    coords = []
    for part in text.split(","):
        i, j = part.strip().split(":")
        coords.append((int(i), int(j)))
    return _coords_to_config(coords, m, "custom")
