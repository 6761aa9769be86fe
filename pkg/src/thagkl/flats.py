"""Graphic matroids from first principles: closure, lattice of flats, KL.

This module knows nothing about the thagomizer recursion; it computes the
Kazhdan-Lusztig polynomial of a graphic matroid directly from the lattice of
flats via the defining recursion

    t^rk(M) * P_M(1/t) = sum_F chi(M|_F)(t) * P(M/F)(t)

where the sum runs over all flats, the localization M|_F has the lower
interval [0, F] as its lattice, and the contraction M/F has the upper
interval [F, 1].  Characteristic polynomials come from the Moebius function
of the lattice.  This provides an independent cross-check of the specialized
recursion at small rank.

Edges are indexed by position in ``Graph.edges``; a flat is a frozenset of
edge indices closed under the graphic-matroid closure (an edge belongs to the
closure of S iff its endpoints are connected by S).
"""

from __future__ import annotations

import dataclasses
from typing import FrozenSet

from .polynomials import IntPoly, ONE, ZERO, solve_reflection_equation

MAX_LATTICE_RANK = 8

Flat = FrozenSet[int]


@dataclasses.dataclass(frozen=True)
class Graph:
    """Multigraph with vertices 0..num_vertices-1; parallel edges ok, loops not."""

    num_vertices: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        for u, v in self.edges:
            if not (0 <= u < self.num_vertices and 0 <= v < self.num_vertices):
                raise ValueError(f"edge ({u}, {v}) has an endpoint out of range")
            if u == v:
                raise ValueError(f"loop at vertex {u} not permitted")

    def _components(self, edge_subset: Flat) -> list[int]:
        """Union-find representative per vertex under the chosen edges."""
        parent = list(range(self.num_vertices))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in edge_subset:
            u, v = self.edges[e]
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
        return [find(v) for v in range(self.num_vertices)]

    def subset_rank(self, edge_subset: Flat) -> int:
        """Matroid rank of an edge subset: vertices minus components."""
        reps = self._components(edge_subset)
        return self.num_vertices - len(set(reps))

    def rank(self) -> int:
        return self.subset_rank(frozenset(range(len(self.edges))))


def thagomizer_graph(n: int) -> Graph:
    """K_{2,n} plus the edge between the two hub vertices.

    Vertex 0 and 1 are the hubs; outer vertices are 2..n+1.  Edge 0 is the
    hub edge, then each outer vertex j contributes edges (0, j) and (1, j),
    its "spike".
    """
    if n < 0:
        raise ValueError("index must be nonnegative")
    edges: list[tuple[int, int]] = [(0, 1)]
    for j in range(2, n + 2):
        edges.append((0, j))
        edges.append((1, j))
    return Graph(n + 2, tuple(edges))


def closure(graph: Graph, edge_subset: Flat) -> Flat:
    """Graphic-matroid closure: every edge whose endpoints the subset connects."""
    reps = graph._components(frozenset(edge_subset))
    return frozenset(
        e for e, (u, v) in enumerate(graph.edges) if reps[u] == reps[v]
    )


class FlatLattice:
    """All flats of a graph's cycle matroid, ordered by inclusion.

    Flats are sorted by (rank, sorted edge indices), so index 0 is the empty
    flat and the last index is the full edge set.  Moebius rows and the KL
    polynomials of upper intervals are computed lazily and cached.
    """

    def __init__(self, graph: Graph, flats: list[Flat]) -> None:
        self.graph = graph
        ranked = sorted((graph.subset_rank(f), tuple(sorted(f))) for f in flats)
        self.flats: tuple[Flat, ...] = tuple(frozenset(edges) for _, edges in ranked)
        self.ranks: tuple[int, ...] = tuple(r for r, _ in ranked)
        self._index = {f: i for i, f in enumerate(self.flats)}
        # upper sets: j in _above[i] iff flats[i] <= flats[j]; ascending index
        # order is ascending rank order because containment is rank-strict
        self._above: list[list[int]] = [
            [j for j, g in enumerate(self.flats) if f <= g]
            for f in self.flats
        ]
        self._mu_rows: dict[int, dict[int, int]] = {}
        self._kl_upper: dict[int, IntPoly] = {}

    def __len__(self) -> int:
        return len(self.flats)

    def index_of(self, flat: Flat) -> int:
        try:
            return self._index[frozenset(flat)]
        except KeyError:
            raise ValueError(f"{sorted(flat)} is not a flat of this lattice") from None

    def rank_of(self, flat: Flat) -> int:
        return self.ranks[self.index_of(flat)]

    def rank_counts(self) -> list[int]:
        """Number of flats of each rank, index = rank."""
        counts = [0] * (self.ranks[-1] + 1)
        for r in self.ranks:
            counts[r] += 1
        return counts

    def mu_row(self, i: int) -> dict[int, int]:
        """Moebius function mu(flats[i], flats[j]) for all j above i."""
        row = self._mu_rows.get(i)
        if row is None:
            row = {}
            for j in self._above[i]:
                if j == i:
                    row[j] = 1
                    continue
                fj = self.flats[j]
                row[j] = -sum(
                    row[h] for h in self._above[i] if h < j and self.flats[h] <= fj
                )
            self._mu_rows[i] = row
        return row

    def char_poly(self, flat: Flat) -> IntPoly:
        """Characteristic polynomial of the localization at ``flat``."""
        top = self.index_of(flat)
        return self._interval_char_poly(0, top)

    def _interval_char_poly(self, i: int, j: int) -> IntPoly:
        mu = self.mu_row(i)
        fj = self.flats[j]
        rj = self.ranks[j]
        coeffs = [0] * (rj - self.ranks[i] + 1)
        for h in self._above[i]:
            if h <= j and self.flats[h] <= fj:
                coeffs[rj - self.ranks[h]] += mu[h]
        return IntPoly(coeffs)

    def kl_poly(self) -> IntPoly:
        """KL polynomial of the whole lattice via the defining recursion."""
        return self._kl_of_upper(0)

    def _kl_of_upper(self, i: int) -> IntPoly:
        cached = self._kl_upper.get(i)
        if cached is not None:
            return cached
        rank = self.ranks[-1] - self.ranks[i]
        if rank == 0:
            result = ONE
        else:
            rhs = ZERO
            for g in self._above[i]:
                if g == i:
                    continue
                rhs = rhs + self._interval_char_poly(i, g) * self._kl_of_upper(g)
            result = solve_reflection_equation(rank, rhs)
        self._kl_upper[i] = result
        return result


def build_lattice(graph: Graph) -> FlatLattice:
    """Enumerate every flat by closure search from the empty flat.

    New flats are found by closing single-edge extensions of known flats,
    which reaches every flat (each cover of F is the closure of F plus one
    edge).  Guarded by MAX_LATTICE_RANK; the lattice is exponential in rank.
    """
    if graph.rank() > MAX_LATTICE_RANK:
        raise ValueError(
            f"matroid rank {graph.rank()} exceeds lattice bound {MAX_LATTICE_RANK}"
        )
    all_edges = range(len(graph.edges))
    bottom = closure(graph, frozenset())
    seen = {bottom}
    frontier = [bottom]
    while frontier:
        nxt = []
        for flat in frontier:
            for e in all_edges:
                if e not in flat:
                    bigger = closure(graph, flat | {e})
                    if bigger not in seen:
                        seen.add(bigger)
                        nxt.append(bigger)
        frontier = nxt
    return FlatLattice(graph, list(seen))


def char_poly_lattice(lattice: FlatLattice, flat: Flat) -> IntPoly:
    """Characteristic polynomial of the localization at a flat."""
    return lattice.char_poly(flat)


def kl_generic(lattice: FlatLattice) -> IntPoly:
    """KL polynomial computed purely from the lattice of flats."""
    return lattice.kl_poly()
