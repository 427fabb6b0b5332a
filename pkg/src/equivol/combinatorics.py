"""Face 2-colorings of 4-valent skeletons and vertex independent sets."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import ceil
from typing import Iterable, Sequence

from .polyhedron import AbstractPolyhedron

EXACT_LIMIT = 64


class NotFourValent(ValueError):
    pass


class NotBipartite(ValueError):
    pass


class ParityError(ValueError):
    pass


@dataclass(frozen=True)
class FaceColoring:
    black: frozenset[int]
    white: frozenset[int]

    @property
    def n_black(self) -> int:
        return len(self.black)

    @property
    def n_white(self) -> int:
        return len(self.white)


def two_color_faces(p: AbstractPolyhedron) -> FaceColoring:
    """Properly 2-color the faces of a polyhedron whose vertices all have degree 4.

    Face 0 is seeded black; colors are swapped afterwards if needed so that
    there are at least as many black faces as white ones.
    """
    bad = [v for v in range(p.n_vertices) if p.degree(v) != 4]
    if bad:
        raise NotFourValent(f"vertex {bad[0]} has degree {p.degree(bad[0])}, expected 4")
    nbrs: list[list[int]] = [[] for _ in range(p.n_faces)]
    for f, g in p.edge_faces.values():
        nbrs[f].append(g)
        nbrs[g].append(f)

    color = [-1] * p.n_faces
    color[0] = 0
    queue = deque([0])
    while queue:
        f = queue.popleft()
        for g in nbrs[f]:
            if color[g] < 0:
                color[g] = 1 - color[f]
                queue.append(g)
            elif color[g] == color[f]:
                raise NotBipartite(f"faces {f} and {g} share an edge and received the same color")
    if -1 in color:
        raise NotBipartite("dual graph is disconnected")

    black = frozenset(f for f, c in enumerate(color) if c == 0)
    white = frozenset(f for f, c in enumerate(color) if c == 1)
    if len(black) < len(white):
        black, white = white, black
    return FaceColoring(black, white)


@dataclass(frozen=True)
class IndependentSet:
    vertices: frozenset[int]
    exact: bool

    def __len__(self) -> int:
        return len(self.vertices)


def _as_adjacency(graph) -> list[tuple[int, ...]]:
    if isinstance(graph, AbstractPolyhedron):
        return [tuple(a) for a in graph.adjacency]
    if isinstance(graph, dict):
        n = max(graph, default=-1) + 1
        return [tuple(graph.get(v, ())) for v in range(n)]
    return [tuple(a) for a in graph]


def is_independent(adjacency: Sequence[Iterable[int]], vertices: Iterable[int]) -> bool:
    s = set(vertices)
    return all(w not in s for v in s for w in adjacency[v])


def greedy_independent_set(adjacency: Sequence[Iterable[int]]) -> frozenset[int]:
    """Min-degree greedy; deterministic (ties broken by index)."""
    adj = [set(a) for a in adjacency]
    alive = set(range(len(adj)))
    chosen = []
    while alive:
        v = min(alive, key=lambda u: (len(adj[u] & alive), u))
        chosen.append(v)
        alive -= adj[v] | {v}
    return frozenset(chosen)


class _ExactMIS:
    """Branch and bound over vertex bitmasks.

    Reductions: vertices of degree 0 or 1 are always taken, a cycle is cut
    by discarding any one vertex, components are solved separately, and a
    greedy clique cover gives the pruning upper bound.
    """

    def __init__(self, adjacency: Sequence[Iterable[int]]):
        self.nb = [0] * len(adjacency)
        for v, ws in enumerate(adjacency):
            for w in ws:
                if w != v:
                    self.nb[v] |= 1 << w
        self.memo: dict[int, int] = {}

    def solve(self, mask: int) -> int:
        result = 0
        for comp in self._components(mask):
            result |= self._solve_connected(comp, -1)
        return result

    def _components(self, mask: int) -> list[int]:
        comps = []
        rest = mask
        while rest:
            low = rest & -rest
            comp = low
            frontier = low
            while frontier:
                b = frontier & -frontier
                frontier ^= b
                new = self.nb[b.bit_length() - 1] & rest & ~comp
                comp |= new
                frontier |= new
            comps.append(comp)
            rest &= ~comp
        return comps

    def _clique_cover_bound(self, mask: int) -> int:
        count = 0
        rest = mask
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            clique = low
            cand = self.nb[v] & rest
            while cand:
                b = cand & -cand
                clique |= b
                cand &= self.nb[b.bit_length() - 1]
            rest &= ~clique
            count += 1
        return count

    def _solve_connected(self, mask: int, lo: int) -> int:
        """Maximum independent subset of a connected ``mask``, provided its
        size exceeds ``lo``; otherwise any set of size at most ``lo``."""
        hit = self.memo.get(mask)
        if hit is not None:
            return hit

        taken = 0
        # degree 0/1 rule, iterated to a fixed point
        changed = True
        while changed and mask:
            changed = False
            m = mask
            while m:
                b = m & -m
                m ^= b
                if not mask & b:
                    continue
                v = b.bit_length() - 1
                nv = self.nb[v] & mask
                if nv & (nv - 1) == 0:
                    taken |= b
                    mask &= ~(b | nv)
                    changed = True
        size_taken = taken.bit_count()
        if not mask:
            return taken

        comps = self._components(mask)
        if len(comps) > 1:
            return taken | self.solve(mask)

        if self._clique_cover_bound(mask) + size_taken <= lo:
            return 0

        best_v, best_deg = -1, -1
        m = mask
        while m:
            b = m & -m
            m ^= b
            v = b.bit_length() - 1
            d = (self.nb[v] & mask).bit_count()
            if d > best_deg:
                best_v, best_deg = v, d
        v = best_v
        bit = 1 << v
        if best_deg <= 2:
            # a cycle: some maximum set avoids v
            sub = self._solve_connected(mask & ~bit, -1)
            result = taken | sub
            self.memo[mask] = sub
            return result

        inner_lo = lo - size_taken
        rest_in = mask & ~(bit | self.nb[v])
        with_v = bit | (self.solve(rest_in) if rest_in else 0)
        best = with_v
        best_size = best.bit_count()
        without = self._solve_connected(mask & ~bit, max(inner_lo, best_size))
        if without.bit_count() > best_size:
            best = without
            best_size = without.bit_count()
        if best_size > inner_lo:
            self.memo[mask] = best
        return taken | best


def max_independent_set(graph) -> IndependentSet:
    """A maximum independent set of a simple graph.

    ``graph`` is an :class:`AbstractPolyhedron`, an adjacency sequence or a
    dict of neighbour lists.  Graphs with more than ``EXACT_LIMIT`` vertices
    fall back to a greedy set flagged ``exact=False``.
    """
    adj = _as_adjacency(graph)
    n = len(adj)
    if n > EXACT_LIMIT:
        return IndependentSet(greedy_independent_set(adj), exact=False)
    solver = _ExactMIS(adj)
    mask = solver.solve((1 << n) - 1)
    verts = frozenset(v for v in range(n) if mask >> v & 1)
    return IndependentSet(verts, exact=True)


def trivalent_independence_floor(n: int) -> int:
    """``ceil(3n/8)``, the independence guarantee used for cubic skeletons."""
    return ceil(3 * n / 8)


def euler_edge_count(n_inf: int, n_f: int) -> int:
    """Edges of a skeleton with ``n_inf`` degree-4 and ``n_f`` degree-3 vertices."""
    if n_inf < 0 or n_f < 0:
        raise ValueError("vertex counts must be nonnegative")
    twice = 3 * n_f + 4 * n_inf
    if twice % 2:
        raise ParityError(f"3*{n_f} + 4*{n_inf} is odd: degree sum must be even")
    return twice // 2


def euler_face_count_identity(n_inf: int, n_f: int) -> int:
    """Face count forced by Euler's relation, ``F = 2 + E - N``."""
    return 2 + euler_edge_count(n_inf, n_f) - (n_inf + n_f)
