"""Finite simple graphs on small labelled vertex sets.

Vertices carry labels 1..n.  Adjacency is stored as n bitrows: bit ``u-1``
of ``rows[v-1]`` is set iff {u, v} is an edge.  All operations below are
pure; a ``Graph`` is immutable and hashable, so values can be shared freely
(including across worker processes).

The vertex ceiling of 31 keeps a vertex subset, and the 2n monomial slots
used downstream, inside a single machine word each.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional, Sequence

MAX_VERTICES = 31


def _bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with vertex labels 1..n."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0 or self.n > MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.rows) != self.n:
            raise ValueError("adjacency row count does not match vertex count")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.rows):
            if row & ~full:
                raise ValueError(f"row {i + 1} has bits outside 1..{self.n}")
            if row >> i & 1:
                raise ValueError(f"loop at vertex {i + 1}")
            for j in _bits(row):
                if not self.rows[j] >> i & 1:
                    raise ValueError(f"adjacency not symmetric at {{{i + 1},{j + 1}}}")

    # -- basic queries ----------------------------------------------------

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def neighbors_mask(self, v: int) -> int:
        return self.rows[v - 1]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(b + 1 for b in _bits(self.rows[v - 1]))

    def degree(self, v: int) -> int:
        return self.rows[v - 1].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u - 1] >> (v - 1) & 1)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for i in range(self.n):
            row = self.rows[i] >> (i + 1) << (i + 1)
            out.extend((i + 1, j + 1) for j in _bits(row))
        return out

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def isolated_vertices(self) -> tuple[int, ...]:
        return tuple(i + 1 for i, r in enumerate(self.rows) if not r)

    def has_isolated_vertex(self) -> bool:
        return any(not r for r in self.rows)

    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for b in _bits(frontier):
                nxt |= self.rows[b]
            frontier = nxt & ~seen
            seen |= nxt
        return seen == (1 << self.n) - 1

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Graph(n={self.n}, edges={self.edges()})"


# -- constructors ---------------------------------------------------------


def from_edges(n: int, edges: Sequence[tuple[int, int]]) -> Graph:
    """Graph on vertices 1..n with the given edge list."""
    rows = [0] * n
    for u, v in edges:
        if not (1 <= u <= n and 1 <= v <= n) or u == v:
            raise ValueError(f"bad edge {{{u},{v}}} on {n} vertices")
        rows[u - 1] |= 1 << (v - 1)
        rows[v - 1] |= 1 << (u - 1)
    return Graph(n, tuple(rows))


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("need n >= 1")
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << i) for i in range(n)))


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("need n >= 1")
    return from_edges(n, [(i, i + 1) for i in range(1, n)])


def isolated(n: int) -> Graph:
    if n < 1:
        raise ValueError("need n >= 1")
    return Graph(n, (0,) * n)


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("need n >= 3")
    return from_edges(n, [(i, i + 1) for i in range(1, n)] + [(n, 1)])


def build_standard(kind: str, n: int) -> Graph:
    """Dispatch constructor for the stock families used everywhere."""
    builders = {"complete": complete, "path": path, "isolated": isolated}
    try:
        return builders[kind](n)
    except KeyError:
        raise ValueError(f"unknown standard graph kind {kind!r}") from None


# -- composition ----------------------------------------------------------


def disjoint_union(parts: Sequence[Graph]) -> Graph:
    """Concatenate vertex blocks, shifting labels left to right."""
    if not parts:
        raise ValueError("need at least one part")
    rows: list[int] = []
    shift = 0
    for g in parts:
        rows.extend(r << shift for r in g.rows)
        shift += g.n
    return Graph(shift, tuple(rows))


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between the two vertex blocks."""
    if g1.n < 1 or g2.n < 1:
        raise ValueError("join needs two nonempty graphs")
    mask1 = (1 << g1.n) - 1
    mask2 = ((1 << g2.n) - 1) << g1.n
    rows = [r | mask2 for r in g1.rows]
    rows += [(r << g1.n) | mask1 for r in g2.rows]
    out = Graph(g1.n + g2.n, tuple(rows))
    assert out.is_connected() and not out.has_isolated_vertex()
    return out


def cone(g: Graph) -> Graph:
    """Join with a single new vertex (labelled n+1)."""
    return join(g, isolated(1))


# -- subgraphs and local modifications ------------------------------------


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """Induced subgraph, relabelled 1..|W| in ascending original order."""
    vs = sorted(set(vertices))
    if not vs:
        raise ValueError("induced subgraph on empty vertex set")
    if vs[0] < 1 or vs[-1] > g.n:
        raise ValueError("vertex set not contained in the graph")
    pos = {v: i for i, v in enumerate(vs)}
    rows = []
    for v in vs:
        row = 0
        for u in _bits(g.rows[v - 1]):
            if u + 1 in pos:
                row |= 1 << pos[u + 1]
        rows.append(row)
    return Graph(len(vs), tuple(rows))


def delete_vertex(g: Graph, v: int) -> Graph:
    if not 1 <= v <= g.n:
        raise ValueError(f"no vertex {v}")
    return induced_subgraph(g, [u for u in g.vertices if u != v])


def delete_edge(g: Graph, e: tuple[int, int]) -> Graph:
    u, v = e
    if not g.has_edge(u, v):
        raise ValueError(f"edge {{{u},{v}}} not present")
    rows = list(g.rows)
    rows[u - 1] &= ~(1 << (v - 1))
    rows[v - 1] &= ~(1 << (u - 1))
    return Graph(g.n, tuple(rows))


def _complete_set(rows: list[int], mask: int) -> None:
    for b in _bits(mask):
        rows[b] |= mask & ~(1 << b)


def neighborhood_completion(g: Graph, v: int) -> Graph:
    """Same vertices, with the neighborhood of v turned into a clique."""
    if not 1 <= v <= g.n:
        raise ValueError(f"no vertex {v}")
    rows = list(g.rows)
    _complete_set(rows, g.rows[v - 1])
    return Graph(g.n, tuple(rows))


def edge_completion(g: Graph, e: tuple[int, int]) -> Graph:
    """Both endpoint neighborhoods turned into cliques (e need not be an edge)."""
    u, v = e
    if u == v:
        raise ValueError("endpoints must differ")
    rows = list(g.rows)
    _complete_set(rows, g.rows[u - 1])
    _complete_set(rows, g.rows[v - 1])
    return Graph(g.n, tuple(rows))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple((full ^ r) & ~(1 << i) for i, r in enumerate(g.rows)))


# -- structure predicates --------------------------------------------------


def is_clique(g: Graph, vertices: Sequence[int]) -> bool:
    vs = list(vertices)
    return all(g.has_edge(u, v) for u, v in itertools.combinations(vs, 2))


def is_complete(g: Graph) -> bool:
    return g.n >= 1 and g.edge_count == g.n * (g.n - 1) // 2


def is_path_graph(g: Graph) -> bool:
    if g.n == 1:
        return True
    return (
        g.is_connected()
        and g.edge_count == g.n - 1
        and max(g.degree(v) for v in g.vertices) <= 2
    )


def is_simplicial(g: Graph, v: int) -> bool:
    """A vertex is simplicial when its neighborhood induces a clique."""
    if not 1 <= v <= g.n:
        raise ValueError(f"no vertex {v}")
    nbrs = list(_bits(g.rows[v - 1]))
    return all(g.rows[a] >> b & 1 for a, b in itertools.combinations(nbrs, 2))


def classify_vertex(g: Graph, v: int) -> str:
    return "simplicial" if is_simplicial(g, v) else "internal"


def connected_components(g: Graph) -> tuple[tuple[int, ...], ...]:
    """Vertex sets of the components, each ascending, ordered by least label."""
    seen = 0
    comps = []
    for start in range(g.n):
        if seen >> start & 1:
            continue
        comp = 1 << start
        frontier = comp
        while frontier:
            nxt = 0
            for b in _bits(frontier):
                nxt |= g.rows[b]
            frontier = nxt & ~comp
            comp |= nxt
        seen |= comp
        comps.append(tuple(b + 1 for b in _bits(comp)))
    return tuple(comps)


def vertex_connectivity(g: Graph) -> int:
    """Minimum number of vertices whose removal disconnects g.

    Exhaustive subset search, so restricted to n <= 12.  For complete graphs
    the usual convention n-1 is returned.
    """
    if not g.is_connected():
        raise ValueError("vertex connectivity needs a connected graph")
    if is_complete(g):
        return g.n - 1
    if g.n > 12:
        raise ValueError("exhaustive connectivity search restricted to n <= 12")
    for size in range(1, g.n - 1):
        for cut in itertools.combinations(g.vertices, size):
            rest = [v for v in g.vertices if v not in cut]
            if not induced_subgraph(g, rest).is_connected():
                return size
    raise AssertionError("non-complete connected graph must have a cut set")


# -- gluing decomposition ---------------------------------------------------


@dataclass(frozen=True)
class GluingSplit:
    """A split G = G1 cup_v G2 at a vertex simplicial in both parts.

    ``left`` and ``right`` are the parts' vertex sets in original labels;
    both contain ``vertex`` and nothing else in common, and every edge of G
    lies inside one of them.
    """

    left: tuple[int, ...]
    right: tuple[int, ...]
    vertex: int


def decompose_gluing(g: Graph) -> Optional[GluingSplit]:
    """First valid gluing split, or None for indecomposable graphs.

    Deterministic choice: lowest-label cut vertex admitting a split, then the
    split minimising (|left|, left as a tuple).  Both parts must have at
    least two vertices.
    """
    if not g.is_connected():
        raise ValueError("gluing decomposition needs a connected graph")
    for v in g.vertices:
        rest = [u for u in g.vertices if u != v]
        if not rest:
            break
        comps = connected_components(induced_subgraph(g, rest))
        if len(comps) < 2:
            continue
        # components are labelled inside the deleted graph; map back
        comp_sets = [tuple(rest[i - 1] for i in comp) for comp in comps]
        best: Optional[tuple[int, tuple[int, ...], tuple[int, ...]]] = None
        for k in range(1, len(comp_sets)):
            for chosen in itertools.combinations(range(len(comp_sets)), k):
                left = sorted(
                    [v] + [u for i in chosen for u in comp_sets[i]]
                )
                right = sorted(set(g.vertices) - set(left) | {v})
                nb = g.neighbors_mask(v)
                left_nb = [u for u in left if nb >> (u - 1) & 1]
                right_nb = [u for u in right if nb >> (u - 1) & 1]
                if is_clique(g, left_nb) and is_clique(g, right_nb):
                    key = (len(left), tuple(left), tuple(right))
                    if best is None or key < best:
                        best = key
        if best is not None:
            return GluingSplit(best[1], best[2], v)
    return None


# -- relabelling and canonical forms ----------------------------------------


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Relabel with perm, where perm[i] is the new label of old vertex i+1."""
    if sorted(perm) != list(g.vertices):
        raise ValueError("perm must be a permutation of 1..n")
    rows = [0] * g.n
    for old in g.vertices:
        new = perm[old - 1]
        for b in _bits(g.rows[old - 1]):
            rows[new - 1] |= 1 << (perm[b] - 1)
    return Graph(g.n, tuple(rows))


def _min_order(n: int, rows: tuple[int, ...]) -> tuple[int, ...]:
    """Vertex order (0-based) realising the lexicographically least key.

    The key of an order p is the tuple (c_1, ..., c_{n-1}) where c_k encodes
    the adjacency of p[k] to p[0..k-1], bit i for p[i].  Branch and bound
    over partial orders; candidate columns are tried ascending so the first
    completed leaf is already a good incumbent.
    """
    if n <= 1:
        return tuple(range(n))
    hint = sorted(range(n), key=lambda v: (-rows[v].bit_count(), v))
    best_cols: list[int] | None = None
    best_perm: list[int] = []

    def dfs(placed: list[int], cols: list[int]) -> None:
        nonlocal best_cols, best_perm
        k = len(placed)
        if k == n:
            if best_cols is None or cols < best_cols:
                best_cols = cols[:]
                best_perm = placed[:]
            return
        scored = []
        for v in hint:
            if v in placed:
                continue
            rv = rows[v]
            b = 0
            for idx, u in enumerate(placed):
                b |= (rv >> u & 1) << idx
            scored.append((b, v))
        scored.sort()
        for b, v in scored:
            cols.append(b)
            if best_cols is not None and cols > best_cols[:k + 1]:
                cols.pop()
                break  # ascending, so every later candidate is worse
            placed.append(v)
            dfs(placed, cols)
            placed.pop()
            cols.pop()

    dfs([], [])
    return tuple(best_perm)


@lru_cache(maxsize=65536)
def _canonical_rows(n: int, rows: tuple[int, ...]) -> tuple[int, ...]:
    order = _min_order(n, rows)
    new = [0] * n
    pos = {v: i for i, v in enumerate(order)}
    for old, p in pos.items():
        for b in _bits(rows[old]):
            new[p] |= 1 << pos[b]
    return tuple(new)


def canonical_form(g: Graph) -> Graph:
    """Canonical relabelling: equal outputs exactly for isomorphic inputs."""
    return Graph(g.n, _canonical_rows(g.n, g.rows))


def canon_key(g: Graph) -> tuple[int, int]:
    """(n, packed upper triangle of the canonical form), a total order."""
    rows = _canonical_rows(g.n, g.rows)
    key = 0
    t = 0
    for j in range(1, g.n):
        for i in range(j):
            key |= (rows[j] >> i & 1) << t
            t += 1
    return (g.n, key)
