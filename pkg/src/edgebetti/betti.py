"""Graded Betti tables of S/I for squarefree monomial ideals I, two ways.

The workhorse is Hochster's formula: for a squarefree I with Stanley-Reisner
complex D on the variable slots,

    beta_{i,W}(S/I) = dim_K H~_{|W|-i-1}(D_W; K)

summed over slot subsets W of size j to give beta_{i,j}.  Only subsets that
are unions of generator supports can contribute: any other W has a vertex
lying in no generator inside W, which is a cone point of D_W.  The union
closure of the generator supports is therefore the whole iteration space.

An independent cross-check computes Tor_i(S/I, K)_j as homology of the
Koszul complex on all variables tensored with S/I, one squarefree
multidegree strand at a time, with no pruning.  The two tables must agree
entry for entry; the acceptance tests enforce that on graph ideals and on
random squarefree ideals.

Both tables are for the quotient S/I.  The invariants of a graph's binomial
edge ideal J itself are derived at the boundary:

    proj dim(J) = proj dim(S/J) - 1,    reg(J) = reg(S/J) + 1,

and transfer from the lex initial ideal to J is exact because that initial
ideal is squarefree (the one imported external theorem in this package; the
verification suite cross-checks the published catalogue values).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .graphs import Graph
from .homology import _sign_position, homology_from_faces
from .ideals import MAX_ACTIVE_SLOTS, MonomialIdeal, initial_ideal, mark_supersets
from .linalg import parse_field, rank_mod_p, rank_rational


class EdgelessGraphError(ValueError):
    """The binomial edge ideal of an edgeless graph is zero: no Betti table."""


class PdRegPair(NamedTuple):
    pd: int
    reg: int


@dataclass(frozen=True)
class BettiTable:
    """Nonzero graded Betti numbers beta_{i,j}(S/I)."""

    num_vars: int
    field: str
    entries: dict[tuple[int, int], int]

    @property
    def quotient_pd(self) -> int:
        return max(i for i, _ in self.entries)

    @property
    def quotient_reg(self) -> int:
        return max(j - i for i, j in self.entries)

    def triples(self) -> list[tuple[int, int, int]]:
        return [(i, j, b) for (i, j), b in sorted(self.entries.items())]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.num_vars == other.num_vars and self.entries == other.entries


def _compress(gens: tuple[int, ...]) -> tuple[list[int], int]:
    """Drop unused slots: slots in no generator are cone points everywhere."""
    used = 0
    for g in gens:
        used |= g
    remap = {}
    k = 0
    m = used
    while m:
        low = m & -m
        remap[low] = 1 << k
        k += 1
        m ^= low
    out = []
    for g in gens:
        c = 0
        t = g
        while t:
            low = t & -t
            c |= remap[low]
            t ^= low
        out.append(c)
    return out, k


def _union_closure(gens: list[int]) -> list[int]:
    fam = {0}
    for g in gens:
        fam |= {w | g for w in fam}
    return sorted(fam)


def _faces_within(w: int, nonface: bytearray) -> list[list[int]]:
    faces: list[list[int]] = [[] for _ in range(w.bit_count() + 1)]
    s = w
    while True:
        if not nonface[s]:
            faces[s.bit_count()].append(s)
        if s == 0:
            break
        s = (s - 1) & w
    for level in faces:
        level.reverse()  # submask loop runs descending
    return faces


def betti_table_hochster(ideal: MonomialIdeal, field: str = "q") -> BettiTable:
    """Betti table of S/I via Hochster's formula over the union closure."""
    if ideal.is_unit:
        raise ValueError("the unit ideal has no Betti table")
    parse_field(field)
    if ideal.is_zero:
        return BettiTable(ideal.num_vars, field, {(0, 0): 1})
    gens, k = _compress(ideal.generators)
    if k > MAX_ACTIVE_SLOTS:
        raise ValueError(f"{k} active slots exceed the exhaustive budget")
    nonface = mark_supersets(gens, k)
    entries: dict[tuple[int, int], int] = {}
    for w in _union_closure(gens):
        faces = _faces_within(w, nonface)
        hvec = homology_from_faces(faces, field)
        j = w.bit_count()
        for d, h in enumerate(hvec, start=-1):
            if h:
                key = (j - d - 1, j)
                entries[key] = entries.get(key, 0) + h
    return BettiTable(ideal.num_vars, field, entries)


def betti_table_koszul(ideal: MonomialIdeal, field: str = "q") -> BettiTable:
    """Betti table of S/I from Koszul-complex strands; the oracle route.

    Iterates every squarefree multidegree a: the strand in homological
    degree i has basis {e_F tensor x^(a-F) : F subset a, |F| = i, x^(a-F)
    not in I}; the differential multiplies one exterior slot back in and
    kills terms landing in I.  No subset pruning: this route stays simple
    and slow on purpose.
    """
    if ideal.is_unit:
        raise ValueError("the unit ideal has no Betti table")
    kind, p = parse_field(field)
    m = ideal.num_vars
    if m > 16:
        raise ValueError("the Koszul route is an oracle for small rings only")
    in_ideal = bytearray(1 << m)
    for mask in range(1 << m):
        if ideal.contains_monomial(mask):
            in_ideal[mask] = 1
    entries: dict[tuple[int, int], int] = {}
    for a in range(1 << m):
        na = a.bit_count()
        basis: list[list[int]] = [[] for _ in range(na + 1)]
        s = a
        while True:
            if not in_ideal[a ^ s]:
                basis[s.bit_count()].append(s)
            if s == 0:
                break
            s = (s - 1) & a
        ranks = [0] * (na + 2)
        for c in range(1, na + 1):
            if not basis[c] or not basis[c - 1]:
                continue
            idx = {f: i for i, f in enumerate(basis[c - 1])}
            mat = [[0] * len(basis[c]) for _ in basis[c - 1]]
            for col, f in enumerate(basis[c]):
                t = f
                while t:
                    low = t & -t
                    f2 = f ^ low
                    if not in_ideal[a ^ f2]:
                        sign = -1 if _sign_position(f, low) & 1 else 1
                        mat[idx[f2]][col] = sign
                    t ^= low
            ranks[c] = rank_rational(mat) if kind == "q" else rank_mod_p(mat, p)
        for c in range(na + 1):
            dim_tor = len(basis[c]) - ranks[c] - ranks[c + 1]
            if dim_tor:
                key = (c, na)
                entries[key] = entries.get(key, 0) + dim_tor
    return BettiTable(m, field, entries)


# -- graph-level invariants ---------------------------------------------------


@lru_cache(maxsize=200000)
def _pd_reg_rows(n: int, rows: tuple[int, ...], field: str) -> PdRegPair:
    table = betti_table_hochster(initial_ideal(Graph(n, rows)), field)
    return PdRegPair(table.quotient_pd - 1, table.quotient_reg + 1)


def pd_reg(g: Graph, field: str = "q") -> PdRegPair:
    """(proj dim, regularity) of the binomial edge ideal of g."""
    if g.edge_count == 0:
        raise EdgelessGraphError("edgeless graph: the ideal is zero")
    return _pd_reg_rows(g.n, g.rows, field)


def depth_of_quotient(g: Graph, field: str = "q") -> int:
    """depth of S/J via the Auslander-Buchsbaum formula, 2n - pd(S/J)."""
    p, _ = pd_reg(g, field)
    return 2 * g.n - (p + 1)


# -- independent Hilbert-series sanity -----------------------------------------


def kpolynomial_numerator(ideal: MonomialIdeal) -> dict[int, int]:
    """Numerator of the Hilbert series of S/I by inclusion-exclusion.

    Coefficient of t^d is sum over generator subsets with union of size d of
    (-1)^(subset size).  Exponential in the number of generators; used as an
    independent check on small inputs only.
    """
    gens = ideal.generators
    if len(gens) > 20:
        raise ValueError("inclusion-exclusion limited to 20 generators")
    coeffs: dict[int, int] = {}
    for sub in range(1 << len(gens)):
        u = 0
        t = sub
        while t:
            low = t & -t
            u |= gens[low.bit_length() - 1]
            t ^= low
        d = u.bit_count()
        coeffs[d] = coeffs.get(d, 0) + (-1 if sub.bit_count() & 1 else 1)
    return {d: c for d, c in coeffs.items() if c}


def table_alternating_sum(table: BettiTable) -> dict[int, int]:
    """sum_i (-1)^i beta_{i,j} per degree j; equals the K-polynomial."""
    coeffs: dict[int, int] = {}
    for (i, j), b in table.entries.items():
        coeffs[j] = coeffs.get(j, 0) + (-b if i & 1 else b)
    return {d: c for d, c in coeffs.items() if c}
