"""Executable checkers for the bounds, formulas and characterizations.

Every checker recomputes invariants through the Betti engine and never
reuses a construction's claimed values.  A failed check always carries a
counterexample payload (graph6 plus the offending numbers) so exhaustive
runs produce actionable reports.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .betti import pd_reg
from .families import (
    classify_second_max_pd_shape,
    is_max_pd_shape,
    is_reg3_shape,
)
from .graph6 import graph6_encode
from .graphs import (
    Graph,
    classify_vertex,
    decompose_gluing,
    delete_vertex,
    disjoint_union,
    induced_subgraph,
    is_clique,
    is_complete,
    is_path_graph,
    join,
    neighborhood_completion,
    vertex_connectivity,
)


@dataclass(frozen=True)
class CheckReport:
    name: str
    population: str
    passed: bool
    counterexample: Optional[dict] = None
    details: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not self.passed and self.counterexample is None:
            raise ValueError("a failed check must carry a counterexample")

    def to_json(self) -> dict:
        doc = {
            "name": self.name,
            "population": self.population,
            "passed": self.passed,
            "details": self.details,
        }
        if self.counterexample is not None:
            doc["counterexample"] = self.counterexample
        return doc


def _report(name: str, population: str, failures: list[dict], details: dict) -> CheckReport:
    return CheckReport(
        name,
        population,
        not failures,
        failures[0] if failures else None,
        details,
    )


def check_global_bounds(g: Graph, field_tag: str = "q") -> CheckReport:
    """Every unconditional bound and both extreme-value characterizations."""
    if g.has_isolated_vertex() or g.n < 2:
        raise ValueError("bounds are stated for graphs on >= 2 non-isolated vertices")
    n = g.n
    p, r = pd_reg(g, field_tag)
    complete_g = is_complete(g)
    path_g = is_path_graph(g)
    connected = g.is_connected()
    clauses: dict[str, bool] = {
        "reg_window": 2 <= r <= n,
        "reg2_iff_complete": (r == 2) == complete_g,
        "regn_iff_path": (r == n) == path_g,
        "complete_pd": p == n - 2 if complete_g else True,
        "path_pd": p == n - 2 if path_g else True,
    }
    details: dict = {"pd": p, "reg": r, "n": n}
    if n >= 3:
        clauses["pd_upper"] = p <= 2 * n - 5
        clauses["depth_floor"] = 2 * n - (p + 1) >= 4
    if connected:
        clauses["connected_pd_floor"] = p >= n - 2
        if not complete_g:
            ell = vertex_connectivity(g)
            details["vertex_connectivity"] = ell
            clauses["connectivity_pd_floor"] = p >= n + ell - 3
    if 3 <= r <= n - 1:
        clauses["refined_pd_floor"] = p >= max(n - r, r - 2)
    failures = (
        []
        if all(clauses.values())
        else [
            {
                "graph6": graph6_encode(g),
                "pd": p,
                "reg": r,
                "failed": sorted(k for k, ok in clauses.items() if not ok),
            }
        ]
    )
    return _report("global_bounds", f"graph n={n}", failures, details)


# -- composition formulas -------------------------------------------------------


def check_disjoint_union_formulas(
    parts: Sequence[Graph], field_tag: str = "q"
) -> CheckReport:
    """pd adds with a +(c-1) shift and reg adds with a -(c-1) shift."""
    if not parts:
        raise ValueError("need at least one part")
    if any(part.edge_count == 0 for part in parts):
        raise ValueError("every part must have an edge")
    whole = disjoint_union(parts)
    p, r = pd_reg(whole, field_tag)
    pieces = [pd_reg(part, field_tag) for part in parts]
    c = len(parts)
    want_p = sum(q.pd for q in pieces) + (c - 1)
    want_r = sum(q.reg for q in pieces) - (c - 1)
    ok = (p, r) == (want_p, want_r)
    failures = (
        []
        if ok
        else [
            {
                "graph6": graph6_encode(whole),
                "got": [p, r],
                "expected": [want_p, want_r],
            }
        ]
    )
    return _report(
        "disjoint_union_formulas",
        f"{c} parts, n={whole.n}",
        failures,
        {"parts": [[q.pd, q.reg] for q in pieces]},
    )


def check_join_regularity(g1: Graph, g2: Graph, field_tag: str = "q") -> CheckReport:
    """reg of a join is the max of the parts' regs and 3 (edgeless parts drop)."""
    if is_complete(g1) and is_complete(g2):
        raise ValueError("the join formula excludes two complete operands")
    whole = join(g1, g2)
    _, r = pd_reg(whole, field_tag)
    terms = [3]
    for part in (g1, g2):
        if part.edge_count:
            terms.append(pd_reg(part, field_tag).reg)
    want = max(terms)
    failures = (
        []
        if r == want
        else [{"graph6": graph6_encode(whole), "got": r, "expected": want}]
    )
    return _report(
        "join_regularity", f"n={whole.n}", failures, {"terms": sorted(terms)}
    )


def check_cone_formula(base: Graph, field_tag: str = "q") -> CheckReport:
    """pd of a cone: +2 over a connected base, capped below by n-3 otherwise.

    Scope: bases on non-isolated vertices only.  An isolated base vertex
    turns into a pendant of the apex and genuinely breaks the formula
    (cone over 2K2 + K1 has pd 4, not max(1+2, 3) = 3), and a complete base
    gives a complete cone where the +2 step fails as well.
    """
    if base.edge_count == 0:
        raise ValueError("the cone formula needs a base with an edge")
    if base.has_isolated_vertex():
        raise ValueError("the cone formula needs a base without isolated vertices")
    if is_complete(base):
        raise ValueError("the cone formula excludes complete bases")
    whole = join(base, Graph(1, (0,)))
    n = whole.n
    p, r = pd_reg(whole, field_tag)
    bp, br = pd_reg(base, field_tag)
    want_p = bp + 2 if base.is_connected() else max(bp + 2, n - 3)
    want_r = max(br, 3)
    ok = (p, r) == (want_p, want_r)
    failures = (
        []
        if ok
        else [
            {
                "graph6": graph6_encode(whole),
                "got": [p, r],
                "expected": [want_p, want_r],
            }
        ]
    )
    return _report(
        "cone_formula",
        f"base n={base.n} {'connected' if base.is_connected() else 'disconnected'}",
        failures,
        {"base": [bp, br]},
    )


def check_gluing_formulas(g: Graph, field_tag: str = "q") -> CheckReport:
    """pd and reg across a split at a vertex simplicial in both parts."""
    split = decompose_gluing(g)
    if split is None:
        raise ValueError("graph is not decomposable")
    left = induced_subgraph(g, split.left)
    right = induced_subgraph(g, split.right)
    p, r = pd_reg(g, field_tag)
    lp, lr = pd_reg(left, field_tag)
    rp, rr = pd_reg(right, field_tag)
    ok = p == lp + rp + 1 and r == lr + rr - 1
    failures = (
        []
        if ok
        else [
            {
                "graph6": graph6_encode(g),
                "got": [p, r],
                "expected": [lp + rp + 1, lr + rr - 1],
            }
        ]
    )
    return _report(
        "gluing_formulas",
        f"n={g.n} split at {split.vertex}",
        failures,
        {"left": [lp, lr], "right": [rp, rr], "vertex": split.vertex},
    )


def check_composition_formulas(kind: str, *args, field_tag: str = "q") -> CheckReport:
    """Dispatcher over the four composition checks, by kind."""
    table = {
        "disjoint_union": check_disjoint_union_formulas,
        "join": check_join_regularity,
        "cone": check_cone_formula,
        "gluing": check_gluing_formulas,
    }
    try:
        fn = table[kind]
    except KeyError:
        raise ValueError(f"unknown composition kind {kind!r}") from None
    return fn(*args, field_tag=field_tag)


# -- structural characterizations -----------------------------------------------


def check_characterizations(g: Graph, field_tag: str = "q") -> CheckReport:
    """Both directions of the three shape iffs, plus the reg windows."""
    if g.n < 5 or g.has_isolated_vertex():
        raise ValueError("characterizations need n >= 5 non-isolated vertices")
    n = g.n
    p, r = pd_reg(g, field_tag)
    max_shape = is_max_pd_shape(g)
    second_shape, reason = classify_second_max_pd_shape(g)
    clauses: dict[str, bool] = {
        "max_pd_iff_two_universal": (p == 2 * n - 5) == max_shape,
        "second_max_pd_iff_shape": (p == 2 * n - 6) == second_shape,
    }
    if not is_complete(g):
        clauses["reg3_iff_shape"] = (r == 3) == is_reg3_shape(g, field_tag)
    if p == 2 * n - 5:
        clauses["max_pd_reg_window"] = 3 <= r <= n - 2
    if p == 2 * n - 6 and n >= 6:
        clauses["second_max_pd_reg_window"] = 3 <= r <= n - 2
    failures = (
        []
        if all(clauses.values())
        else [
            {
                "graph6": graph6_encode(g),
                "pd": p,
                "reg": r,
                "failed": sorted(k for k, ok in clauses.items() if not ok),
            }
        ]
    )
    return _report(
        "characterizations",
        f"graph n={n}",
        failures,
        {"pd": p, "reg": r, "second_max_reason": reason},
    )


def check_internal_vertex_bound(g: Graph, v: int, field_tag: str = "q") -> CheckReport:
    """reg(g) <= max(reg(g - v), reg(g_v), reg(g_v - v) + 1) for internal v.

    Terms whose graph has no edge drop out (their ideal is zero).
    """
    if classify_vertex(g, v) != "internal":
        raise ValueError(f"vertex {v} is simplicial; the bound needs an internal vertex")
    _, r = pd_reg(g, field_tag)
    terms = []
    deleted = delete_vertex(g, v)
    completed = neighborhood_completion(g, v)
    completed_deleted = delete_vertex(completed, v)
    if deleted.edge_count:
        terms.append(pd_reg(deleted, field_tag).reg)
    terms.append(pd_reg(completed, field_tag).reg)
    terms.append(pd_reg(completed_deleted, field_tag).reg + 1)
    bound = max(terms)
    failures = (
        []
        if r <= bound
        else [{"graph6": graph6_encode(g), "vertex": v, "reg": r, "bound": bound}]
    )
    return _report(
        "internal_vertex_reg_bound",
        f"n={g.n} v={v}",
        failures,
        {"reg": r, "bound_terms": terms},
    )


def check_clique_bound(g: Graph, w: Sequence[int], field_tag: str = "q") -> CheckReport:
    """reg(g) <= n + 2 - |W| for a clique W of a connected graph."""
    if not g.is_connected():
        raise ValueError("the clique bound is stated for connected graphs")
    vs = sorted(set(w))
    if not is_clique(g, vs):
        raise ValueError("W is not a clique")
    _, r = pd_reg(g, field_tag)
    bound = g.n + 2 - len(vs)
    failures = (
        []
        if r <= bound
        else [{"graph6": graph6_encode(g), "clique": vs, "reg": r, "bound": bound}]
    )
    return _report(
        "clique_reg_bound", f"n={g.n} |W|={len(vs)}", failures, {"reg": r, "bound": bound}
    )


def check_monotonicity(g: Graph, w: Sequence[int], field_tag: str = "q") -> CheckReport:
    """Induced subgraphs can only shrink both invariants."""
    sub = induced_subgraph(g, w)
    if sub.edge_count == 0:
        raise ValueError("the restriction must keep at least one edge")
    p, r = pd_reg(g, field_tag)
    sp, sr = pd_reg(sub, field_tag)
    ok = sp <= p and sr <= r
    failures = (
        []
        if ok
        else [
            {
                "graph6": graph6_encode(g),
                "subset": sorted(set(w)),
                "sub": [sp, sr],
                "whole": [p, r],
            }
        ]
    )
    return _report(
        "monotonicity", f"n={g.n} |W|={len(set(w))}", failures, {"sub": [sp, sr]}
    )
