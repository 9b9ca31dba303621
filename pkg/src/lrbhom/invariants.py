"""Ext dimensions, quivers, relation counts and global dimension of kB.

Everything is read off the complexes Delta(X, Y), the order complexes of
B[X, Y] minus y. Results for one monoid are cached in a :class:`Context`.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .monoid import LRB, Graph
from .order import (Poset, SupportLattice, children_count, commutation_graph, contraction,
                    interval_elements, is_geometric, is_right_hereditary, r_order,
                    support_lattice)
from .topology import (RATIONALS, BettiVector, Field, SimplicialComplex, clique_complex,
                       complex_components, induced_subcomplex, leray_number, order_complex,
                       reduced_betti)


class Context:
    """Support lattice, R-order and per-(X, Y) complexes of one LRB."""

    def __init__(self, B: LRB):
        self.B = B
        self.P: Poset = r_order(B)
        self.L: SupportLattice = support_lattice(B)
        self.reps = self.L.representatives()
        self._delta: dict[tuple[int, int], SimplicialComplex] = {}
        self._betti: dict[tuple[int, int, Field], BettiVector] = {}

    def check_index(self, *xs: int) -> None:
        for x in xs:
            if not 0 <= x < len(self.L):
                raise IndexError(f"lattice index {x} out of range 0..{len(self.L) - 1}")

    def delta(self, X: int, Y: int, y: int | None = None) -> SimplicialComplex:
        if y is not None and y != self.reps[Y]:
            elems = interval_elements(self.B, self.L, X, Y, y)
            return order_complex(self.P.restrict(elems))
        key = (X, Y)
        if key not in self._delta:
            elems = interval_elements(self.B, self.L, X, Y)
            self._delta[key] = order_complex(self.P.restrict(elems))
        return self._delta[key]

    def betti(self, X: int, Y: int, field: Field = RATIONALS) -> BettiVector:
        key = (X, Y, field)
        if key not in self._betti:
            self._betti[key] = reduced_betti(self.delta(X, Y), field)
        return self._betti[key]


@lru_cache(maxsize=64)
def context(B: LRB) -> Context:
    return Context(B)


@dataclass
class Report:
    name: str
    passed: bool
    details: dict = field(default_factory=dict)
    witnesses: list = field(default_factory=list)

    def as_dict(self) -> dict:
        return {"check": self.name, "passed": self.passed, "details": self.details,
                "witnesses": self.witnesses}


class VerificationError(AssertionError):
    def __init__(self, report: Report):
        super().__init__(f"{report.name} failed: {report.witnesses[:3]}")
        self.report = report


def _require(report: Report, strict: bool) -> Report:
    if strict and not report.passed:
        raise VerificationError(report)
    return report


# -- Ext and the quiver -------------------------------------------------------

def ext_dimension(B: LRB, X: int, Y: int, n: int, field: Field = RATIONALS) -> int:
    """dim Ext^n(k_X, k_Y): reduced H^(n-1) of Delta(X, Y) when X < Y, n >= 1."""
    ctx = context(B)
    ctx.check_index(X, Y)
    if n < 0:
        raise ValueError("n must be non-negative")
    if X == Y:
        return 1 if n == 0 else 0
    if n == 0 or not ctx.L.lt(X, Y):
        return 0
    return ctx.betti(X, Y, field)[n - 1]


@dataclass
class ExtTable:
    entries: dict[tuple[int, int, int], int]
    field: Field
    max_n: int

    def __getitem__(self, key: tuple[int, int, int]) -> int:
        X, Y, n = key
        if n > self.max_n:
            raise KeyError(f"table only covers n <= {self.max_n}")
        return self.entries.get(key, 0)

    def nonzero(self) -> dict[tuple[int, int, int], int]:
        return {k: v for k, v in sorted(self.entries.items()) if v}


def ext_table(B: LRB, field: Field = RATIONALS, max_n: int | None = None) -> ExtTable:
    """All nonzero dim Ext^n(k_X, k_Y) for n <= max_n (default: longest chain in the lattice)."""
    ctx = context(B)
    m = ctx.L.longest_chain() if max_n is None else max_n
    entries = {(X, X, 0): 1 for X in range(len(ctx.L))}
    for X, Y in ctx.L.pairs_lt():
        for deg, d in ctx.betti(X, Y, field).nonzero().items():
            if 1 <= deg + 1 <= m:
                entries[(X, Y, deg + 1)] = d
    return ExtTable(entries, field, m)


@dataclass
class Quiver:
    vertices: list[int]
    arrows: np.ndarray
    labels: tuple[str, ...] = ()

    def arrow_list(self) -> list[tuple[int, int, int]]:
        return [(int(a), int(b), int(self.arrows[a, b])) for a, b in np.argwhere(self.arrows)]

    def total_arrows(self) -> int:
        return int(self.arrows.sum())

    def __eq__(self, other):
        return isinstance(other, Quiver) and np.array_equal(self.arrows, other.arrows)


def quiver(B: LRB, field: Field = RATIONALS) -> Quiver:
    """Arrows X -> Y: one less than the number of components of Delta(X, Y).

    Components are counted on the 1-skeleton, then checked against the
    independently computed Ext^1.
    """
    ctx = context(B)
    k = len(ctx.L)
    arrows = np.zeros((k, k), dtype=np.int64)
    for X, Y in ctx.L.pairs_lt():
        K = ctx.delta(X, Y)
        arrows[X, Y] = max(0, complex_components(K) - 1) if not K.is_empty() else 0
        ext1 = ext_dimension(B, X, Y, 1, field)
        if arrows[X, Y] != ext1:
            raise RuntimeError(f"component count {arrows[X, Y]} != Ext^1 {ext1} at ({X},{Y})")
    return Quiver(list(range(k)), arrows, ctx.L.labels)


def relation_counts(B: LRB, field: Field = RATIONALS) -> np.ndarray:
    """Minimal relation counts between X < Y: dim reduced H^1 of Delta(X, Y)."""
    ctx = context(B)
    k = len(ctx.L)
    out = np.zeros((k, k), dtype=np.int64)
    for X, Y in ctx.L.pairs_lt():
        out[X, Y] = ctx.betti(X, Y, field)[1]
    return out


def global_dimension(B: LRB, field: Field = RATIONALS, witness: bool = False):
    """Largest n with some Ext^n(k_X, k_Y) nonzero (0 when semisimple)."""
    ctx = context(B)
    best, where = 0, None
    for X, Y in ctx.L.pairs_lt():
        top = ctx.betti(X, Y, field).top_degree()
        if top is not None and top + 1 > best:
            best, where = top + 1, (X, Y)
    return (best, where) if witness else best


# -- checks -------------------------------------------------------------------

def chain_bound_check(B: LRB, field: Field = RATIONALS, strict: bool = False) -> Report:
    ctx = context(B)
    g = global_dimension(B, field)
    m = ctx.L.longest_chain()
    rep = Report("chain-bound", g <= m, {"gl_dim": g, "longest_chain": m, "field": str(field)})
    if not rep.passed:
        rep.witnesses.append({"gl_dim": g, "bound": m})
    return _require(rep, strict)


def leray_bound_check(B: LRB, field: Field = RATIONALS, max_vertices: int = 16,
                      strict: bool = False) -> Report:
    """gl.dim kB <= L(Delta(B)), Delta(B) the order complex of the whole R-order.

    With at most ``max_vertices`` elements the Leray number is computed
    exactly. Above that, a lower bound is certified instead: an induced
    subcomplex Delta(B)[W] with nonzero H^(g-1) proves L >= g.
    """
    ctx = context(B)
    g, where = global_dimension(B, field, witness=True)
    K = order_complex(ctx.P)
    details = {"gl_dim": g, "field": str(field), "vertices": B.size}
    if B.size <= max_vertices:
        L, W = leray_number(K, field, max_vertices=max_vertices, return_witness=True)
        details.update(method="exact", leray=L, leray_witness=[B.labels[w] for w in W])
        rep = Report("leray-bound", g <= L, details)
    else:
        if g == 0:
            rep = Report("leray-bound", True, {**details, "method": "trivial", "leray_lower": 0})
        else:
            X, Y = where
            W = interval_elements(B, ctx.L, X, Y)
            sub = induced_subcomplex(K, W)
            h = reduced_betti(sub, field)[g - 1]
            details.update(method="certificate", leray_lower=g if h else None,
                           certificate={"X": X, "Y": Y, "degree": g - 1, "dim": h,
                                        "W_size": len(W)})
            rep = Report("leray-bound", h > 0, details)
    if not rep.passed:
        rep.witnesses.append(details)
    return _require(rep, strict)


def fpc_class(B: LRB, support) -> int:
    """Support-lattice class of the elements with the given vertex support."""
    ctx = context(B)
    target = frozenset(support)
    for a, w in enumerate(B.meta["words"]):
        if frozenset(w) == target:
            return ctx.L.class_of[a]
    raise ValueError(f"no element with support {sorted(target)}")


def fpc_ext_check(graph: Graph, U, W, n: int, field: Field = RATIONALS,
                  B: LRB | None = None, strict: bool = False) -> Report:
    """Ext^n(k_U, k_W) over B(graph) against reduced H^(n-1) of Cliq(graph[U - W])."""
    from .monoid import fpc_lrb
    U, W = frozenset(U), frozenset(W)
    if not (W < U <= frozenset(range(graph.vertex_count))) or n < 1:
        raise ValueError("need W a proper subset of U within V, and n >= 1")
    B = B or fpc_lrb(graph)
    lhs = ext_dimension(B, fpc_class(B, U), fpc_class(B, W), n, field)
    rhs = reduced_betti(clique_complex(graph.induced(U - W)), field)[n - 1]
    rep = Report("fpc", lhs == rhs, {"U": sorted(U), "W": sorted(W), "n": n,
                                     "ext": lhs, "clique_cohomology": rhs, "field": str(field)})
    if not rep.passed:
        rep.witnesses.append(rep.details)
    return _require(rep, strict)


def fpc_sweep(graph: Graph, field: Field = RATIONALS, max_n: int = 3,
              strict: bool = False) -> Report:
    """fpc_ext_check over every W proper subset of U and 1 <= n <= max_n."""
    from .monoid import fpc_lrb
    B = fpc_lrb(graph)
    V = range(graph.vertex_count)
    bad, count = [], 0
    for mask_u in range(1 << graph.vertex_count):
        U = {v for v in V if mask_u >> v & 1}
        for k in range(len(U)):
            for W in itertools.combinations(sorted(U), k):
                for n in range(1, max_n + 1):
                    r = fpc_ext_check(graph, U, W, n, field, B=B)
                    count += 1
                    if not r.passed:
                        bad.append(r.details)
    rep = Report("fpc", not bad, {"checked": count, "field": str(field)}, bad)
    return _require(rep, strict)


def tree_quiver(B: LRB) -> Quiver:
    """Quiver of a right hereditary LRB from Hasse children counts."""
    ctx = context(B)
    if not is_right_hereditary(B, ctx.P):
        raise ValueError("tree_quiver requires a right hereditary LRB")
    k = len(ctx.L)
    arrows = np.zeros((k, k), dtype=np.int64)
    for X, Y in ctx.L.pairs_lt():
        arrows[X, Y] = max(0, children_count(B, ctx.reps[Y], X, ctx.L, ctx.P) - 1)
    return Quiver(list(range(k)), arrows, ctx.L.labels)


def tree_quiver_check(B: LRB, fields=(RATIONALS,), strict: bool = False) -> Report:
    tq = tree_quiver(B)
    bad = []
    for f in fields:
        q = quiver(B, f)
        if q != tq:
            bad.append({"field": str(f), "diff": np.argwhere(q.arrows != tq.arrows).tolist()})
    rep = Report("treethm", not bad, {"arrows": tq.total_arrows(),
                                      "fields": [str(f) for f in fields]}, bad)
    return _require(rep, strict)


def crosscut_check(B: LRB, field: Field = RATIONALS, strict: bool = False) -> Report:
    """Delta(bottom, top) and the clique complex of the commutation graph of
    the coatoms must have equal reduced cohomology."""
    ctx = context(B)
    if B.size <= 1:
        raise ValueError("crosscut_check needs |B| > 1")
    if not is_geometric(B, ctx.P):
        raise ValueError("crosscut_check requires a geometric LRB")
    lhs = ctx.betti(ctx.L.bottom, ctx.L.top, field)
    G, elems = commutation_graph(B, ctx.P)
    rhs = reduced_betti(clique_complex(G, max_vertices=max(24, G.vertex_count)), field)
    rep = Report("crosscut", lhs == rhs, {
        "delta": lhs.as_dict(), "clique": rhs.as_dict(), "coatoms": [B.labels[e] for e in elems],
        "commutation_edges": G.sorted_edges(), "field": str(field)})
    if not rep.passed:
        rep.witnesses.append({"delta": lhs.as_dict(), "clique": rhs.as_dict()})
    return _require(rep, strict)


def contraction_acyclicity_check(B: LRB, X: int, field: Field = RATIONALS,
                                 strict: bool = False) -> Report:
    """All reduced cohomology of Delta(B_{>=X}) vanishes."""
    ctx = context(B)
    ctx.check_index(X)
    C = contraction(B, X, ctx.L, ctx.P)
    b = reduced_betti(order_complex(C), field)
    rep = Report("contraction", b.is_zero(), {"X": X, "size": len(C), "betti": b.as_dict(),
                                              "field": str(field)})
    if not rep.passed:
        rep.witnesses.append(rep.details)
    return _require(rep, strict)


def main_result_check(B: LRB, field: Field = RATIONALS, strict: bool = False) -> Report:
    """Internal consistency of the dictionary: quiver = Ext^1, choice of y
    does not matter, and Delta(X, Y) is nonempty whenever X < Y."""
    ctx = context(B)
    bad = []
    q = quiver(B, field)
    for X, Y in ctx.L.pairs_lt():
        K = ctx.delta(X, Y)
        if K.is_empty():
            bad.append({"X": X, "Y": Y, "problem": "empty interval"})
        base = ctx.betti(X, Y, field)
        for y in range(B.size):
            if ctx.L.class_of[y] == Y and y != ctx.reps[Y]:
                other = reduced_betti(ctx.delta(X, Y, y), field)
                if other != base:
                    bad.append({"X": X, "Y": Y, "y": B.labels[y], "problem": "choice of y"})
        if q.arrows[X, Y] != ext_dimension(B, X, Y, 1, field):
            bad.append({"X": X, "Y": Y, "problem": "quiver != Ext^1"})
    rep = Report("mainresult", not bad, {"pairs": len(ctx.L.pairs_lt()), "field": str(field)}, bad)
    return _require(rep, strict)


def invariants_summary(B: LRB, field: Field = RATIONALS) -> dict:
    ctx = context(B)
    q = quiver(B, field)
    rel = relation_counts(B, field)
    table = ext_table(B, field)
    g = global_dimension(B, field)
    return {
        "monoid": B.name,
        "size": B.size,
        "field": str(field),
        "lattice": lattice_dict(B),
        "global_dimension": g,
        "longest_chain": ctx.L.longest_chain(),
        "quiver": [{"from": a, "to": b, "arrows": m} for a, b, m in q.arrow_list()],
        "relations": [{"from": int(a), "to": int(b), "count": int(rel[a, b])}
                      for a, b in np.argwhere(rel)],
        "ext": [{"X": X, "Y": Y, "n": n, "dim": d} for (X, Y, n), d in table.nonzero().items()],
    }


def lattice_dict(B: LRB) -> list[dict]:
    """Lattice elements with both the ideal order and a combinatorial label."""
    ctx = context(B)
    L = ctx.L
    out = []
    for c in range(len(L)):
        rep = ctx.reps[c]
        entry = {"index": c, "label": L.labels[c], "ideal_size": len(L.classes[c]),
                 "representative": B.labels[rep],
                 "above": [d for d in range(len(L)) if L.lt(c, d)]}
        if "words" in B.meta:
            entry["support"] = sorted(B.labels[rep]) if rep != B.identity else []
        if "faces" in B.meta:
            entry["subspace_dim"] = B.meta["faces"][rep].dim
        out.append(entry)
    return out
