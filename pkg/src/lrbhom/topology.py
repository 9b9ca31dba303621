"""Simplicial complexes and their reduced cohomology over Q or F_p."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

import sympy

from .linalg import rank_mod_p, rank_rational
from .monoid import CapExceeded, Graph

MAX_FACES = 10**6


@dataclass(frozen=True)
class Field:
    """Coefficient field: the rationals (``p is None``) or F_p."""
    p: int | None = None

    def __post_init__(self):
        if self.p is not None:
            if not (isinstance(self.p, int) and 1 < self.p < 2**31 and sympy.isprime(self.p)):
                raise ValueError(f"{self.p} is not a prime below 2^31")

    @classmethod
    def parse(cls, text: str) -> "Field":
        t = text.strip().upper()
        if t in ("Q", "QQ", "RATIONALS"):
            return RATIONALS
        for prefix in ("FP", "GF", "F"):
            if t.startswith(prefix) and t[len(prefix):].lstrip(":(").rstrip(")").isdigit():
                return cls(int(t[len(prefix):].lstrip(":(").rstrip(")")))
        if t.isdigit():
            return cls(int(t))
        raise ValueError(f"unknown field {text!r}; use Q or F<p>")

    def rank(self, rows: Iterable[dict[int, int]]) -> int:
        return rank_rational(rows) if self.p is None else rank_mod_p(rows, self.p)

    def __str__(self):
        return "Q" if self.p is None else f"F{self.p}"


RATIONALS = Field()


@dataclass(frozen=True)
class BettiVector:
    """Reduced cohomology dimensions; ``dims[0]`` is degree -1."""
    dims: tuple[int, ...]

    def __post_init__(self):
        d = list(self.dims)
        while d and d[-1] == 0:
            d.pop()
        object.__setattr__(self, "dims", tuple(d))

    def __getitem__(self, degree: int) -> int:
        i = degree + 1
        return self.dims[i] if 0 <= i < len(self.dims) else 0

    def nonzero(self) -> dict[int, int]:
        return {i - 1: d for i, d in enumerate(self.dims) if d}

    def top_degree(self) -> int | None:
        """Largest degree with nonzero cohomology, or None if acyclic."""
        return len(self.dims) - 2 if self.dims else None

    def is_zero(self) -> bool:
        return not self.dims

    def euler(self) -> int:
        return sum((-1) ** (i - 1) * d for i, d in enumerate(self.dims))

    def as_dict(self) -> dict[str, int]:
        return {str(k): v for k, v in self.nonzero().items()}

    @classmethod
    def sphere(cls, dim: int) -> "BettiVector":
        v = [0] * (dim + 2)
        v[dim + 1] = 1
        return cls(tuple(v))


@dataclass(frozen=True, eq=False)
class SimplicialComplex:
    """Finite abstract simplicial complex on vertices ``0..vertex_count-1``.

    ``facets`` holds the maximal faces as sorted tuples. The empty complex has
    no facets; the complex {{}} is not represented separately.
    """
    vertex_count: int
    facets: tuple[tuple[int, ...], ...]
    vertex_labels: tuple = ()

    @classmethod
    def from_faces(cls, vertex_count: int, faces: Iterable[Iterable[int]],
                   vertex_labels: Sequence = ()) -> "SimplicialComplex":
        fs = {tuple(sorted(set(f))) for f in faces}
        fs.discard(())
        for f in fs:
            if f and (f[0] < 0 or f[-1] >= vertex_count):
                raise ValueError(f"face {f} has a vertex out of range")
        facets = _maximal_sets(fs)
        return cls(vertex_count, tuple(sorted(facets)), tuple(vertex_labels))

    @cached_property
    def faces(self) -> tuple[tuple[tuple[int, ...], ...], ...]:
        """All nonempty faces grouped by dimension, each group sorted."""
        by_dim: list[set] = []
        total = 0
        for f in self.facets:
            for k in range(1, len(f) + 1):
                while len(by_dim) < k:
                    by_dim.append(set())
                before = len(by_dim[k - 1])
                by_dim[k - 1].update(itertools.combinations(f, k))
                total += len(by_dim[k - 1]) - before
            if total > MAX_FACES:
                raise CapExceeded(f"complex has more than {MAX_FACES} faces")
        return tuple(tuple(sorted(s)) for s in by_dim)

    @property
    def dimension(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    def f_vector(self) -> list[int]:
        return [len(g) for g in self.faces]

    def is_empty(self) -> bool:
        return not self.facets

    def used_vertices(self) -> list[int]:
        return sorted({v for f in self.facets for v in f})

    def one_skeleton_edges(self) -> list[tuple[int, int]]:
        return list(self.faces[1]) if len(self.faces) > 1 else []


def _maximal_sets(sets: Iterable[tuple[int, ...]]) -> list[tuple[int, ...]]:
    ordered = sorted(set(sets), key=len, reverse=True)
    kept: list[frozenset] = []
    out = []
    for s in ordered:
        fs = frozenset(s)
        if not any(fs <= k for k in kept):
            kept.append(fs)
            out.append(s)
    return out


# -- constructions ------------------------------------------------------------

def order_complex(P) -> SimplicialComplex:
    """Chains of a finite poset; vertices are poset positions."""
    n = len(P)
    if n == 0:
        return SimplicialComplex(0, (), ())
    up: list[list[int]] = [[] for _ in range(n)]
    for lo, hi in P.hasse:
        up[lo].append(hi)
    facets = []
    # maximal chains are saturated chains from a minimal to a maximal element
    stack = [(m, (m,)) for m in P.minimal()]
    while stack:
        v, chain = stack.pop()
        if not up[v]:
            facets.append(chain)
            if len(facets) > MAX_FACES:
                raise CapExceeded("too many maximal chains")
            continue
        for w in up[v]:
            stack.append((w, chain + (w,)))
    return SimplicialComplex(n, tuple(sorted(tuple(sorted(f)) for f in facets)), tuple(P.labels))


def bron_kerbosch(adj: Sequence[set[int]]) -> list[tuple[int, ...]]:
    """Maximal cliques, Bron-Kerbosch with pivoting."""
    out = []

    def expand(r, p, x):
        if not p and not x:
            out.append(tuple(sorted(r)))
            return
        pivot = max(p | x, key=lambda u: len(adj[u] & p))
        for v in sorted(p - adj[pivot]):
            expand(r | {v}, p & adj[v], x & adj[v])
            p = p - {v}
            x = x | {v}

    expand(set(), set(range(len(adj))), set())
    return out


def clique_complex(G: Graph, max_vertices: int = 24) -> SimplicialComplex:
    if G.vertex_count > max_vertices:
        raise CapExceeded(f"clique_complex: {G.vertex_count} vertices exceeds cap {max_vertices}")
    if G.vertex_count == 0:
        return SimplicialComplex(0, ())
    return SimplicialComplex(G.vertex_count, tuple(sorted(bron_kerbosch(G.adjacency()))))


def induced_subcomplex(K: SimplicialComplex, W: Iterable[int]) -> SimplicialComplex:
    """Faces of K with all vertices in W; vertex numbering is kept."""
    w = set(W)
    pieces = {tuple(v for v in f if v in w) for f in K.facets}
    pieces.discard(())
    return SimplicialComplex(K.vertex_count, tuple(sorted(_maximal_sets(pieces))), K.vertex_labels)


# -- cohomology ---------------------------------------------------------------

def coboundary_rows(K: SimplicialComplex, degree: int) -> list[dict[int, int]]:
    """Rows of the coboundary delta^degree: C^degree -> C^(degree+1).

    One sparse row per (degree+1)-face, columns index the degree-faces in
    sorted order. Degree -1 is the augmentation.
    """
    faces = K.faces
    if degree + 1 >= len(faces):
        return []
    if degree == -1:
        return [{0: 1} for _ in faces[0]]
    index = {f: i for i, f in enumerate(faces[degree])}
    rows = []
    for tau in faces[degree + 1]:
        rows.append({index[tau[:j] + tau[j + 1:]]: (-1) ** j for j in range(len(tau))})
    return rows


def boundary_rows(K: SimplicialComplex, degree: int) -> list[dict[int, int]]:
    """Rows of the boundary map d_degree: one row per (degree-1)-face."""
    cob = coboundary_rows(K, degree - 1)
    n_low = 1 if degree == 0 else len(K.faces[degree - 1])
    rows: list[dict[int, int]] = [dict() for _ in range(n_low)]
    for j, r in enumerate(cob):
        for i, v in r.items():
            rows[i][j] = v
    return rows


def reduced_betti(K: SimplicialComplex, field: Field = RATIONALS,
                  min_degree: int = -1) -> BettiVector:
    """dim of reduced cohomology H^i(K; field) for every i >= min_degree.

    Degrees below ``min_degree`` are reported as 0. The empty complex has
    H^-1 of dimension 1; a point is acyclic.
    """
    if K.is_empty():
        return BettiVector((1,) if min_degree <= -1 else ())
    fv = [1] + K.f_vector()           # fv[i + 1] = number of i-faces
    top = len(fv) - 2
    lo = max(min_degree, -1)
    if lo > top:
        return BettiVector(())
    ranks = {}
    for d in range(lo - 1, top):
        ranks[d] = field.rank(coboundary_rows(K, d)) if d >= -1 else 0
    dims = [0] * (top + 2)
    for i in range(lo, top + 1):
        dims[i + 1] = fv[i + 1] - ranks.get(i, 0) - ranks.get(i - 1, 0)
    return BettiVector(tuple(dims))


def reduced_betti_homology(K: SimplicialComplex, field: Field = RATIONALS) -> BettiVector:
    """Same dimensions computed from boundary (not coboundary) matrices."""
    if K.is_empty():
        return BettiVector((1,))
    fv = [1] + K.f_vector()
    top = len(fv) - 2
    ranks = {d: field.rank(boundary_rows(K, d)) for d in range(0, top + 1)}
    dims = [fv[i + 1] - ranks.get(i, 0) - ranks.get(i + 1, 0) for i in range(-1, top + 1)]
    return BettiVector(tuple(dims))


def is_cone(K: SimplicialComplex) -> bool:
    if not K.facets:
        return False
    common = set(K.facets[0])
    for f in K.facets[1:]:
        common &= set(f)
        if not common:
            return False
    return True


def leray_number(K: SimplicialComplex, field: Field = RATIONALS, max_vertices: int = 20,
                 return_witness: bool = False):
    """Least d >= 0 with H^i(K[W]) = 0 for all i >= d and all vertex sets W.

    Induced cones are skipped (they are acyclic), as are subcomplexes whose
    dimension is below the current bound.
    """
    verts = K.used_vertices()
    if len(verts) > max_vertices:
        raise CapExceeded(f"leray_number: {len(verts)} vertices exceeds cap {max_vertices}")
    best, witness = 0, ()
    facet_sets = [frozenset(f) for f in K.facets]
    for size in range(len(verts), 0, -1):
        if size - 1 < best:
            break                       # K[W] has dimension <= size - 1
        for W in itertools.combinations(verts, size):
            ws = frozenset(W)
            pieces = _maximal_sets({tuple(sorted(f & ws)) for f in facet_sets} - {()})
            if len(pieces) == 1:
                continue                # a simplex
            dim = max(len(f) for f in pieces) - 1
            if dim < best:
                continue
            sub = SimplicialComplex(K.vertex_count, tuple(sorted(pieces)))
            if is_cone(sub):
                continue
            top = reduced_betti(sub, field, min_degree=best).top_degree()
            if top is not None and top + 1 > best:
                best, witness = top + 1, W
    return (best, witness) if return_witness else best


# -- graphs -------------------------------------------------------------------

def connected_components(n: int, edges: Iterable[Sequence[int]]) -> tuple[int, list[int]]:
    """Union-find; returns (count, label per vertex) with labels 0..count-1."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in edges:
        u, v = e[0], e[-1]
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    roots: dict[int, int] = {}
    labels = []
    for v in range(n):
        labels.append(roots.setdefault(find(v), len(roots)))
    return len(roots), labels


def graph_components(G: Graph) -> tuple[int, list[int]]:
    return connected_components(G.vertex_count, [tuple(e) for e in G.edges])


def complex_components(K: SimplicialComplex) -> int:
    """Connected components of a nonempty complex (vertices it actually uses)."""
    verts = K.used_vertices()
    pos = {v: i for i, v in enumerate(verts)}
    edges = [(pos[a], pos[b]) for a, b in K.one_skeleton_edges()]
    return connected_components(len(verts), edges)[0]


def lex_bfs(G: Graph) -> list[int]:
    """Lexicographic breadth-first search order (partition refinement)."""
    adj = G.adjacency()
    parts = [list(range(G.vertex_count))] if G.vertex_count else []
    order = []
    while parts:
        v = parts[0].pop(0)
        if not parts[0]:
            parts.pop(0)
        order.append(v)
        refined = []
        for part in parts:
            inside = [u for u in part if u in adj[v]]
            outside = [u for u in part if u not in adj[v]]
            refined.extend(p for p in (inside, outside) if p)
        parts = refined
    return order


def is_perfect_elimination_ordering(G: Graph, order: Sequence[int]) -> bool:
    adj = G.adjacency()
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [u for u in adj[v] if pos[u] > pos[v]]
        if not later:
            continue
        u = min(later, key=pos.__getitem__)
        if any(w != u and w not in adj[u] for w in later):
            return False
    return True


def is_chordal(G: Graph) -> bool:
    """LexBFS; the reverse order is a perfect elimination ordering iff chordal."""
    return is_perfect_elimination_ordering(G, lex_bfs(G)[::-1])


@lru_cache(maxsize=None)
def _chromatic(n: int, edges: frozenset) -> tuple[int, ...]:
    """Chromatic polynomial coefficients (constant term first)."""
    if not edges:
        return (0,) * n + (1,)
    if len(edges) == n * (n - 1) // 2:
        poly = [1]
        for k in range(n):                        # t (t-1) ... (t-n+1)
            nxt = [0] * (len(poly) + 1)
            for i, c in enumerate(poly):
                nxt[i + 1] += c
                nxt[i] -= k * c
            poly = nxt
        return tuple(poly)
    e = min(edges, key=lambda f: tuple(sorted(f)))
    u, v = sorted(e)
    deleted = _chromatic(n, edges - {e})
    # contract v into u, then renumber vertices above v down by one
    merged = set()
    for f in edges - {e}:
        a, b = (u if x == v else x for x in f)
        if a != b:
            a, b = (x - 1 if x > v else x for x in (a, b))
            merged.add(frozenset((a, b)))
    contracted = _chromatic(n - 1, frozenset(merged))
    out = list(deleted)
    for i, c in enumerate(contracted):
        out[i] -= c
    return tuple(out)


def chromatic_polynomial(G: Graph) -> tuple[int, ...]:
    return _chromatic(G.vertex_count, frozenset(G.edges))


def count_acyclic_orientations(G: Graph, max_vertices: int = 12) -> int:
    """(-1)^n chi_G(-1) by deletion-contraction."""
    if G.vertex_count > max_vertices:
        raise CapExceeded(f"count_acyclic_orientations: cap {max_vertices} exceeded")
    poly = chromatic_polynomial(G)
    return (-1) ** G.vertex_count * sum(c * (-1) ** i for i, c in enumerate(poly))


def count_acyclic_orientations_brute(G: Graph) -> int:
    """Enumerate all 2^|E| orientations and keep the acyclic ones."""
    edges = G.sorted_edges()
    if len(edges) > 20:
        raise CapExceeded("brute-force orientation count limited to 20 edges")
    n = G.vertex_count
    count = 0
    for bits in range(1 << len(edges)):
        succ = [[] for _ in range(n)]
        indeg = [0] * n
        for k, (a, b) in enumerate(edges):
            if bits >> k & 1:
                a, b = b, a
            succ[a].append(b)
            indeg[b] += 1
        ready = [v for v in range(n) if indeg[v] == 0]
        seen = 0
        while ready:
            v = ready.pop()
            seen += 1
            for w in succ[v]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    ready.append(w)
        count += seen == n
    return count
