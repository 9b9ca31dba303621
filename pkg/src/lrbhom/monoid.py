"""Finite left regular bands (LRBs) as multiplication tables, plus builders.

Elements are dense indices ``0..size-1``; labels are only for display and I/O.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np


class LRBError(ValueError):
    """A table fails an LRB axiom."""


class CapExceeded(RuntimeError):
    """A construction would exceed a configured size cap."""


@dataclass(frozen=True)
class Caps:
    free_n: int = 7
    fpc_vertices: int = 10
    closure_size: int = 10000
    # dense tables are |B|^2 ints; F_7 alone would need ~190M entries
    table_size: int = 4096


DEFAULT_CAPS = Caps()


@dataclass(frozen=True, eq=False)
class LRB:
    labels: tuple[str, ...]
    table: np.ndarray
    identity: int
    name: str = ""
    # builder-specific data, e.g. "words" (free/fpc) or "signs" (sign vectors)
    meta: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        self.table.setflags(write=False)

    @property
    def size(self) -> int:
        return len(self.labels)

    def __len__(self):
        return len(self.labels)

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def product(self, *elems: int) -> int:
        acc = self.identity
        for e in elems:
            acc = int(self.table[acc, e])
        return acc

    def same_table(self, other: "LRB") -> bool:
        return (self.labels == other.labels and self.identity == other.identity
                and np.array_equal(self.table, other.table))


def multiply(B: LRB, a: int, b: int) -> int:
    return B.mul(a, b)


def _check_axioms(table: np.ndarray, identity: int, labels: Sequence[str]) -> None:
    n = table.shape[0]
    idx = np.arange(n)
    bad = np.flatnonzero((table[identity] != idx) | (table[:, identity] != idx))
    if bad.size:
        raise LRBError(f"identity violated at x={labels[bad[0]]}")
    bad = np.flatnonzero(table[idx, idx] != idx)
    if bad.size:
        raise LRBError(f"idempotence violated at x={labels[bad[0]]}")
    # associativity, chunked over the first factor to bound memory
    step = max(1, 2_000_000 // max(n * n, 1))
    for lo in range(0, n, step):
        ab = table[lo:lo + step]                    # (k, n): a*b
        left = table[ab]                            # (k, n, n): (a*b)*c
        right = table[lo:lo + step][:, table]       # (k, n, n): a*(b*c)
        diff = np.argwhere(left != right)
        if diff.size:
            a, b, c = diff[0]
            raise LRBError(
                f"associativity violated at x={labels[lo + a]}, y={labels[b]}, z={labels[c]}")
    # left regularity: (a*b)*a == a*b
    aba = table[table, np.broadcast_to(idx[:, None], (n, n))]
    bad = np.argwhere(aba != table)
    if bad.size:
        a, b = bad[0]
        raise LRBError(f"left regularity violated at x={labels[a]}, y={labels[b]}")


def validate_lrb(labels: Sequence[str], table, identity: int, name: str = "",
                 meta: dict | None = None) -> LRB:
    """Check the monoid and LRB axioms and return the validated value.

    Raises LRBError naming the first violated axiom and a witness.
    """
    labels = tuple(str(x) for x in labels)
    t = np.asarray(table, dtype=np.int32)
    n = len(labels)
    if n == 0:
        raise LRBError("an LRB needs at least the identity")
    if len(set(labels)) != n:
        raise LRBError("labels must be distinct")
    if t.shape != (n, n):
        raise LRBError(f"table must be {n}x{n}, got {t.shape}")
    if t.size and (t.min() < 0 or t.max() >= n):
        raise LRBError("table entries out of range")
    if not 0 <= identity < n:
        raise LRBError("identity out of range")
    _check_axioms(t, identity, labels)
    return LRB(labels, t.copy(), int(identity), name, dict(meta or {}))


def _from_elements(elems: list, mul, label, identity, name, caps: Caps, meta_key: str) -> LRB:
    n = len(elems)
    if n > caps.table_size:
        raise CapExceeded(f"{name}: {n} elements exceeds table cap {caps.table_size}")
    pos = {e: i for i, e in enumerate(elems)}
    table = np.empty((n, n), dtype=np.int32)
    for i, a in enumerate(elems):
        for j, b in enumerate(elems):
            table[i, j] = pos[mul(a, b)]
    return validate_lrb([label(e) for e in elems], table, pos[identity], name,
                        {meta_key: tuple(elems)})


# -- free LRB -----------------------------------------------------------------

def _letters(n: int) -> str:
    return "abcdefghijklmnopqrstuvwxyz"[:n] if n <= 26 else ""


def free_word_product(u: Sequence, v: Sequence) -> tuple:
    """Concatenate and delete repeated letters, reading left to right."""
    seen = set(u)
    out = list(u)
    for x in v:
        if x not in seen:
            seen.add(x)
            out.append(x)
    return tuple(out)


def free_lrb_size(n: int) -> int:
    return sum(math.perm(n, k) for k in range(n + 1))


def free_lrb(n: int, caps: Caps = DEFAULT_CAPS, alphabet: str | None = None) -> LRB:
    """Free LRB on n letters: repetition-free words, identity = empty word."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > caps.free_n:
        raise CapExceeded(f"free_lrb: n={n} exceeds cap {caps.free_n}")
    letters = alphabet or (_letters(n) if n <= 9 else None)
    words = [w for k in range(n + 1) for w in itertools.permutations(range(n), k)]
    if letters:
        label = lambda w: "".join(letters[i] for i in w) or "1"
    else:
        label = lambda w: ".".join(map(str, w)) or "1"
    return _from_elements(words, free_word_product, label, (), f"free-{n}", caps, "words")


# -- graphs and free partially commutative LRBs ------------------------------

@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        norm = set()
        for e in self.edges:
            u, v = tuple(e)
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"edge {u}-{v} out of range")
            norm.add(frozenset((u, v)))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        edges = list(edges)
        keys = [frozenset(e) for e in edges]
        if len(set(keys)) != len(keys):
            raise ValueError("duplicate edge")
        return cls(n, frozenset(keys))

    def adjacent(self, u: int, v: int) -> bool:
        return frozenset((u, v)) in self.edges

    def neighbors(self, v: int) -> set[int]:
        return {w for e in self.edges if v in e for w in e if w != v}

    def adjacency(self) -> list[set[int]]:
        adj = [set() for _ in range(self.vertex_count)]
        for e in self.edges:
            u, v = tuple(e)
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def complement(self) -> "Graph":
        n = self.vertex_count
        return Graph(n, frozenset(frozenset((u, v)) for u, v in itertools.combinations(range(n), 2)
                                  if frozenset((u, v)) not in self.edges))

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph, relabelled 0..k-1 in increasing vertex order."""
        vs = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(vs)}
        return Graph(len(vs), frozenset(frozenset((pos[u], pos[v])) for u, v in map(tuple, self.edges)
                                        if u in pos and v in pos))

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(tuple(sorted(e)) for e in self.edges)


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)] if n >= 3 else
                            ([(0, 1)] if n == 2 else []))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def empty_graph(n: int) -> Graph:
    return Graph(n, frozenset())


@dataclass(frozen=True)
class FpcElement:
    """Normal form of an element of B(graph): support plus acyclic orientation
    of the complement graph restricted to the support."""
    support: frozenset
    orientation: frozenset  # of (x, y) meaning x before y


def fpc_orientation(graph: Graph, word: Sequence[int]) -> FpcElement:
    arcs = frozenset((x, y) for i, x in enumerate(word) for y in word[i + 1:]
                     if not graph.adjacent(x, y))
    return FpcElement(frozenset(word), arcs)


def fpc_canonical_word(elem: FpcElement) -> tuple[int, ...]:
    """Topological sort of the orientation, smallest available vertex first."""
    indeg = {v: 0 for v in elem.support}
    succ: dict[int, list[int]] = {v: [] for v in elem.support}
    for x, y in elem.orientation:
        indeg[y] += 1
        succ[x].append(y)
    ready = sorted(v for v, d in indeg.items() if d == 0)
    out = []
    while ready:
        v = ready.pop(0)
        out.append(v)
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
        ready.sort()
    if len(out) != len(elem.support):
        raise ValueError("orientation is not acyclic")
    return tuple(out)


def fpc_lrb(graph: Graph, caps: Caps = DEFAULT_CAPS, vertex_names: str | None = None) -> LRB:
    """Free partially commutative LRB of ``graph``: generators are the
    vertices, adjacent vertices commute.

    Elements are normal forms (support, orientation of the complement),
    reached by right-multiplying by generators from the identity.
    """
    n = graph.vertex_count
    if n > caps.fpc_vertices:
        raise CapExceeded(f"fpc_lrb: {n} vertices exceeds cap {caps.fpc_vertices}")
    names = vertex_names or (_letters(n) if n <= 26 else None)

    def norm(word):
        return fpc_canonical_word(fpc_orientation(graph, word))

    ident = ()
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for w in frontier:
            for v in range(n):
                u = norm(free_word_product(w, (v,)))
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
                    if len(seen) > caps.table_size:
                        raise CapExceeded(f"fpc_lrb: more than {caps.table_size} elements")
        frontier = nxt
    elems = sorted(seen, key=lambda w: (len(w), w))
    if names:
        label = lambda w: "".join(names[i] for i in w) or "1"
    else:
        label = lambda w: ".".join(map(str, w)) or "1"
    B = _from_elements(elems, lambda u, v: norm(free_word_product(u, v)), label, ident,
                          f"fpc({n}:{graph.sorted_edges()})", caps, "words")
    return LRB(B.labels, B.table, B.identity, B.name, {**B.meta, "graph": graph})


# -- sign vectors -------------------------------------------------------------

_SIGN_CHARS = {"0": 0, "+": 1, "-": -1}
_CHAR_OF = {0: "0", 1: "+", -1: "-"}


def parse_sign(s: str) -> tuple[int, ...]:
    try:
        return tuple(_SIGN_CHARS[c] for c in s)
    except KeyError as exc:
        raise ValueError(f"sign vector {s!r} has a letter outside 0+-") from exc


def format_sign(v: Sequence[int]) -> str:
    return "".join(_CHAR_OF[x] for x in v)


def sign_compose(x: Sequence[int], y: Sequence[int]) -> tuple[int, ...]:
    """Componentwise x o y: x wins wherever it is nonzero."""
    return tuple(a if a else b for a, b in zip(x, y))


def sign_closure(generators: Iterable, length: int | None = None,
                 caps: Caps = DEFAULT_CAPS, name: str = "signs") -> LRB:
    """Smallest submonoid of {0,+,-}^n containing the generators."""
    gens = [parse_sign(g) if isinstance(g, str) else tuple(g) for g in generators]
    lengths = {len(g) for g in gens}
    if length is not None:
        lengths.add(length)
    if len(lengths) > 1:
        raise ValueError("sign vectors of different lengths")
    n = lengths.pop() if lengths else 0
    for g in gens:
        if any(x not in (0, 1, -1) for x in g):
            raise ValueError(f"bad sign vector {g}")
    ident = (0,) * n
    seen = {ident}
    order = [ident]
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = sign_compose(x, g)
                if y not in seen:
                    seen.add(y)
                    order.append(y)
                    nxt.append(y)
                    if len(seen) > caps.closure_size:
                        raise CapExceeded(f"sign_closure: more than {caps.closure_size} elements")
        frontier = nxt
    elems = sorted(order, key=lambda v: (sum(1 for x in v if x), format_sign(v).translate(
        str.maketrans("0+-", "012"))))
    return _from_elements(elems, sign_compose, format_sign, ident, name, caps, "signs")


def three_element_lrb() -> LRB:
    """{0,+,-} with x o y = x if x != 0 else y."""
    return sign_closure(["+", "-"], name="signs-1")
