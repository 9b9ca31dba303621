"""JSON (de)serialization, the builtin corpus, and DOT output.

Schemas (all plain JSON):

    monoid       {"name", "labels", "table", "identity", "source"?}
    graph        {"n", "edges": [[u, v], ...]}
    complex      {"n", "facets": [[v, ...], ...]}
    arrangement  {"dim", "normals": [["p/q", ...], ...], "labels"?}
    signs        {"vectors": ["+0-", ...]}

A monoid's optional ``source`` records how it was built; reading it back
rebuilds the monoid and insists on the identical table.
"""
from __future__ import annotations

import json
import re
from fractions import Fraction

from .arrangements import Arrangement, boolean_arrangement, braid_arrangement, face_monoid, three_lines
from .invariants import context, quiver
from .monoid import (DEFAULT_CAPS, LRB, Caps, Graph, LRBError, complete_graph, cycle_graph,
                     empty_graph, fpc_lrb, free_lrb, path_graph, sign_closure, three_element_lrb,
                     validate_lrb)
from .topology import SimplicialComplex

BUILTIN_PATTERNS = ("fig2-three-lines", "signs-1", "free-N", "cycle-N", "path-N", "complete-N",
                    "empty-N", "boolean-D", "braid-N")


# -- JSON ---------------------------------------------------------------------

def dumps(obj) -> str:
    """Deterministic JSON text."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def graph_to_json(G: Graph) -> dict:
    return {"n": G.vertex_count, "edges": [list(e) for e in G.sorted_edges()]}


def graph_from_json(d: dict) -> Graph:
    return Graph.from_edges(int(d["n"]), [tuple(map(int, e)) for e in d["edges"]])


def complex_to_json(K: SimplicialComplex) -> dict:
    return {"n": K.vertex_count, "facets": [list(f) for f in K.facets]}


def complex_from_json(d: dict) -> SimplicialComplex:
    return SimplicialComplex.from_faces(int(d["n"]), [tuple(map(int, f)) for f in d["facets"]])


def _frac(x) -> Fraction:
    if isinstance(x, float):
        raise ValueError(f"use exact rationals such as '1/3', not the float {x}")
    return Fraction(x)


def arrangement_to_json(A: Arrangement) -> dict:
    return {"dim": A.dim, "normals": [[str(x) for x in a] for a in A.normals],
            "labels": list(A.labels)}


def arrangement_from_json(d: dict) -> Arrangement:
    normals = tuple(tuple(_frac(x) for x in a) for a in d["normals"])
    return Arrangement(int(d["dim"]), normals, tuple(d.get("labels", ())))


def monoid_to_json(B: LRB) -> dict:
    out = {"name": B.name, "labels": list(B.labels), "table": B.table.tolist(),
           "identity": B.identity}
    src = B.meta.get("source")
    if src is not None:
        out["source"] = src
    return out


def _rebuild(src: dict, caps: Caps) -> LRB:
    kind = src.get("kind")
    if kind == "free":
        return free_lrb(int(src["n"]), caps)
    if kind == "fpc":
        return with_source(fpc_lrb(graph_from_json(src["graph"]), caps), src)
    if kind == "signs":
        return sign_closure(src["vectors"], caps=caps, name=src.get("name", "signs"))
    if kind == "arrangement":
        A = arrangement_from_json(src["arrangement"])
        return face_monoid(A, caps, name=src.get("name", "arrangement"))
    raise ValueError(f"unknown monoid source {kind!r}")


def with_source(B: LRB, src: dict) -> LRB:
    B.meta["source"] = src
    return B


def renamed(B: LRB, name: str) -> LRB:
    return B if name == B.name else LRB(B.labels, B.table, B.identity, name, dict(B.meta))


def monoid_from_json(d: dict, caps: Caps = DEFAULT_CAPS) -> LRB:
    labels = d["labels"]
    ident = d["identity"]
    if isinstance(ident, str):
        if ident not in labels:
            raise LRBError(f"identity {ident!r} is not a label")
        ident = labels.index(ident)
    table = d["table"]
    if any(not isinstance(x, int) for row in table for x in row):
        raise LRBError("table entries must be integer indices")
    B = validate_lrb(labels, table, int(ident), d.get("name", "table"))
    src = d.get("source")
    if src is None:
        return with_source(B, {"kind": "table"})
    if src.get("kind") == "table":
        return with_source(B, src)
    R = with_source(_rebuild(src, caps), src)
    if not R.same_table(B):
        raise LRBError(f"table does not match its recorded source {src.get('kind')}")
    return renamed(R, B.name)


# -- builtin corpus -----------------------------------------------------------

def builtin_graph(name: str) -> Graph:
    m = re.fullmatch(r"(cycle|path|complete|empty)-(\d+)", name)
    if not m:
        raise KeyError(name)
    n = int(m.group(2))
    return {"cycle": cycle_graph, "path": path_graph, "complete": complete_graph,
            "empty": empty_graph}[m.group(1)](n)


def builtin_arrangement(name: str) -> Arrangement:
    if name == "fig2-three-lines":
        return three_lines()
    m = re.fullmatch(r"(boolean|braid)-(\d+)", name)
    if not m:
        raise KeyError(name)
    n = int(m.group(2))
    return boolean_arrangement(n) if m.group(1) == "boolean" else braid_arrangement(n)


def free_monoid(n: int, caps: Caps = DEFAULT_CAPS) -> LRB:
    return with_source(free_lrb(n, caps), {"kind": "free", "n": n})


def graph_monoid(G: Graph, caps: Caps = DEFAULT_CAPS) -> LRB:
    return with_source(fpc_lrb(G, caps), {"kind": "fpc", "graph": graph_to_json(G)})


def signs_monoid(vectors, caps: Caps = DEFAULT_CAPS, name: str = "signs") -> LRB:
    vectors = list(vectors)
    B = sign_closure(vectors, caps=caps, name=name)
    return with_source(B, {"kind": "signs", "vectors": vectors, "name": name})


def arrangement_monoid(A: Arrangement, caps: Caps = DEFAULT_CAPS, name: str = "arrangement") -> LRB:
    B = face_monoid(A, caps, name=name)
    return with_source(B, {"kind": "arrangement", "arrangement": arrangement_to_json(A),
                           "name": name})


def builtin_monoid(name: str, caps: Caps = DEFAULT_CAPS) -> LRB:
    """Monoid for a builtin corpus name, e.g. free-3, cycle-4, fig2-three-lines."""
    if name == "signs-1":
        B = three_element_lrb()
        return with_source(B, {"kind": "signs", "vectors": ["+", "-"], "name": "signs-1"})
    m = re.fullmatch(r"free-(\d+)", name)
    if m:
        return free_monoid(int(m.group(1)), caps)
    try:
        G = builtin_graph(name)
    except KeyError:
        pass
    else:
        return renamed(graph_monoid(G, caps), name)
    try:
        return arrangement_monoid(builtin_arrangement(name), caps, name=name)
    except KeyError:
        pass
    raise KeyError(f"unknown builtin {name!r}; known patterns: {', '.join(BUILTIN_PATTERNS)}")


def is_builtin(name: str) -> bool:
    return name == "signs-1" or name == "fig2-three-lines" or bool(
        re.fullmatch(r"(free|cycle|path|complete|empty|boolean|braid)-\d+", name))


# -- DOT ----------------------------------------------------------------------

def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def quiver_dot(B: LRB, field=None) -> str:
    """Quiver of kB: one node per lattice element, arrow multiplicity as label."""
    from .topology import RATIONALS
    q = quiver(B, field or RATIONALS)
    lines = ["digraph quiver {", f"  label={_quote(B.name)};"]
    for v in q.vertices:
        lines.append(f"  n{v} [label={_quote(q.labels[v])}];")
    for a, b, m in sorted(q.arrow_list()):
        lines.append(f"  n{a} -> n{b} [label=\"{m}\"];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def hasse_dot(B: LRB) -> str:
    """Hasse diagram of the support lattice, lower -> upper."""
    L = context(B).L
    P = L.as_poset()
    lines = ["digraph hasse {", f"  label={_quote(B.name)};"]
    for v in range(len(L)):
        lines.append(f"  n{v} [label={_quote(L.labels[v])}];")
    for a, b in sorted(P.hasse):
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def emit_dot(B: LRB, what: str = "quiver", field=None) -> str:
    if what == "quiver":
        return quiver_dot(B, field)
    if what == "hasse":
        return hasse_dot(B)
    raise ValueError(f"unknown DOT object {what!r}")
