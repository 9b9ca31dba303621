"""Command-line interface: ``lrbhom <command> ...``.

Exit codes: 0 success, 1 verification failure, 2 bad input, 3 cap exceeded.
Every command that takes INPUT accepts a builtin name (free-3, cycle-4,
fig2-three-lines, ...), a JSON file, or ``-`` / nothing for stdin.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field, replace

from . import io
from .arrangements import Arrangement
from .bar import DEFAULT_P, oracle_sweep
from .invariants import (chain_bound_check, crosscut_check, fpc_sweep, invariants_summary,
                         leray_bound_check, main_result_check, tree_quiver_check)
from .arrangements import sphere_ext_check
from .monoid import DEFAULT_CAPS, LRB, CapExceeded, Caps, Graph, LRBError
from .order import r_order
from .topology import (Field, SimplicialComplex, clique_complex, is_chordal, leray_number,
                       order_complex, reduced_betti)

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3
VERIFY_KINDS = ("mainresult", "crosscut", "treethm", "leray-bound", "chain-bound", "fpc", "sphere")


class InputError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    source: str | None = None
    fields: tuple[Field, ...] = (Field(),)
    caps: Caps = DEFAULT_CAPS
    max_vertices: int = 16
    fmt: str = "json"
    output: str | None = None
    extra: dict = field(default_factory=dict)


# -- input resolution -----------------------------------------------------------

def _read_json(source: str | None, stdin=None):
    if source is None or source == "-":
        text = (stdin or sys.stdin).read()
        where = "stdin"
    else:
        try:
            with open(source) as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {source}: {exc.strerror}") from exc
        where = source
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{where}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc


def load_object(source: str | None, caps: Caps, stdin=None):
    """A builtin name or JSON document, as LRB, Graph, Arrangement or SimplicialComplex."""
    if source is not None and source != "-" and io.is_builtin(source):
        if source.split("-")[0] in ("cycle", "path", "complete", "empty"):
            return io.builtin_graph(source)
        return io.builtin_monoid(source, caps)
    d = _read_json(source, stdin)
    if isinstance(d, list):
        d = {"vectors": d}
    if not isinstance(d, dict):
        raise InputError("expected a JSON object")
    if "table" in d:
        return io.monoid_from_json(d, caps)
    if "edges" in d:
        return io.graph_from_json(d)
    if "normals" in d:
        return io.arrangement_from_json(d)
    if "facets" in d:
        return io.complex_from_json(d)
    if "vectors" in d:
        return io.signs_monoid(d["vectors"], caps, d.get("name", "signs"))
    raise InputError("unrecognised JSON: expected table, edges, normals, facets or vectors")


def as_monoid(obj, caps: Caps) -> LRB:
    if isinstance(obj, LRB):
        return obj
    if isinstance(obj, Graph):
        return io.graph_monoid(obj, caps)
    if isinstance(obj, Arrangement):
        return io.arrangement_monoid(obj, caps)
    raise InputError(f"cannot make a monoid from a {type(obj).__name__}")


def load_monoid(cfg: RunConfig, stdin=None) -> LRB:
    return as_monoid(load_object(cfg.source, cfg.caps, stdin), cfg.caps)


def _graph_of(obj) -> Graph:
    if isinstance(obj, Graph):
        return obj
    if isinstance(obj, LRB) and "graph" in obj.meta:
        return obj.meta["graph"]
    raise InputError("this check needs a graph or a monoid built from one")


def _arrangement_of(obj) -> Arrangement:
    if isinstance(obj, Arrangement):
        return obj
    if isinstance(obj, LRB) and "original" in obj.meta:
        return obj.meta["original"]
    raise InputError("this check needs an arrangement or its face monoid")


# -- commands -------------------------------------------------------------------

def cmd_construct(cfg: RunConfig, stdin=None):
    kind, arg = cfg.extra["kind"], cfg.source
    caps = cfg.caps
    if kind == "free":
        try:
            n = int(arg)
        except (TypeError, ValueError) as exc:
            raise InputError(f"construct free needs an integer, got {arg!r}") from exc
        B = io.free_monoid(n, caps)
    elif kind == "builtin":
        B = as_monoid(load_object(arg, caps, stdin), caps)
    else:
        obj = load_object(arg, caps, stdin)
        want = {"fpc": Graph, "arrangement": Arrangement, "table": LRB, "signs": LRB}[kind]
        if not isinstance(obj, want):
            raise InputError(f"construct {kind} got a {type(obj).__name__}")
        if kind == "signs" and obj.meta.get("source", {}).get("kind") != "signs":
            raise InputError("construct signs expects {\"vectors\": [...]}")
        B = as_monoid(obj, caps)
    return io.monoid_to_json(B), EXIT_OK


def cmd_invariants(cfg: RunConfig, stdin=None):
    B = load_monoid(cfg, stdin)
    reports = [invariants_summary(B, f) for f in cfg.fields]
    if len(reports) == 1:
        return reports[0], EXIT_OK
    gl = {r["field"]: r["global_dimension"] for r in reports}
    return {"monoid": B.name, "per_field": reports, "global_dimension_by_field": gl}, EXIT_OK


def _complex_report(K: SimplicialComplex, cfg: RunConfig, extra: dict) -> dict:
    out = dict(extra)
    out["f_vector"] = K.f_vector()
    out["dimension"] = K.dimension
    per = []
    for f in cfg.fields:
        entry = {"field": str(f), "betti": reduced_betti(K, f).as_dict()}
        try:
            entry["leray"] = leray_number(K, f, max_vertices=cfg.max_vertices)
        except CapExceeded as exc:
            entry["leray"] = None
            entry["leray_skipped"] = str(exc)
        per.append(entry)
    out["fields"] = per
    return out


def cmd_complex(cfg: RunConfig, stdin=None):
    kind = cfg.extra["kind"]
    obj = load_object(cfg.source, cfg.caps, stdin)
    if isinstance(obj, SimplicialComplex):
        return _complex_report(obj, cfg, {"complex": "given"}), EXIT_OK
    if kind == "clique":
        G = _graph_of(obj)
        K = clique_complex(G, max_vertices=max(24, cfg.max_vertices))
        return _complex_report(K, cfg, {"complex": "clique", "graph": io.graph_to_json(G),
                                        "chordal": is_chordal(G)}), EXIT_OK
    B = as_monoid(obj, cfg.caps)
    P = r_order(B)
    keep = [b for b in range(B.size) if b != B.identity]
    K = order_complex(P.restrict(keep))
    return _complex_report(K, cfg, {"complex": "order", "monoid": B.name,
                                    "vertices": [B.labels[b] for b in keep]}), EXIT_OK


def cmd_verify(cfg: RunConfig, stdin=None):
    kind = cfg.extra["kind"]
    obj = load_object(cfg.source, cfg.caps, stdin)
    fields = cfg.fields
    if kind == "fpc":
        G = _graph_of(obj)
        reports = [fpc_sweep(G, f, max_n=cfg.extra.get("max_n") or 3) for f in fields]
    elif kind == "sphere":
        A = _arrangement_of(obj)
        reports = [sphere_ext_check(A, f) for f in fields]
    else:
        B = as_monoid(obj, cfg.caps)
        if kind == "treethm":
            reports = [tree_quiver_check(B, fields)]
        else:
            fn = {"mainresult": main_result_check, "crosscut": crosscut_check,
                  "chain-bound": chain_bound_check,
                  "leray-bound": lambda B, f: leray_bound_check(B, f, cfg.max_vertices)}[kind]
            reports = [fn(B, f) for f in fields]
    passed = all(r.passed for r in reports)
    out = {"check": kind, "passed": passed, "reports": [r.as_dict() for r in reports]}
    return out, EXIT_OK if passed else EXIT_FAIL


def cmd_oracle(cfg: RunConfig, stdin=None):
    B = load_monoid(cfg, stdin)
    rep = oracle_sweep(B, max_n=cfg.extra["max_n"], p=cfg.extra["p"])
    return rep, EXIT_OK if not rep["discrepancies"] else EXIT_FAIL


def cmd_dot(cfg: RunConfig, stdin=None):
    B = load_monoid(cfg, stdin)
    return io.emit_dot(B, cfg.extra["kind"], cfg.fields[0]), EXIT_OK


COMMANDS = {"construct": cmd_construct, "invariants": cmd_invariants, "complex": cmd_complex,
            "verify": cmd_verify, "oracle": cmd_oracle, "dot": cmd_dot}


# -- argument parsing -------------------------------------------------------------

def _fields(text: str) -> tuple[Field, ...]:
    try:
        return tuple(Field.parse(t) for t in text.split(",") if t.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise InputError(message)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", type=_fields, default=(Field(),),
                        help="Q or F<p>, comma separated for a sweep (default Q)")
    common.add_argument("--max-size", type=int, help="cap on monoid size")
    common.add_argument("--max-vertices", type=int, help="cap on vertices for exact Leray numbers")
    common.add_argument("-o", "--output", help="write here instead of stdout")
    common.add_argument("--format", choices=("json", "text"), default="json")

    p = _Parser(prog="lrbhom", description="Homological invariants of left regular bands.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("construct", parents=[common], help="build a monoid, print its JSON")
    c.add_argument("kind", choices=("free", "fpc", "signs", "table", "arrangement", "builtin"))
    c.add_argument("input", nargs="?")

    i = sub.add_parser("invariants", parents=[common], help="Ext table, quiver, relations, gl.dim")
    i.add_argument("input", nargs="?")

    k = sub.add_parser("complex", parents=[common], help="Betti numbers and Leray number")
    k.add_argument("kind", choices=("order", "clique"))
    k.add_argument("input", nargs="?")

    v = sub.add_parser("verify", parents=[common], help="run one of the verification checks")
    v.add_argument("kind", choices=VERIFY_KINDS)
    v.add_argument("input", nargs="?")
    v.add_argument("--max-n", type=int, default=3, help="degree bound for the fpc sweep")

    o = sub.add_parser("oracle", parents=[common], help="bar-complex cross-check of Ext")
    o.add_argument("input", nargs="?")
    o.add_argument("--p", type=int, default=DEFAULT_P)
    o.add_argument("--max-n", type=int, default=2)

    d = sub.add_parser("dot", parents=[common], help="quiver or Hasse diagram as DOT")
    d.add_argument("kind", choices=("quiver", "hasse"))
    d.add_argument("input", nargs="?")
    return p


def parse_config(argv) -> RunConfig:
    ns = build_parser().parse_args(argv)
    caps = DEFAULT_CAPS
    if ns.max_size is not None:
        caps = replace(caps, table_size=ns.max_size, closure_size=ns.max_size)
    if ns.max_vertices is not None:
        caps = replace(caps, fpc_vertices=ns.max_vertices)
    if not ns.field:
        raise InputError("--field is empty")
    extra = {k: getattr(ns, k) for k in ("kind", "max_n", "p") if hasattr(ns, k)}
    return RunConfig(ns.command, ns.input, ns.field, caps,
                     ns.max_vertices if ns.max_vertices is not None else 16,
                     ns.format, ns.output, extra)


def _as_text(obj) -> str:
    if isinstance(obj, str):
        return obj
    if "check" in obj and "passed" in obj:
        lines = [f"{'PASS' if obj['passed'] else 'FAIL'} {obj['check']}"]
        for r in obj.get("reports", []):
            lines.append(f"  {r['details'].get('field', '')}: {'pass' if r['passed'] else 'fail'}")
            lines += [f"    witness {json.dumps(w, sort_keys=True)}" for w in r["witnesses"][:5]]
        return "\n".join(lines) + "\n"
    return io.dumps(obj)


def run(argv=None, stdin=None, stdout=None) -> int:
    out = stdout or sys.stdout
    try:
        cfg = parse_config(sys.argv[1:] if argv is None else list(argv))
        result, code = COMMANDS[cfg.command](cfg, stdin)
    except SystemExit as exc:                   # --help
        return int(exc.code or 0)
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (InputError, LRBError, ValueError, KeyError, IndexError, TypeError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    text = result if isinstance(result, str) else (
        _as_text(result) if cfg.fmt == "text" else io.dumps(result))
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(text)
    else:
        out.write(text)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
