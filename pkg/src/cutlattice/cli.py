"""Command-line front end.

Exit codes: 0 ok, 1 internal error, 2 usage error, 3 a check came out
negative (hypermetric violation, invalid embedding, no decomposition,
report failure), 4 a resource budget ran out (or the report skipped
entries without any failure).
"""
from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import os
import re
import sys
from pathlib import Path

import numpy as np

from . import riemann
from .embeddings import (
    CatalogError, Embedding, catalog_entry, cutcone_decompose, partial_cube, verify, zone_embed,
)
from .hypermetrics import find_violation
from .metrics import UNREACHABLE, apsp, diameter, girth
from .report import BUDGETS, run_report
from .schlafli import SchlafliError, as_symbol, classify, SPHERICAL
from .skeletons import (
    AtlasError, ResourceLimitError, Skeleton, SkeletonError, atlas_status, named_graph, platonic,
    polytope_family, pyramid, regular_4polytope, star_4polytope, star_honeycomb_skeleton, tiling_patch,
)

GENERATOR_VERSION = 2
EXIT_OK, EXIT_INTERNAL, EXIT_USAGE, EXIT_NEGATIVE, EXIT_SKIPPED = 0, 1, 2, 3, 4

CONFIG_KEYS = {"tuple_limit": int, "n_max": int, "patch_vertex_cap": int, "threads": int, "node_limit": int}


class UsageError(Exception):
    pass


# -- config & cache ---------------------------------------------------------------

def load_config(path) -> dict:
    """``key = value`` lines; ``#`` starts a comment."""
    out = {}
    if path is None:
        return out
    for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key = key.strip()
        if not sep or key not in CONFIG_KEYS:
            raise UsageError(f"{path}:{lineno}: expected one of {sorted(CONFIG_KEYS)} as key=value")
        try:
            out[key] = CONFIG_KEYS[key](value.strip())
        except ValueError:
            raise UsageError(f"{path}:{lineno}: bad value for {key}") from None
    return out


def settings(args) -> dict:
    cfg = dict(BUDGETS["default"].__dict__)
    cfg.pop("name")
    cfg.update(load_config(args.config))
    for key in CONFIG_KEYS:
        val = getattr(args, key, None)
        if val is not None:
            cfg[key] = val
    return cfg


def cache_dir() -> Path:
    root = os.environ.get("CUTLATTICE_CACHE_DIR")
    return Path(root) if root else Path.home() / ".cache" / "cutlattice"


def cache_key(kind: str, text: str, radius, margin) -> str:
    raw = json.dumps([kind, text, radius, margin, GENERATOR_VERSION])
    return hashlib.sha256(raw.encode()).hexdigest()[:24]


# -- graph resolution --------------------------------------------------------------

_POLYTOPE_NAMES = {"24-cell", "600-cell", "120-cell"}


def build_graph(text: str, radius: int | None = None, margin: int | None = None,
                max_vertices: int = 250_000) -> tuple[Skeleton, bool]:
    """Graph for a symbol or name; the flag says whether it is worth caching."""
    t = text.strip()
    low = t.lower()
    if low in _POLYTOPE_NAMES:
        return regular_4polytope(low), False
    m = re.fullmatch(r"pyramid[:(](.+?)\)?", low)
    if m:
        return pyramid(build_graph(m[1], radius, margin, max_vertices)[0]), False
    solids = {"tetrahedron": "{3,3}", "octahedron": "{3,4}", "cube": "{4,3}",
              "icosahedron": "{3,5}", "dodecahedron": "{5,3}"}
    if low in solids:
        return platonic(solids[low]), False
    m = re.fullmatch(r"(alpha|beta|gamma|simplex|cross|hypercube)_?(\d+)", low)
    if m:
        return polytope_family(m[1], int(m[2])), False
    if t.startswith("{"):
        sym = as_symbol(t)
        if len(sym) == 2:
            a, b = sym
            if not a.is_convex and a.q == 2 and b.is_convex and b.q == 1 and a.p == b.p:
                return star_honeycomb_skeleton(b.p, radius if radius is not None else 1,
                                               max_vertices=max_vertices), b.p > 5
            if classify(sym) == SPHERICAL:
                return platonic(sym), False
            if radius is None:
                raise UsageError(f"{t} is infinite; pass --radius")
            return tiling_patch(sym, radius, margin, max_vertices=max_vertices), True
        if sym.has_infinity:
            raise UsageError(f"no generator for {t}")
        if not sym.is_convex:
            return star_4polytope(sym), False
        ints = sym.ints()
        four = {(3, 3, 5): "600-cell", (5, 3, 3): "120-cell", (3, 4, 3): "24-cell"}
        if ints in four:
            return regular_4polytope(four[ints]), False
        n = len(ints) + 1
        if set(ints) == {3}:
            return polytope_family("alpha", n), False
        if ints == (3,) * (n - 2) + (4,):
            return polytope_family("beta", n), False
        if ints == (4,) + (3,) * (n - 2):
            return polytope_family("gamma", n), False
        raise UsageError(f"no generator for {t}")
    return named_graph(t), False


def _read_text(path: str) -> str:
    return sys.stdin.read() if path == "-" else Path(path).read_text()


def load_graph(arg: str, cfg: dict | None = None) -> Skeleton:
    """A skeleton JSON file, ``-`` for stdin, or a symbol/name to build."""
    if arg == "-" or Path(arg).is_file():
        return Skeleton.from_json(_read_text(arg))
    cap = (cfg or {}).get("patch_vertex_cap", 250_000)
    return build_graph(arg, max_vertices=cap)[0]


def _emit(obj, out: str | None = None):
    text = obj if isinstance(obj, str) else json.dumps(obj, indent=1)
    if out and out != "-":
        Path(out).write_text(text + "\n")
    else:
        print(text)


# -- commands -------------------------------------------------------------------------

def cmd_atlas(args, cfg):
    try:
        st = atlas_status(args.symbol, data_path=args.atlas)
    except AtlasError as exc:
        raise UsageError(str(exc)) from None
    _emit(st.to_dict())
    return EXIT_OK


def cmd_gen(args, cfg):
    cap = cfg["patch_vertex_cap"]
    g, cacheable = build_graph(args.symbol, args.radius, args.margin, cap)
    text = None
    if cacheable and not args.no_cache:
        margin = getattr(g, "margin", None)
        path = cache_dir() / f"{cache_key('gen', g.symbol or args.symbol, args.radius, margin)}.json"
        if path.is_file():
            text = path.read_text().rstrip("\n")
        else:
            text = g.to_json()
            path.parent.mkdir(parents=True, exist_ok=True)
            tmp = path.with_suffix(".tmp")
            tmp.write_text(text + "\n")
            tmp.replace(path)
    _emit(text if text is not None else g.to_json(), args.output)
    return EXIT_OK


def cmd_dist(args, cfg):
    g = load_graph(args.graph, cfg)
    d = apsp(g).astype(np.int64)
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        for row in d:
            w.writerow(["inf" if x == UNREACHABLE else int(x) for x in row])
        _emit(buf.getvalue().rstrip("\n"), args.output)
    else:
        _emit({"n": g.n, "d": [[None if x == UNREACHABLE else int(x) for x in row] for row in d]}, args.output)
    return EXIT_OK


def _num(x):
    return "inf" if x == float("inf") else int(x)


def cmd_girth(args, cfg):
    g = load_graph(args.graph, cfg)
    _emit({"girth": _num(girth(g, restrict_to_core=args.core))})
    return EXIT_OK


def cmd_diam(args, cfg):
    g = load_graph(args.graph, cfg)
    _emit({"diameter": _num(diameter(g, restrict_to_core=args.core))})
    return EXIT_OK


def cmd_hypermetric(args, cfg):
    g = load_graph(args.graph, cfg)
    mode = "all" if args.all else "first"
    certs = find_violation(g, args.k, mode, tuple_limit=cfg["tuple_limit"], threads=cfg["threads"])
    _emit({"k": args.k, "mode": mode, "violations": [c.to_dict() for c in certs]}, args.output)
    return EXIT_NEGATIVE if certs else EXIT_OK


def cmd_embed(args, cfg):
    if args.action == "catalog":
        try:
            g, emb = catalog_entry(args.name)
        except CatalogError as exc:
            raise UsageError(str(exc.args[0])) from None
        if args.graph_out:
            Path(args.graph_out).write_text(g.to_json() + "\n")
        _emit(emb.to_dict(), args.output)
        return EXIT_OK
    g = load_graph(args.graph, cfg)
    if args.action == "verify":
        emb = Embedding.from_json(_read_text(args.embedding))
        res = verify(g, emb, restrict_to_core=args.core)
        if res:
            print("valid")
            return EXIT_OK
        print("invalid " + json.dumps(res.to_dict()))
        return EXIT_NEGATIVE
    if args.action == "partial-cube":
        res = partial_cube(g)
        if res:
            _emit(res.embedding.to_dict(), args.output)
            return EXIT_OK
        _emit({"partial_cube": False, "reason": res.reason}, args.output)
        return EXIT_NEGATIVE
    if args.action == "zones":
        res = zone_embed(g, args.scale)
        if res:
            _emit({"embedding": res.embedding.to_dict(), "zones": res.num_zones,
                   "decomposition": res.decomposition.to_dict()}, args.output)
            return EXIT_OK
        _emit({"failure": res.reason, "note": "a zone failure does not decide embeddability"}, args.output)
        return EXIT_NEGATIVE
    if args.action == "cutcone":
        res = cutcone_decompose(g, args.scale, n_max=cfg["n_max"], node_limit=cfg["node_limit"])
        if res:
            _emit(res.decomposition.to_dict(), args.output)
            return EXIT_OK
        _emit({"none_exists": True, "scale": args.scale, "cuts": res.num_cuts, "nodes": res.nodes}, args.output)
        return EXIT_NEGATIVE
    raise UsageError(f"unknown embed action {args.action}")


def cmd_table2(args, cfg):
    if args.entry:
        ent = riemann.lookup(*args.entry)
        _emit(ent.to_dict())
        return EXIT_OK
    ents = riemann.enumerate_table2()
    if args.json:
        _emit([e.to_dict() for e in ents])
    else:
        print(riemann.format_table(riemann.doubled_entries() + ents))
    return EXIT_OK


def cmd_report(args, cfg):
    budget = BUDGETS[args.budget]
    over = {k: v for k, v in load_config(args.config).items()}
    for key in CONFIG_KEYS:
        if getattr(args, key, None) is not None:
            over[key] = getattr(args, key)
    budget = budget.with_overrides(**over)
    rep = run_report(budget, atlas_path=args.atlas)
    if args.output:
        Path(args.output).write_text(json.dumps(rep.to_dict(), indent=1) + "\n")
    print(rep.summary_text())
    c = rep.counts()
    if c["fail"]:
        return EXIT_NEGATIVE
    return EXIT_SKIPPED if c["skipped"] else EXIT_OK


# -- parser -----------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def make_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cutlattice", description="Embeddability of regular tilings and honeycombs.")
    p.add_argument("--config", help="key=value file (tuple_limit, n_max, patch_vertex_cap, threads, node_limit)")
    p.add_argument("--threads", type=int, help="worker cap for parallel searches")
    p.add_argument("--tuple-limit", dest="tuple_limit", type=int)
    p.add_argument("--n-max", dest="n_max", type=int)
    p.add_argument("--patch-vertex-cap", dest="patch_vertex_cap", type=int)
    p.add_argument("--atlas", help="alternative atlas data file")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("atlas", help="embeddability status of a Schläfli symbol")
    s.add_argument("symbol")
    s.set_defaults(func=cmd_atlas)

    s = sub.add_parser("gen", help="generate a skeleton or patch as JSON")
    s.add_argument("symbol")
    s.add_argument("--radius", type=int)
    s.add_argument("--margin", type=int)
    s.add_argument("--no-cache", action="store_true")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("dist", help="all-pairs distances")
    s.add_argument("graph")
    s.add_argument("--format", choices=("json", "csv"), default="json")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_dist)

    for name, fn in (("girth", cmd_girth), ("diam", cmd_diam)):
        s = sub.add_parser(name)
        s.add_argument("graph")
        s.add_argument("--core", action="store_true", help="restrict to core vertices")
        s.set_defaults(func=fn)

    s = sub.add_parser("hypermetric", help="5-/7-gonal violation search")
    s.add_argument("action", choices=("check",))
    s.add_argument("graph")
    s.add_argument("--k", type=int, choices=(5, 7), default=5)
    g = s.add_mutually_exclusive_group()
    g.add_argument("--first", action="store_true")
    g.add_argument("--all", action="store_true")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_hypermetric)

    s = sub.add_parser("embed", help="hypercube embeddings")
    esub = s.add_subparsers(dest="action", required=True, parser_class=_Parser)
    e = esub.add_parser("verify")
    e.add_argument("graph")
    e.add_argument("embedding", help="embedding JSON file or - for stdin")
    e.add_argument("--core", action="store_true")
    for name in ("partial-cube", "zones", "cutcone"):
        e = esub.add_parser(name)
        e.add_argument("graph")
        if name != "partial-cube":
            e.add_argument("--scale", type=int, default=None if name == "zones" else 1)
        e.add_argument("-o", "--output")
    e = esub.add_parser("catalog")
    e.add_argument("name")
    e.add_argument("--graph-out", help="also write the graph JSON here")
    e.add_argument("-o", "--output")
    s.set_defaults(func=cmd_embed)

    s = sub.add_parser("table2", help="densities of spherical representations")
    s.add_argument("--entry", nargs=2, metavar=("CELL", "VERTEX_FIGURE"))
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_table2)

    s = sub.add_parser("report", help="run every headline check")
    s.add_argument("--budget", choices=sorted(BUDGETS), default="default")
    s.add_argument("-o", "--output", help="write the JSON report here")
    s.set_defaults(func=cmd_report)
    return p


def main(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
        cfg = settings(args)
        return args.func(args, cfg)
    except UsageError as exc:
        print(f"cutlattice: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SchlafliError, SkeletonError, riemann.TableError, FileNotFoundError, json.JSONDecodeError) as exc:
        print(f"cutlattice: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"cutlattice: resource limit: {exc}", file=sys.stderr)
        return EXIT_SKIPPED
    except BrokenPipeError:
        # downstream closed early (e.g. piped into head)
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return EXIT_OK
    except Exception as exc:  # noqa: BLE001
        print(f"cutlattice: internal error: {exc!r}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
