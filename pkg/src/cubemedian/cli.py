"""Command-line front end: queries, experiments, JSON reports, DOT export.

Reports are deterministic for a fixed config and seed: every collection
is emitted in a canonical order and timing is only attached when
--timing is passed, so default reports are byte-identical across runs.
Each report echoes the resolved config under "config"; feeding those
values back as flags reproduces the report.

Exit codes: 0 success, 1 domain error (bad input, malformed file),
2 resource cap exceeded.  The environment variable CUBEMEDIAN_CACHE may
name a directory used to cache ball snapshots, content-addressed by
presentation and radius.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import boundary, geometry, hyperfinite, medgraph, racg
from .errors import InvalidInputError, ResourceCapError

DEFAULT_SEED = 0

_PALETTE = (
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00",
    "#a65628", "#f781bf", "#17becf", "#666666", "#bcbd22",
)


class _CliParser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad flags; that code is reserved
    # for resource caps here, so turn parse errors into domain errors
    def error(self, message):
        raise InvalidInputError(message)


def _load_provider(args):
    pres = getattr(args, "presentation", None)
    graph = getattr(args, "graph", None)
    if pres and graph:
        raise InvalidInputError("give either --presentation or --graph, not both")
    if pres:
        return racg.load_defining_graph(pres), "presentation"
    if graph:
        return medgraph.load_explicit_graph(graph), "graph"
    raise InvalidInputError("a --presentation or --graph file is required")


def _vertex(view, kind, text):
    if kind == "presentation":
        return view.element_from_symbols(text)
    try:
        return int(text)
    except ValueError:
        raise InvalidInputError(f"graph vertices are integers, got {text!r}") from None


def _vertex_text(view, kind, v):
    if kind == "presentation":
        return racg.word_to_text(v)
    return v


def _sorted_vertices(view, vs):
    return sorted(vs, key=view.vertex_sort_key)


def _wall_text(view, kind, wall):
    if kind == "presentation":
        return racg.word_to_text(wall.reflection)
    return wall


def _spec_arg(group, path):
    return boundary.load_ray_spec(group, path)


def _cache_dir():
    return os.environ.get("CUBEMEDIAN_CACHE") or None


# -- subcommand implementations ---------------------------------------------


def _cmd_validate(args):
    view, kind = _load_provider(args)
    config = _base_config(args, {})
    if kind == "graph":
        check = medgraph.validate_median(view)
        results = {
            "provider": "graph",
            "median": check.ok,
            "witness": list(check.witness) if check.witness else None,
            "median_count": check.median_count,
        }
        return config, results, {}
    import random

    rng = random.Random(args.seed)
    trials = args.samples
    failures = 0
    for _ in range(trials):
        word = [rng.randrange(view.rank) for _ in range(rng.randint(0, 8))]
        g = view.normalize(word)
        ok = (
            view.normalize(g.word) == g
            and view.compose(g, view.invert(g)).word == ()
            and len(view.normalize(word + list(reversed(word))).word) == 0
        )
        if not ok:
            failures += 1
    ball = view.ball(2, cache_dir=_cache_dir())
    series = view.sphere_sizes(2)
    results = {
        "provider": "presentation",
        "generators": list(view.generators),
        "hyperbolic": view.is_hyperbolic(),
        "sampled_checks": {"trials": trials, "failures": failures},
        "ball2_matches_series": ball.sphere_sizes() == series,
    }
    config["samples"] = trials
    return config, results, {}


def _cmd_ball(args):
    view, kind = _load_provider(args)
    if kind != "presentation":
        raise InvalidInputError("ball needs a --presentation provider")
    ball = view.ball(args.radius, cap=args.cap, cache_dir=_cache_dir())
    results = {
        "vertex_count": len(ball.vertices),
        "sphere_sizes": ball.sphere_sizes(),
        "series_sizes": view.sphere_sizes(args.radius),
        "edge_count": len(ball.edges),
    }
    if args.list:
        results["vertices"] = [racg.word_to_text(v) for v in ball.vertices]
    return _base_config(args, {"radius": args.radius, "cap": args.cap,
                               "list": args.list}), results, {}


def _cmd_dist(args):
    view, kind = _load_provider(args)
    u = _vertex(view, kind, args.word1)
    v = _vertex(view, kind, args.word2)
    results = {"distance": view.distance(u, v)}
    return _base_config(args, {"word1": args.word1, "word2": args.word2}), results, {}


def _cmd_median(args):
    view, kind = _load_provider(args)
    u = _vertex(view, kind, args.word1)
    v = _vertex(view, kind, args.word2)
    w = _vertex(view, kind, args.word3)
    m = geometry.median(view, u, v, w)
    results = {"median": _vertex_text(view, kind, m)}
    return _base_config(args, {"word1": args.word1, "word2": args.word2,
                               "word3": args.word3}), results, {}


def _cmd_interval(args):
    view, kind = _load_provider(args)
    u = _vertex(view, kind, args.word1)
    v = _vertex(view, kind, args.word2)
    members = geometry.interval(view, u, v)
    results = {
        "size": len(members),
        "vertices": [_vertex_text(view, kind, m)
                     for m in _sorted_vertices(view, members)],
    }
    return _base_config(args, {"word1": args.word1, "word2": args.word2}), results, {}


def _cmd_walls(args):
    view, kind = _load_provider(args)
    u = _vertex(view, kind, args.word1)
    v = _vertex(view, kind, args.word2)
    walls = view.walls_separating(u, v)
    if kind == "presentation":
        rendered = sorted(racg.word_to_text(w.reflection) for w in walls)
    else:
        rendered = sorted(walls)
    results = {"count": len(walls), "walls": rendered,
               "distance": view.distance(u, v)}
    return _base_config(args, {"word1": args.word1, "word2": args.word2}), results, {}


def _cmd_project(args):
    view, kind = _load_provider(args)
    v = _vertex(view, kind, args.word)
    seeds = [_vertex(view, kind, t) for t in args.onto.split(",")] if args.onto else []
    if not seeds:
        raise InvalidInputError("--onto needs at least one vertex")
    hull = geometry.convex_hull(view, seeds)
    image = geometry.project(view, v, hull)
    walls = geometry.walls_separating_set(view, v, hull)
    results = {
        "projection": _vertex_text(view, kind, image),
        "distance": view.distance(v, image),
        "separating_walls": len(walls),
        "hull_size": len(hull.vertices),
    }
    return _base_config(args, {"word": args.word, "onto": args.onto}), results, {}


def _cmd_delta(args):
    view, kind = _load_provider(args)
    est = geometry.delta_estimate(view, args.radius, geodesic_cap=args.geodesic_cap)
    results = {
        "delta": est.value,
        "radius": est.radius,
        "triangles_checked": est.triangles_checked,
        "capped": est.capped,
    }
    return _base_config(args, {"radius": args.radius,
                               "geodesic_cap": args.geodesic_cap}), results, \
        {"geodesics": est.capped}


def _cmd_ray_validate(args):
    view, kind = _load_provider(args)
    if kind != "presentation":
        raise InvalidInputError("ray-validate needs a --presentation provider")
    spec = _spec_arg(view, args.spec)
    cert = boundary.validate_ray_spec(spec, args.depth_cap, args.cert_power)
    results = {
        "valid": cert.ok,
        "geodesic_to": cert.geodesic_to,
        "failing_prefix": cert.failing_prefix,
        "power_lengths": {str(k): v for k, v in sorted(cert.power_lengths.items())},
        "spec": spec.to_dict(),
    }
    return _base_config(args, {"spec": args.spec, "depth_cap": args.depth_cap,
                               "cert_power": args.cert_power}), results, {}


def _delta_value(args, view):
    if args.delta == "estimate":
        est = geometry.delta_estimate(view, args.delta_radius)
        return est.value
    try:
        value = int(args.delta)
    except ValueError:
        raise InvalidInputError(
            f"--delta must be an integer or 'estimate', got {args.delta!r}"
        ) from None
    if value < 0:
        raise InvalidInputError("--delta must be nonnegative")
    return value


def _cmd_geoset(args):
    view, kind = _load_provider(args)
    if kind != "presentation":
        raise InvalidInputError("geoset needs a --presentation provider")
    spec = _spec_arg(view, args.spec)
    x = view.element_from_symbols(args.x)
    delta = _delta_value(args, view)
    result = boundary.geo_set(spec, x, args.radius, delta=delta,
                              tier=args.tier, window=args.window)
    results = {
        "members": [racg.word_to_text(v)
                    for v in _sorted_vertices(view, result.members)],
        "unstable": [racg.word_to_text(v)
                     for v in _sorted_vertices(view, result.unstable)],
        "window": list(result.window),
        "tier": result.tier,
        "delta": delta,
    }
    return _base_config(args, {"spec": args.spec, "x": args.x,
                               "radius": args.radius, "delta": args.delta,
                               "delta_radius": args.delta_radius,
                               "tier": args.tier, "window": args.window}), results, {}


def _cmd_geodiff(args):
    view, kind = _load_provider(args)
    if kind != "presentation":
        raise InvalidInputError("geodiff needs a --presentation provider")
    spec = _spec_arg(view, args.spec)
    x = view.element_from_symbols(args.x)
    y = view.element_from_symbols(args.y)
    delta = _delta_value(args, view)
    report = boundary.geo_diff_experiment(spec, x, y, args.rmax, delta=delta,
                                          tier=args.tier)
    results = {
        "radii": list(report.radii),
        "sizes": list(report.sizes),
        "differences": [[racg.word_to_text(v) for v in diff]
                        for diff in report.differences],
        "verdict": report.verdict,
        "plateau": report.plateau,
        "tier": report.tier,
        "delta": delta,
    }
    return _base_config(args, {"spec": args.spec, "x": args.x, "y": args.y,
                               "rmax": args.rmax, "delta": args.delta,
                               "delta_radius": args.delta_radius,
                               "tier": args.tier}), results, {}


def _hf_context(view):
    return hyperfinite.ColoringContext.standard(view)


def _cmd_hf_least(args):
    view, kind = _load_provider(args)
    if kind != "presentation":
        raise InvalidInputError("hf-least needs a --presentation provider")
    spec = _spec_arg(view, args.spec)
    ctx = _hf_context(view)
    profiles = hyperfinite.least_strings(
        ctx, spec, args.depth, args.nmax, threshold=args.threshold,
        on_cap=args.on_cap, geodesic_cap=args.geodesic_cap)
    results = {
        "profiles": [
            {
                "n": p.n,
                "string": [view.generators[c] for c in p.string],
                "vertices": [racg.word_to_text(v)
                             for v in _sorted_vertices(view, p.vertices)],
                "least_vertex": racg.word_to_text(p.least_vertex),
                "base_distance": p.base_distance,
                "evidence": sorted(p.evidence),
            }
            for p in profiles
        ]
    }
    return _base_config(args, {"spec": args.spec, "depth": args.depth,
                               "nmax": args.nmax, "threshold": args.threshold,
                               "on_cap": args.on_cap,
                               "geodesic_cap": args.geodesic_cap}), results, {}


def _cmd_hf_fp(args):
    view, kind = _load_provider(args)
    if kind != "presentation":
        raise InvalidInputError("hf-fp needs a --presentation provider")
    spec = _spec_arg(view, args.spec)
    ctx = _hf_context(view)
    fp = hyperfinite.fingerprint(ctx, spec, args.n, args.depth, args.radius,
                                 on_cap=args.on_cap)
    results = {
        "n": fp.n,
        "radius": fp.radius,
        "shift": racg.word_to_text(fp.shift),
        "members": [racg.word_to_text(v)
                    for v in _sorted_vertices(view, fp.members)],
        "encoding": fp.encode(),
    }
    return _base_config(args, {"spec": args.spec, "n": args.n,
                               "depth": args.depth, "radius": args.radius,
                               "on_cap": args.on_cap}), results, {}


def _cmd_hf_cmp(args):
    view, kind = _load_provider(args)
    if kind != "presentation":
        raise InvalidInputError("hf-cmp needs a --presentation provider")
    ctx = _hf_context(view)
    spec1 = _spec_arg(view, args.spec1)
    spec2 = _spec_arg(view, args.spec2)
    fp1 = hyperfinite.fingerprint(ctx, spec1, args.n, args.depth, args.radius,
                                  on_cap=args.on_cap)
    fp2 = hyperfinite.fingerprint(ctx, spec2, args.n, args.depth, args.radius,
                                  on_cap=args.on_cap)
    cmp = hyperfinite.compare_fingerprints(fp1, fp2, args.search_radius)
    results = {
        "related": cmp.related,
        "witness": None if cmp.witness is None else racg.word_to_text(cmp.witness),
        "search_radius": cmp.search_radius,
        "agreement_radius": cmp.agreement_radius,
        "note": "relatedness is necessary, not sufficient, for a common "
                "boundary point; unrelatedness only covers the searched radius",
    }
    return _base_config(args, {"spec1": args.spec1, "spec2": args.spec2,
                               "n": args.n, "depth": args.depth,
                               "radius": args.radius,
                               "search_radius": args.search_radius,
                               "on_cap": args.on_cap}), results, {}


def _cmd_hf_kbound(args):
    view, kind = _load_provider(args)
    if kind != "presentation":
        raise InvalidInputError("hf-kbound needs a --presentation provider")
    if args.delta < 0:
        raise InvalidInputError("--delta must be nonnegative")
    results = {"K": hyperfinite.k_bound(view, args.delta)}
    return _base_config(args, {"delta": args.delta}), results, {}


# -- DOT export ---------------------------------------------------------------


def _dot_quote(s) -> str:
    return '"' + str(s).replace('"', '\\"') + '"'


def export_dot_ball(view, kind, radius: int, node_cap: int) -> str:
    """Render a ball (or a whole explicit graph) as DOT with wall colors."""
    if kind == "presentation":
        ball = view.ball(radius, cache_dir=_cache_dir())
        vertices = list(ball.vertices)
        edge_pairs = sorted(
            {(min(i, j), max(i, j)) for i, j, _c in ball.edges}
        )
        edges = [(vertices[i], vertices[j]) for i, j in edge_pairs]
    else:
        vertices = list(range(view.vertex_count))
        edges = [(u, v) for u, v in view.edges]
    if len(vertices) > node_cap:
        raise ResourceCapError(
            f"{len(vertices)} nodes exceed the configured cap {node_cap}"
        )
    walls = sorted({view.wall(u, v) for u, v in edges},
                   key=lambda w: (w.reflection.sort_key
                                  if kind == "presentation" else w))
    color_of = {w: _PALETTE[i % len(_PALETTE)] for i, w in enumerate(walls)}
    lines = ["graph complex {", "  node [shape=circle, fontsize=10];"]
    for v in vertices:
        lines.append(f"  {_dot_quote(v)};")
    for u, v in edges:
        w = view.wall(u, v)
        lines.append(
            f"  {_dot_quote(u)} -- {_dot_quote(v)} "
            f'[color="{color_of[w]}", tooltip={_dot_quote(w)}];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_dot_geodiff(view, spec, x, y, rmax: int, delta: int,
                       node_cap: int, tier: str = "strict") -> str:
    """Render the symmetric-difference experiment as a highlighted ball."""
    report = boundary.geo_diff_experiment(spec, x, y, rmax, delta=delta, tier=tier)
    highlight = set(report.differences[-1])
    universe = [
        v
        for v in geometry.ball_around(view, x, rmax)
        if view.distance(y, v) <= rmax
    ]
    if len(universe) > node_cap:
        raise ResourceCapError(
            f"{len(universe)} nodes exceed the configured cap {node_cap}"
        )
    inside = set(universe)
    lines = ["graph geodiff {", "  node [shape=circle, fontsize=10];"]
    for v in universe:
        attrs = ""
        if v in highlight:
            attrs = ' [style=filled, fillcolor="#fdbf6f", indiff="1"]'
        elif v in (x, y):
            attrs = ' [style=filled, fillcolor="#a6cee3"]'
        lines.append(f"  {_dot_quote(v)}{attrs};")
    seen = set()
    for v in universe:
        for nb, _c in view.neighbors(v):
            if nb in inside:
                key = tuple(sorted((str(v), str(nb))))
                if key not in seen:
                    seen.add(key)
                    lines.append(f"  {_dot_quote(v)} -- {_dot_quote(nb)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _cmd_export_dot(args):
    view, kind = _load_provider(args)
    if args.spec:
        if kind != "presentation":
            raise InvalidInputError("geodiff overlay needs a --presentation provider")
        spec = _spec_arg(view, args.spec)
        x = view.element_from_symbols(args.x)
        y = view.element_from_symbols(args.y)
        delta = _delta_value(args, view)
        text = export_dot_geodiff(view, spec, x, y, args.rmax, delta,
                                  args.node_cap)
    else:
        radius = args.radius if args.radius is not None else 2
        text = export_dot_ball(view, kind, radius, args.node_cap)
    return text


# -- plumbing -----------------------------------------------------------------


def _base_config(args, extra: dict) -> dict:
    config = {"seed": args.seed}
    if getattr(args, "presentation", None):
        config["presentation"] = args.presentation
    if getattr(args, "graph", None):
        config["graph"] = args.graph
    config.update(extra)
    return config


def build_parser() -> _CliParser:
    parser = _CliParser(prog="cubemedian",
                        description="cube complex combinatorics toolkit")
    parser.add_argument("--out", help="write the report here instead of stdout")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED,
                        help="seed for sampled checks (default 0)")
    parser.add_argument("--timing", action="store_true",
                        help="attach wall-clock timing to the report")
    sub = parser.add_subparsers(dest="command", required=True)

    def provider_flags(p):
        p.add_argument("--presentation", help="presentation JSON file")
        p.add_argument("--graph", help="explicit graph JSON file")

    p = sub.add_parser("validate", help="validate a presentation or graph")
    provider_flags(p)
    p.add_argument("--samples", type=int, default=50)
    p.set_defaults(fn=_cmd_validate)

    p = sub.add_parser("ball", help="materialize a ball")
    provider_flags(p)
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--cap", type=int, default=racg.DEFAULT_VERTEX_CAP)
    p.add_argument("--list", action="store_true")
    p.set_defaults(fn=_cmd_ball)

    p = sub.add_parser("dist", help="distance between two vertices")
    provider_flags(p)
    p.add_argument("--word1", required=True)
    p.add_argument("--word2", required=True)
    p.set_defaults(fn=_cmd_dist)

    p = sub.add_parser("median", help="median of three vertices")
    provider_flags(p)
    p.add_argument("--word1", required=True)
    p.add_argument("--word2", required=True)
    p.add_argument("--word3", required=True)
    p.set_defaults(fn=_cmd_median)

    p = sub.add_parser("interval", help="vertices between two vertices")
    provider_flags(p)
    p.add_argument("--word1", required=True)
    p.add_argument("--word2", required=True)
    p.set_defaults(fn=_cmd_interval)

    p = sub.add_parser("walls", help="walls separating two vertices")
    provider_flags(p)
    p.add_argument("--word1", required=True)
    p.add_argument("--word2", required=True)
    p.set_defaults(fn=_cmd_walls)

    p = sub.add_parser("project", help="project a vertex to a convex hull")
    provider_flags(p)
    p.add_argument("--word", required=True)
    p.add_argument("--onto", required=True,
                   help="comma-separated vertices whose hull is the target")
    p.set_defaults(fn=_cmd_project)

    p = sub.add_parser("delta", help="thin-triangle constant on a ball")
    provider_flags(p)
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--geodesic-cap", type=int, default=64, dest="geodesic_cap")
    p.set_defaults(fn=_cmd_delta)

    p = sub.add_parser("ray-validate", help="validate a ray spec")
    provider_flags(p)
    p.add_argument("--spec", required=True)
    p.add_argument("--depth-cap", type=int, default=boundary.DEFAULT_DEPTH_CAP,
                   dest="depth_cap")
    p.add_argument("--cert-power", type=int, default=boundary.DEFAULT_CERT_POWER,
                   dest="cert_power")
    p.set_defaults(fn=_cmd_ray_validate)

    def delta_flags(p):
        p.add_argument("--delta", default="0",
                       help="nonnegative integer or 'estimate'")
        p.add_argument("--delta-radius", type=int, default=2, dest="delta_radius",
                       help="ball radius when estimating delta")

    p = sub.add_parser("geoset", help="truncated interval toward a boundary point")
    provider_flags(p)
    p.add_argument("--spec", required=True)
    p.add_argument("--x", required=True)
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--tier", choices=("strict", "slack"), default="strict")
    p.add_argument("--window", type=int, default=boundary.DEFAULT_WINDOW)
    delta_flags(p)
    p.set_defaults(fn=_cmd_geoset)

    p = sub.add_parser("geodiff", help="symmetric-difference experiment")
    provider_flags(p)
    p.add_argument("--spec", required=True)
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--rmax", type=int, required=True)
    p.add_argument("--tier", choices=("strict", "slack"), default="strict")
    delta_flags(p)
    p.set_defaults(fn=_cmd_geodiff)

    p = sub.add_parser("hf-least", help="least recurring color strings")
    provider_flags(p)
    p.add_argument("--spec", required=True)
    p.add_argument("--depth", type=int, default=16)
    p.add_argument("--nmax", type=int, default=4)
    p.add_argument("--threshold", type=int, default=hyperfinite.DEFAULT_THRESHOLD)
    p.add_argument("--on-cap", choices=("error", "canonical"), default="error",
                   dest="on_cap")
    p.add_argument("--geodesic-cap", type=int,
                   default=hyperfinite.DEFAULT_GEODESIC_CAP, dest="geodesic_cap")
    p.set_defaults(fn=_cmd_hf_least)

    p = sub.add_parser("hf-fp", help="fingerprint of a boundary point")
    provider_flags(p)
    p.add_argument("--spec", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--depth", type=int, default=16)
    p.add_argument("--radius", type=int, default=8)
    p.add_argument("--on-cap", choices=("error", "canonical"), default="error",
                   dest="on_cap")
    p.set_defaults(fn=_cmd_hf_fp)

    p = sub.add_parser("hf-cmp", help="compare two fingerprints")
    provider_flags(p)
    p.add_argument("--spec1", required=True)
    p.add_argument("--spec2", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--depth", type=int, default=16)
    p.add_argument("--radius", type=int, default=8)
    p.add_argument("--search-radius", type=int,
                   default=hyperfinite.DEFAULT_SEARCH_RADIUS, dest="search_radius")
    p.add_argument("--on-cap", choices=("error", "canonical"), default="error",
                   dest="on_cap")
    p.set_defaults(fn=_cmd_hf_cmp)

    p = sub.add_parser("hf-kbound", help="class-size bound from delta")
    provider_flags(p)
    p.add_argument("--delta", type=int, required=True)
    p.set_defaults(fn=_cmd_hf_kbound)

    p = sub.add_parser("export-dot", help="DOT diagram of a ball or geodiff")
    provider_flags(p)
    p.add_argument("--radius", type=int, default=None)
    p.add_argument("--spec", default=None, help="render a geodiff overlay")
    p.add_argument("--x", default="")
    p.add_argument("--y", default="")
    p.add_argument("--rmax", type=int, default=4)
    p.add_argument("--node-cap", type=int, default=2000, dest="node_cap")
    delta_flags(p)
    p.set_defaults(fn=_cmd_export_dot, dot=True)

    return parser


def _emit(text: str, out):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        started = time.monotonic()
        if getattr(args, "dot", False):
            _emit(args.fn(args), args.out)
            return 0
        config, results, truncation = args.fn(args)
        report = {
            "command": args.command,
            "config": config,
            "results": results,
            "truncation": truncation,
        }
        if args.timing:
            report["timing"] = {"seconds": round(time.monotonic() - started, 6)}
        _emit(json.dumps(report, indent=2, sort_keys=True) + "\n", args.out)
        return 0
    except ResourceCapError as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return 2
    except InvalidInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
