"""Command-line front end: generate witnesses, verify colorings, run exact
searches, find paths constructively, play games, and run the geometry
pipeline.  Reports are plain text with machine-parseable "key: value" lines.

Exit codes: 0 = claim verified / success, 1 = claim refuted, 2 = usage or
budget error.
"""

from __future__ import annotations

import argparse
import random
import sys

from monopath import coloring as col
from monopath import digraphs, games, geometry, pathfind, search, transitive, witnesses

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_ERROR = 2


def _emit(key: str, value) -> None:
    print(f"{key}: {value}")


def _cmd_witness(args) -> int:
    kind = args.construction
    if kind == "grid":
        out = witnesses.grid_witness_k2(args.q, args.n)
        _emit("construction", "grid")
        _emit("vertices", out.n_vertices)
        comment = f"grid witness q={args.q} n={args.n}"
    elif kind == "lowf":
        d = witnesses.lowf_witness(args.q, args.n)
        walks = digraphs.longest_mono_walks(d)
        _emit("construction", "lowf")
        _emit("vertices", d.n_vertices)
        _emit("max-walks", " ".join(str(walks.length(c)) for c in range(1, d.q + 1)))
        if args.out:
            with open(args.out, "w") as f:
                digraphs.write_digraph(d, f, f"lowf witness q={args.q} n={args.n}")
            _emit("written", args.out)
        _emit("verified", "true")
        return EXIT_OK
    elif kind == "stepup3":
        f_val = digraphs.f_exact(args.q, args.n - 1, cap=12)
        phi = digraphs.walkfree_witness(f_val - 1, args.q, args.n - 1)
        out = witnesses.stepup3_witness(phi, args.q, args.n)
        _emit("construction", "stepup3")
        _emit("seed-vertices", phi.n_vertices)
        _emit("vertices", out.n_vertices)
        comment = f"stepup3 witness q={args.q} n={args.n} seed={phi.n_vertices}"
    elif kind == "stepupk":
        psi = search.exists_witness(args.seed_size, args.k - 1, args.q, args.n)
        if not isinstance(psi, col.OrderedColoring):
            _emit("error", f"no path-free seed on {args.seed_size} vertices")
            return EXIT_ERROR
        out = witnesses.stepup_k_witness(psi, args.n)
        _emit("construction", "stepupk")
        _emit("vertices", out.n_vertices)
        _emit("uniformity", out.k)
        comment = f"stepup-k witness k={out.k} q={args.q} n={args.n} seed={args.seed_size}"
    elif kind == "adversary":
        g = col.OrderedGraph.path(args.path_vertices)
        gc = witnesses.sparse_adversary_coloring(g, args.q, args.n1, args.n2)
        maxima = col.longest_mono_paths_graph(gc)
        _emit("construction", "adversary")
        _emit("edges", len(gc.colors))
        for c in range(1, gc.q + 1):
            _emit(f"max-path-color-{c}", maxima[c][0])
        _emit("path-free-at", args.n1 + args.n2 - 1)
        _emit("verified", "true")
        return EXIT_OK
    else:  # pragma: no cover
        return EXIT_ERROR

    if isinstance(out, col.OrderedColoring):
        _, summary = col.longest_mono_paths(out)
        for c in range(1, out.q + 1):
            _emit(f"max-path-color-{c}", summary[c][0])
        if args.out:
            with open(args.out, "w") as f:
                col.write_coloring(out, f, comment)
            _emit("written", args.out)
    _emit("verified", "true")
    return EXIT_OK


def _cmd_verify(args) -> int:
    with open(args.file) as f:
        c = col.read_coloring(f)
    _, summary = col.longest_mono_paths(c)
    _emit("k", c.k)
    _emit("q", c.q)
    _emit("vertices", c.n_vertices)
    worst = 0
    for color in range(1, c.q + 1):
        length, witness = summary[color]
        _emit(f"max-path-color-{color}", length)
        worst = max(worst, length)
    if args.max_path is not None:
        if worst <= args.max_path:
            _emit("claim", f"all colors <= {args.max_path}")
            _emit("verdict", "verified")
            return EXIT_OK
        for color in range(1, c.q + 1):
            length, witness = summary[color]
            if length > args.max_path:
                _emit("refutation", " ".join(map(str, witness.vertices)))
                break
        _emit("verdict", "refuted")
        return EXIT_REFUTED
    return EXIT_OK


def _cmd_search(args) -> int:
    budget = search.SearchBudget(node_cap=args.node_cap, time_cap=args.time_cap)
    try:
        if args.mode == "n-exact":
            value = search.n_exact(args.k, args.q, args.n, budget)
            print(value)
            return EXIT_OK
        if args.mode == "f-exact":
            value = digraphs.f_exact(args.q, args.n, cap=args.cap)
            print(value)
            return EXIT_OK
        out = search.exists_witness(args.vertices, args.k, args.q, args.n, budget)
        if isinstance(out, search.BudgetExhausted):
            _emit("outcome", f"budget exhausted after {out.nodes} nodes")
            return EXIT_ERROR
        if out is None:
            _emit("outcome", "none")
            return EXIT_OK
        _emit("outcome", "witness")
        if args.out:
            with open(args.out, "w") as f:
                col.write_coloring(
                    out, f, f"witness N={args.vertices} k={args.k} q={args.q} n={args.n}"
                )
            _emit("written", args.out)
        return EXIT_OK
    except (search.BudgetExceeded, digraphs.CapExceeded) as exc:
        _emit("error", exc)
        return EXIT_ERROR


def _cmd_find_path(args) -> int:
    if args.method == "recursive":
        with open(args.file) as f:
            c = col.read_coloring(f)
        try:
            path = pathfind.find_path_recursive(c, args.n)
        except pathfind.PathNotFound as exc:
            _emit("outcome", f"not found ({exc})")
            return EXIT_REFUTED
        _emit("color", path.color)
        _emit("path", " ".join(map(str, path.vertices)))
        _emit("verified", col.verify_path(c, path))
        return EXIT_OK
    # online reduction with a seeded random oracle (k = 3)
    oracle = pathfind.RandomColorOracle(args.q, seed=args.seed)
    builder = games.LatticeBuilderAsOnline(
        games.builder_strategy(args.q, args.n + 1), args.q
    )
    try:
        path, tr = pathfind.find_path_online_reduction(
            oracle, 3, args.q, args.n, builder, args.big_n
        )
    except pathfind.SurvivorsExhausted as exc:
        _emit("outcome", f"survivors exhausted ({exc})")
        return EXIT_REFUTED
    _emit("color", path.color)
    _emit("path", " ".join(map(str, path.vertices)))
    _emit("edges", tr.total_edges)
    _emit("survivor-audit", "pass" if tr.audit_survivors() else "fail")
    for stage in tr.stages:
        steps = " ".join(
            f"{e.prefix}->c{e.color}|S|={e.survivors_after}" for e in stage.edges
        )
        _emit(f"stage-{stage.t}", f"label={stage.vertex_label} S0={stage.survivors_at_start} {steps}")
    return EXIT_OK if tr.audit_survivors() else EXIT_REFUTED


def _make_coordinator(name: str, q: int, n: int, rng: random.Random):
    if name == "strategy":
        return games.coordinator_strategy(q, n)
    if name == "extension":
        return games.ExtensionCoordinator(q, n, rng)
    return games.RandomCoordinator(q, rng)


def _cmd_game(args) -> int:
    if args.replay:
        with open(args.replay) as f:
            head = f.readline().split()
            f.seek(0)
            if head and head[0] == "lattice":
                tr = games.read_lattice_transcript(f)
                ok = games.validate_lattice_transcript(tr)
                _emit("stages", tr.n_stages)
                _emit("steps", tr.total_steps)
            else:
                gtr = games.read_game_transcript(f)
                ok, path = games.validate_game_transcript(gtr)
                _emit("edges", gtr.total_edges)
                if path:
                    _emit("path", " ".join(map(str, path.vertices)))
        _emit("verdict", "verified" if ok else "refuted")
        return EXIT_OK if ok else EXIT_REFUTED

    rng = random.Random(args.seed)
    if args.play == "lattice":
        builder = games.builder_strategy(args.q, args.n)
        coordinator = _make_coordinator(args.coordinator, args.q, args.n, rng)
        tr = games.play_lattice(builder, coordinator, args.q, args.n)
        _emit("stages", tr.n_stages)
        _emit("steps", tr.total_steps)
        _emit("wasted-stages", sum(1 for s in tr.stages if not s.is_new))
        if args.out:
            with open(args.out, "w") as f:
                games.write_lattice_transcript(tr, f)
            _emit("written", args.out)
        _emit("valid", games.validate_lattice_transcript(tr))
        return EXIT_OK
    builder = games.LatticeBuilderAsOnline(games.builder_strategy(args.q, args.n), args.q)
    if args.painter == "random":
        painter = games.RandomPainter(args.q, rng)
    elif args.painter == "extremal":
        painter = games.ExtremalPainter(args.q, args.n)
    else:
        painter = games.FixedColorPainter(1)
    tr, path = games.play_online_ramsey(builder, painter, args.q, args.n, k=2)
    _emit("edges", tr.total_edges)
    _emit("path", " ".join(map(str, path.vertices)))
    _emit("color", path.color)
    if args.out:
        with open(args.out, "w") as f:
            games.write_game_transcript(tr, f)
        _emit("written", args.out)
    return EXIT_OK


def _cmd_geom(args) -> int:
    if args.fixture == "nontransitive":
        family = geometry.clockwise_nontransitivity_fixture()
    elif args.fixture == "staircase":
        family = geometry.staircase_family(args.size)
    elif args.fixture == "separator":
        family = geometry.separator_family(args.size)
    elif args.fixture == "random":
        family = geometry.random_family(args.size, seed=args.seed)
    else:
        with open(args.family) as f:
            bodies = geometry.read_family_file(f)
        try:
            family = geometry.validate_family(bodies)
        except geometry.InvalidFamilyError as exc:
            for v in exc.violations:
                _emit("violation", v)
            _emit("verdict", "invalid family")
            return EXIT_REFUTED
    _emit("bodies", len(family))
    for w in family.report.warnings:
        _emit("warning", w)
    coloring = geometry.color_triples(family, workers=args.workers)
    counts = {c: int((coloring.colors == c).sum()) for c in (1, 2, 3)}
    _emit("triples", coloring.n_edges)
    _emit("red", counts[1])
    _emit("blue", counts[2])
    _emit("green", counts[3])
    _emit("transitive", transitive.is_transitive(coloring) is True)
    if args.fixture == "nontransitive":
        o134 = geometry.strong_orientations(family, 1, 3, 4)
        _emit("triple-134", o134.value)
        _emit("strong-clockwise-134", o134 is not geometry.TripleOrientation.CCW_ONLY)
    if args.out:
        with open(args.out, "w") as f:
            col.write_coloring(coloring, f, "geometry triple coloring red=1 blue=2 green=3")
        _emit("written", args.out)
    if args.find_convex:
        try:
            chosen = geometry.find_convex_position(family, args.find_convex)
        except pathfind.PathNotFound as exc:
            _emit("outcome", f"no path ({exc})")
            return EXIT_REFUTED
        _emit("convex-position", " ".join(str(b.id) for b in chosen))
        _emit("verified", geometry.is_convex_position(chosen))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="monopath", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    w = sub.add_parser("witness", help="generate and self-check a construction")
    w.add_argument("--construction", required=True,
                   choices=["grid", "lowf", "stepup3", "stepupk", "adversary"])
    w.add_argument("--k", type=int, default=4)
    w.add_argument("--q", type=int, required=True)
    w.add_argument("--n", type=int, default=4)
    w.add_argument("--n1", type=int, default=3)
    w.add_argument("--n2", type=int, default=3)
    w.add_argument("--seed-size", type=int, default=6)
    w.add_argument("--path-vertices", type=int, default=20)
    w.add_argument("--out")
    w.set_defaults(fn=_cmd_witness)

    v = sub.add_parser("verify", help="DP-check a coloring file against a claim")
    v.add_argument("--file", required=True)
    v.add_argument("--max-path", type=int, default=None)
    v.set_defaults(fn=_cmd_verify)

    s = sub.add_parser("search", help="exact small values and witnesses")
    s.add_argument("--mode", choices=["n-exact", "f-exact", "exists"], default="n-exact")
    s.add_argument("--k", type=int, default=2)
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--vertices", type=int, default=None)
    s.add_argument("--cap", type=int, default=40)
    s.add_argument("--node-cap", type=int, default=None)
    s.add_argument("--time-cap", type=float, default=None)
    s.add_argument("--out")
    s.set_defaults(fn=_cmd_search)

    fp = sub.add_parser("find-path", help="constructive path finders")
    fp.add_argument("--method", choices=["recursive", "online"], default="recursive")
    fp.add_argument("--file")
    fp.add_argument("--n", type=int, required=True)
    fp.add_argument("--q", type=int, default=2)
    fp.add_argument("--big-n", type=int, default=2**15 + 1)
    fp.add_argument("--seed", type=int, default=0)
    fp.set_defaults(fn=_cmd_find_path)

    g = sub.add_parser("game", help="play or replay lattice / online games")
    g.add_argument("--play", choices=["lattice", "online"], default="lattice")
    g.add_argument("--replay")
    g.add_argument("--q", type=int, default=2)
    g.add_argument("--n", type=int, default=4)
    g.add_argument("--coordinator", choices=["strategy", "extension", "random"],
                   default="strategy")
    g.add_argument("--painter", choices=["random", "extremal", "fixed"], default="random")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out")
    g.set_defaults(fn=_cmd_game)

    ge = sub.add_parser("geom", help="validate, color, and search polygon families")
    ge.add_argument("--family")
    ge.add_argument("--fixture", choices=["staircase", "separator", "nontransitive", "random"])
    ge.add_argument("--size", type=int, default=8)
    ge.add_argument("--seed", type=int, default=0)
    ge.add_argument("--find-convex", type=int, default=None)
    ge.add_argument("--workers", type=int, default=1)
    ge.add_argument("--out")
    ge.set_defaults(fn=_cmd_geom)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "find-path" and args.method == "recursive" and not args.file:
        parser.error("find-path --method recursive requires --file")
    if args.command == "geom" and not (args.family or args.fixture):
        parser.error("geom requires --family or --fixture")
    try:
        return args.fn(args)
    except FileNotFoundError as exc:
        _emit("error", exc)
        return EXIT_ERROR
    except ValueError as exc:
        _emit("error", exc)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
