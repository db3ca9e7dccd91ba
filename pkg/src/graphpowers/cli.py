"""Command-line front end.

Subcommands: ``gen``, ``power``, ``verify``, ``sweep``, ``diagnose-cube``.
Payload goes to stdout, diagnostics to stderr.

Exit codes: 0 ok, 1 I/O failure, 2 bad input or parameters,
3 a proven bound (or proof clause) fails, 4 only a conjecture fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import bounds as bd
from . import families as fam
from .coloring import (
    NotRegularError,
    check_b_within_two,
    check_partition_inequalities,
    color_edges,
    partition_brs,
)
from .edgelist import EdgeListError, format_edgelist, read_edgelist
from .graph import Digraph, DisconnectedGraphError, UNREACHABLE, diameter, is_connected, regularity
from .power import digraph_power, graph_power, growth_profile

EXIT_OK, EXIT_IO, EXIT_USAGE, EXIT_THEOREM, EXIT_CONJECTURE = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def _err(msg: str) -> None:
    print(msg, file=sys.stderr)


def _int_set(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _d_range(text: str) -> list[int]:
    parts = text.split(":")
    try:
        if len(parts) == 1:
            return [int(parts[0])]
        if len(parts) != 3:
            raise ValueError
        start, stop, step = (int(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected start:stop:step, got {text!r}") from None
    if step < 1:
        raise argparse.ArgumentTypeError("step must be positive")
    return list(range(start, stop + 1, step))


def _emit(text: str, out_path) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _need(args, *names):
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"family {args.family!r} needs {', '.join(missing)}")


# -- gen ---------------------------------------------------------------------


def _generate(args):
    fam_name = args.family
    if fam_name == "cayley":
        _need(args, "p", "set")
        return fam.cayley_undirected(args.p, args.set), [f"family=cayley p={args.p} set={_fmt_set(args.set)}"]
    if fam_name == "cayley-directed":
        _need(args, "p", "set")
        return fam.cayley_directed(args.p, args.set), [f"family=cayley-directed p={args.p} set={_fmt_set(args.set)}"]
    if fam_name == "hrd":
        _need(args, "r", "d")
        G = fam.regularized_h(args.r, args.d) if args.regularize else fam.layered_h(args.r, args.d)
        return G, [f"family=hrd r={args.r} d={args.d} regularize={str(args.regularize).lower()}"]
    if fam_name == "random-regular":
        _need(args, "n", "d")
        G = fam.random_regular_connected(args.n, args.d, args.seed)
        return G, [f"family=random-regular n={args.n} d={args.d} seed={args.seed}"]
    if fam_name == "cycle":
        _need(args, "n")
        return fam.cycle(args.n), [f"family=cycle n={args.n}"]
    if fam_name == "path":
        _need(args, "n")
        return fam.path(args.n), [f"family=path n={args.n}"]
    if fam_name == "directed-cycle":
        _need(args, "n")
        return fam.directed_cycle(args.n), [f"family=directed-cycle n={args.n}"]
    if fam_name == "complete":
        _need(args, "n")
        return fam.complete(args.n), [f"family=complete n={args.n}"]
    raise UsageError(f"unknown family {fam_name!r}")


def _fmt_set(values) -> str:
    return ",".join(str(a) for a in sorted(set(values)))


def _summary(G) -> str:
    parts = [f"n={G.n}", f"m={G.m}"]
    if not isinstance(G, Digraph) and G.n:
        d = regularity(G)
        parts.append(f"regular={d if d is not None else 'no'}")
        parts.append(f"connected={'yes' if is_connected(G) else 'no'}")
    return " ".join(parts)


def cmd_gen(args) -> int:
    try:
        G, comments = _generate(args)
    except (UsageError, fam.FamilyParameterError) as exc:
        _err(f"gen: {exc}")
        return EXIT_USAGE
    text = format_edgelist(G, comments)
    try:
        _emit(text, args.out)
    except OSError as exc:
        _err(f"gen: {exc}")
        return EXIT_IO
    if args.out:
        print(_summary(G))
    else:
        _err(_summary(G))
    return EXIT_OK


# -- power -------------------------------------------------------------------


def _load(path):
    return read_edgelist(path)


def cmd_power(args) -> int:
    G = _load(args.input)
    if args.r < 1:
        raise UsageError("--r must be >= 1")
    if args.profile:
        if isinstance(G, Digraph):
            raise UsageError("growth profile is defined for undirected graphs")
        try:
            _emit(growth_profile(G).to_csv(), args.out)
        except DisconnectedGraphError as exc:
            raise UsageError(str(exc)) from None
        return EXIT_OK
    P = digraph_power(G, args.r) if isinstance(G, Digraph) else graph_power(G, args.r)
    ratio = Fraction(P.m, G.m) if G.m else None
    summary = f"e(G)={G.m} e(G^{args.r})={P.m} ratio={ratio if ratio is not None else 'undefined'}"
    if args.out:
        _emit(format_edgelist(P, [f"power r={args.r} of {args.input}"]), args.out)
        print(summary)
    else:
        sys.stdout.write(format_edgelist(P))
        _err(summary)
    return EXIT_OK


# -- verify ------------------------------------------------------------------

_BOUND_ALIASES = {
    "cauchy-davenport": bd.BoundId.CAUCHY_DAVENPORT,
    "higher-power": bd.BoundId.HIGHER_POWER,
    "cube": bd.BoundId.CUBE_7_6,
    "cube-conjecture": bd.BoundId.CUBE_CONJECTURE_2E,
    "oriented-square": bd.BoundId.ORIENTED_SQUARE_3_2,
    "eulerian-square": bd.BoundId.EULERIAN_SQUARE_2E,
}
_BOUND_ALIASES.update({b.value: b for b in bd.BoundId})

_DIRECTED_BOUNDS = {bd.BoundId.ORIENTED_SQUARE_3_2, bd.BoundId.EULERIAN_SQUARE_2E}
_DEFAULT_UNDIRECTED = [bd.BoundId.HIGHER_POWER, bd.BoundId.CUBE_7_6, bd.BoundId.CUBE_CONJECTURE_2E]
_DEFAULT_DIRECTED = [bd.BoundId.ORIENTED_SQUARE_3_2, bd.BoundId.EULERIAN_SQUARE_2E]


def _bound_list(text: str) -> list:
    out = []
    for name in text.split(","):
        name = name.strip()
        if name not in _BOUND_ALIASES:
            raise argparse.ArgumentTypeError(f"unknown bound {name!r}; choose from {sorted(_BOUND_ALIASES)}")
        out.append(_BOUND_ALIASES[name])
    return out


def _run_checks(G, selected, r):
    directed = isinstance(G, Digraph)
    for b in selected:
        if (b in _DIRECTED_BOUNDS) != directed:
            raise UsageError(f"bound {b.value} does not apply to a {'digraph' if directed else 'graph'}")
    radii = None
    if r is not None:
        radii = [r]
    elif not directed and G.n and is_connected(G):
        radii = list(range(1, diameter(G) + 1))
    for b in selected:
        if b is bd.BoundId.CAUCHY_DAVENPORT:
            if G.n == 0 or not is_connected(G):
                raise UsageError("cauchy-davenport check needs a connected graph")
            for k in radii:
                yield bd.check_cauchy_davenport(G, k)
        elif b is bd.BoundId.HIGHER_POWER:
            for k in radii or [1]:
                yield bd.check_higher_power(G, k)
        elif b is bd.BoundId.CUBE_7_6:
            yield bd.check_cube(G)
        elif b is bd.BoundId.CUBE_CONJECTURE_2E:
            yield bd.check_cube_conjecture(G)
        elif b is bd.BoundId.ORIENTED_SQUARE_3_2:
            yield bd.check_oriented_square(G)
        elif b is bd.BoundId.EULERIAN_SQUARE_2E:
            yield bd.check_eulerian_square_conjecture(G)


def cmd_verify(args) -> int:
    G = _load(args.input)
    directed = isinstance(G, Digraph)
    selected = args.bounds or (_DEFAULT_DIRECTED if directed else _DEFAULT_UNDIRECTED)
    if args.r is not None and args.r < 1:
        raise UsageError("--r must be >= 1")
    reports = list(_run_checks(G, selected, args.r))
    for rep in reports:
        print(rep.to_json())
    theorem_fail = any(rep.violated and not rep.is_conjecture for rep in reports)
    conjecture_fail = any(rep.violated and rep.is_conjecture for rep in reports)
    if theorem_fail:
        return EXIT_THEOREM
    if conjecture_fail:
        return EXIT_CONJECTURE
    return EXIT_OK


# -- sweep -------------------------------------------------------------------


def cmd_sweep(args) -> int:
    if args.r < 3:
        raise UsageError(f"sweep needs r >= 3, got {args.r}")
    if not args.d or any(d < 5 for d in args.d):
        raise UsageError("sweep needs a nonempty d range with every d >= 5")
    out = open(args.out, "w", encoding="utf-8", newline="\n") if args.out else sys.stdout
    try:
        out.write(bd.SWEEP_CSV_HEADER + "\n")
        for d in args.d:
            out.write(bd.sweep_row(args.r, d, args.regularize).to_csv() + "\n")
            out.flush()
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


# -- diagnose-cube -------------------------------------------------------------


def diagnose_cube(G) -> tuple[dict, bool]:
    """Coloring/partition payload and whether every applicable clause holds."""
    C = color_edges(G)
    P = partition_brs(G, C)
    within = check_b_within_two(G, P)
    ineq = check_partition_inequalities(G, C, P)
    diam = diameter(G)
    blue_exists = bool(C.blue_edges())
    clauses = {"b_within_two": within.holds, **ineq.clauses}
    payload = {
        "n": G.n,
        "degree": C.degree,
        "diameter": diam,
        "threshold_num": C.threshold.numerator,
        "threshold_den": C.threshold.denominator,
        "edges": [[u, v, C.color(u, v).value] for u, v in G.edges()],
        "membership": P.membership(G.n),
        "B": sorted(P.B),
        "R": sorted(P.R),
        "S": sorted(P.S),
        "nearest_b": [None if x is UNREACHABLE else x for x in within.nearest_b],
        "blue_edge_exists": blue_exists,
        "applicable": ineq.applicable,
        "reason": ineq.reason,
        "clauses": clauses,
    }
    ok = True
    if diam >= 3 and not blue_exists:
        ok = False
    if ineq.applicable and not all(clauses.values()):
        ok = False
    return payload, ok


def cmd_diagnose_cube(args) -> int:
    G = _load(args.input)
    if isinstance(G, Digraph):
        raise UsageError("diagnose-cube needs an undirected graph")
    if G.n == 0 or regularity(G) is None:
        raise UsageError("diagnose-cube needs a regular graph")
    if not is_connected(G):
        raise UsageError("diagnose-cube needs a connected graph")
    payload, ok = diagnose_cube(G)
    print(json.dumps(payload))
    return EXIT_OK if ok else EXIT_THEOREM


# -- wiring --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="graphpowers", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="write a generated graph as an edge list")
    g.add_argument(
        "--family",
        required=True,
        choices=["cayley", "cayley-directed", "hrd", "random-regular", "cycle", "path", "directed-cycle", "complete"],
    )
    g.add_argument("--p", type=int)
    g.add_argument("--set", type=_int_set)
    g.add_argument("--r", type=int)
    g.add_argument("--d", type=int)
    g.add_argument("--n", type=int)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--regularize", action="store_true")
    g.add_argument("--out")
    g.set_defaults(func=cmd_gen)

    p = sub.add_parser("power", help="compute G^r of an edge-list file")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--out")
    p.add_argument("--profile", action="store_true", help="emit the growth profile CSV for r=1..diam")
    p.set_defaults(func=cmd_power)

    v = sub.add_parser("verify", help="run bound checkers, one JSON report per line")
    v.add_argument("--in", dest="input", required=True)
    v.add_argument("--bounds", type=_bound_list)
    v.add_argument("--r", type=int)
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("sweep", help="H_r(d) ratio sweep as CSV")
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--d", type=_d_range, required=True, help="start:stop:step, stop inclusive")
    s.add_argument("--regularize", action="store_true")
    s.add_argument("--out")
    s.set_defaults(func=cmd_sweep)

    c = sub.add_parser("diagnose-cube", help="red/blue coloring and B/R/S partition report")
    c.add_argument("--in", dest="input", required=True)
    c.set_defaults(func=cmd_diagnose_cube)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, EdgeListError, NotRegularError, fam.FamilyParameterError) as exc:
        _err(f"{args.command}: {exc}")
        return EXIT_USAGE
    except OSError as exc:
        _err(f"{args.command}: {exc}")
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
