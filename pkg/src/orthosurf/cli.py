"""Command-line interface.

Exit codes: 0 when the command succeeds or the queried property holds,
1 when the property fails or is refuted, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import sys

from .charpoints import (
    characteristic_points,
    detect_degeneracy,
    is_syzygy,
    syzygy_complex,
)
from .constructions import (
    ConstructionVerificationError,
    maxima_of,
    path_product,
    prism,
    pyramid,
    simplex_surface,
    stack,
)
from .cporder import build_cporder, diamond_check, is_graded, is_lattice, is_rigid
from .documents import (
    DocumentError,
    emit_surface,
    load_ball,
    load_surface,
    load_triangulation,
)
from .export import export_poset_dot, render3d_svg
from .points import GeometryError, NotAnAntichain
from .realizer import nonrealizability_check, search_realization
from .schnyder import compute_wood, dual_surface, extract_wood, region_vectors
from .surface import is_generic, strong_degeneracy


def _write(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _point_str(p) -> str:
    return "(" + ",".join(map(str, p)) + ")"


def _verdict(name: str, holds: bool, detail: str = "") -> int:
    line = f"{name}: {'yes' if holds else 'no'}"
    if detail:
        line += f" ({detail})"
    print(line)
    return 0 if holds else 1


def cmd_check(args) -> int:
    try:
        surface = load_surface(args.surface)
    except NotAnAntichain as exc:
        if args.antichain:
            return _verdict("antichain", False, str(exc))
        raise
    if args.antichain:
        return _verdict("antichain", True)
    if args.generic:
        return _verdict("generic", is_generic(surface))
    if args.suspended:
        return _verdict("suspended", surface.is_suspended)
    if args.degenerate:
        witness = detect_degeneracy(surface)
        if witness is None:
            return _verdict("degenerate", False)
        return _verdict(
            "degenerate",
            True,
            f"at {_point_str(witness.point)} via vertices "
            f"{witness.x},{witness.u},{witness.v} colors {witness.i},{witness.j}",
        )
    if args.strong_degeneracy:
        witness = strong_degeneracy(surface)
        if witness is None:
            return _verdict("strong degeneracy", False)
        return _verdict(
            "strong degeneracy",
            True,
            f"color {witness.color} value {witness.value} at "
            + _point_str(witness.point),
        )
    if args.rigid:
        res = is_rigid(surface)
        detail = f"mode {res.mode}"
        if res.witness is not None:
            detail += f", witness {res.witness}"
        return _verdict("rigid", res.holds, detail)
    print(
        f"surface: dim {surface.dim}, {len(surface.vertices)} vertices, "
        f"{'suspended' if surface.is_suspended else 'not suspended'}, "
        f"{'generic' if is_generic(surface) else 'not generic'}"
    )
    return 0


def cmd_cpoints(args) -> int:
    surface = load_surface(args.surface)
    pts = characteristic_points(surface)
    rows = []
    for cp in pts:
        row = {
            "point": list(cp.point),
            "rank": cp.rank,
            "rank_ambiguous": cp.rank_ambiguous,
            "downset": list(cp.downset),
        }
        if args.syzygies:
            row["syzygy"] = is_syzygy(surface, cp.point)
        rows.append(row)
    for row in rows:
        line = (
            f"{_point_str(row['point'])} rank {row['rank']}"
            f"{'?' if row['rank_ambiguous'] else ''} "
            f"D={{{','.join(map(str, row['downset']))}}}"
        )
        if args.syzygies:
            edges = syzygy_complex(surface, tuple(row["point"])).faces
            line += f" syzygy={'yes' if row['syzygy'] else 'no'}"
            line += f" complex-faces={len(edges)}"
        print(line)
    print(f"total: {len(rows)} characteristic points")
    if args.json:
        import json

        _write(args.json, json.dumps({"points": rows}, indent=2) + "\n")
    return 0


def cmd_cporder(args) -> int:
    surface = load_surface(args.surface)
    order = build_cporder(surface)
    graded = is_graded(order)
    by_rank: dict[int, int] = {}
    for cp in order.points:
        by_rank[cp.rank] = by_rank.get(cp.rank, 0) + 1
    counts = ", ".join(f"rank {r}: {by_rank[r]}" for r in sorted(by_rank))
    print(f"cp-order: {order.size} elements (with bounds); {counts}")
    print(f"graded: {'yes' if graded.holds else 'no'}")
    if args.dot:
        _write(args.dot, export_poset_dot(order))
    ok = True
    if args.lattice:
        res = is_lattice(order)
        if res.holds:
            print("lattice: yes")
        else:
            a, b = res.pair
            cands = ", ".join(order.label_of(x) for x in res.candidates)
            print(
                f"lattice: no ({res.kind} fails for {order.label_of(a)} and "
                f"{order.label_of(b)}: bounds {cands})"
            )
            ok = False
    if args.diamond:
        res = diamond_check(order)
        if res.holds:
            print("diamond property: yes")
        else:
            a, b = res.interval
            print(
                f"diamond property: no (interval {order.label_of(a)} .. "
                f"{order.label_of(b)} has {len(res.middles)} middle elements)"
            )
            ok = False
    return 0 if ok else 1


def cmd_schnyder_extract(args) -> int:
    surface = load_surface(args.surface)
    graph, wood = extract_wood(surface)
    print(f"suspensions: {wood.suspensions}")
    for v, nbrs in graph.rotations:
        print(f"rotation {v}: {list(nbrs)}")
    for tail, head, color in sorted(wood.arcs):
        print(f"arc {tail} -({color})-> {head}")
    return 0


def cmd_schnyder_embed(args) -> int:
    graph = load_triangulation(args.triangulation)
    wood = compute_wood(graph)
    embedding = region_vectors(graph, wood)
    sys.stdout.write(emit_surface(embedding.surface))
    return 0


def cmd_schnyder_dual(args) -> int:
    surface = load_surface(args.surface)
    sys.stdout.write(emit_surface(dual_surface(surface)))
    return 0


def cmd_realize_check(args) -> int:
    ball = load_ball(args.ball)
    res = nonrealizability_check(ball)
    if res.status == "refuted":
        print(f"refuted by the {res.criterion} criterion: witness {res.witness}")
        return 1
    print("open: no refutation criterion applies")
    return 0


def cmd_realize_search(args) -> int:
    ball = load_ball(args.ball)
    res = search_realization(ball, budget=args.budget, jobs=args.jobs)
    if res.status == "found":
        print(f"found after {res.tried} candidates")
        sys.stdout.write(emit_surface(res.surface))
        return 0
    if res.status == "exhausted":
        print(
            f"no generic realization exists: search exhausted all "
            f"{res.tried} candidates"
        )
        return 1
    print(f"inconclusive: budget of {res.tried} candidates exhausted")
    return 1


def _resolve_max(surface, text: str):
    if "," in text:
        return tuple(int(x) for x in text.split(","))
    maxima = maxima_of(surface)
    idx = int(text)
    if not 0 <= idx < len(maxima):
        raise GeometryError(
            f"maximum index {idx} out of range; the surface has "
            f"{len(maxima)} maxima"
        )
    return maxima[idx]


def cmd_construct(args) -> int:
    if args.what == "simplex":
        result = simplex_surface(args.d)
    elif args.what == "stack":
        surface = load_surface(args.surface)
        result = stack(surface, _resolve_max(surface, args.max))
    elif args.what == "prism":
        surface = load_surface(args.surface)
        result = prism(surface, _resolve_max(surface, args.max))
    elif args.what == "product":
        surface = load_surface(args.surface)
        result = path_product(surface, args.k)
    else:
        surface = load_surface(args.surface)
        result = pyramid(surface)
    sys.stdout.write(emit_surface(result))
    return 0


def cmd_render3d(args) -> int:
    surface = load_surface(args.surface)
    _write(args.svg, render3d_svg(surface))
    print(f"wrote {args.svg}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orthosurf",
        description="Exact orthogonal-surface toolkit: characteristic "
        "points, cp-orders, Schnyder woods, realizability.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="validate a surface or query a property")
    p.add_argument("surface")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--antichain", action="store_true")
    g.add_argument("--generic", action="store_true")
    g.add_argument("--suspended", action="store_true")
    g.add_argument("--degenerate", action="store_true")
    g.add_argument("--strong-degeneracy", dest="strong_degeneracy", action="store_true")
    g.add_argument("--rigid", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("cpoints", help="enumerate characteristic points")
    p.add_argument("surface")
    p.add_argument("--json", metavar="OUT")
    p.add_argument("--syzygies", action="store_true")
    p.set_defaults(func=cmd_cpoints)

    p = sub.add_parser("cporder", help="analyze the cp-order")
    p.add_argument("surface")
    p.add_argument("--dot", metavar="OUT")
    p.add_argument("--lattice", action="store_true")
    p.add_argument("--diamond", action="store_true")
    p.set_defaults(func=cmd_cporder)

    p = sub.add_parser("schnyder", help="Schnyder woods on 3D surfaces")
    ssub = p.add_subparsers(dest="action", required=True)
    q = ssub.add_parser("extract", help="wood of a rigid suspended 3D surface")
    q.add_argument("surface")
    q.set_defaults(func=cmd_schnyder_extract)
    q = ssub.add_parser("embed", help="surface from a suspended triangulation")
    q.add_argument("triangulation")
    q.set_defaults(func=cmd_schnyder_embed)
    q = ssub.add_parser("dual", help="dual surface (reflected maxima)")
    q.add_argument("surface")
    q.set_defaults(func=cmd_schnyder_dual)

    p = sub.add_parser("realize", help="realizability of simplicial balls")
    rsub = p.add_subparsers(dest="action", required=True)
    q = rsub.add_parser("check", help="run the refutation criteria")
    q.add_argument("ball")
    q.set_defaults(func=cmd_realize_check)
    q = rsub.add_parser("search", help="search coordinate orders for a realization")
    q.add_argument("ball")
    q.add_argument("--budget", type=int, default=10**6)
    q.add_argument("--jobs", type=int, default=1)
    q.set_defaults(func=cmd_realize_search)

    p = sub.add_parser("construct", help="realization-preserving constructions")
    csub = p.add_subparsers(dest="what", required=True)
    q = csub.add_parser("simplex")
    q.add_argument("d", type=int)
    q.set_defaults(func=cmd_construct)
    q = csub.add_parser("stack")
    q.add_argument("surface")
    q.add_argument("--max", required=True, help="maximum index or point a,b,c")
    q.set_defaults(func=cmd_construct)
    q = csub.add_parser("prism")
    q.add_argument("surface")
    q.add_argument("--max", required=True, help="maximum index or point a,b,c")
    q.set_defaults(func=cmd_construct)
    q = csub.add_parser("product")
    q.add_argument("surface")
    q.add_argument("-k", type=int, required=True)
    q.set_defaults(func=cmd_construct)
    q = csub.add_parser("pyramid")
    q.add_argument("surface")
    q.set_defaults(func=cmd_construct)

    p = sub.add_parser("render3d", help="project a 3D surface to SVG")
    p.add_argument("surface")
    p.add_argument("--svg", required=True, metavar="OUT")
    p.set_defaults(func=cmd_render3d)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DocumentError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except ConstructionVerificationError as exc:
        print(f"construction failed verification: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except (GeometryError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
