"""Command-line front end with machine-readable output.

Exit codes: 0 success, 2 invalid input, 3 simplicity regression,
4 enumeration budget exceeded.
"""
from __future__ import annotations

import argparse
import itertools
import json
import sys

from . import quiver as quiver_mod
from .errors import BudgetExceeded, FlagQuiverError
from .parabolic import build_parabolic
from .rootsys import build_root_system
from .schubert import DEFAULT_BUDGET, intersection_number
from .stability import (
    STABLE,
    boundary_2d,
    cone_membership,
    is_sigma_semistable,
    sigma_from_polarization,
    stability_cone,
)
from .tangentrep import VERDICT_SIMPLE, simplicity_report, tangent_rep

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_NOT_SIMPLE = 3
EXIT_BUDGET = 4

ALL_PARABOLICS_MAX_RANK = 6


def _weight_json(w):
    return {"weight2": list(w.coords2), "fundamental": list(w.fundamental)}


def _dumps(data):
    return json.dumps(data, indent=2) + "\n"


def _parse_parabolic(text, system, allow_all=False):
    text = text.strip().lower()
    if text == "borel":
        return [tuple(range(1, system.rank + 1))]
    if text == "all":
        if not allow_all:
            raise ValueError("'all' is only supported by the simplicity command")
        if system.rank > ALL_PARABOLICS_MAX_RANK:
            raise ValueError(
                f"'all' is capped at rank {ALL_PARABOLICS_MAX_RANK}"
            )
        out = []
        for size in range(1, system.rank + 1):
            out.extend(itertools.combinations(range(1, system.rank + 1), size))
        return out
    return [tuple(int(tok) for tok in text.split(","))]


def _emit(args, text):
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_roots(args):
    system = build_root_system(args.series, args.rank)
    if args.output == "json":
        data = {
            "series": system.series,
            "rank": system.rank,
            "ambient_dim": system.ambient_dim,
            "simple_roots": [_weight_json(w) for w in system.simple_roots],
            "positive_roots": [_weight_json(w) for w in system.positive_roots],
            "cartan_matrix": [list(row) for row in system.cartan_matrix],
        }
        _emit(args, _dumps(data))
    elif args.output == "csv":
        lines = ["kind," + ",".join(f"c{i+1}" for i in range(system.ambient_dim))]
        for w in system.simple_roots:
            lines.append("simple," + ",".join(str(c) for c in w.coords2))
        for w in system.positive_roots:
            lines.append("positive," + ",".join(str(c) for c in w.coords2))
        _emit(args, "\n".join(lines) + "\n")
    elif args.output == "text":
        lines = [f"{system.series}{system.rank}: {len(system.positive_roots)} positive roots"]
        for w in system.positive_roots:
            lines.append(f"  {w.coords2} fundamental={w.fundamental}")
        lines.append("cartan matrix:")
        for row in system.cartan_matrix:
            lines.append("  " + " ".join(f"{x:3d}" for x in row))
        _emit(args, "\n".join(lines) + "\n")
    else:
        raise ValueError(f"roots does not support output={args.output}")
    return EXIT_OK


def cmd_simplicity(args):
    system = build_root_system(args.series, args.rank)
    sigmas = _parse_parabolic(args.parabolic, system, allow_all=True)
    rows = []
    worst = EXIT_OK
    for sigma in sigmas:
        p = build_parabolic(system, sigma)
        report = simplicity_report(p)
        rows.append(
            {
                "sigma": list(sigma),
                "multiplicity_free": report.multiplicity_free,
                "connected_components": report.connected_components,
                "hom_dimension": report.hom_dimension,
                "dominant_sums": sorted(
                    list(w.coords2) for w in report.dominant_sums
                ),
                "verdict": report.verdict,
            }
        )
        if report.verdict != VERDICT_SIMPLE:
            worst = EXIT_NOT_SIMPLE
    if args.output == "json":
        _emit(args, _dumps(rows))
    else:
        lines = [
            f"sigma={','.join(str(i) for i in row['sigma'])}: {row['verdict']}"
            f" (hom_dimension={row['hom_dimension']})"
            for row in rows
        ]
        _emit(args, "\n".join(lines) + "\n")
    return worst


def _tangent_quiver(args, p):
    trep = tangent_rep(p)
    if args.level == "levi":
        return trep.levi_rep
    if args.mode == quiver_mod.REDUCED:
        keep = [
            k
            for k, a in enumerate(trep.rep.quiver.arrows)
            if p.system.height(a.label) == 1
        ]
        q = trep.rep.quiver
        reduced = quiver_mod.InducedQuiver(
            q.vertices,
            [q.arrows[k] for k in keep],
            quiver_mod.REDUCED,
            q.parabolic,
        )
        maps = {}
        for new_k, old_k in enumerate(keep):
            if old_k in trep.rep.maps:
                maps[new_k] = trep.rep.maps[old_k]
        return quiver_mod.QuiverRep(reduced, trep.rep.dims, maps)
    return trep.rep


def cmd_quiver(args):
    system = build_root_system(args.series, args.rank)
    (sigma,) = _parse_parabolic(args.parabolic, system)
    p = build_parabolic(system, sigma)
    rep = _tangent_quiver(args, p)
    q = rep.quiver
    if args.output == "dot":
        _emit(args, quiver_mod.to_dot(q))
    elif args.output == "json":
        data = {
            "vertices": [
                dict(_weight_json(w), dim=rep.dims[i])
                for i, w in enumerate(q.vertices)
            ],
            "arrows": [
                {
                    "src": a.src,
                    "dst": a.dst,
                    "label2": list(a.label.coords2),
                    "scalar": rep.maps[k][0][0] if k in rep.maps else 0,
                }
                for k, a in enumerate(q.arrows)
            ],
        }
        _emit(args, _dumps(data))
    elif args.output == "text":
        lines = [f"{len(q.vertices)} vertices, {len(q.arrows)} arrows"]
        for a in q.arrows:
            lines.append(f"  {q.vertices[a.src].coords2} -> {q.vertices[a.dst].coords2}")
        _emit(args, "\n".join(lines) + "\n")
    else:
        raise ValueError(f"quiver does not support output={args.output}")
    return EXIT_OK


def cmd_intersections(args):
    system = build_root_system(args.series, args.rank)
    (sigma,) = _parse_parabolic(args.parabolic, system)
    p = build_parabolic(system, sigma)
    rows = []
    for exps in _all_exponents(p.dim, len(sigma)):
        value = intersection_number(p, exps, args.budget)
        if value:
            rows.append((exps, value))
    if args.output == "json":
        data = [{"exps": list(e), "value": v} for e, v in rows]
        _emit(args, _dumps(data))
    else:
        header = ",".join(f"e{i}" for i in sigma) + ",value"
        lines = [header] + [
            ",".join(str(x) for x in e) + f",{v}" for e, v in rows
        ]
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def _all_exponents(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _all_exponents(total - first, parts - 1):
            yield (first,) + rest


def _inequality_json(ineq):
    return {
        "subbundle": list(ineq.subbundle),
        "monomials": [
            {"exps": list(e), "coeff": c}
            for e, c in ineq.polynomial.sorted_items()
        ],
        "strict": ineq.strict,
    }


def _fixed_sum_tuples(total, parts):
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _fixed_sum_tuples(total - first, parts - 1):
            yield (first,) + rest


def cmd_cone(args):
    system = build_root_system(args.series, args.rank)
    (sigma,) = _parse_parabolic(args.parabolic, system)
    p = build_parabolic(system, sigma)
    inequalities = stability_cone(p, args.budget)
    if args.grid:
        lines = [",".join(f"a{i}" for i in sigma) + ",verdict"]
        for h in itertools.product(range(1, args.grid + 1), repeat=len(sigma)):
            lines.append(
                ",".join(str(x) for x in h)
                + ","
                + cone_membership(inequalities, h)
            )
        _emit(args, "\n".join(lines) + "\n")
        return EXIT_OK
    if args.section:
        # raster of the cross-section cut by the plane sum(a_i) = N; the
        # inequalities are homogeneous, so fixed-sum integer points sample
        # the projective picture exactly
        lines = [",".join(f"a{i}" for i in sigma) + ",verdict"]
        for h in _fixed_sum_tuples(args.section, len(sigma)):
            lines.append(
                ",".join(str(x) for x in h)
                + ","
                + cone_membership(inequalities, h)
            )
        _emit(args, "\n".join(lines) + "\n")
        return EXIT_OK
    data = {"inequalities": [_inequality_json(iq) for iq in inequalities]}
    if args.boundary:
        bounds = boundary_2d(inequalities)
        data["boundary"] = {
            "lower": _surd_json(bounds.lower),
            "upper": _surd_json(bounds.upper),
            "rational_endpoint": bounds.has_rational_endpoint,
        }
    _emit(args, _dumps(data))
    return EXIT_OK


def _surd_json(surd):
    return {
        "p": surd.p,
        "q": surd.q,
        "r": surd.r,
        "s": surd.s,
        "approx": float(surd),
    }


def cmd_king(args):
    system = build_root_system(args.series, args.rank)
    (sigma,) = _parse_parabolic(args.parabolic, system)
    p = build_parabolic(system, sigma)
    h = tuple(int(tok) for tok in args.polarization.split(","))
    if len(h) != len(sigma):
        raise ValueError("polarization arity must match the number of marked roots")
    trep = tangent_rep(p)
    character = sigma_from_polarization(trep.levi_rep, p, h, args.budget)
    verdict = is_sigma_semistable(trep.levi_rep, character)
    data = {
        "polarization": list(h),
        "sigma_character": list(character.values),
        "semistable": verdict.semistable,
        "stable": verdict.stable,
        "witness": list(verdict.witness) if verdict.witness is not None else None,
        "cone_verdict": cone_membership(stability_cone(p, args.budget), h),
    }
    if args.output == "text":
        state = (
            "stable"
            if verdict.stable
            else "semistable" if verdict.semistable else "UNSTABLE"
        )
        _emit(args, f"{state} witness={data['witness']}\n")
    else:
        _emit(args, _dumps(data))
    return EXIT_OK


def _add_common(sub, default_output):
    sub.add_argument("--series", required=True, help="A, D or E")
    sub.add_argument("--rank", required=True, type=int)
    sub.add_argument("--output", default=default_output,
                     choices=["json", "csv", "dot", "text"])
    sub.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    sub.add_argument("--out", default=None, help="write to a file instead of stdout")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="flagquiver",
        description="Quiver representations and stability cones on ADE flag varieties",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("roots", help="root system data")
    _add_common(sub, "json")
    sub.set_defaults(func=cmd_roots)

    sub = subs.add_parser("simplicity", help="simplicity certificate for tangent bundles")
    _add_common(sub, "text")
    sub.add_argument("--parabolic", required=True,
                     help="comma-separated indices, 'borel', or 'all'")
    sub.set_defaults(func=cmd_simplicity)

    sub = subs.add_parser("quiver", help="tangent quiver export")
    _add_common(sub, "dot")
    sub.add_argument("--parabolic", required=True)
    sub.add_argument("--mode", default=quiver_mod.FULL,
                     choices=[quiver_mod.FULL, quiver_mod.REDUCED])
    sub.add_argument("--level", default="borel", choices=["borel", "levi"])
    sub.set_defaults(func=cmd_quiver)

    sub = subs.add_parser("intersections", help="nonzero divisor intersection numbers")
    _add_common(sub, "csv")
    sub.add_argument("--parabolic", required=True)
    sub.set_defaults(func=cmd_intersections)

    sub = subs.add_parser("cone", help="stability cone of polarizations")
    _add_common(sub, "json")
    sub.add_argument("--parabolic", required=True)
    sub.add_argument("--boundary", action="store_true",
                     help="include the closed-form 2-parameter boundary")
    sub.add_argument("--grid", type=int, default=0,
                     help="emit a CSV of verdicts over {1..N}^k")
    sub.add_argument("--section", type=int, default=0,
                     help="emit a CSV of verdicts on the slice sum(a_i) = N")
    sub.set_defaults(func=cmd_cone)

    sub = subs.add_parser("king", help="character (semi)stability verdict")
    _add_common(sub, "json")
    sub.add_argument("--parabolic", required=True)
    sub.add_argument("--polarization", required=True)
    sub.set_defaults(func=cmd_king)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (FlagQuiverError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


def entry():
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
