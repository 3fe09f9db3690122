"""Command-line front end.

Subcommands: field-info, opoly-check, construct, analyze, census, locality,
bounds, search, verify-paper.  Exit codes: 0 success/verified, 2 invalid
input, 3 verification mismatch, 4 budget exhausted.
"""

import argparse
import json
import sys

from .field import GF, make_field, field_from_order
from . import opoly, geometry, codes, construct, lrc, arcsearch
from .fixtures import ALL_GOLDEN

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_MISMATCH = 3
EXIT_BUDGET = 4


def _field_from_args(args) -> GF:
    modulus = None
    if getattr(args, "modulus", None):
        modulus = [int(c) for c in args.modulus.split(",")]
    if getattr(args, "q", None):
        if getattr(args, "p", None) or getattr(args, "m", None):
            raise ValueError("give either --q or --p/--m, not both")
        return field_from_order(args.q, modulus)
    if getattr(args, "p", None):
        return make_field(args.p, args.m or 1, modulus)
    raise ValueError("a field is required: --q Q or --p P --m M")


def _add_field_args(sub):
    sub.add_argument("--q", type=int, help="field order (prime power)")
    sub.add_argument("--p", type=int, help="characteristic")
    sub.add_argument("--m", type=int, help="extension degree")
    sub.add_argument("--modulus", help="modulus coefficients, low-to-high, e.g. 1,1,0,1")


def _add_output_args(sub):
    sub.add_argument("--format", choices=("table", "json"), default="table")
    sub.add_argument("--powers", action="store_true",
                     help="print field elements as powers of the generator")


def _emit(args, data: dict, table_lines):
    if args.format == "json":
        print(json.dumps(data, indent=2))
    else:
        for line in table_lines:
            print(line)


def cmd_field_info(args) -> int:
    F = _field_from_args(args)
    g = F.primitive_element()
    data = {
        "q": F.q,
        "descriptor": F.descriptor(),
        "generator": F.element_to_str(g, args.powers),
        "elements_powers": [F.element_to_str(x, args.powers) for x in F.elements("powers")],
    }
    _emit(args, data, [
        f"field {F.descriptor()} (q={F.q})",
        f"generator: {data['generator']}",
        "powers order: " + " ".join(data["elements_powers"]),
    ])
    return EXIT_OK


def cmd_opoly_check(args) -> int:
    F = _field_from_args(args)
    f = opoly.parse_opoly_descriptor(F, args.opoly)
    verdict = opoly.is_o_polynomial(f)
    two = opoly.is_two_to_one_with_linear(f)
    data = {
        "opoly": f.descriptor(args.powers),
        "degree": f.degree,
        "is_o_polynomial": verdict.ok,
        "failed_condition": verdict.condition,
        "witness": verdict.witness,
        "two_to_one_with_linear": two.ok,
    }
    status = "PASS" if verdict.ok else f"FAIL ({verdict.condition}, witness={verdict.witness})"
    _emit(args, data, [f"{f.descriptor(args.powers)} over q={F.q}: {status}"])
    return EXIT_OK if verdict.ok else EXIT_MISMATCH


def _matrix_lines(G: codes.GeneratorMatrix, powers: bool):
    return G.to_text(powers).rstrip("\n").splitlines()


def cmd_construct(args) -> int:
    F = _field_from_args(args)
    if args.even == args.odd:
        raise ValueError("exactly one of --even / --odd is required")
    if args.even:
        if F.p != 2:
            raise ValueError(f"--even needs characteristic 2, got q={F.q}")
        f = opoly.parse_opoly_descriptor(F, args.opoly)
        if args.v is not None:
            v = F.element_from_str(args.v)
        else:
            v = min(construct.valid_v_set(f))
        G = construct.build_even_matrix(f, v, order=args.order)
        closed = construct.even_closed_form(F.q)
        chosen = {"opoly": f.descriptor(args.powers), "v": F.element_to_str(v, args.powers)}
    else:
        if F.p == 2:
            raise ValueError(f"--odd needs odd characteristic, got q={F.q}")
        if args.w is not None:
            w = F.element_from_str(args.w)
        else:
            w = min(construct.valid_w_set(F))
        G = construct.build_odd_matrix(F, w, order=args.order)
        closed = construct.odd_closed_form(F.q)
        chosen = {"w": F.element_to_str(w, args.powers)}
    dist = codes.weight_distribution(G)
    profile = codes.classify(G, dist)
    match = dist == closed
    data = {
        **chosen,
        "matrix": _matrix_lines(G, args.powers),
        "profile": profile.to_dict(),
        "weight_distribution": dist.to_pairs(),
        "closed_form": closed.to_pairs(),
        "closed_form_match": match,
    }
    _emit(args, data, _matrix_lines(G, args.powers) + [
        f"[{profile.n},{profile.k},{profile.d}] {profile.category}",
        f"enumerated:  {dist.to_pairs()}",
        f"closed form: {closed.to_pairs()}",
        "MATCH" if match else "MISMATCH",
    ])
    if profile.category != "NMDS" or not match:
        return EXIT_MISMATCH
    return EXIT_OK


def _read_matrix(path: str) -> codes.GeneratorMatrix:
    with open(path) as fh:
        return codes.GeneratorMatrix.from_text(fh.read())


def cmd_analyze(args) -> int:
    G = _read_matrix(args.matrix)
    dist = codes.weight_distribution(G)
    profile = codes.classify(G, dist)
    data = {
        "profile": profile.to_dict(),
        "weight_distribution": dist.to_pairs(),
    }
    if G.k == 3:
        try:
            data["lrc"] = lrc.lrc_report(G, dist)
        except ValueError as exc:
            data["lrc"] = {"error": str(exc)}
    lines = [
        f"[{profile.n},{profile.k},{profile.d}] {profile.category} over q={G.field.q}",
        f"weights: {dist.to_pairs()}",
    ]
    if "lrc" in data and "error" not in data["lrc"]:
        rep = data["lrc"]
        lines.append(
            f"locality: ({rep['r_primal']}, {rep['r_dual']}); "
            f"d-optimal={rep['d_optimal']} k-optimal={rep['k_optimal']} "
            f"dual-d-optimal={rep['dual_d_optimal']} dual-k-optimal={rep['dual_k_optimal']}"
        )
    _emit(args, data, lines)
    return EXIT_OK


def cmd_census(args) -> int:
    kinds = [k for k in construct.CENSUS_KINDS
             if getattr(args, k.replace("-", "_"), False)]
    if len(kinds) != 1:
        raise ValueError("exactly one of --even-A1/--even-A2/--odd-B1/--odd-B2")
    kind = kinds[0]
    F = _field_from_args(args)
    f = v = w = None
    if kind.startswith("even"):
        f = opoly.parse_opoly_descriptor(F, args.opoly)
        v = F.element_from_str(args.v) if args.v is not None else min(construct.valid_v_set(f))
    else:
        w = F.element_from_str(args.w) if args.w is not None else min(construct.valid_w_set(F))
    result = construct.solution_count_census(kind, F, f=f, v=v, w=w)
    data = result.to_dict()
    data["two_solution_pairs"] = result.pairs_with(2)
    _emit(args, data, [
        f"census {kind} over q={F.q}: {dict(sorted(result.counts.items()))}",
        f"two-solution pairs: {result.pairs_with(2)}",
        f"diagonal zero: {result.diagonal_ok}",
    ])
    return EXIT_OK if result.diagonal_ok else EXIT_MISMATCH


def cmd_locality(args) -> int:
    G = _read_matrix(args.matrix)
    data = lrc.lrc_report(G)
    _emit(args, data, [json.dumps(data, indent=2)])
    return EXIT_OK


def cmd_bounds(args) -> int:
    verdict = lrc.bound_verdict(args.n, args.k, args.d, args.r, args.q)
    data = verdict.to_dict()
    _emit(args, data, [
        f"singleton-like bound: d <= {verdict.singleton_like_rhs} "
        f"({'met' if verdict.d_optimal else 'not met'} by d={args.d})",
        f"dimension bound: k <= {verdict.cm_rhs} "
        f"({'met' if verdict.k_optimal else 'not met'} by k={args.k})",
    ])
    return EXIT_OK


def _base_points(F: GF, descriptor: str):
    kind, _, rest = descriptor.partition(":")
    if kind == "hyperoval":
        f = opoly.parse_opoly_descriptor(F, rest or "translation:h=1")
        return geometry.hyperoval_from_opoly(f)
    if kind == "oval":
        return geometry.standard_oval(F)
    if kind == "points":
        return [geometry.point_from_str(F, tok) for tok in rest.split(";")]
    raise ValueError(f"unknown search base {descriptor!r} "
                     "(use hyperoval[:opoly], oval, or points:x:y:z;...)")


def cmd_search(args) -> int:
    F = _field_from_args(args)
    base = _base_points(F, args.base)
    pts, stats = arcsearch.extend_to_n3_arc(
        F, base,
        strategy=args.strategy,
        max_nodes=args.max_nodes,
        max_seconds=args.max_seconds,
        target_size=args.target,
        seed=args.seed,
        restarts=args.restarts,
        workers=args.threads,
    )
    data = stats.to_dict(F)
    G = codes.GeneratorMatrix.from_columns(F, pts)
    data["matrix"] = _matrix_lines(G, args.powers)
    _emit(args, data, [
        f"found ({stats.found_n},3)-arc in PG(2,{F.q}) "
        f"[nodes={stats.nodes} restarts={stats.restarts} elapsed={stats.elapsed_ms}ms]",
    ] + _matrix_lines(G, args.powers))
    if args.target is not None and stats.found_n < args.target:
        return EXIT_BUDGET
    return EXIT_OK


def cmd_verify_paper(args) -> int:
    failures = 0

    def report(name: str, ok: bool):
        nonlocal failures
        print(f"{'PASS' if ok else 'FAIL'}  {name}")
        if not ok:
            failures += 1

    for golden in ALL_GOLDEN:
        F = golden.field()
        expected = golden.matrix()
        if golden.kind == "even":
            f = opoly.parse_opoly_descriptor(F, golden.opoly)
            built = construct.build_even_matrix(f, F.element_from_str(golden.v_or_w))
            closed = construct.even_closed_form(F.q)
        else:
            built = construct.build_odd_matrix(F, F.element_from_str(golden.v_or_w))
            closed = construct.odd_closed_form(F.q)
        report(f"{golden.name}: matrix reproduced", built == expected)
        dist = codes.weight_distribution(built)
        report(f"{golden.name}: weight distribution", dist == golden.weight_distribution())
        report(f"{golden.name}: closed form", dist == closed)
        report(f"{golden.name}: NMDS", codes.classify(built, dist).category == "NMDS")
    conclusion = arcsearch.verify_conclusion_matrix()
    report("length-15 fixture over q=8: [15,3,12] NMDS (15,3)-arc", conclusion.ok())
    return EXIT_OK if failures == 0 else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arccodes",
        description="Near-MDS codes of dimension 3 from maximal arcs in PG(2,q)",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("field-info", help="describe a finite field")
    _add_field_args(sub)
    _add_output_args(sub)
    sub.set_defaults(func=cmd_field_info)

    sub = subs.add_parser("opoly-check", help="validate an o-polynomial descriptor")
    _add_field_args(sub)
    _add_output_args(sub)
    sub.add_argument("--opoly", required=True, help="e.g. translation:h=1, segre, custom:coeffs=0,0,1")
    sub.set_defaults(func=cmd_opoly_check)

    sub = subs.add_parser("construct", help="build a [q+5,3,q+2] code and verify it")
    _add_field_args(sub)
    _add_output_args(sub)
    sub.add_argument("--even", action="store_true", help="hyperoval construction (q = 2^m)")
    sub.add_argument("--odd", action="store_true", help="oval construction (odd q)")
    sub.add_argument("--opoly", default="translation:h=1")
    sub.add_argument("--v", help="admissible v (even); defaults to the least")
    sub.add_argument("--w", help="admissible w (odd); defaults to the least")
    sub.add_argument("--order", choices=("powers", "canonical"), default="powers")
    sub.set_defaults(func=cmd_construct)

    sub = subs.add_parser("analyze", help="profile + weights + locality of a matrix file")
    _add_output_args(sub)
    sub.add_argument("matrix", help="matrix text file")
    sub.set_defaults(func=cmd_analyze)

    sub = subs.add_parser("census", help="root counts of the construction line equations")
    _add_field_args(sub)
    _add_output_args(sub)
    for kind in construct.CENSUS_KINDS:
        sub.add_argument(f"--{kind}", dest=kind.replace("-", "_"), action="store_true")
    sub.add_argument("--opoly", default="translation:h=1")
    sub.add_argument("--v")
    sub.add_argument("--w")
    sub.set_defaults(func=cmd_census)

    sub = subs.add_parser("locality", help="locality report of a matrix file")
    _add_output_args(sub)
    sub.add_argument("matrix")
    sub.set_defaults(func=cmd_locality)

    sub = subs.add_parser("bounds", help="locality bound verdicts for given parameters")
    _add_output_args(sub)
    for name in ("n", "k", "d", "r", "q"):
        sub.add_argument(f"--{name}", type=int, required=True)
    sub.set_defaults(func=cmd_bounds)

    sub = subs.add_parser("search", help="extend an arc to a larger (n,3)-arc")
    _add_field_args(sub)
    _add_output_args(sub)
    sub.add_argument("--base", default="hyperoval:translation:h=1",
                     help="hyperoval[:opoly-descriptor], oval, or points:x:y:z;...")
    sub.add_argument("--strategy", choices=("dfs", "greedy-restart"), default="dfs")
    sub.add_argument("--max-nodes", type=int)
    sub.add_argument("--max-seconds", type=float, default=60.0,
                     help="time budget (default 60; the best arc so far survives)")
    sub.add_argument("--target", type=int)
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--restarts", type=int, default=64)
    sub.add_argument("--threads", type=int, default=1)
    sub.set_defaults(func=cmd_search)

    sub = subs.add_parser("verify-paper", help="run all built-in golden fixtures")
    _add_output_args(sub)
    sub.set_defaults(func=cmd_verify_paper)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except codes.BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, ZeroDivisionError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
