"""Command-line interface: every subcommand prints one JSON report on
standard output.

Exit codes: 0 when all checks/claims pass, 1 when a claim or check fails,
2 for usage or parse errors.  Reports are deterministic for fixed inputs
(timing is omitted unless --timing is given); --workers is accepted for
interface compatibility, execution is sequential and gives identical
output for any worker count.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Any

from .bounds import cl_min_growth, is_macaulay_lex, macaulay_min_growth
from .distraction import clements_lindstrom_extend, polarization_embedding, polarize, \
    stabilize, stabilize_truncated
from .errors import HilbembError, ParseError, PreconditionError
from .extension import ExtensionRing, extended_order, segment, strong_hyp_check
from .formats import (build_report, canonical_json, ideal_to_json, inputs_digest,
                      monomial_str, order_to_json, parse_exponent_bounds, parse_ideal,
                      parse_monomial, parse_order, parse_ring, parse_series,
                      pretty_json, ring_to_json)
from .orders import (GradedOrder, certify, embed, find_embedding_order,
                     find_embedding_orders, is_embedding_order, lattice_check)
from .registry import REGISTRY, run_example
from .rings import MonomialIdeal, grlex_key


_WARNINGS: list[str] = []


def _load(path: str) -> dict:
    try:
        with open(path) as handle:
            return json.load(handle)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}")
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}")


def _ring(args) -> tuple[Any, dict]:
    obj = _load(args.ring)
    ring = parse_ring(obj)
    for g in ring.dropped_generators:
        _WARNINGS.append(
            f"relation {monomial_str(g, ring.var_names)!r} is divisible by another "
            "relation and was dropped")
    return ring, obj


def _order(args, ring) -> tuple[Any, dict]:
    obj = _load(args.order)
    return parse_order(obj, ring), obj


def _parse_t(text: str) -> int | None:
    return None if text.strip().lower() in ("inf", "infinity", "*") else int(text)


def _forced_prefixes(specs, ring):
    forced = {}
    for spec_text in specs or []:
        degree_text, _, monos = spec_text.partition(":")
        if not monos:
            raise ParseError(f"bad --force-prefix value {spec_text!r}; expected 'd:m1,m2'")
        forced[int(degree_text)] = [parse_monomial(m, ring.var_names) for m in monos.split(",")]
    return forced


def cmd_find_order(args) -> tuple[dict, bool]:
    ring, obj = _ring(args)
    forced = _forced_prefixes(args.force_prefix, ring)
    if args.all is not None:
        orders = []
        for order in find_embedding_orders(ring, forced, budget=args.budget):
            orders.append(order_to_json(order)["degrees"])
            if len(orders) >= args.all:
                break
        results = {"orders": orders, "count": len(orders),
                   "exhaustive": ring.is_exact_at_cap}
        return build_report(args.argv, inputs_digest(obj), results), bool(orders)
    result = find_embedding_order(ring, forced, budget=args.budget)
    found = result.order is not None
    results = {
        "found": found,
        "order": order_to_json(result.order)["degrees"] if found else None,
        "none_is_proof": result.exhaustive if not found else None,
    }
    return build_report(args.argv, inputs_digest(obj), results), found


def cmd_check_order(args) -> tuple[dict, bool]:
    ring, robj = _ring(args)
    order, oobj = _order(args, ring)
    violation = is_embedding_order(order)
    results = {"embedding_order": violation is None}
    if violation is not None:
        results["violation"] = {"degree": violation.degree,
                                "prefix_size": violation.prefix_size,
                                "kind": violation.kind}
    return build_report(args.argv, inputs_digest(robj, oobj), results), violation is None


def cmd_lattice_check(args) -> tuple[dict, bool]:
    ring, obj = _ring(args)
    witness = lattice_check(ring, budget=args.budget)
    results = {"lattice": witness is None}
    if witness is not None:
        results["witness"] = {"first": list(witness.first), "second": list(witness.second),
                              "missing": witness.missing,
                              "missing_series": list(witness.missing_series)}
    return build_report(args.argv, inputs_digest(obj), results), witness is None


def cmd_embed(args) -> tuple[dict, bool]:
    ring, robj = _ring(args)
    order, oobj = _order(args, ring)
    series = parse_series(args.series)
    ideal = embed(order, series, budget=args.budget)
    results = {"series": list(series), "ideal": ideal_to_json(ideal)["gens"],
               "pieces": {str(d): [monomial_str(m, ring.var_names) for m in ideal.piece_sorted(d)]
                          for d in range(ring.cap + 1)}}
    return build_report(args.argv, inputs_digest(robj, oobj, list(series)), results), True


def cmd_macaulay_growth(args) -> tuple[dict, bool]:
    value = macaulay_min_growth(args.n, args.d, args.r)
    results = {"n": args.n, "d": args.d, "r": args.r, "growth": value}
    return build_report(args.argv, inputs_digest(results), results), True


def cmd_cl_growth(args) -> tuple[dict, bool]:
    bounds = parse_exponent_bounds(args.e)
    value = cl_min_growth(bounds, args.d, args.r)
    results = {"e": [b if b is not None else "inf" for b in bounds],
               "d": args.d, "r": args.r, "growth": value}
    return build_report(args.argv, inputs_digest(results), results), True


def cmd_macaulay_lex_check(args) -> tuple[dict, bool]:
    ring, obj = _ring(args)
    witness = is_macaulay_lex(ring, budget=args.budget)
    results = {"macaulay_lex": witness is None}
    if witness is not None:
        results["witness_series"] = list(witness)
    return build_report(args.argv, inputs_digest(obj), results), witness is None


def cmd_segment(args) -> tuple[dict, bool]:
    ring, robj = _ring(args)
    order, oobj = _order(args, ring)
    ext = ExtensionRing.create(order, _parse_t(args.t), args.cap)
    seq = segment(ext, args.degree, args.length)
    results = {
        "degree": args.degree, "length": args.length,
        "ranks": list(seq.ranks()), "level_sums": list(seq.level_sums()),
        "monomials": [monomial_str(m, ext.ring.var_names)
                      for m in sorted(seq.to_monomials(), key=grlex_key)],
    }
    return build_report(args.argv, inputs_digest(robj, oobj, args.t, args.degree, args.length),
                        results), True


def cmd_extend_order(args) -> tuple[dict, bool]:
    ring, robj = _ring(args)
    order, oobj = _order(args, ring)
    ext = ExtensionRing.create(order, _parse_t(args.t), args.cap)
    tau = extended_order(ext)
    violation = is_embedding_order(tau)
    results = {"ring": ring_to_json(ext.ring), "order": order_to_json(tau)["degrees"],
               "embedding_order": violation is None}
    if violation is not None:
        results["violation"] = {"degree": violation.degree,
                                "prefix_size": violation.prefix_size, "kind": violation.kind}
    return build_report(args.argv, inputs_digest(robj, oobj, args.t), results), violation is None


def cmd_strong_hyp(args) -> tuple[dict, bool]:
    ring, robj = _ring(args)
    order, oobj = _order(args, ring)
    ext = ExtensionRing.create(order, _parse_t(args.t), args.cap)
    ideal = parse_ideal(_load(args.ideal), ext.ring)
    violation = strong_hyp_check(ext, ideal)
    results = {"dominates": violation is None}
    if violation is not None:
        results["violation"] = {"level": violation[0], "degree": violation[1]}
    return build_report(args.argv, inputs_digest(robj, oobj, args.t), results), violation is None


def cmd_stabilize(args) -> tuple[dict, bool]:
    ring, robj = _ring(args)
    t = _parse_t(args.t) if args.t is not None else None
    ext = ExtensionRing.over_ring(ring, t, args.cap)
    iobj = _load(args.ideal)
    ideal = parse_ideal(iobj, ext.ring)
    out = stabilize(ext, ideal) if t is None else stabilize_truncated(ext, ideal)
    results = {"ring": ring_to_json(ext.ring), "ideal": ideal_to_json(out)["gens"],
               "series": list(out.hilbert_series())}
    return build_report(args.argv, inputs_digest(robj, iobj, args.t), results), True


def cmd_polarize(args) -> tuple[dict, bool]:
    ring, robj = _ring(args)
    from .extension import materialize_truncation
    flat = materialize_truncation(ring)
    pol = polarize(ring.var_names, flat.generators, args.y, args.d, ring.cap)
    results = {"vars": list(pol.bvars),
               "gens": [monomial_str(g, pol.bvars) for g in pol.bgens]}
    return build_report(args.argv, inputs_digest(robj, args.y, args.d), results), True


def cmd_polarize_embed(args) -> tuple[dict, bool]:
    ring, robj = _ring(args)
    order, oobj = _order(args, ring)
    out, pol = polarization_embedding(order, args.y, args.d)
    results = {"ring": ring_to_json(out.ring), "order": order_to_json(out)["degrees"]}
    return build_report(args.argv, inputs_digest(robj, oobj, args.y, args.d), results), True


def cmd_cl_extend(args) -> tuple[dict, bool]:
    ring, robj = _ring(args)
    order, oobj = _order(args, ring)
    result = clements_lindstrom_extend(order, _parse_t(args.t), args.cap,
                                       sample_ideals=args.samples)
    results = {"ring": ring_to_json(result.ext.ring),
               "order": order_to_json(result.order)["degrees"],
               "verified_cap": result.certificate.verified_cap}
    return build_report(args.argv, inputs_digest(robj, oobj, args.t), results), True


def cmd_paper_example(args) -> tuple[dict, bool]:
    payload = run_example(args.id)
    return build_report(args.argv, inputs_digest(args.id), payload), payload["status"] == "pass"


def cmd_list_examples(args) -> tuple[dict, bool]:
    results = {rid: REGISTRY[rid].description for rid in sorted(REGISTRY)}
    return build_report(args.argv, inputs_digest(None), results), True


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hilbemb", description=__doc__)
    parser.add_argument("--out", choices=("json", "pretty"), default="json")
    parser.add_argument("--budget", type=int, default=None,
                        help="node budget for exhaustive enumerations")
    parser.add_argument("--workers", type=int, default=1,
                        help="accepted for compatibility; execution is sequential")
    parser.add_argument("--timing", action="store_true", help="include wall time in the report")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, configure):
        p = sub.add_parser(name)
        configure(p)
        p.set_defaults(fn=fn)

    add("find-order", cmd_find_order, lambda p: (
        p.add_argument("--ring", required=True),
        p.add_argument("--force-prefix", action="append", metavar="d:mons"),
        p.add_argument("--all", type=int, default=None, metavar="N")))
    add("check-order", cmd_check_order, lambda p: (
        p.add_argument("--ring", required=True), p.add_argument("--order", required=True)))
    add("lattice-check", cmd_lattice_check, lambda p: p.add_argument("--ring", required=True))
    add("embed", cmd_embed, lambda p: (
        p.add_argument("--ring", required=True), p.add_argument("--order", required=True),
        p.add_argument("--series", required=True)))
    add("macaulay-growth", cmd_macaulay_growth, lambda p: (
        p.add_argument("n", type=int), p.add_argument("d", type=int),
        p.add_argument("r", type=int)))
    add("cl-growth", cmd_cl_growth, lambda p: (
        p.add_argument("--e", required=True), p.add_argument("d", type=int),
        p.add_argument("r", type=int)))
    add("macaulay-lex-check", cmd_macaulay_lex_check,
        lambda p: p.add_argument("--ring", required=True))
    add("segment", cmd_segment, lambda p: (
        p.add_argument("--ring", required=True), p.add_argument("--order", required=True),
        p.add_argument("--t", required=True), p.add_argument("--degree", type=int, required=True),
        p.add_argument("--length", type=int, required=True),
        p.add_argument("--cap", type=int, default=None)))
    add("extend-order", cmd_extend_order, lambda p: (
        p.add_argument("--ring", required=True), p.add_argument("--order", required=True),
        p.add_argument("--t", required=True), p.add_argument("--cap", type=int, default=None)))
    add("strong-hyp", cmd_strong_hyp, lambda p: (
        p.add_argument("--ring", required=True), p.add_argument("--order", required=True),
        p.add_argument("--t", required=True), p.add_argument("--ideal", required=True),
        p.add_argument("--cap", type=int, default=None)))
    add("stabilize", cmd_stabilize, lambda p: (
        p.add_argument("--ring", required=True), p.add_argument("--ideal", required=True),
        p.add_argument("--t", default=None), p.add_argument("--cap", type=int, default=None)))
    add("polarize", cmd_polarize, lambda p: (
        p.add_argument("--ring", required=True), p.add_argument("--y", required=True),
        p.add_argument("--d", type=int, required=True)))
    add("polarize-embed", cmd_polarize_embed, lambda p: (
        p.add_argument("--ring", required=True), p.add_argument("--order", required=True),
        p.add_argument("--y", required=True), p.add_argument("--d", type=int, required=True)))
    add("cl-extend", cmd_cl_extend, lambda p: (
        p.add_argument("--ring", required=True), p.add_argument("--order", required=True),
        p.add_argument("--t", required=True), p.add_argument("--cap", type=int, default=None),
        p.add_argument("--samples", type=int, default=0)))
    add("paper-example", cmd_paper_example, lambda p: p.add_argument("id"))
    add("list-examples", cmd_list_examples, lambda p: None)
    return parser


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    # echo only the logical command: tuning flags do not affect results
    echo, skip = [], False
    for token in argv:
        if skip:
            skip = False
            continue
        if token in ("--workers", "--out"):
            skip = True
            continue
        if token == "--timing":
            continue
        echo.append(token)
    args.argv = echo
    _WARNINGS.clear()
    started = time.monotonic()
    try:
        report, ok = args.fn(args)
    except (ParseError, PreconditionError, FileNotFoundError) as exc:
        report = build_report(args.argv, "sha256:-", {"error": str(exc)}, status="error")
        print(canonical_json(report) if args.out == "json" else pretty_json(report))
        return 2
    except HilbembError as exc:
        report = build_report(args.argv, "sha256:-",
                              {"error": type(exc).__name__, "message": str(exc)}, status="fail")
        print(canonical_json(report) if args.out == "json" else pretty_json(report))
        return 1
    report["status"] = "ok" if ok else "fail"
    if _WARNINGS:
        report["warnings"] = list(_WARNINGS)
    if args.timing:
        report["timing_ms"] = round((time.monotonic() - started) * 1000.0, 3)
    print(canonical_json(report) if args.out == "json" else pretty_json(report))
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
