"""
Command-line front end.

    schubert-bd constant --type B --rank 4 --u=-2,-3,-4,1 --v 2,3,4,1 --word 2,1,3,2,4,3,4 --oracle
    schubert-bd table 1 --check
    schubert-bd verify --type D --rank 4 --max-degree 8
    schubert-bd clans --type B --rank 3
    schubert-bd graph --type D --rank 4 --level L --format dot

Exit status: 0 on success, 1 on a mismatch (verify, table --check),
2 on invalid input, 3 when verify stopped early at its time limit.
Every JSON-lines record has the keys ``type``, ``rank``, ``inputs``, ``result``.
"""

from __future__ import annotations

import argparse
import difflib
import json
import sys
import time
import warnings

from .action import Rule
from .clans import classify_symmetric, enumerate_symmetric_clans, is_disconnected
from .errors import NegativeVNotSupported, SchubertBDError
from .oracle import get_oracle
from .orbits import l_orbit_graph, k_orbit_graph
from .richardson import (
    LengthMismatchWarning,
    evaluate_constant,
    expand_richardson_class,
    expansion_degree,
    valid_pairs,
)
from .tables import TABLES, golden_table, render_table, render_table_json
from .weyl import (
    check_reduced_word,
    format_signed_perm,
    longest_element,
    multiply,
    parse_signed_perm,
    reduced_word,
)

EXIT_MISMATCH = 1
EXIT_INVALID = 2
EXIT_PARTIAL = 3


def _emit(record: dict, out) -> None:
    out.write(json.dumps(record, ensure_ascii=False) + "\n")


def _word(text: str) -> tuple[int, ...]:
    return tuple(int(tok) for tok in text.replace(" ", "").strip("[]").split(",") if tok)


def cmd_constant(args, out) -> int:
    u = parse_signed_perm(args.u, args.type, args.rank)
    v = parse_signed_perm(args.v, args.type, args.rank)
    w = parse_signed_perm(args.w, args.type, args.rank) if args.w else None
    word = _word(args.word) if args.word else None
    if word is not None:
        check_reduced_word(word, args.rank, args.type)
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", LengthMismatchWarning)
            res = evaluate_constant(u, v, w=w, word=word)
    except NegativeVNotSupported as exc:
        w0 = longest_element(args.rank, args.type)
        print(f"error: {exc}", file=sys.stderr)
        print(f"hint: the same product is S_{{w0 u}} S_v = S_{{w0 u'}} S_{{v'}} for the dual pair "
              f"u' = {format_signed_perm(multiply(w0, v))}, v' = {format_signed_perm(multiply(w0, u))}; "
              f"this reduction is not part of the rule", file=sys.stderr)
        return EXIT_INVALID
    for warning in caught:
        print(f"warning: {warning.message}", file=sys.stderr)
    w_elem = check_reduced_word(res.word, args.rank, args.type)
    result = {"constant": res.value, "clan": str(res.clan),
              "length_mismatch": res.length_mismatch,
              "trace": [s.as_dict() for s in res.outcome.trace] if res.outcome else [],
              "rule7_fired": bool(res.outcome and res.outcome.rule7_fired)}
    if args.oracle:
        w0 = longest_element(args.rank, args.type)
        if res.length_mismatch:
            oracle = 0
        else:
            oracle = get_oracle(args.rank, args.type).constant(multiply(w0, u), v, w_elem)
        result["oracle"] = oracle
        result["verdict"] = "AGREE" if oracle == res.value else "DISAGREE"
    inputs = {"u": args.u, "v": args.v, "w": format_signed_perm(w_elem), "word": list(res.word)}
    if args.format == "json":
        _emit({"type": args.type, "rank": args.rank, "inputs": inputs, "result": result}, out)
        return 0
    out.write(f"{args.type}{args.rank}  u = {args.u}  v = {args.v}  w = {inputs['w']}  "
              f"word = {list(res.word)}\n")
    out.write(f"gamma(u,v) acted on by w: {res.clan}\n")
    for step in result["trace"]:
        rule = "-" if step["rule"] == Rule.FIXED.value else step["rule"]
        out.write(f"  s_{step['letter']}  {rule:>5}  {step['clan']}\n")
    out.write(f"constant: {res.value}\n")
    if args.oracle:
        out.write(f"oracle:   {result['oracle']}  {result['verdict']}\n")
    return 0


def cmd_table(args, out) -> int:
    if args.format == "json":
        out.write(render_table_json(args.number))
        return 0
    text = render_table(args.number)
    if not args.check:
        out.write(text)
        return 0
    golden = golden_table(args.number)
    if text == golden:
        out.write(f"table {args.number}: {len(TABLES[args.number].words)} rows match the golden copy\n")
        return 0
    diff = difflib.unified_diff(golden.splitlines(True), text.splitlines(True),
                                "golden", "generated")
    out.writelines(diff)
    return EXIT_MISMATCH


def cmd_verify(args, out) -> int:
    w0 = longest_element(args.rank, args.type)
    oracle = get_oracle(args.rank, args.type)
    pairs = valid_pairs(args.rank, args.type)
    selected = [(u, v) for u, v in pairs
                if args.max_degree is None or expansion_degree(u, v) <= args.max_degree]
    start = time.monotonic()
    checked = constants = 0
    mismatches = []
    for u, v in selected:
        if args.time_limit is not None and time.monotonic() - start > args.time_limit:
            break
        conj = expand_richardson_class(u, v)
        truth = oracle.expansion(multiply(w0, u), v)
        for row in conj.rows:
            constants += 1
            if truth[row.w] != row.coefficient:
                mismatches.append({"u": format_signed_perm(u), "v": format_signed_perm(v),
                                   "w": format_signed_perm(row.w), "word": list(row.word),
                                   "clan": str(row.clan), "conjecture": row.coefficient,
                                   "oracle": truth[row.w]})
        checked += 1
    complete = checked == len(selected)
    summary = {"pairs_total": len(pairs), "pairs_selected": len(selected),
               "pairs_checked": checked, "constants_checked": constants,
               "mismatches": len(mismatches), "complete": complete,
               "max_degree": args.max_degree}
    if args.format == "json":
        for m in mismatches:
            _emit({"type": args.type, "rank": args.rank, "inputs": {"u": m["u"], "v": m["v"], "w": m["w"]},
                   "result": m}, out)
        _emit({"type": args.type, "rank": args.rank,
               "inputs": {"max_degree": args.max_degree}, "result": summary}, out)
    else:
        for m in mismatches:
            out.write(f"MISMATCH u={m['u']} v={m['v']} w={m['w']} word={m['word']} "
                      f"conjecture={m['conjecture']} oracle={m['oracle']}\n")
        bound = "" if args.max_degree is None else f", degree <= {args.max_degree}"
        out.write(f"{args.type}{args.rank}{bound}: {checked}/{len(selected)} pairs checked "
                  f"({len(pairs)} valid v-positive pairs in total), "
                  f"{constants} constants, {len(mismatches)} mismatches\n")
        if not complete:
            out.write(f"PARTIAL: time limit reached; {len(selected) - checked} pairs not checked\n")
    if mismatches:
        return EXIT_MISMATCH
    return 0 if complete else EXIT_PARTIAL


def cmd_clans(args, out) -> int:
    for clan in enumerate_symmetric_clans(args.rank, args.type):
        cls = classify_symmetric(clan)
        pattern = "".join(map(str, cls.pattern)) if cls.pattern else "-"
        if args.format == "json":
            _emit({"type": args.type, "rank": args.rank, "inputs": {"clan": str(clan)},
                   "result": {"kind": cls.kind.value, "pattern": pattern,
                              "disconnected": is_disconnected(clan)}}, out)
        else:
            out.write(f"{clan}\t{cls.kind.value}\t{pattern}\t"
                      f"{'disconnected' if is_disconnected(clan) else 'connected'}\n")
    return 0


def cmd_graph(args, out) -> int:
    graph = (k_orbit_graph if args.level == "K" else l_orbit_graph)(args.rank, args.type)
    if args.format == "dot":
        out.write(graph.to_dot())
        return 0
    for rec in graph.to_records():
        kind = rec.pop("kind")
        _emit({"type": rec.pop("type"), "rank": rec.pop("rank"),
               "inputs": {"level": rec.pop("level"), "kind": kind}, "result": rec}, out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="schubert-bd", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def group(p, fmt_choices=("table", "json"), default="table"):
        p.add_argument("--type", required=True, type=str.upper, choices=["B", "D"])
        p.add_argument("--rank", required=True, type=int)
        p.add_argument("--format", choices=fmt_choices, default=default)

    p = sub.add_parser("constant", help="conjectural constant c_{w0 u, v}^w")
    group(p)
    p.add_argument("--u", required=True, help="max coset rep, e.g. -2,-3,-4,1")
    p.add_argument("--v", required=True, help="min coset rep, e.g. 2,3,4,1")
    wgroup = p.add_mutually_exclusive_group(required=True)
    wgroup.add_argument("--w", help="w in one-line notation")
    wgroup.add_argument("--word", help="w as a reduced word, e.g. 2,1,3,2,4,3,4")
    p.add_argument("--oracle", action="store_true", help="also compute the true constant")
    p.set_defaults(func=cmd_constant)

    p = sub.add_parser("table", help="regenerate a worked table")
    p.add_argument("number", type=int, choices=sorted(TABLES))
    p.add_argument("--check", action="store_true", help="diff against the golden copy")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="compare the rule with the oracle on every valid pair")
    group(p)
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--time-limit", type=float, default=None, help="seconds")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("clans", help="list symmetric clans")
    group(p)
    p.set_defaults(func=cmd_clans)

    p = sub.add_parser("graph", help="export the K- or L-orbit weak order graph")
    group(p, ("dot", "json"), "dot")
    p.add_argument("--level", choices=("K", "L"), default="K")
    p.set_defaults(func=cmd_graph)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else 0
    try:
        return args.func(args, out)
    except (SchubertBDError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
