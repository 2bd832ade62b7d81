#!/usr/bin/env python3
"""
Command-line interface for permstats.

Every verb prints a human-readable rendering, or the response envelope
with --json. Exit status is 0 on success, 1 when a verification report
fails, and the mapped error exit code otherwise.
"""

import argparse
import json
import sys
import uuid
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

from services import operations
from services.canonical import parse_word, word_to_perm
from services.perm_core import format_permutation, parse_permutation
from schemas.reports import VerifyReport
from schemas.requests import TableRequest, VerifyRequest
from utils.config import get_config
from utils.config_bootstrap import validate_config_on_startup
from utils.error_handler import format_cli_error
from utils.response_envelope import format_success_response
from utils.structured_logging import (
    bind_run_context,
    clear_run_context,
    get_structured_logger,
    setup_structured_logging,
)

logger = get_structured_logger(__name__)

EXIT_OK = 0
EXIT_REPORT_FAILED = 1


def _int_list(text: str) -> List[int]:
    """Comma- or space-separated integers; an empty string is the empty set"""
    tokens = text.replace(",", " ").split()
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected integers, got {text!r}")


def _perm_text(w: List[int]) -> str:
    return "[" + ",".join(map(str, w)) + "]"


def _set_text(values: List[int]) -> str:
    return "{" + ",".join(map(str, values)) + "}"


# Renderers for plain output

def _render_stats(data: Dict[str, Any]) -> str:
    s = data["s"]
    lines = [
        f"permutation  {_perm_text(data['images'])}",
        f"S: des={_set_text(s['des'])} maj={s['maj']} rmaj={s['rmaj']} ell={s['ell']} "
        f"del={_set_text(s['del_set'])} ltrm={_set_text(s['ltrm'])}",
    ]
    if data.get("a"):
        a = data["a"]
        lines.append(
            f"A: des={_set_text(a['des'])} maj={a['maj']} rmaj={a['rmaj']} ell={a['ell']} "
            f"del={_set_text(a['del_set'])} ltram={_set_text(a['ltram'])}"
        )
    if data.get("q"):
        q = data["q"]
        lines.append(
            f"q={q['q']}: ell_q={q['ell_q']} des_q={_set_text(q['des_q'])} rmaj_q={q['rmaj_q']} "
            f"del_q={_set_text(q['del_q_set'])} ltrm_q={_set_text(q['ltrm_q'])}"
        )
    return "\n".join(lines)


def _render_foata(data: Dict[str, Any]) -> str:
    lines = [" ".join(map(str, row)) for row in data.get("trace") or []]
    lines.append(_perm_text(data["output"]))
    return "\n".join(lines)


def _render_cover(data: Dict[str, Any]) -> str:
    return "\n".join([
        f"input   {_perm_text(data['images'])}  {data['presentation']['text']}",
        f"image   {_perm_text(data['output'])}  {data['image_presentation']['text']}",
    ])


def _render_psi(data: Dict[str, Any]) -> str:
    trace = data.get("trace")
    if not trace:
        return _perm_text(data["output"])
    return "\n".join([
        f"input                 {_perm_text(trace['input'])}",
        f"input presentation    {trace['input_presentation']['text']}",
        f"projected             {_perm_text(trace['f_image'])}",
        f"rtl_phi stage         {_perm_text(trace['rtl_phi_image'])}",
        f"stage presentation    {trace['s_presentation_of_image']['text']}",
        f"lifted presentation   {trace['lifted_presentation']['text']}",
        f"output                {_perm_text(trace['output'])}",
    ])


def _render_avoid(data: Dict[str, Any]) -> str:
    if data.get("avoiders") is not None:
        lines = [_perm_text(w) for w in data["avoiders"]]
        lines.append(f"count {data['count']}")
        return "\n".join(lines)
    if data["avoids"]:
        return f"avoids Pat({data['q']})"
    occ = data["occurrence"]
    return f"contains {occ['pattern']} at positions {_set_text(occ['positions'])}"


def _render_reports(reports: List[Dict[str, Any]]) -> str:
    lines = []
    for r in reports:
        line = f"{r['status'].upper():4}  {r['theorem']}  population={r['population']}  {r['elapsed_ms']:.1f} ms"
        lines.append(line)
        for note in r.get("notes") or []:
            lines.append(f"      note: {note}")
        if r.get("counterexample"):
            lines.append(f"      counterexample: {json.dumps(r['counterexample'], sort_keys=True)}")
    return "\n".join(lines)


# Verb handlers: each returns (payload, exit status)

def _cmd_parse(args) -> tuple:
    w = parse_permutation(args.perm)
    return {"images": list(w.images), "text": format_permutation(w, args.style)}, EXIT_OK


def _cmd_word(args) -> tuple:
    word = parse_word(args.word)
    w = word_to_perm(word, args.degree)
    return {"word": [str(g) for g in word], "images": list(w.images)}, EXIT_OK


def _cmd_canonical(args) -> tuple:
    result = operations.canonical_of(parse_permutation(args.perm), args.group)
    return result.model_dump(), EXIT_OK


def _cmd_stats(args) -> tuple:
    return operations.stats_of(parse_permutation(args.perm), args.q).model_dump(), EXIT_OK


def _foata_handler(operation: str) -> Callable:
    def handler(args) -> tuple:
        result = operations.foata(operation, parse_permutation(args.perm), args.trace)
        return result.model_dump(), EXIT_OK
    return handler


def _cmd_cover(args) -> tuple:
    q = None if args.a else args.q
    return operations.cover(parse_permutation(args.perm), q).model_dump(), EXIT_OK


def _cmd_psi(args) -> tuple:
    result = operations.extended_bijection(
        parse_permutation(args.perm), inverse=args.inverse, trace=args.trace
    )
    return result.model_dump(), EXIT_OK


def _cmd_psiq(args) -> tuple:
    result = operations.extended_bijection(
        parse_permutation(args.perm), q=args.q, inverse=args.inverse, trace=args.trace
    )
    return result.model_dump(), EXIT_OK


def _cmd_avoid(args) -> tuple:
    w = parse_permutation(args.perm) if args.perm else None
    result = operations.avoidance(args.q, w, args.enumerate)
    return result.model_dump(exclude_none=True), EXIT_OK


def _write_reports(reports: List[VerifyReport], run_id: str) -> None:
    report_dir = get_config().report_dir
    if report_dir is None:
        return
    report_dir = Path(report_dir)
    report_dir.mkdir(parents=True, exist_ok=True)
    for index, report in enumerate(reports):
        name = report.theorem.replace(":", "_")
        path = report_dir / f"{run_id}-{index:03d}-{name}.json"
        path.write_text(report.model_dump_json(indent=2))
    logger.info("Reports written", directory=str(report_dir), count=len(reports))


def _cmd_verify(args) -> tuple:
    request = VerifyRequest(
        theorem=args.theorem, n=args.n, q=args.q, q_cap=args.q_cap,
        d1=args.d1, d2=args.d2, regime=args.regime, b1=args.b1, b2=args.b2, b=args.b,
    )
    run_id = uuid.uuid4().hex[:12]
    bind_run_context(run_id, request.theorem)
    try:
        reports = operations.verify(request, slow=args.slow, workers=args.workers)
        _write_reports(reports, run_id)
    finally:
        clear_run_context()
    status = EXIT_OK if all(r.passed for r in reports) else EXIT_REPORT_FAILED
    return [r.model_dump(mode="json") for r in reports], status


def _cmd_table(args) -> tuple:
    request = TableRequest(
        group=args.group, statistic=args.stat, n=args.n, q=args.q, filter=args.filter,
        des=args.des, del_set=args.del_set,
    )
    table = operations.table(request, slow=args.slow, workers=args.workers)
    return table.model_dump(mode="json"), EXIT_OK


def _render_table(data: Dict[str, Any], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(data, sort_keys=True)
    lines = ["value,count"]
    lines += [f"{k},{v}" for k, v in sorted(data["coefficients"].items(), key=lambda kv: int(kv[0]))]
    return "\n".join(lines)


_RENDERERS: Dict[str, Callable[[Any], str]] = {
    "parse": lambda d: d["text"],
    "word": lambda d: _perm_text(d["images"]),
    "canonical": lambda d: d["text"],
    "stats": _render_stats,
    "phi": _render_foata,
    "phi-inverse": _render_foata,
    "rtl-phi": _render_foata,
    "rtl-phi-inverse": _render_foata,
    "cover": _render_cover,
    "psi": _render_psi,
    "psiq": _render_psi,
    "avoid": _render_avoid,
    "verify": _render_reports,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permstats",
        description="Permutation statistics, Foata-type bijections and exhaustive checks",
    )
    parser.add_argument("--json", action="store_true", help="Print the response envelope as JSON")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="Parse and reformat a permutation")
    p.add_argument("perm")
    p.add_argument("--style", choices=["brackets", "plain", "compact"], default="brackets")
    p.set_defaults(handler=_cmd_parse)

    p = sub.add_parser("word", help="Evaluate a generator word such as 's1 s2 a3^-1'")
    p.add_argument("word")
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(handler=_cmd_word)

    p = sub.add_parser("canonical", help="S- or A-canonical presentation")
    p.add_argument("perm")
    p.add_argument("--group", choices=["s", "a"], default="s")
    p.set_defaults(handler=_cmd_canonical)

    p = sub.add_parser("stats", help="Statistic records of a permutation")
    p.add_argument("perm")
    p.add_argument("--q", type=int, default=None)
    p.set_defaults(handler=_cmd_stats)

    for operation in operations.FOATA_OPERATIONS:
        p = sub.add_parser(operation, help=f"Apply {operation}")
        p.add_argument("perm")
        p.add_argument("--trace", action="store_true", help="Print the intermediate rows")
        p.set_defaults(handler=_foata_handler(operation))

    p = sub.add_parser("cover", help="Covering map f (--a) or f_q (--q Q)")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--a", action="store_true")
    mode.add_argument("--q", type=int)
    p.add_argument("perm")
    p.set_defaults(handler=_cmd_cover)

    p = sub.add_parser("psi", help="Extended bijection on A_{n+1}")
    p.add_argument("perm")
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--trace", action="store_true")
    p.set_defaults(handler=_cmd_psi)

    p = sub.add_parser("psiq", help="Extended bijection on S_{n+q-1}")
    p.add_argument("perm")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--trace", action="store_true")
    p.set_defaults(handler=_cmd_psiq)

    p = sub.add_parser("avoid", help="Pat(q) avoidance test or avoider listing")
    p.add_argument("perm", nargs="?")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--enumerate", type=int, metavar="M")
    p.set_defaults(handler=_cmd_avoid)

    p = sub.add_parser("verify", help="Run an exhaustive theorem check")
    p.add_argument("--theorem", required=True, choices=operations.THEOREMS)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, default=1)
    p.add_argument("--q-cap", type=int, default=3, dest="q_cap")
    p.add_argument("--d1", type=_int_list)
    p.add_argument("--d2", type=_int_list)
    p.add_argument("--regime", choices=["literal", "extended"])
    p.add_argument("--b1", type=_int_list)
    p.add_argument("--b2", type=_int_list)
    p.add_argument("--b", type=_int_list)
    p.add_argument("--slow", action="store_true", help="Raise the degree cap to the slow cap")
    p.add_argument("--workers", type=int, default=None)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("table", help="Distribution table of a statistic")
    p.add_argument("--group", choices=["s", "a", "q"], required=True)
    p.add_argument("--stat", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, default=1)
    p.add_argument("--filter", default="none")
    p.add_argument("--des", type=_int_list, help="Inverse descent set (subsets of it for --group a)")
    p.add_argument("--del", type=_int_list, dest="del_set",
                   help="Inverse delent set (subsets of it for --group a)")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--slow", action="store_true")
    p.add_argument("--workers", type=int, default=None)
    p.set_defaults(handler=_cmd_table)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)

    validate_config_on_startup()
    config = get_config()
    setup_structured_logging(config.log_level, config.log_format)

    try:
        payload, status = args.handler(args)
    except Exception as e:
        envelope, code = format_cli_error(e)
        if args.json:
            print(json.dumps(envelope, sort_keys=True))
        else:
            print(f"error [{envelope['error']['code']}]: {envelope['error']['message']}", file=sys.stderr)
        return code

    if args.json:
        meta = None
        if args.command == "verify":
            meta = {"all_passed": status == EXIT_OK, "reports": len(payload)}
        print(json.dumps(format_success_response(payload, meta), sort_keys=True))
    elif args.command == "table":
        print(_render_table(payload, args.format))
    else:
        print(_RENDERERS[args.command](payload))
    return status


if __name__ == "__main__":
    sys.exit(main())
