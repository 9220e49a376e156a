"""Command-line surface: analysis, censuses, symmetry tools, verification, game solving.

Exit codes: 0 success, 1 check failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .game import (
    GameState,
    autoplay,
    best_moves,
    children,
    grundy,
    winner,
    winning_conditions_report,
)
from .perm import (
    apply_cds,
    fixed_point_index,
    format_permutation,
    parse_permutation,
    pointer_word,
    valid_contexts,
)
from .pile import contract, duration, has_max_pile, strategic_pile, uncontract
from .symmetry import (
    PeriodicTriple,
    build_periodic_permutation,
    coprime_pair_count,
    count_periodic_max_pile,
    difference_sequence,
    orbit_size,
    recover_periodic_triple,
    stabilizer,
)
from .taxonomy import census, classify, context_count, universal_pointers
from .verify import SUITES, run_suite
from .perm import adjacencies


def _perm_arg(text: str):
    try:
        return parse_permutation(text)
    except ValueError as exc:
        raise SystemExit(f"error: {exc}") from exc


def _targets_arg(text: str | None) -> frozenset[int]:
    if not text:
        return frozenset()
    try:
        return frozenset(int(x) for x in text.replace(",", " ").split())
    except ValueError as exc:
        raise SystemExit(f"error: bad target list {text!r}") from exc


def _emit(payload: dict, as_json: bool, lines: list[str]) -> None:
    if as_json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print("\n".join(lines))


def cmd_analyze(args: argparse.Namespace) -> int:
    perm = _perm_arg(args.perm)
    m = len(perm)
    word = pointer_word(perm)
    contexts = valid_contexts(perm)
    pile = strategic_pile(perm)
    fixed = fixed_point_index(perm)
    maxpile = has_max_pile(perm)
    payload: dict = {
        "permutation": list(perm),
        "pointer_word": [{"p": p, "cyclic": False} for p in word.symbols],
        "adjacencies": sorted(adjacencies(perm)),
        "valid_contexts": [{"p": p, "q": q} for p, q in contexts],
        "context_count": len(contexts),
        "strategic_pile": pile.to_json(),
        "sortable": not pile.elements,
        "max_pile": maxpile,
        "fixed_point": None if fixed is None else ("identity" if fixed == m else fixed),
        "duration": None if fixed is not None else duration(perm),
        "universal_pointers": sorted(universal_pointers(perm)),
    }
    lines = [
        f"permutation      {format_permutation(perm)}",
        f"pointer word     {word}",
        f"adjacencies      {sorted(adjacencies(perm))}",
        f"valid contexts   {len(contexts)}: {[f'{p},{q}' for p, q in contexts]}",
        f"strategic pile   {sorted(pile.elements)} (trace {list(pile.trace)})",
        f"sortable         {not pile.elements}",
        f"max pile         {maxpile}",
    ]
    if fixed is not None:
        lines.append(f"fixed point      {'identity' if fixed == m else fixed}")
    else:
        lines.append(f"duration         {duration(perm)}")
    lines.append(f"universal        {sorted(universal_pointers(perm))}")
    if maxpile and m % 2 == 0:
        reduced = contract(perm)
        payload["contraction"] = list(reduced)
        payload["contracted_context_count"] = context_count(reduced, cyclic=True)
        payload["classification"] = classify(reduced)
        lines.append(f"contraction      {format_permutation(reduced)}")
        lines.append(f"contracted k     {payload['contracted_context_count']}")
        lines.append(f"classification   {payload['classification']}")
    elif m % 2 == 1 and has_max_pile(uncontract(perm)):
        payload["classification"] = classify(perm)
        payload["contracted_context_count"] = context_count(perm, cyclic=True)
        lines.append(f"classification   {payload['classification']} (as contracted)")
    _emit(payload, args.json, lines)
    return 0


def cmd_apply(args: argparse.Namespace) -> int:
    perm = _perm_arg(args.perm)
    try:
        result = apply_cds(perm, (args.p, args.q))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    payload = {
        "permutation": list(perm),
        "context": {"p": args.p, "q": args.q},
        "result": list(result),
    }
    _emit(payload, args.json, [format_permutation(result)])
    return 0


def cmd_census(args: argparse.Namespace) -> int:
    try:
        report = census(
            args.n,
            include_orbits=args.orbits,
            max_n=args.max_n,
            threads=args.threads,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    from .taxonomy import divisibility_report, parity_report

    div = divisibility_report(args.n, report)
    par = parity_report(args.n, report)
    payload = report.to_json()
    payload["divisibility"] = div
    payload["parity"] = par
    lines = [f"max-pile permutations of length {2 * args.n}: {report.total}"]
    for k in sorted(report.histogram, reverse=True):
        lines.append(f"  contexts {k:3d}: {report.histogram[k]}")
    if report.orbits:
        lines.append("orbit decomposition:")
        for rep, size, k in report.orbits:
            lines.append(f"  {format_permutation(rep)}  size {size:3d}  k={k}")
    lines.append(
        "checks: periodic multiples "
        + ("ok" if div["periodic_multiple_ok"] else "FAILED")
        + ", coprime squares "
        + ("ok" if div["coprime_class_square_ok"] else "FAILED")
        + ", parity "
        + ("ok" if par["degrees_even"] and par["gap_ok"] else "FAILED")
    )
    _emit(payload, args.json, lines)
    ok = (
        div["periodic_multiple_ok"]
        and div["coprime_class_square_ok"]
        and par["degrees_even"]
        and par["gap_ok"]
    )
    return 0 if ok else 1


def cmd_verify(args: argparse.Namespace) -> int:
    if args.suite not in SUITES:
        print(
            f"error: unknown suite {args.suite!r}; choose from {', '.join(sorted(SUITES))}",
            file=sys.stderr,
        )
        return 2
    kwargs = {"n": args.n, "seed": args.seed, "m": args.m, "samples": args.samples}
    result = run_suite(args.suite, **kwargs)
    lines = []
    for check in result.checks:
        mark = "PASS" if check.passed else "FAIL"
        extra = "" if check.passed else f"  counterexample: {check.counterexample}"
        lines.append(f"[{mark}] {result.suite}/{check.name}{extra}")
    _emit(result.to_json(), args.json, lines)
    return 0 if result.passed else 1


def cmd_game(args: argparse.Namespace) -> int:
    perm = _perm_arg(args.perm)
    targets = _targets_arg(args.targets)
    pile = strategic_pile(perm).elements
    if not targets <= pile:
        print(
            f"error: targets {sorted(targets)} not within the strategic pile {sorted(pile)}",
            file=sys.stderr,
        )
        return 2
    if fixed_point_index(perm) is None and duration(perm) > args.exact_limit:
        print(
            f"error: position needs {duration(perm)} moves; exact solving is capped at "
            f"{args.exact_limit} (raise --exact-limit to force it)",
            file=sys.stderr,
        )
        return 2
    state = GameState(perm, targets)
    if args.mode == "solve":
        value = grundy(state)
        moves = best_moves(state)
        payload = {
            "permutation": list(perm),
            "targets": sorted(targets),
            "sg": value,
            "winner": winner(state),
            "winning_moves": [{"p": p, "q": q} for p, q in moves],
            "finished": fixed_point_index(perm) is not None,
            "conditions": winning_conditions_report(state),
        }
        lines = [
            f"game on {format_permutation(perm)} with targets {sorted(targets)}",
            f"sg      {value}",
            f"winner  {payload['winner']}",
            f"moves   {[f'{p},{q}' for p, q in moves]}",
        ]
        if payload["finished"]:
            lines.insert(1, "already a fixed point")
        _emit(payload, args.json, lines)
        return 0
    transcript = autoplay(state)
    payload = transcript.to_json()
    lines = [
        f"autoplay {format_permutation(perm)} targets {sorted(targets)}",
        f"moves    {[f'{p},{q}' for p, q in transcript.moves]}",
        f"winner   {transcript.winner}",
    ]
    _emit(payload, args.json, lines)
    return 0


def cmd_orbit(args: argparse.Namespace) -> int:
    perm = _perm_arg(args.perm)
    diffs = difference_sequence(perm)
    stab = stabilizer(perm)
    payload = {
        "permutation": list(perm),
        "difference_sequence": list(diffs.values),
        "period": diffs.period,
        "stabilizer": {"generator": list(stab.generator), "order": stab.order},
        "orbit_size": orbit_size(perm),
    }
    lines = [
        f"difference sequence {list(diffs.values)} (period {diffs.period})",
        f"stabilizer          generator {stab.generator}, order {stab.order}",
        f"orbit size          {orbit_size(perm)}",
    ]
    _emit(payload, args.json, lines)
    return 0


def cmd_periodic(args: argparse.Namespace) -> int:
    if args.action == "build":
        triple = PeriodicTriple(
            tuple(int(x) for x in args.phi.replace(",", " ").split()),
            tuple(int(x) for x in args.offsets.replace(",", " ").split()),
            args.k,
        )
        try:
            perm = build_periodic_permutation(triple, args.m)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        payload = {"triple": triple.to_json(), "permutation": list(perm)}
        _emit(payload, args.json, [format_permutation(perm)])
        return 0
    if args.action == "recover":
        perm = _perm_arg(args.perm)
        try:
            triple = recover_periodic_triple(perm, args.p)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        payload = {"permutation": list(perm), "triple": triple.to_json()}
        _emit(
            payload,
            args.json,
            [f"phi {list(triple.phi)}  offsets {list(triple.offsets)}  k {triple.k}"],
        )
        return 0
    try:
        count = count_periodic_max_pile(args.n, args.p)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    payload = {"n": args.n, "p": args.p, "count": count}
    _emit(payload, args.json, [str(count)])
    return 0


def cmd_psi(args: argparse.Namespace) -> int:
    value = coprime_pair_count(args.m)
    _emit({"m": args.m, "psi": value}, args.json, [str(value)])
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    from .service import ServiceConfig, serve

    serve(
        ServiceConfig(
            port=args.port,
            exact_limit=args.exact_limit,
            snapshot_path=args.snapshot,
            static_dir=args.static_dir,
            session_cap=args.session_cap,
        )
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cdsgame",
        description="Context-directed swap analysis, censuses, and game solving",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_json(p: argparse.ArgumentParser) -> None:
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("analyze", help="pointer word, pile, contexts, classification")
    p.add_argument("perm")
    add_json(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("apply", help="apply one context-directed swap")
    p.add_argument("perm")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    add_json(p)
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("census", help="exhaustive max-pile census of length 2n")
    p.add_argument("n", type=int)
    p.add_argument("--orbits", action="store_true", help="include orbit decomposition")
    p.add_argument("--max-n", type=int, default=6, help="refuse larger censuses")
    p.add_argument("--threads", type=int, default=1)
    add_json(p)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("suite", help=f"one of: {', '.join(sorted(SUITES))}")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--samples", type=int, default=None)
    add_json(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("game", help="solve or autoplay a swap game")
    p.add_argument("mode", choices=["solve", "autoplay"])
    p.add_argument("perm")
    p.add_argument("--targets", default="", help="comma-separated pile elements")
    p.add_argument("--exact-limit", type=int, default=8, help="refuse longer positions")
    add_json(p)
    p.set_defaults(func=cmd_game)

    p = sub.add_parser("orbit", help="difference sequence, stabilizer, orbit size")
    p.add_argument("perm")
    add_json(p)
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("periodic", help="periodic-triple tools")
    psub = p.add_subparsers(dest="action", required=True)
    b = psub.add_parser("build", help="permutation from (phi, offsets, k)")
    b.add_argument("--phi", required=True)
    b.add_argument("--offsets", required=True)
    b.add_argument("--k", type=int, required=True)
    b.add_argument("--m", type=int, required=True)
    add_json(b)
    b.set_defaults(func=cmd_periodic)
    r = psub.add_parser("recover", help="triple from a periodic permutation")
    r.add_argument("perm")
    r.add_argument("--p", type=int, required=True)
    add_json(r)
    r.set_defaults(func=cmd_periodic)
    c = psub.add_parser("count", help="count periodic contracted max-pile permutations")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--p", type=int, required=True)
    add_json(c)
    c.set_defaults(func=cmd_periodic)

    p = sub.add_parser("psi", help="count c with c and c-1 both coprime to m")
    p.add_argument("m", type=int)
    add_json(p)
    p.set_defaults(func=cmd_psi)

    p = sub.add_parser("serve", help="run the HTTP game service")
    p.add_argument("--port", type=int, default=8723)
    p.add_argument("--exact-limit", type=int, default=8)
    p.add_argument("--snapshot", default=None)
    p.add_argument("--static-dir", default=None)
    p.add_argument("--session-cap", type=int, default=256)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SystemExit as exc:
        if isinstance(exc.code, str):
            print(exc.code, file=sys.stderr)
            return 2
        raise
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
