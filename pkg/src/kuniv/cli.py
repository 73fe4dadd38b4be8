"""Command-line frontend.

Decisions go to stdout as ``true``/``false``; the exit status only reports
failures (2 usage or input error, 3 capacity exceeded, 1 internal error).
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .automaton import format_nfa, normalize, parse_nfa
from .counting import MAX_SIGMA as COUNT_MAX_SIGMA
from .counting import count_at_most, count_exact, count_total, rank
from .errors import CapacityError
from .graph import decompose, dump_scc
from .hardness import parse_dimacs, reduce_to_regex
from .oracle import (enumerate_language, esu_by_enumeration,
                     max_universality_product, regex_language, usu_decide)
from .regex import (max_universality_regex, parse_regex, prune_empty, star_free_reduce,
                    thompson, to_text)
from .sigma_dp import max_universality_sigma
from .states_fpt import DEFAULT_MAX_STATES, max_universality_states
from .words import arch_factorize, format_word, parse_word, universality_index

AUTO_MAX_SIGMA = 20
EXIT_INTERNAL, EXIT_USAGE, EXIT_CAPACITY = 1, 2, 3


class UsageError(Exception):
    pass


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _need(args, *names):
    for name in names:
        if getattr(args, name, None) is None:
            raise UsageError(f"--{name.replace('_', '-')} is required for '{args.command}'")


def _one_source(args, allowed, extra=()):
    # ``extra`` names flags that are arguments rather than inputs for this command
    given = [s for s in ("nfa", "regex", "word", "cnf")
             if s not in extra and getattr(args, s, None) is not None]
    if len(given) != 1 or given[0] not in allowed:
        opts = " or ".join(f"--{s}" for s in allowed)
        raise UsageError(f"'{args.command}' needs exactly one input source: {opts}")
    return given[0]


def _check_k(args):
    _need(args, "k")
    if args.k < 1:
        raise UsageError("--k must be at least 1")


def _load_nfa(args):
    return parse_nfa(_read(args.nfa))


def _load_regex(args):
    _need(args, "sigma")
    return parse_regex(args.regex, args.sigma)


def _automaton(args):
    """The input as an automaton, whatever the source."""
    if args.nfa is not None:
        return _load_nfa(args)
    r = _load_regex(args)
    return thompson(prune_empty(r), args.sigma)


def _max_index(args):
    source = _one_source(args, ("nfa", "regex"))
    algo = args.algo
    if source == "regex" and algo in ("auto", "sigma"):
        r = _load_regex(args)
        if algo == "sigma" or args.sigma <= AUTO_MAX_SIGMA:
            return max_universality_regex(r, args.sigma)
    a = normalize(_automaton(args))
    if a is None:
        return None
    if args.dump_scc:
        print(dump_scc(decompose(a), a.sigma), file=args.err)
    if algo == "auto":
        if a.sigma <= AUTO_MAX_SIGMA:
            algo = "sigma"
        elif a.n <= args.max_subset_states:
            algo = "states"
        else:
            raise CapacityError(f"sigma={a.sigma} > {AUTO_MAX_SIGMA} and n={a.n} > "
                                f"{args.max_subset_states}; no algorithm applies")
    if algo == "sigma":
        return max_universality_sigma(a)
    if algo == "states":
        return max_universality_states(a, max_states=args.max_subset_states,
                                       workers=args.workers)
    return max_universality_product(a)


def _show_index(value):
    if value is None:
        return "empty"
    return "unbounded" if value == math.inf else str(value)


def _json_index(value):
    if value is None or value == math.inf:
        return None if value is None else "unbounded"
    return value


def _show_count(value):
    return "infinite" if value == math.inf else str(value)


def cmd_index(args, out):
    _one_source(args, ("word",))
    _need(args, "sigma")
    w = parse_word(args.word, args.sigma)
    fact = arch_factorize(w, args.sigma)
    arches = [format_word(a, args.sigma) for a in fact.arches]
    rest = format_word(fact.rest, args.sigma)
    if args.format == "json":
        return {"index": len(fact.arches), "arches": arches, "rest": rest}
    out.append(f"index {len(fact.arches)}")
    out.append("arches " + ("|".join(arches) if arches else "-"))
    out.append(f"rest {rest}")


def cmd_maxindex(args, out):
    value = _max_index(args)
    if args.format == "json":
        return {"max_index": _json_index(value)}
    out.append(_show_index(value))


def cmd_esu(args, out):
    _check_k(args)
    value = _max_index(args)
    verdict = value is not None and value >= args.k
    if args.format == "json":
        return {"verdict": verdict, "max_index": _json_index(value)}
    out.append("true" if verdict else "false")


def cmd_usu(args, out):
    _one_source(args, ("nfa", "regex"))
    _check_k(args)
    verdict = usu_decide(normalize(_automaton(args)), args.k)
    if args.format == "json":
        return {"verdict": verdict}
    out.append("true" if verdict else "false")


def _mode(args):
    return {"exact": "exact", "atmost": "at_most", "total": "total"}[args.mode]


def cmd_count(args, out):
    _one_source(args, ("nfa",))
    _check_k(args)
    a = _load_nfa(args)
    if a.sigma > COUNT_MAX_SIGMA:
        raise CapacityError(f"sigma={a.sigma} exceeds the counting bound {COUNT_MAX_SIGMA}")
    mode = _mode(args)
    if mode == "total":
        if args.perfect:
            raise UsageError("--perfect is only available with --mode exact or atmost")
        value = count_total(a, args.k, paths=args.paths)
    else:
        _need(args, "len")
        fn = count_exact if mode == "exact" else count_at_most
        value = fn(a, args.len, args.k, perfect=args.perfect, paths=args.paths)
    if args.format == "json":
        return {"count": _show_count(value)}
    out.append(_show_count(value))


def cmd_rank(args, out):
    _one_source(args, ("nfa",), extra=("word",))
    _check_k(args)
    _need(args, "word")
    a = _load_nfa(args)
    w = parse_word(args.word, a.sigma)
    value = rank(a, w, args.k, mode=_mode(args), m=args.len, paths=args.paths)
    if args.format == "json":
        return {"rank": str(value)}
    out.append(str(value))


def cmd_reduce(args, out):
    _one_source(args, ("regex",))
    r = _load_regex(args)
    reduced = star_free_reduce(r, args.sigma)
    text = to_text(reduced, args.sigma)
    if args.format == "json":
        return {"regex": text}
    out.append(text)


def cmd_sat2regex(args, out):
    _one_source(args, ("cnf",))
    cnf = parse_dimacs(_read(args.cnf))
    r, sigma = reduce_to_regex(cnf)
    if args.print_nfa:
        payload = {"nfa": format_nfa(thompson(r, sigma)), "sigma": sigma}
    else:
        payload = {"regex": to_text(r, sigma), "sigma": sigma}
    if args.format == "json":
        return payload
    out.append(payload.get("regex", payload.get("nfa", "")).rstrip("\n"))


def cmd_oracle(args, out):
    source = _one_source(args, ("nfa", "regex"))
    if args.k is not None and args.k < 1:
        raise UsageError("--k must be at least 1")
    if source == "regex":
        r = _load_regex(args)
        sigma = args.sigma
        words = sorted(regex_language(r, sigma, args.max_len), key=lambda w: (len(w), w))
        a = normalize(thompson(prune_empty(r), sigma))
    else:
        a = _load_nfa(args)
        sigma = a.sigma
        words = enumerate_language(a, args.max_len)
        a = normalize(a)
    hist = {}
    for w in words:
        i = universality_index(w, sigma)
        hist[i] = hist.get(i, 0) + 1
    best = max(hist) if hist else None
    result = {"words": len(words), "histogram": {str(i): hist[i] for i in sorted(hist)},
              "max_index": best, "max_index_product": _json_index(max_universality_product(a))}
    if args.k is not None:
        result["esu"] = esu_by_enumeration(a, args.k, args.max_len)
        result["verdict"] = result["esu"]
        result["usu"] = usu_decide(a, args.k)
    if args.format == "json":
        return result
    out.append(f"words up to length {args.max_len}: {len(words)}")
    for i in sorted(hist):
        out.append(f"  index {i}: {hist[i]}")
    out.append(f"max index (enumerated) {_show_index(best)}")
    out.append(f"max index (product) {_show_index(max_universality_product(a))}")
    if args.k is not None:
        out.append(f"esu {'true' if result['esu'] else 'false'}")
        out.append(f"usu {'true' if result['usu'] else 'false'}")


COMMANDS = {
    "index": (cmd_index, "universality index and arch factorization of a word"),
    "esu": (cmd_esu, "does the language contain a k-universal word?"),
    "usu": (cmd_usu, "is every word of the language k-universal?"),
    "maxindex": (cmd_maxindex, "largest universality index over the language"),
    "count": (cmd_count, "count accepted k-universal words (or paths)"),
    "rank": (cmd_rank, "rank of a word among accepted k-universal words"),
    "reduce": (cmd_reduce, "star-free expression with the same maximum index"),
    "sat2regex": (cmd_sat2regex, "reduce a DIMACS CNF formula to an expression"),
    "oracle": (cmd_oracle, "brute-force enumeration report"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kuniv", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text, description=help_text)
        p.add_argument("--nfa", metavar="FILE", help="automaton file ('-' for stdin)")
        p.add_argument("--regex", metavar="EXPR")
        p.add_argument("--cnf", metavar="FILE", help="DIMACS CNF file")
        p.add_argument("--sigma", type=int, help="alphabet size for --regex/--word")
        p.add_argument("--word", metavar="W", help="'baab' or '2,1,1,2'")
        p.add_argument("--k", type=int)
        p.add_argument("--len", type=int, metavar="M", help="word length bound")
        p.add_argument("--mode", choices=("exact", "atmost", "total"), default="exact")
        p.add_argument("--perfect", action="store_true", help="only words with an empty rest")
        p.add_argument("--paths", action="store_true", help="count accepting paths")
        p.add_argument("--algo", choices=("auto", "sigma", "states", "product"),
                       default="auto")
        p.add_argument("--max-subset-states", type=int, default=DEFAULT_MAX_STATES)
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("--dump-scc", action="store_true",
                       help="print components and their letter sets to stderr")
        p.add_argument("--max-len", type=int, default=8)
        group = p.add_mutually_exclusive_group()
        group.add_argument("--print-regex", action="store_true")
        group.add_argument("--print-nfa", action="store_true")
        p.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else 0
    args.err = stderr
    out = []
    try:
        payload = COMMANDS[args.command][0](args, out)
    except CapacityError as exc:
        print(f"kuniv: capacity exceeded: {exc}", file=stderr)
        return EXIT_CAPACITY
    except (UsageError, ValueError, OSError) as exc:
        print(f"kuniv: error: {exc}", file=stderr)
        return EXIT_USAGE
    except Exception as exc:  # noqa: BLE001 - reported as an internal failure
        print(f"kuniv: internal error: {type(exc).__name__}: {exc}", file=stderr)
        return EXIT_INTERNAL
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True), file=stdout)
    else:
        for line in out:
            print(line, file=stdout)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
