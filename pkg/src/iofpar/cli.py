"""Command line front end: ``iofpar <verb> -n N ...``."""
from __future__ import annotations

import argparse
import json
import sys
from math import comb

from . import factorization as fz
from .fence import CONDITION_TEXT, failed_condition
from .generators import eval_word, format_word, gen_u, gen_v, gen_x, parse_word, standard_generating_set
from .pinj import compose, decode, encode, inverse, partial_identity
from .search import (
    brute_rank,
    check_minimality,
    classify_rank,
    closure,
    enumerate_members,
    j_class_witnesses,
    word_search,
)

SMALL_RANKS = {1: 1, 2: 2, 3: 5}


def expected_rank(n: int) -> int:
    return SMALL_RANKS[n] if n in SMALL_RANKS else 3 * n - 6


class VerificationFailed(Exception):
    pass


def _emit(args, data: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(data))
    else:
        for line in lines:
            print(line)


def _parse_map(text: str, n: int):
    return decode(text, n)


def cmd_member(args):
    alpha = _parse_map(args.map, args.n)
    cond = failed_condition(alpha)
    data = {"map": encode(alpha), "member": cond is None, "failed_condition": cond}
    line = "true" if cond is None else f"false condition ({cond}): {CONDITION_TEXT[cond]}"
    _emit(args, data, [line])


def cmd_compose(args):
    maps = [_parse_map(t, args.n) for t in args.maps]
    out = maps[0]
    for b in maps[1:]:
        out = compose(out, b)
    _emit(args, {"result": encode(out)}, [encode(out)])


def cmd_invert(args):
    out = inverse(_parse_map(args.map, args.n))
    _emit(args, {"result": encode(out)}, [encode(out)])


def cmd_eval(args):
    out = eval_word(args.n, parse_word(args.word))
    _emit(args, {"result": encode(out)}, [encode(out)])


def cmd_factorize(args):
    alpha = _parse_map(args.map, args.n)
    if args.n >= 4:
        f = fz.factorize(alpha)
        word = fz.render_over_An(f) if args.alphabet == "an" else fz.render(f)
        trace = f.trace()
    else:
        # below n = 4 there is no normal form; find a shortest word instead
        fz.require_member(alpha)
        word = word_search(args.n, alpha)
        trace = None
    text = format_word(word)
    lines = [text]
    if trace is not None:
        blocks = ["-" if b is None else f"{b['family']}[{b['i']},{b['j']}]" for b in trace["blocks"]]
        lines.append(
            f"# l={trace['l']} r={trace['r']} blocks=[{', '.join(blocks)}] guard={trace['guard']}"
        )
    _emit(args, {"map": encode(alpha), "word": text, "alphabet": args.alphabet, "trace": trace}, lines)


def _element_payload(n, elems, **extra):
    codes = [encode(a) for a in elems]
    return {"n": n, "count": len(codes), "elements": codes, **extra}, codes


def cmd_enumerate(args):
    data, codes = _element_payload(args.n, enumerate_members(args.n))
    _emit(args, data, codes)


def _sizes(args, start=1):
    if args.max_n is not None:
        return range(start, args.max_n + 1)
    if args.n is None:
        raise ValueError("either -n or --max-n is required")
    return [args.n]


def cmd_count(args):
    counts = {n: len(enumerate_members(n)) for n in _sizes(args)}
    if args.max_n is None:
        (n, c), = counts.items()
        _emit(args, {"n": n, "count": c}, [str(c)])
    else:
        _emit(
            args,
            {"counts": {str(n): c for n, c in counts.items()}},
            [f"n={n} count={c}" for n, c in counts.items()],
        )


def _parse_generator(text: str, n: int):
    if ">" in text or text.startswith("n=") or not text.strip():
        return _parse_map(text, n)
    return eval_word(n, parse_word(text))


def cmd_closure(args):
    if args.standard:
        gens = [g for _, g in standard_generating_set(args.n)]
    else:
        gens = [_parse_generator(t, args.n) for t in args.gens]
    elems = closure(args.n, gens)
    full = elems.as_set() == enumerate_members(args.n).as_set()
    data, codes = _element_payload(args.n, elems, generates_all=full)
    _emit(args, data, codes + [f"# count={len(codes)} generates_all={str(full).lower()}"])


def cmd_verify_rank(args):
    rows, ok = [], True
    for n in _sizes(args):
        r, e = brute_rank(n), expected_rank(n)
        rows.append({"n": n, "rank": r, "expected": e, "ok": r == e})
        ok &= r == e
    lines = [f"rank={r['rank']} expected={r['expected']} {'OK' if r['ok'] else 'FAIL'}" for r in rows]
    if len(rows) > 1:
        lines = [f"n={r['n']} {line}" for r, line in zip(rows, lines)]
    _emit(args, {"results": rows, "ok": ok}, lines)
    if not ok:
        raise VerificationFailed("rank differs from the expected value")


def lemma_checks(n: int):
    """Yield (name, passed) for the structural checks at one n >= 4."""
    members = enumerate_members(n)
    top = classify_rank(n, n - 1).as_set()
    yield "rank n-1 class is {v_i}", top == {gen_v(n, i) for i in range(1, n + 1)}
    second = {partial_identity(n, [k for k in range(1, n + 1) if k not in pair])
              for pair in _pairs(n)}
    second |= {gen_u(n, n - 2), gen_x(n, n - 2)}
    cls = classify_rank(n, n - 2)
    yield "rank n-2 class is {v_A : |A|=2} + {u_(n-2), x_(n-2)}", (
        cls.as_set() == second and len(cls) == comb(n, 2) + 2
    )
    yield "J_i classes are nonempty", all(
        d and i for d, i in j_class_witnesses(n, members).values()
    )
    yield "standard set is minimal", check_minimality(n)
    sound = True
    for a in members:
        try:
            sound &= fz.evaluate(fz.factorize(a, verify=True)) == a
        except fz.LemmaViolation:
            sound = False
    yield "normal forms evaluate back (with lemma checks)", sound
    yield "inverse word identity", all(
        fz.check_inverse_word(a) for a in members if a.rank < n
    )


def _pairs(n):
    return [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)]


def cmd_verify_lemmas(args):
    top = args.max_n if args.max_n is not None else (args.n or 7)
    rows = []
    for n in range(4, top + 1):
        for name, passed in lemma_checks(n):
            rows.append({"n": n, "check": name, "ok": bool(passed)})
    ok = all(r["ok"] for r in rows)
    lines = [f"n={r['n']} {r['check']}: {'OK' if r['ok'] else 'FAIL'}" for r in rows]
    _emit(args, {"results": rows, "ok": ok}, lines)
    if not ok:
        failed = next(r for r in rows if not r["ok"])
        raise VerificationFailed(f"n={failed['n']}: {failed['check']}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-n", type=int, help="size of the underlying set")
    common.add_argument("--json", action="store_true", help="emit JSON")

    p = argparse.ArgumentParser(prog="iofpar", description=__doc__)
    sub = p.add_subparsers(dest="verb", required=True)

    def verb(name, fn, needs_n=True, **kw):
        sp = sub.add_parser(name, parents=[common], **kw)
        sp.set_defaults(func=fn, needs_n=needs_n)
        return sp

    verb("member", cmd_member, help="test membership").add_argument("map")
    verb("compose", cmd_compose, help="left-to-right product").add_argument("maps", nargs="+")
    verb("invert", cmd_invert, help="inverse map").add_argument("map")
    verb("eval", cmd_eval, help="evaluate a word such as 'v3 u4 x1'").add_argument("word")
    sp = verb("factorize", cmd_factorize, help="normal-form word of a member")
    sp.add_argument("map")
    sp.add_argument("--alphabet", choices=("xn", "an"), default="xn")
    verb("enumerate", cmd_enumerate, help="list all members")
    verb("count", cmd_count, needs_n=False, help="number of members").add_argument("--max-n", type=int)
    sp = verb("closure", cmd_closure, help="monoid generated by maps or words")
    sp.add_argument("gens", nargs="*")
    sp.add_argument("--standard", action="store_true", help="use the 3n-6 standard generators")
    verb("verify-rank", cmd_verify_rank, needs_n=False, help="brute-force rank check").add_argument(
        "--max-n", type=int
    )
    verb("verify-lemmas", cmd_verify_lemmas, needs_n=False, help="structural checks").add_argument(
        "--max-n", type=int
    )
    return p


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.n is None and args.needs_n:
            raise ValueError("-n is required")
        if args.n is not None and args.n < 1:
            raise ValueError("-n must be a positive integer")
        args.func(args)
    except VerificationFailed as e:
        print(f"verification failed: {e}", file=sys.stderr)
        return 1
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    return 0


def main():
    sys.exit(run())
