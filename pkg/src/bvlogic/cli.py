"""Command-line front end. Output is ``key=value`` lines; errors are ``error: CODE message``.

Exit codes: 0 success, 1 a check or verification failed, 2 usage, 3 size guard.
"""

from __future__ import annotations

import argparse
import os
import random
import sys
from typing import Optional, Sequence

from . import boolalg, combinatorics, corpus, proof, sexpr, syntax
from .errors import SizeGuardError
from .semantics import (
    PreconditionError,
    load_structure,
    random_structure,
    resolve_language,
    sentence_value,
    validate_soundness,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _bool(b: bool) -> str:
    return "true" if b else "false"


def _formula_text(text: str, lang: syntax.Language):
    """A formula from either its S-expression or its surface form."""
    if text.lstrip().startswith("(") or text.strip() == "falsum":
        return syntax.loads_formula(text, lang)
    return corpus.elaborate(text, lang)


# ---------------------------------------------------------------------------
# subcommands


def cmd_parse(args, out):
    lang = resolve_language(args.language)
    f = corpus.elaborate(_read(args.file), lang, args.free or ())
    out(f"closed={_bool(syntax.is_sentence(f))}")
    out(f"size={syntax.size(f)}")
    out(f"sexpr={syntax.dumps(f, lang)}")
    return EXIT_OK


def cmd_print(args, out):
    lang = resolve_language(args.language)
    f = syntax.loads_formula(_read(args.file), lang)
    out(f"text={corpus.to_text(f, lang)}")
    return EXIT_OK


def cmd_check_proof(args, out):
    lang = resolve_language(args.language)
    tree = proof.loads_proof(_read(args.proof), lang)
    ctx = [syntax.formula_from_sexpr(e, lang) for e in sexpr.read_all(_read(args.ctx))]
    goal = _formula_text(_read(args.goal), lang)
    failure = proof.diagnose(tree, ctx, goal)
    if failure is None:
        out("check=ok")
        return EXIT_OK
    out("check=fail")
    out(f"path={failure.path or '.'}")
    out(f"message={failure.message}")
    return EXIT_FAIL


def cmd_eval(args, out):
    base = os.path.dirname(os.path.abspath(args.structure)) if args.structure != "-" else "."
    S = load_structure(_read(args.structure), base_dir=base)
    f = _formula_text(_read(args.sentence), S.language)
    if not syntax.is_sentence(f):
        f = syntax.universal_closure(f)
        out("closed_by=universal")
    B = S.algebra
    value = sentence_value(S, f)
    gamma = B.top if args.gamma is None else args.gamma
    if not B.contains(gamma):
        raise UsageError(f"--gamma {gamma} is not an element of the algebra")
    out(f"value={value}")
    out(f"label={B.label(value)}")
    out(f"gamma={gamma}")
    out(f"forces={_bool(B.le(gamma, value))}")
    return EXIT_OK


def cmd_ro(args, out):
    X = boolalg.load_topology(_read(args.topology))
    out(boolalg.dump_algebra(boolalg.regular_open_algebra(X)))
    return EXIT_OK


def _load_conditions(text: str, ground: list):
    conds = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if line.count("|") != 1:
            raise ValueError(f"line {lineno}: expected 'IN-INDICES | OUT-INDICES'")
        sides = [[ground[int(tok)] for tok in part.split()] for part in line.split("|")]
        conds.append(combinatorics.CohenCondition(frozenset(sides[0]), frozenset(sides[1])))
    return conds


def cmd_cohen(args, out):
    ground = combinatorics.default_ground(args.ground)
    C = combinatorics.CohenAlgebra(ground)
    out(f"ground={args.ground}")
    out("points=" + " ".join(f"{a}.{b}" for a, b in ground))
    status = EXIT_OK
    if args.antichain:
        conds = _load_conditions(_read(args.antichain), ground)
        pairs = combinatorics.cohen_antichain(conds, C)
        for (i, j), incompatible in pairs.items():
            clash = not combinatorics.compatible(conds[i], conds[j])
            out(f"pair={i},{j} incompatible={_bool(incompatible)} clash={_bool(clash)}")
            if incompatible != clash:
                status = EXIT_FAIL
        out(f"antichain={_bool(all(pairs.values()))}")
        return status
    dense = combinatorics.cohen_density_check(C)
    out(f"conditions={3 ** args.ground}")
    out(f"density={_bool(dense)}")
    if not args.density:
        totals = combinatorics.total_conditions(ground)
        imgs = [combinatorics.cohen_iota(p, C) for p in totals]
        out(f"total_specifications={len(totals)}")
        out(f"total_antichain={_bool(boolalg.is_antichain(C, imgs))}")
        if C.size <= 1 << 16:
            out(f"max_antichain={combinatorics.max_antichain_size(C)}")
    return EXIT_OK if dense else EXIT_FAIL


def cmd_delta(args, out):
    family = combinatorics.load_family(_read(args.family))
    out(f"members={len(family)}")
    out(f"target={args.target}")
    found = combinatorics.delta_extract(family, args.target)
    if found is None:
        out("found=false")
        return EXIT_FAIL
    idx, root = found
    out("found=true")
    out("indices=" + " ".join(map(str, idx)))
    out("root=" + (" ".join(map(str, sorted(root))) or "-"))
    out(f"valid={_bool(combinatorics.is_delta_system(family, idx, root))}")
    return EXIT_OK


# the algebras the fuzzer draws from
def fuzz_algebras() -> list:
    tops = [
        boolalg.FinTopSpace(3, [0b000, 0b001, 0b010, 0b011, 0b111]),
        boolalg.FinTopSpace(4, [m for m in range(8)] + [0b1111]),
    ]
    return [boolalg.powerset_algebra(n) for n in (1, 2, 3)] + [
        boolalg.regular_open_algebra(X) for X in tops
    ]


def fuzz_soundness(seed: int, trials: int, max_carrier: int = 3) -> dict:
    """Random valid structures against every corpus proof; counts violations."""
    algebras = fuzz_algebras()
    proofs = corpus.proof_corpus()
    counts = {"trials": trials, "checks": 0, "violations": 0}
    first = None
    for trial in range(trials):
        rng = random.Random(seed * 1_000_003 + trial)
        B = algebras[rng.randrange(len(algebras))]
        S = random_structure(corpus.DEMO_LANGUAGE, B, rng.randint(1, max_carrier), rng)
        for name, ctx, goal, tree in proofs:
            counts["checks"] += 1
            if not validate_soundness(S, ctx, goal, tree):
                counts["violations"] += 1
                if first is None:
                    first = f"{trial}:{name}"
    counts["first_violation"] = first or "-"
    return counts


def cmd_fuzz(args, out):
    if args.trials < 0:
        raise UsageError("--trials must be non-negative")
    c = fuzz_soundness(args.seed, args.trials)
    out(
        f"seed={args.seed} trials={c['trials']} proofs={len(corpus.proof_corpus())}"
        f" checks={c['checks']} violations={c['violations']} first_violation={c['first_violation']}"
    )
    return EXIT_OK if c["violations"] == 0 else EXIT_FAIL


def _emit_sentence(out, name, f):
    out(f"name={name}")
    out(f"closed={_bool(syntax.is_sentence(f))}")
    out(f"size={syntax.size(f)}")
    out(f"sexpr={syntax.dumps(f, corpus.LZFC)}")
    out(f"text={corpus.to_text(f)}")


def cmd_corpus(args, out):
    if args.ch:
        _emit_sentence(out, "ch", corpus.ch_sentence())
        return EXIT_OK
    if args.collection is not None:
        params = tuple(args.param or ())
        _emit_sentence(out, f"axiom_of_collection[{args.collection}]",
                       corpus.axiom_of_collection(args.collection, params))
        return EXIT_OK
    sentences = corpus.axiom_corpus()
    if args.list:
        for name in sentences:
            out(f"name={name}")
        return EXIT_OK
    if args.axiom:
        if args.axiom not in sentences:
            raise UsageError(f"unknown axiom {args.axiom!r}")
        sentences = {args.axiom: sentences[args.axiom]}
    for name, f in sentences.items():
        _emit_sentence(out, name, f)
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="bvlogic", description="Boolean-valued first-order logic toolkit.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("parse", help="elaborate surface syntax to de Bruijn form")
    s.add_argument("file")
    s.add_argument("--language", default="zfc")
    s.add_argument("--free", nargs="*", help="names allowed free, in index order")
    s.set_defaults(fn=cmd_parse)

    s = sub.add_parser("print", help="print a de Bruijn S-expression as surface syntax")
    s.add_argument("file")
    s.add_argument("--language", default="zfc")
    s.set_defaults(fn=cmd_print)

    s = sub.add_parser("check-proof", help="check a derivation of GOAL from CTX")
    s.add_argument("proof")
    s.add_argument("ctx")
    s.add_argument("goal")
    s.add_argument("--language", default="demo")
    s.set_defaults(fn=cmd_check_proof)

    s = sub.add_parser("eval", help="truth value of a sentence in a structure")
    s.add_argument("structure")
    s.add_argument("sentence")
    s.add_argument("--gamma", type=int)
    s.set_defaults(fn=cmd_eval)

    s = sub.add_parser("ro", help="regular-open algebra of a finite topology")
    s.add_argument("topology")
    s.set_defaults(fn=cmd_ro)

    s = sub.add_parser("cohen", help="Cohen poset demos")
    s.add_argument("--ground", type=int, required=True)
    g = s.add_mutually_exclusive_group()
    g.add_argument("--density", action="store_true")
    g.add_argument("--antichain", metavar="FILE")
    s.set_defaults(fn=cmd_cohen)

    s = sub.add_parser("delta", help="extract a Δ-system from a set family")
    s.add_argument("family")
    s.add_argument("--target", type=int, required=True)
    s.set_defaults(fn=cmd_delta)

    s = sub.add_parser("fuzz-soundness", help="soundness fuzzer over random structures")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--trials", type=int, default=100)
    s.set_defaults(fn=cmd_fuzz)

    s = sub.add_parser("corpus", help="emit elaborated axioms and CH")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--axiom", metavar="NAME")
    g.add_argument("--ch", action="store_true")
    g.add_argument("--list", action="store_true")
    g.add_argument("--collection", metavar="PHI", help="instance of collection for PHI(x, y, params)")
    s.add_argument("--param", action="append", help="parameter name for --collection")
    s.set_defaults(fn=cmd_corpus)
    return p


def main(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr

    def out(line: str):
        stdout.write(line + "\n")

    def err(code: str, msg: str):
        stderr.write(f"error: {code} {msg}\n")

    try:
        args = build_parser().parse_args(argv)
        return args.fn(args, out)
    except UsageError as exc:
        err("USAGE", str(exc))
        return EXIT_USAGE
    except SizeGuardError as exc:
        err("SIZE_GUARD", str(exc))
        return EXIT_GUARD
    except corpus.ParseError as exc:
        err("PARSE", str(exc))
        return EXIT_USAGE
    except (OSError, sexpr.SExprError, corpus.ElaborationError, syntax.ArityError, KeyError) as exc:
        err("INPUT", str(exc))
        return EXIT_USAGE
    except PreconditionError as exc:
        err("PRECONDITION", str(exc))
        return EXIT_FAIL
    except ValueError as exc:
        err("INPUT", str(exc))
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
