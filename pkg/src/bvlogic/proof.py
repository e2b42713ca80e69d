"""Natural-deduction proof trees and a syntax-directed checker.

Every node carries the formulas and terms that the conclusion alone does not
determine, so checking never searches.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Union

from . import sexpr
from .syntax import (
    FALSUM,
    All,
    Equal,
    Imp,
    Language,
    formula_from_sexpr,
    is_formula,
    is_term,
    lift,
    not_,
    subst,
    term_from_sexpr,
    to_sexpr,
)


@dataclass(frozen=True)
class Axm:
    formula: object


@dataclass(frozen=True)
class ImpI:
    antecedent: object
    sub: "ProofTree"


@dataclass(frozen=True)
class ImpE:
    antecedent: object
    sub_imp: "ProofTree"
    sub_arg: "ProofTree"


@dataclass(frozen=True)
class FalsumE:
    formula: object
    sub: "ProofTree"


@dataclass(frozen=True)
class AllI:
    sub: "ProofTree"


@dataclass(frozen=True)
class AllE:
    body: object
    term: object
    sub: "ProofTree"


@dataclass(frozen=True)
class Ref:
    term: object


@dataclass(frozen=True)
class Subst2:
    s: object
    t: object
    formula: object
    sub_eq: "ProofTree"
    sub_f: "ProofTree"


ProofTree = Union[Axm, ImpI, ImpE, FalsumE, AllI, AllE, Ref, Subst2]


class Failure(NamedTuple):
    path: str
    message: str


def check(tree: ProofTree, ctx: Iterable, goal) -> bool:
    """True iff ``tree`` derives ``ctx |- goal``."""
    return diagnose(tree, ctx, goal) is None


def diagnose(tree: ProofTree, ctx: Iterable, goal) -> Optional[Failure]:
    """Return the first rule failure, or None when the derivation checks."""
    try:
        return _check(tree, frozenset(ctx), goal, "root")
    except RecursionError:
        return Failure("root", "proof tree too deep")
    except Exception as exc:  # malformed input must not escape as an exception
        return Failure("root", f"malformed input: {exc}")


def _check(tree, ctx: frozenset, goal, path: str) -> Optional[Failure]:
    if not is_formula(goal):
        return Failure(path, "goal is not a formula")
    name = type(tree).__name__
    here = f"{path}/{name}"
    if isinstance(tree, Axm):
        if tree.formula != goal:
            return Failure(here, "axm formula differs from goal")
        if goal not in ctx:
            return Failure(here, "formula not in context")
        return None
    if isinstance(tree, ImpI):
        if not (isinstance(goal, Imp) and goal.lhs == tree.antecedent):
            return Failure(here, "goal is not an implication with the annotated antecedent")
        return _check(tree.sub, ctx | {goal.lhs}, goal.rhs, here + "[0]")
    if isinstance(tree, ImpE):
        a = tree.antecedent
        if not is_formula(a):
            return Failure(here, "annotation is not a formula")
        return _check(tree.sub_imp, ctx, Imp(a, goal), here + "[0]") or _check(
            tree.sub_arg, ctx, a, here + "[1]"
        )
    if isinstance(tree, FalsumE):
        if tree.formula != goal:
            return Failure(here, "falsumE formula differs from goal")
        return _check(tree.sub, ctx | {not_(goal)}, FALSUM, here + "[0]")
    if isinstance(tree, AllI):
        if not isinstance(goal, All):
            return Failure(here, "goal is not universally quantified")
        lifted = frozenset(lift(g, 1, 0) for g in ctx)
        return _check(tree.sub, lifted, goal.body, here + "[0]")
    if isinstance(tree, AllE):
        if not (is_formula(tree.body) and is_term(tree.term)):
            return Failure(here, "bad annotation")
        if subst(tree.body, tree.term, 0) != goal:
            return Failure(here, "goal is not body[t // 0]")
        return _check(tree.sub, ctx, All(tree.body), here + "[0]")
    if isinstance(tree, Ref):
        if not is_term(tree.term):
            return Failure(here, "ref annotation is not a term")
        if goal != Equal(tree.term, tree.term):
            return Failure(here, "goal is not t = t")
        return None
    if isinstance(tree, Subst2):
        if not (is_term(tree.s) and is_term(tree.t) and is_formula(tree.formula)):
            return Failure(here, "bad annotation")
        if subst(tree.formula, tree.t, 0) != goal:
            return Failure(here, "goal is not f[t // 0]")
        return _check(tree.sub_eq, ctx, Equal(tree.s, tree.t), here + "[0]") or _check(
            tree.sub_f, ctx, subst(tree.formula, tree.s, 0), here + "[1]"
        )
    return Failure(here, "unknown proof constructor")


# ---------------------------------------------------------------------------
# Bounded backward search.

MAX_SEARCH_DEPTH = 12


def provable_search(ctx: Iterable, goal, depth: int) -> Optional[ProofTree]:
    """Depth-bounded backward search. ``None`` only means nothing was found."""
    if depth > MAX_SEARCH_DEPTH:
        raise ValueError(f"search depth {depth} exceeds {MAX_SEARCH_DEPTH}")
    ctx = frozenset(ctx)
    seen: dict = {}
    tree = _search(ctx, goal, depth, seen)
    if tree is not None and not check(tree, ctx, goal):
        raise AssertionError("search produced an invalid tree")
    return tree


def _search(ctx: frozenset, goal, depth: int, seen: dict):
    if depth <= 0:
        return None
    key = (ctx, goal)
    if seen.get(key, 0) >= depth:
        return None
    seen[key] = depth
    if goal in ctx:
        return Axm(goal)
    if isinstance(goal, Equal) and goal.lhs == goal.rhs:
        return Ref(goal.lhs)
    if isinstance(goal, Imp):
        sub = _search(ctx | {goal.lhs}, goal.rhs, depth - 1, seen)
        if sub is not None:
            return ImpI(goal.lhs, sub)
    if isinstance(goal, All):
        sub = _search(frozenset(lift(g, 1, 0) for g in ctx), goal.body, depth - 1, seen)
        if sub is not None:
            return AllI(sub)
    # modus ponens against hypotheses ending in the goal
    for h in sorted(ctx, key=repr):
        if isinstance(h, Imp) and h.rhs == goal:
            arg = _search(ctx, h.lhs, depth - 1, seen)
            if arg is not None:
                return ImpE(h.lhs, Axm(h), arg)
    # refute: derive falsum from a hypothesis and its negation
    if goal == FALSUM:
        for h in sorted(ctx, key=repr):
            if isinstance(h, Imp) and h.rhs == FALSUM and h.lhs in ctx:
                return ImpE(h.lhs, Axm(h), Axm(h.lhs))
    elif not_(goal) not in ctx:
        sub = _search(ctx | {not_(goal)}, FALSUM, depth - 1, seen)
        if sub is not None:
            return FalsumE(goal, sub)
    return None


# ---------------------------------------------------------------------------
# S-expression proof format.


def proof_to_sexpr(tree: ProofTree, lang: Language) -> sexpr.SExpr:
    if isinstance(tree, Axm):
        return ["axm", to_sexpr(tree.formula, lang)]
    if isinstance(tree, ImpI):
        return ["impI", to_sexpr(tree.antecedent, lang), proof_to_sexpr(tree.sub, lang)]
    if isinstance(tree, ImpE):
        return [
            "impE",
            to_sexpr(tree.antecedent, lang),
            proof_to_sexpr(tree.sub_imp, lang),
            proof_to_sexpr(tree.sub_arg, lang),
        ]
    if isinstance(tree, FalsumE):
        return ["falsumE", to_sexpr(tree.formula, lang), proof_to_sexpr(tree.sub, lang)]
    if isinstance(tree, AllI):
        return ["allI", proof_to_sexpr(tree.sub, lang)]
    if isinstance(tree, AllE):
        return ["allE", to_sexpr(tree.body, lang), to_sexpr(tree.term, lang), proof_to_sexpr(tree.sub, lang)]
    if isinstance(tree, Ref):
        return ["ref", to_sexpr(tree.term, lang)]
    if isinstance(tree, Subst2):
        return [
            "subst2",
            to_sexpr(tree.s, lang),
            to_sexpr(tree.t, lang),
            to_sexpr(tree.formula, lang),
            proof_to_sexpr(tree.sub_eq, lang),
            proof_to_sexpr(tree.sub_f, lang),
        ]
    raise TypeError(f"not a proof tree: {tree!r}")


def proof_from_sexpr(e: sexpr.SExpr, lang: Language) -> ProofTree:
    if not (isinstance(e, list) and e and isinstance(e[0], str)):
        raise sexpr.SExprError(f"malformed proof: {sexpr.write(e)}")
    tag, args = e[0], e[1:]
    f = lambda x: formula_from_sexpr(x, lang)  # noqa: E731
    t = lambda x: term_from_sexpr(x, lang)  # noqa: E731
    p = lambda x: proof_from_sexpr(x, lang)  # noqa: E731
    shapes = {
        "axm": (Axm, (f,)),
        "impI": (ImpI, (f, p)),
        "impE": (ImpE, (f, p, p)),
        "falsumE": (FalsumE, (f, p)),
        "allI": (AllI, (p,)),
        "allE": (AllE, (f, t, p)),
        "ref": (Ref, (t,)),
        "subst2": (Subst2, (t, t, f, p, p)),
    }
    if tag not in shapes or len(args) != len(shapes[tag][1]):
        raise sexpr.SExprError(f"malformed proof node: {tag}")
    cls, readers = shapes[tag]
    return cls(*(r(a) for r, a in zip(readers, args)))


def dumps_proof(tree: ProofTree, lang: Language) -> str:
    return sexpr.write(proof_to_sexpr(tree, lang))


def loads_proof(text: str, lang: Language) -> ProofTree:
    return proof_from_sexpr(sexpr.read(text), lang)
