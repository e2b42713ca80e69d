"""The language of set theory, its axioms, CH, and a named-variable surface syntax.

Surface grammar (loosest binding first)::

    formula  := ('forall' | 'exists') binders ['in' term] ('.' | ',') formula
              | iff
    iff      := imp ['<->' imp]
    imp      := or ['->' imp]
    or       := and ('or' and)*
    and      := unary ('and' unary)*
    unary    := 'not' unary | '(' formula ')' | 'false' | 'true'
              | NAME '(' terms ')'                 -- defined or declared predicate
              | term ('=' | '!=' | 'in' | 'subset' | '<=') term
    term     := NAME | NAME '(' terms ')'

A quantifier body extends as far right as possible. Comments start with
``--``. The Unicode symbols of the usual notation are accepted as synonyms.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .proof import AllE, AllI, Axm, FalsumE, ImpE, ImpI, Ref, Subst2
from .syntax import (
    FALSUM,
    All,
    App,
    AppRel,
    Equal,
    Falsum,
    Func,
    Imp,
    Language,
    Rel,
    Var,
    and_,
    apply,
    ex,
    iff,
    lift,
    not_,
    or_,
)

LZFC = Language(
    functions={0: ("empty", "omega"), 1: ("P", "U"), 2: ("pair",)},
    relations={2: ("in",)},
    name="zfc",
)

DEMO_LANGUAGE = Language(
    functions={0: ("zero",), 1: ("s",)},
    relations={0: ("a", "b", "c"), 1: ("P", "Q"), 2: ("R",)},
    name="demo",
)


# ---------------------------------------------------------------------------
# Named syntax


@dataclass(frozen=True)
class NVar:
    name: str


@dataclass(frozen=True)
class NApp:
    fn: str
    args: tuple


@dataclass(frozen=True)
class NFalse:
    pass


@dataclass(frozen=True)
class NTrue:
    pass


@dataclass(frozen=True)
class NEq:
    lhs: object
    rhs: object


@dataclass(frozen=True)
class NPred:
    """Relation symbol or defined predicate applied to terms (``in``, ``subset``, ``leq``, ``Ord`` ...)."""

    name: str
    args: tuple


@dataclass(frozen=True)
class NNot:
    body: object


@dataclass(frozen=True)
class NBin:
    op: str  # 'and' | 'or' | 'imp' | 'iff'
    lhs: object
    rhs: object


@dataclass(frozen=True)
class NQuant:
    kind: str  # 'forall' | 'exists'
    var: str
    body: object
    bound: object = None  # term for ``forall x in t.``


NamedTerm = Union[NVar, NApp]
NamedFormula = Union[NFalse, NTrue, NEq, NPred, NNot, NBin, NQuant]


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column


class ElaborationError(ValueError):
    pass


_UNICODE = {
    "∀": "forall", "∃": "exists", "∈": "in", "¬": "not", "∧": "and", "∨": "or",
    "→": "->", "⟹": "->", "⇒": "->", "↔": "<->", "⇔": "<->", "⊆": "subset",
    "≤": "<=", "⊥": "false", "⊤": "true", "∅": "empty", "ω": "omega", "≠": "!=",
}
_TOKEN = re.compile(r"--[^\n]*|<->|->|<=|!=|[().,=]|[A-Za-z_][A-Za-z0-9_']*|\s+|.", re.S)
_KEYWORDS = {"forall", "exists", "in", "not", "and", "or", "false", "true", "subset"}
_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_']*")


@dataclass
class _Tok:
    text: str
    line: int
    col: int


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    line, col = 1, 1
    for m in _TOKEN.finditer(text):
        s = m.group(0)
        if not (s.isspace() or s.startswith("--")):
            s = _UNICODE.get(s, s)
            if not (_IDENT.fullmatch(s) or s in {"<->", "->", "<=", "!=", "(", ")", ".", ",", "="}):
                raise ParseError(f"unexpected character {s!r}", line, col)
            toks.append(_Tok(s, line, col))
        for ch in m.group(0):
            if ch == "\n":
                line, col = line + 1, 1
            else:
                col += 1
    toks.append(_Tok("<eof>", line, col))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self, k: int = 0) -> _Tok:
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def next(self) -> _Tok:
        t = self.peek()
        self.i += 1
        return t

    def expect(self, text: str) -> _Tok:
        t = self.next()
        if t.text != text:
            raise ParseError(f"expected {text!r}, found {t.text!r}", t.line, t.col)
        return t

    def error(self, msg: str):
        t = self.peek()
        raise ParseError(msg, t.line, t.col)

    def formula(self):
        t = self.peek()
        if t.text in ("forall", "exists"):
            self.next()
            names = []
            while _IDENT.fullmatch(self.peek().text) and self.peek().text not in _KEYWORDS:
                names.append(self.next().text)
            if not names:
                self.error("expected a variable name after quantifier")
            bound = None
            if self.peek().text == "in":
                self.next()
                bound = self.term()
            if self.peek().text not in (".", ","):
                self.error("expected '.' after quantifier binders")
            self.next()
            body = self.formula()
            for name in reversed(names):
                body = NQuant(t.text, name, body, bound)
            return body
        return self.iff()

    def iff(self):
        lhs = self.imp()
        if self.peek().text == "<->":
            self.next()
            return NBin("iff", lhs, self.imp())
        return lhs

    def imp(self):
        lhs = self.disj()
        if self.peek().text == "->":
            self.next()
            return NBin("imp", lhs, self.imp_rhs())
        return lhs

    def imp_rhs(self):
        if self.peek().text in ("forall", "exists"):
            return self.formula()
        return self.imp()

    def disj(self):
        lhs = self.conj()
        while self.peek().text == "or":
            self.next()
            lhs = NBin("or", lhs, self.operand(self.conj))
        return lhs

    def conj(self):
        lhs = self.unary()
        while self.peek().text == "and":
            self.next()
            lhs = NBin("and", lhs, self.operand(self.unary))
        return lhs

    def operand(self, fallback):
        # a quantifier on the right of a connective swallows the rest
        if self.peek().text in ("forall", "exists"):
            return self.formula()
        return fallback()

    def unary(self):
        t = self.peek()
        if t.text == "not":
            self.next()
            return NNot(self.operand(self.unary))
        if t.text in ("forall", "exists"):
            return self.formula()
        if t.text == "(":
            self.next()
            f = self.formula()
            self.expect(")")
            return f
        if t.text == "false":
            self.next()
            return NFalse()
        if t.text == "true":
            self.next()
            return NTrue()
        lhs = self.term()
        if self.peek().text not in _INFIX:
            # NAME or NAME(args) with no relation after it is a predicate
            if isinstance(lhs, NApp):
                return NPred(lhs.fn, lhs.args)
            return NPred(lhs.name, ())
        op = self.next()
        if op.text not in _INFIX:
            raise ParseError(f"expected a relation after term, found {op.text!r}", op.line, op.col)
        rhs = self.term()
        if op.text == "=":
            return NEq(lhs, rhs)
        if op.text == "!=":
            return NNot(NEq(lhs, rhs))
        return NPred({"<=": "leq"}.get(op.text, op.text), (lhs, rhs))

    def args(self):
        self.expect("(")
        out = []
        if self.peek().text != ")":
            out.append(self.term())
            while self.peek().text == ",":
                self.next()
                out.append(self.term())
        self.expect(")")
        return tuple(out)

    def term(self):
        t = self.next()
        if not _IDENT.fullmatch(t.text) or t.text in _KEYWORDS:
            raise ParseError(f"expected a term, found {t.text!r}", t.line, t.col)
        if self.peek().text == "(":
            return NApp(t.text, self.args())
        return NVar(t.text)


_INFIX = ("=", "!=", "in", "subset", "<=")


def parse(text: str) -> NamedFormula:
    """Parse surface text into a named formula; errors carry line and column."""
    p = _Parser(text)
    f = p.formula()
    if p.peek().text != "<eof>":
        p.error(f"unexpected {p.peek().text!r} after formula")
    return f


# ---------------------------------------------------------------------------
# Definition table and expansion

DEFINITIONS: dict[str, tuple[tuple[str, ...], str]] = {
    "subset": (("x", "y"), "forall z. z in x -> z in y"),
    "epsilon_transitive": (("z",), "forall x. x in z -> x subset z"),
    "epsilon_trichotomy": (("z",), "forall x y in z. x = y or x in y or y in x"),
    "epsilon_wellfounded": (
        ("z",),
        "forall x. x subset z -> x != empty -> exists y in x. forall w in x. not w in y",
    ),
    "Ord": (("z",), "epsilon_trichotomy(z) and epsilon_wellfounded(z) and epsilon_transitive(z)"),
    # x <= y: some f is a function from a subset of y onto x
    "leq": (
        ("x", "y"),
        "exists f. (forall p in f. exists a in y. exists b in x. p = pair(a, b))"
        " and (forall a b c. pair(a, b) in f -> pair(a, c) in f -> b = c)"
        " and (forall b in x. exists a in y. pair(a, b) in f)",
    ),
}

_PARSED_DEFS: dict = {}


def _definition(name: str):
    if name not in _PARSED_DEFS:
        params, body = DEFINITIONS[name]
        _PARSED_DEFS[name] = (params, parse(body))
    return _PARSED_DEFS[name]


class _Fresh:
    def __init__(self):
        self.counter = itertools.count()

    def __call__(self, base: str) -> str:
        return f"{base.rstrip('0123456789_')}_{next(self.counter)}"


def expand(f: NamedFormula) -> NamedFormula:
    """Expand bounded quantifiers and defined predicates into primitive named syntax."""
    return _expand(f, _Fresh())


def _expand(f, fresh):
    if isinstance(f, (NFalse, NTrue, NEq)):
        return f
    if isinstance(f, NNot):
        return NNot(_expand(f.body, fresh))
    if isinstance(f, NBin):
        return NBin(f.op, _expand(f.lhs, fresh), _expand(f.rhs, fresh))
    if isinstance(f, NQuant):
        body = _expand(f.body, fresh)
        if f.bound is not None:
            guard = NPred("in", (NVar(f.var), f.bound))
            body = NBin("imp" if f.kind == "forall" else "and", guard, body)
        return NQuant(f.kind, f.var, body)
    if isinstance(f, NPred):
        if f.name not in DEFINITIONS:
            return f
        params, body = _definition(f.name)
        if len(params) != len(f.args):
            raise ElaborationError(f"{f.name} expects {len(params)} arguments")
        inst = _instantiate(body, dict(zip(params, f.args)), fresh)
        return _expand(inst, fresh)
    raise TypeError(f"not a named formula: {f!r}")


def _instantiate(f, mapping: dict, fresh):
    """Substitute terms for names, renaming every binder so nothing is captured."""
    if isinstance(f, (NFalse, NTrue)):
        return f
    if isinstance(f, NEq):
        return NEq(_subst_term(f.lhs, mapping), _subst_term(f.rhs, mapping))
    if isinstance(f, NPred):
        return NPred(f.name, tuple(_subst_term(t, mapping) for t in f.args))
    if isinstance(f, NNot):
        return NNot(_instantiate(f.body, mapping, fresh))
    if isinstance(f, NBin):
        return NBin(f.op, _instantiate(f.lhs, mapping, fresh), _instantiate(f.rhs, mapping, fresh))
    if isinstance(f, NQuant):
        new = fresh(f.var)
        bound = None if f.bound is None else _subst_term(f.bound, mapping)
        inner = dict(mapping)
        inner[f.var] = NVar(new)
        return NQuant(f.kind, new, _instantiate(f.body, inner, fresh), bound)
    raise TypeError(f"not a named formula: {f!r}")


def _subst_term(t, mapping):
    if isinstance(t, NVar):
        return mapping.get(t.name, t)
    return NApp(t.fn, tuple(_subst_term(a, mapping) for a in t.args))


# ---------------------------------------------------------------------------
# Elaboration to de Bruijn form


def elaborate(f, lang: Language = LZFC, free: Sequence[str] = ()):
    """De Bruijn formula for a named formula (or surface text).

    ``free`` lists names allowed to occur free; ``free[j]`` becomes free
    variable ``j``. Innermost binders shadow outer ones.
    """
    if isinstance(f, str):
        f = parse(f)
    return _elab(expand(f), lang, [], list(free))


def _elab(f, lang, scope: list, free: list):
    depth = len(scope)
    if isinstance(f, NFalse):
        return FALSUM
    if isinstance(f, NTrue):
        return not_(FALSUM)
    if isinstance(f, NEq):
        return Equal(_elab_term(f.lhs, lang, scope, free), _elab_term(f.rhs, lang, scope, free))
    if isinstance(f, NPred):
        try:
            sym = lang.rel_symbol(f.name)
        except KeyError as exc:
            raise ElaborationError(exc.args[0] if exc.args else f"unknown relation {f.name!r}") from None
        if sym.arity != len(f.args):
            raise ElaborationError(f"{f.name} expects {sym.arity} arguments")
        return apply(Rel(sym), *(_elab_term(t, lang, scope, free) for t in f.args))
    if isinstance(f, NNot):
        return not_(_elab(f.body, lang, scope, free))
    if isinstance(f, NBin):
        a, b = _elab(f.lhs, lang, scope, free), _elab(f.rhs, lang, scope, free)
        return {"and": and_, "or": or_, "imp": Imp, "iff": iff}[f.op](a, b)
    if isinstance(f, NQuant):
        body = _elab(f.body, lang, scope + [f.var], free)
        return All(body) if f.kind == "forall" else ex(body)
    raise TypeError(f"not a named formula: {f!r}")


def _elab_term(t, lang, scope, free):
    if isinstance(t, NVar):
        for k, name in enumerate(reversed(scope)):
            if name == t.name:
                return Var(k)
        if t.name in free:
            return Var(len(scope) + free.index(t.name))
        kind_sym = _maybe_symbol(lang, t.name)
        if kind_sym is not None and kind_sym.arity == 0:
            return Func(kind_sym)
        raise ElaborationError(f"unbound name {t.name!r}")
    sym = _maybe_symbol(lang, t.fn)
    if sym is None:
        raise ElaborationError(f"unknown function symbol {t.fn!r}")
    if sym.arity != len(t.args):
        raise ElaborationError(f"{t.fn} expects {sym.arity} arguments")
    return apply(Func(sym), *(_elab_term(a, lang, scope, free) for a in t.args))


def _maybe_symbol(lang, name):
    try:
        kind, sym = lang.lookup(name)
    except KeyError:
        return None
    return sym if kind == "func" else None


# ---------------------------------------------------------------------------
# Printing de Bruijn formulas back to surface text


def to_text(f, lang: Language = LZFC) -> str:
    """Surface text using only primitive connectives.

    The binder at depth ``d`` is named ``v{d}``; free variable ``j`` is ``x{j}``.
    """
    return _show(f, lang, 0)


def _var_name(i: int, depth: int) -> str:
    return f"v{depth - 1 - i}" if i < depth else f"x{i - depth}"


def _show_term(t, lang, depth) -> str:
    if isinstance(t, Var):
        return _var_name(t.index, depth)
    head, args = t, []
    while isinstance(head, App):
        args.append(head.arg)
        head = head.head
    args.reverse()
    if isinstance(head, Var):
        raise ValueError("variables cannot be applied")
    name = lang.func_name(head.symbol)
    if head.arity == 0:
        return name
    return f"{name}(" + ", ".join(_show_term(a, lang, depth) for a in args) + ")"


def _show(f, lang, depth) -> str:
    if isinstance(f, Falsum):
        return "false"
    if isinstance(f, Equal):
        return f"{_show_term(f.lhs, lang, depth)} = {_show_term(f.rhs, lang, depth)}"
    if isinstance(f, (Rel, AppRel)):
        head, args = f, []
        while isinstance(head, AppRel):
            args.append(head.arg)
            head = head.head
        args.reverse()
        name = lang.rel_name(head.symbol)
        shown = [_show_term(a, lang, depth) for a in args]
        if name == "in" and len(shown) == 2:
            return f"{shown[0]} in {shown[1]}"
        if not shown:
            return name
        return f"{name}(" + ", ".join(shown) + ")"
    if isinstance(f, Imp):
        lhs = _show(f.lhs, lang, depth)
        if isinstance(f.lhs, (Imp, All)):
            lhs = f"({lhs})"
        return f"{lhs} -> {_show(f.rhs, lang, depth)}"
    if isinstance(f, All):
        return f"forall v{depth}. {_show(f.body, lang, depth + 1)}"
    raise TypeError(f"not a formula: {f!r}")


def free_names(n: int) -> list[str]:
    return [f"x{j}" for j in range(n)]


# ---------------------------------------------------------------------------
# Axioms

AXIOM_TEXT: dict[str, str] = {
    "axiom_of_emptyset": "forall x. not (x in empty)",
    "axiom_of_ordered_pairs": "forall x y z w. pair(x, y) = pair(z, w) <-> x = z and y = w",
    "axiom_of_extensionality": "forall x y. (forall z. z in x <-> z in y) -> x = y",
    "axiom_of_union": "forall u x. x in U(u) <-> exists y in u. x in y",
    "axiom_of_powerset": "forall z y. y in P(z) <-> forall x in y. x in z",
    "axiom_of_infinity": (
        "empty in omega and (forall x in omega. exists y in omega. x in y)"
        " and (exists a. Ord(a) and omega = a)"
        " and (forall a. Ord(a) -> (empty in a and forall x in a. exists y in a. x in y) -> omega subset a)"
    ),
    "axiom_of_regularity": "forall x. x != empty -> exists y in x. forall z in x. not (z in y)",
    # the bounded "exists m in x" of the usual listing is read as "exists m in z"
    "zorns_lemma": (
        "forall z. z != empty"
        " -> (forall y. (y subset z and forall x1 x2 in y. x1 subset x2 or x2 subset x1) -> U(y) in z)"
        " -> exists m in z. forall x in z. m subset x -> m = x"
    ),
}

CH_TEXT = "forall x. Ord(x) -> x <= omega or P(omega) <= x"

COLLECTION_INSTANCES = {
    "axiom_of_collection[x = y]": ("x = y", ()),
    "axiom_of_collection[pair(x, p) = y]": ("pair(x, p) = y", ("p",)),
}


def zfc_axioms() -> dict:
    """The fixed axioms, elaborated. Collection is produced by :func:`axiom_of_collection`."""
    return {name: elaborate(text) for name, text in AXIOM_TEXT.items()}


def axiom_of_collection(phi, params: Sequence[str] = ()):
    """Instance of the collection scheme for ``phi(x, y, params...)``.

    ``phi`` is surface text or a named formula whose free names are among
    ``x``, ``y`` and ``params``.
    """
    if isinstance(phi, str):
        phi = parse(phi)
    used = _names_in(phi)
    bad = set(_free_named(phi)) - {"x", "y", *params} - _constant_names(LZFC)
    if bad:
        raise ElaborationError(f"collection formula has unexpected free names {sorted(bad)}")
    A = _fresh_name("A", used | set(params))
    Bn = _fresh_name("B", used | set(params) | {A})
    body = NBin(
        "imp",
        NQuant("forall", "x", NQuant("exists", "y", phi), NVar(A)),
        NQuant(
            "exists",
            Bn,
            NBin(
                "and",
                NQuant("forall", "x", NQuant("exists", "y", phi, NVar(Bn)), NVar(A)),
                NQuant("forall", "y", NQuant("exists", "x", phi, NVar(A)), NVar(Bn)),
            ),
        ),
    )
    f = NQuant("forall", A, body)
    for p in reversed(list(params)):
        f = NQuant("forall", p, f)
    return elaborate(f)


def _fresh_name(base, avoid):
    if base not in avoid:
        return base
    for k in itertools.count():
        if f"{base}{k}" not in avoid:
            return f"{base}{k}"


def _constant_names(lang):
    return set(lang.functions.get(0, ()))


def _names_in(f) -> set:
    out = set()

    def term(t):
        if isinstance(t, NVar):
            out.add(t.name)
        else:
            for a in t.args:
                term(a)

    def walk(g):
        if isinstance(g, NEq):
            term(g.lhs)
            term(g.rhs)
        elif isinstance(g, NPred):
            for a in g.args:
                term(a)
        elif isinstance(g, NNot):
            walk(g.body)
        elif isinstance(g, NBin):
            walk(g.lhs)
            walk(g.rhs)
        elif isinstance(g, NQuant):
            out.add(g.var)
            if g.bound is not None:
                term(g.bound)
            walk(g.body)

    walk(f)
    return out


def _free_named(f, bound=frozenset()) -> list:
    def term(t, b):
        if isinstance(t, NVar):
            return [] if t.name in b else [t.name]
        return [n for a in t.args for n in term(a, b)]

    if isinstance(f, (NFalse, NTrue)):
        return []
    if isinstance(f, NEq):
        return term(f.lhs, bound) + term(f.rhs, bound)
    if isinstance(f, NPred):
        return [n for a in f.args for n in term(a, bound)]
    if isinstance(f, NNot):
        return _free_named(f.body, bound)
    if isinstance(f, NBin):
        return _free_named(f.lhs, bound) + _free_named(f.rhs, bound)
    if isinstance(f, NQuant):
        outer = term(f.bound, bound) if f.bound is not None else []
        return outer + _free_named(f.body, bound | {f.var})
    raise TypeError(f"not a named formula: {f!r}")


def axiom_corpus() -> dict:
    """The fixed axioms plus two materialized collection instances (ten sentences)."""
    out = zfc_axioms()
    for name, (phi, params) in COLLECTION_INSTANCES.items():
        out[name] = axiom_of_collection(phi, params)
    return out


def ch_sentence():
    """CH with the ordinal predicate and the surjection order expanded."""
    return elaborate(CH_TEXT)


# ---------------------------------------------------------------------------
# Proof corpus over the demo language


def proof_corpus() -> list[tuple[str, frozenset, object, object]]:
    """Named ``(context, goal, tree)`` triples that pass the checker."""
    L = DEMO_LANGUAGE
    a, b, c = L.atom("a"), L.atom("b"), L.atom("c")
    zero = L.func("zero")
    s_zero = L.term("s", zero)
    V0, V1, V2 = Var(0), Var(1), Var(2)
    P = lambda t: L.atom("P", t)  # noqa: E731
    Q = lambda t: L.atom("Q", t)  # noqa: E731
    R = lambda t, u: L.atom("R", t, u)  # noqa: E731

    out = []

    def add(name, ctx, goal, tree):
        out.append((name, frozenset(ctx), goal, tree))

    add("identity", [], Imp(a, a), ImpI(a, Axm(a)))
    add("K", [], Imp(a, Imp(b, a)), ImpI(a, ImpI(b, Axm(a))))
    X, Y = Imp(a, Imp(b, c)), Imp(a, b)
    add(
        "S",
        [],
        Imp(X, Imp(Y, Imp(a, c))),
        ImpI(X, ImpI(Y, ImpI(a, ImpE(b, ImpE(a, Axm(X), Axm(a)), ImpE(a, Axm(Y), Axm(a)))))),
    )
    add(
        "implication_chain",
        [Imp(a, b), Imp(b, c)],
        Imp(a, c),
        ImpI(a, ImpE(b, Axm(Imp(b, c)), ImpE(a, Axm(Imp(a, b)), Axm(a)))),
    )
    add(
        "double_negation",
        [],
        Imp(not_(not_(a)), a),
        ImpI(not_(not_(a)), FalsumE(a, ImpE(not_(a), Axm(not_(not_(a))), Axm(not_(a))))),
    )
    add("ex_falso", [], Imp(FALSUM, a), ImpI(FALSUM, FalsumE(a, Axm(FALSUM))))
    add(
        "peirce",
        [],
        Imp(Imp(Imp(a, b), a), a),
        ImpI(
            Imp(Imp(a, b), a),
            FalsumE(
                a,
                ImpE(
                    a,
                    Axm(not_(a)),
                    ImpE(
                        Imp(a, b),
                        Axm(Imp(Imp(a, b), a)),
                        ImpI(a, FalsumE(b, ImpE(a, Axm(not_(a)), Axm(a)))),
                    ),
                ),
            ),
        ),
    )
    add(
        "contraposition",
        [Imp(a, b)],
        Imp(not_(b), not_(a)),
        ImpI(not_(b), ImpI(a, ImpE(b, Axm(not_(b)), ImpE(a, Axm(Imp(a, b)), Axm(a))))),
    )
    add("reflexivity", [], All(Equal(V0, V0)), AllI(Ref(V0)))
    all_P = All(P(V0))
    add("instantiation", [all_P], P(zero), AllE(P(V0), zero, Axm(all_P)))
    add(
        "symmetry",
        [],
        All(All(Imp(Equal(V1, V0), Equal(V0, V1)))),
        AllI(AllI(ImpI(Equal(V1, V0), Subst2(V1, V0, Equal(V0, V2), Axm(Equal(V1, V0)), Ref(V1))))),
    )
    add(
        "transitivity",
        [],
        All(All(All(Imp(Equal(V2, V1), Imp(Equal(V1, V0), Equal(V2, V0)))))),
        AllI(AllI(AllI(ImpI(
            Equal(V2, V1),
            ImpI(
                Equal(V1, V0),
                Subst2(V1, V0, Equal(Var(3), V0), Axm(Equal(V1, V0)), Axm(Equal(V2, V1))),
            ),
        )))),
    )
    PQ = All(Imp(P(V0), Q(V0)))
    add(
        "forall_distribution",
        [PQ, all_P],
        All(Q(V0)),
        AllI(ImpE(P(V0), AllE(Imp(P(V0), Q(V0)), V0, Axm(PQ)), AllE(P(V0), V0, Axm(all_P)))),
    )
    add(
        "congruence",
        [Equal(zero, s_zero), P(zero)],
        P(s_zero),
        Subst2(zero, s_zero, P(V0), Axm(Equal(zero, s_zero)), Axm(P(zero))),
    )
    not_all_not = All(not_(P(V0)))
    add(
        "exists_intro",
        [P(zero)],
        ex(P(V0)),
        ImpI(not_all_not, ImpE(P(zero), AllE(not_(P(V0)), zero, Axm(not_all_not)), Axm(P(zero)))),
    )
    sym_R = All(All(Imp(R(V1, V0), R(V0, V1))))
    step = AllE(All(Imp(R(V1, V0), R(V0, V1))), zero, Axm(sym_R))
    add(
        "relation_symmetry",
        [sym_R, R(zero, s_zero)],
        R(s_zero, zero),
        ImpE(R(zero, s_zero), AllE(Imp(R(zero, V0), R(V0, zero)), s_zero, step), Axm(R(zero, s_zero))),
    )
    return out


__all__ = [
    "LZFC",
    "DEMO_LANGUAGE",
    "NVar",
    "NApp",
    "NFalse",
    "NTrue",
    "NEq",
    "NPred",
    "NNot",
    "NBin",
    "NQuant",
    "ParseError",
    "ElaborationError",
    "parse",
    "expand",
    "elaborate",
    "to_text",
    "free_names",
    "DEFINITIONS",
    "AXIOM_TEXT",
    "CH_TEXT",
    "zfc_axioms",
    "axiom_of_collection",
    "axiom_corpus",
    "ch_sentence",
    "proof_corpus",
]
