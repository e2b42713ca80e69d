"""Arity-indexed first-order syntax with de Bruijn variables.

Preterms and preformulas are partially applied: a node of arity ``n`` becomes
a term (formula) once it has been applied to ``n`` terms. Arity is computed
when a node is built and ill-formed applications are rejected right there, so
every value that exists is well formed.

A variable ``Var(m)`` under ``k`` binders is bound when ``m < k`` and refers
to free variable ``m - k`` otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Union

from . import sexpr


class ArityError(ValueError):
    pass


class Symbol(NamedTuple):
    """Reference to a symbol: its arity and its position among symbols of that arity."""

    arity: int
    index: int


class Language:
    """Function and relation symbols stratified by arity."""

    def __init__(self, functions=None, relations=None, name: str = "L"):
        self.name = name
        self.functions = {a: tuple(ns) for a, ns in sorted((functions or {}).items())}
        self.relations = {a: tuple(ns) for a, ns in sorted((relations or {}).items())}
        self._by_name: dict[str, tuple[str, Symbol]] = {}
        for kind, table in (("func", self.functions), ("rel", self.relations)):
            for arity, names in table.items():
                if arity < 0:
                    raise ValueError(f"negative arity {arity}")
                if not names:
                    raise ValueError(f"arity {arity} maps to no {kind} symbols")
                for i, n in enumerate(names):
                    if n in self._by_name:
                        raise ValueError(f"duplicate symbol name {n!r}")
                    self._by_name[n] = (kind, Symbol(arity, i))

    def __repr__(self):
        return f"Language({self.name!r}, functions={self.functions}, relations={self.relations})"

    def __eq__(self, other):
        return (
            isinstance(other, Language)
            and self.functions == other.functions
            and self.relations == other.relations
        )

    def __hash__(self):
        return hash((tuple(self.functions.items()), tuple(self.relations.items())))

    def lookup(self, name: str) -> tuple[str, Symbol]:
        try:
            return self._by_name[name]
        except KeyError:
            raise KeyError(f"unknown symbol {name!r} in language {self.name}") from None

    def func_symbol(self, name: str) -> Symbol:
        kind, sym = self.lookup(name)
        if kind != "func":
            raise KeyError(f"{name!r} is a relation symbol")
        return sym

    def rel_symbol(self, name: str) -> Symbol:
        kind, sym = self.lookup(name)
        if kind != "rel":
            raise KeyError(f"{name!r} is a function symbol")
        return sym

    def func_name(self, sym: Symbol) -> str:
        return self.functions[sym.arity][sym.index]

    def rel_name(self, sym: Symbol) -> str:
        return self.relations[sym.arity][sym.index]

    def function_symbols(self) -> list[Symbol]:
        return [Symbol(a, i) for a, ns in self.functions.items() for i in range(len(ns))]

    def relation_symbols(self) -> list[Symbol]:
        return [Symbol(a, i) for a, ns in self.relations.items() for i in range(len(ns))]

    # convenience constructors
    def func(self, name: str) -> "Func":
        return Func(self.func_symbol(name))

    def rel(self, name: str) -> "Rel":
        return Rel(self.rel_symbol(name))

    def term(self, name: str, *args: "Preterm") -> "Preterm":
        return apply(self.func(name), *args)

    def atom(self, name: str, *args: "Preterm") -> "Preformula":
        return apply(self.rel(name), *args)


# ---------------------------------------------------------------------------
# Nodes. Each caches its hash; equality is structural.


class _Node:
    __slots__ = ()

    def __hash__(self):
        return self._hash


@dataclass(frozen=True, eq=True)
class Var(_Node):
    index: int
    arity: int = field(init=False, repr=False, compare=False, default=0)
    _hash: int = field(init=False, repr=False, compare=False, default=0)

    def __post_init__(self):
        if self.index < 0:
            raise ValueError("variable index must be non-negative")
        object.__setattr__(self, "_hash", hash(("var", self.index)))

    __hash__ = _Node.__hash__


@dataclass(frozen=True, eq=True)
class Func(_Node):
    symbol: Symbol
    arity: int = field(init=False, repr=False, compare=False, default=0)
    _hash: int = field(init=False, repr=False, compare=False, default=0)

    def __post_init__(self):
        object.__setattr__(self, "symbol", Symbol(*self.symbol))
        object.__setattr__(self, "arity", self.symbol.arity)
        object.__setattr__(self, "_hash", hash(("func", self.symbol)))

    __hash__ = _Node.__hash__


@dataclass(frozen=True, eq=True)
class App(_Node):
    head: "Preterm"
    arg: "Preterm"
    arity: int = field(init=False, repr=False, compare=False, default=0)
    _hash: int = field(init=False, repr=False, compare=False, default=0)

    def __post_init__(self):
        if not isinstance(self.head, (Var, Func, App)) or not isinstance(self.arg, (Var, Func, App)):
            raise TypeError("app expects preterms")
        if self.head.arity < 1:
            raise ArityError("cannot apply a preterm of arity 0")
        if self.arg.arity != 0:
            raise ArityError("argument of app must be a term (arity 0)")
        object.__setattr__(self, "arity", self.head.arity - 1)
        object.__setattr__(self, "_hash", hash(("app", self.head._hash, self.arg._hash)))

    __hash__ = _Node.__hash__


@dataclass(frozen=True, eq=True)
class Falsum(_Node):
    arity: int = field(init=False, repr=False, compare=False, default=0)
    _hash: int = field(init=False, repr=False, compare=False, default=0)

    def __post_init__(self):
        object.__setattr__(self, "_hash", hash("falsum"))

    __hash__ = _Node.__hash__


@dataclass(frozen=True, eq=True)
class Equal(_Node):
    lhs: "Preterm"
    rhs: "Preterm"
    arity: int = field(init=False, repr=False, compare=False, default=0)
    _hash: int = field(init=False, repr=False, compare=False, default=0)

    def __post_init__(self):
        for t in (self.lhs, self.rhs):
            if not isinstance(t, (Var, Func, App)):
                raise TypeError("equal expects terms")
            if t.arity != 0:
                raise ArityError("equal expects fully applied terms")
        object.__setattr__(self, "_hash", hash(("eq", self.lhs._hash, self.rhs._hash)))

    __hash__ = _Node.__hash__


@dataclass(frozen=True, eq=True)
class Rel(_Node):
    symbol: Symbol
    arity: int = field(init=False, repr=False, compare=False, default=0)
    _hash: int = field(init=False, repr=False, compare=False, default=0)

    def __post_init__(self):
        object.__setattr__(self, "symbol", Symbol(*self.symbol))
        object.__setattr__(self, "arity", self.symbol.arity)
        object.__setattr__(self, "_hash", hash(("rel", self.symbol)))

    __hash__ = _Node.__hash__


@dataclass(frozen=True, eq=True)
class AppRel(_Node):
    head: "Preformula"
    arg: "Preterm"
    arity: int = field(init=False, repr=False, compare=False, default=0)
    _hash: int = field(init=False, repr=False, compare=False, default=0)

    def __post_init__(self):
        if not isinstance(self.head, (Rel, AppRel)):
            raise TypeError("apprel expects a partially applied relation")
        if not isinstance(self.arg, (Var, Func, App)):
            raise TypeError("apprel argument must be a term")
        if self.head.arity < 1:
            raise ArityError("cannot apply a preformula of arity 0")
        if self.arg.arity != 0:
            raise ArityError("argument of apprel must be a term (arity 0)")
        object.__setattr__(self, "arity", self.head.arity - 1)
        object.__setattr__(self, "_hash", hash(("apprel", self.head._hash, self.arg._hash)))

    __hash__ = _Node.__hash__


@dataclass(frozen=True, eq=True)
class Imp(_Node):
    lhs: "Preformula"
    rhs: "Preformula"
    arity: int = field(init=False, repr=False, compare=False, default=0)
    _hash: int = field(init=False, repr=False, compare=False, default=0)

    def __post_init__(self):
        for f in (self.lhs, self.rhs):
            if not isinstance(f, _FORMULA_TYPES):
                raise TypeError("imp expects formulas")
            if f.arity != 0:
                raise ArityError("imp expects fully applied formulas")
        object.__setattr__(self, "_hash", hash(("imp", self.lhs._hash, self.rhs._hash)))

    __hash__ = _Node.__hash__


@dataclass(frozen=True, eq=True)
class All(_Node):
    body: "Preformula"
    arity: int = field(init=False, repr=False, compare=False, default=0)
    _hash: int = field(init=False, repr=False, compare=False, default=0)

    def __post_init__(self):
        if not isinstance(self.body, _FORMULA_TYPES):
            raise TypeError("all expects a formula")
        if self.body.arity != 0:
            raise ArityError("all expects a fully applied formula")
        object.__setattr__(self, "_hash", hash(("all", self.body._hash)))

    __hash__ = _Node.__hash__


Preterm = Union[Var, Func, App]
Preformula = Union[Falsum, Equal, Rel, AppRel, Imp, All]
_TERM_TYPES = (Var, Func, App)
_FORMULA_TYPES = (Falsum, Equal, Rel, AppRel, Imp, All)

FALSUM = Falsum()


def is_term(x) -> bool:
    return isinstance(x, _TERM_TYPES) and x.arity == 0


def is_formula(x) -> bool:
    return isinstance(x, _FORMULA_TYPES) and x.arity == 0


def apply(head, *args):
    """Apply a preterm or preformula to terms, left to right."""
    node = head
    for a in args:
        node = App(node, a) if isinstance(node, _TERM_TYPES) else AppRel(node, a)
    return node


# ---------------------------------------------------------------------------
# Derived connectives (classical encodings).


def not_(f):
    return Imp(f, FALSUM)


def or_(f, g):
    return Imp(not_(f), g)


def and_(f, g):
    return not_(or_(not_(f), not_(g)))


def iff(f, g):
    return and_(Imp(f, g), Imp(g, f))


def ex(f):
    return not_(All(not_(f)))


def conj(fs: Iterable):
    """Right-nested conjunction of a non-empty sequence."""
    fs = list(fs)
    out = fs[-1]
    for f in reversed(fs[:-1]):
        out = and_(f, out)
    return out


# ---------------------------------------------------------------------------
# Lifting and substitution.


def lift(t, n: int, m: int = 0):
    """Increase every variable index ``>= m`` by ``n`` (cutoff shifts under binders)."""
    if n == 0:
        return t
    return _lift(t, n, m)


def _lift(t, n, m):
    if isinstance(t, Var):
        return Var(t.index + n) if t.index >= m else t
    if isinstance(t, (Func, Rel, Falsum)):
        return t
    if isinstance(t, App):
        return App(_lift(t.head, n, m), _lift(t.arg, n, m))
    if isinstance(t, AppRel):
        return AppRel(_lift(t.head, n, m), _lift(t.arg, n, m))
    if isinstance(t, Equal):
        return Equal(_lift(t.lhs, n, m), _lift(t.rhs, n, m))
    if isinstance(t, Imp):
        return Imp(_lift(t.lhs, n, m), _lift(t.rhs, n, m))
    if isinstance(t, All):
        return All(_lift(t.body, n, m + 1))
    raise TypeError(f"not a syntax node: {t!r}")


def subst(t, s, n: int = 0):
    """Replace the ``n``-th free variable by the term ``s``.

    Under ``k`` binders the variable is ``Var(n + k)`` and is replaced by
    ``lift(s, n + k)``; indices above ``n + k`` drop by one.
    """
    if not is_term(s):
        raise ArityError("substituted value must be a term")
    return _subst(t, s, n)


def _subst(t, s, n):
    if isinstance(t, Var):
        if t.index < n:
            return t
        if t.index > n:
            return Var(t.index - 1)
        return lift(s, n, 0)
    if isinstance(t, (Func, Rel, Falsum)):
        return t
    if isinstance(t, App):
        return App(_subst(t.head, s, n), _subst(t.arg, s, n))
    if isinstance(t, AppRel):
        return AppRel(_subst(t.head, s, n), _subst(t.arg, s, n))
    if isinstance(t, Equal):
        return Equal(_subst(t.lhs, s, n), _subst(t.rhs, s, n))
    if isinstance(t, Imp):
        return Imp(_subst(t.lhs, s, n), _subst(t.rhs, s, n))
    if isinstance(t, All):
        return All(_subst(t.body, s, n + 1))
    raise TypeError(f"not a syntax node: {t!r}")


def bounded_by(t, l: int) -> bool:
    """True iff every free variable index is below ``l``."""
    if isinstance(t, Var):
        return t.index < l
    if isinstance(t, (Func, Rel, Falsum)):
        return True
    if isinstance(t, (App, AppRel)):
        return bounded_by(t.head, l) and bounded_by(t.arg, l)
    if isinstance(t, (Equal, Imp)):
        return bounded_by(t.lhs, l) and bounded_by(t.rhs, l)
    if isinstance(t, All):
        return bounded_by(t.body, l + 1)
    raise TypeError(f"not a syntax node: {t!r}")


def is_sentence(f) -> bool:
    return is_formula(f) and bounded_by(f, 0)


def free_bound(t) -> int:
    """Smallest ``l`` with ``bounded_by(t, l)``."""
    if isinstance(t, Var):
        return t.index + 1
    if isinstance(t, (Func, Rel, Falsum)):
        return 0
    if isinstance(t, (App, AppRel)):
        return max(free_bound(t.head), free_bound(t.arg))
    if isinstance(t, (Equal, Imp)):
        return max(free_bound(t.lhs), free_bound(t.rhs))
    if isinstance(t, All):
        return max(free_bound(t.body) - 1, 0)
    raise TypeError(f"not a syntax node: {t!r}")


def universal_closure(f):
    for _ in range(free_bound(f)):
        f = All(f)
    return f


def size(t) -> int:
    """Number of constructor nodes."""
    if isinstance(t, (Var, Func, Rel, Falsum)):
        return 1
    if isinstance(t, (App, AppRel)):
        return 1 + size(t.head) + size(t.arg)
    if isinstance(t, (Equal, Imp)):
        return 1 + size(t.lhs) + size(t.rhs)
    if isinstance(t, All):
        return 1 + size(t.body)
    raise TypeError(f"not a syntax node: {t!r}")


# ---------------------------------------------------------------------------
# Canonical S-expression form.


def to_sexpr(t, lang: Language) -> sexpr.SExpr:
    if isinstance(t, Var):
        return ["var", str(t.index)]
    if isinstance(t, Func):
        return ["func", lang.func_name(t.symbol)]
    if isinstance(t, App):
        return ["app", to_sexpr(t.head, lang), to_sexpr(t.arg, lang)]
    if isinstance(t, Falsum):
        return "falsum"
    if isinstance(t, Equal):
        return ["eq", to_sexpr(t.lhs, lang), to_sexpr(t.rhs, lang)]
    if isinstance(t, Rel):
        return ["rel", lang.rel_name(t.symbol)]
    if isinstance(t, AppRel):
        return ["apprel", to_sexpr(t.head, lang), to_sexpr(t.arg, lang)]
    if isinstance(t, Imp):
        return ["imp", to_sexpr(t.lhs, lang), to_sexpr(t.rhs, lang)]
    if isinstance(t, All):
        return ["all", to_sexpr(t.body, lang)]
    raise TypeError(f"not a syntax node: {t!r}")


def dumps(t, lang: Language) -> str:
    return sexpr.write(to_sexpr(t, lang))


def term_from_sexpr(e: sexpr.SExpr, lang: Language):
    try:
        if isinstance(e, list) and e:
            tag = e[0]
            if tag == "var" and len(e) == 2 and isinstance(e[1], str) and e[1].isdigit():
                return Var(int(e[1]))
            if tag == "func" and len(e) == 2 and isinstance(e[1], str):
                return Func(lang.func_symbol(e[1]))
            if tag == "app" and len(e) == 3:
                return App(term_from_sexpr(e[1], lang), term_from_sexpr(e[2], lang))
    except (KeyError, TypeError, ArityError) as exc:
        raise sexpr.SExprError(str(exc)) from exc
    raise sexpr.SExprError(f"malformed term: {sexpr.write(e)}")


def formula_from_sexpr(e: sexpr.SExpr, lang: Language):
    if e == "falsum":
        return FALSUM
    try:
        if isinstance(e, list) and e:
            tag = e[0]
            if tag == "eq" and len(e) == 3:
                return Equal(term_from_sexpr(e[1], lang), term_from_sexpr(e[2], lang))
            if tag == "rel" and len(e) == 2 and isinstance(e[1], str):
                return Rel(lang.rel_symbol(e[1]))
            if tag == "apprel" and len(e) == 3:
                return AppRel(formula_from_sexpr(e[1], lang), term_from_sexpr(e[2], lang))
            if tag == "imp" and len(e) == 3:
                return Imp(formula_from_sexpr(e[1], lang), formula_from_sexpr(e[2], lang))
            if tag == "all" and len(e) == 2:
                return All(formula_from_sexpr(e[1], lang))
    except (KeyError, TypeError, ArityError) as exc:
        raise sexpr.SExprError(str(exc)) from exc
    raise sexpr.SExprError(f"malformed formula: {sexpr.write(e)}")


def loads_term(text: str, lang: Language):
    return term_from_sexpr(sexpr.read(text), lang)


def loads_formula(text: str, lang: Language):
    return formula_from_sexpr(sexpr.read(text), lang)


# ---------------------------------------------------------------------------
# Language files: one line per arity, ``func ARITY NAME...`` or ``rel ARITY NAME...``.


def dump_language(lang: Language) -> str:
    lines = [f"language {lang.name}"]
    lines += [f"func {a} " + " ".join(ns) for a, ns in lang.functions.items()]
    lines += [f"rel {a} " + " ".join(ns) for a, ns in lang.relations.items()]
    return "\n".join(lines)


def load_language(text: str) -> Language:
    name = "L"
    funcs: dict = {}
    rels: dict = {}
    for ln in text.splitlines():
        parts = ln.split("#", 1)[0].split()
        if not parts:
            continue
        if parts[0] == "language" and len(parts) == 2:
            name = parts[1]
        elif parts[0] in ("func", "rel") and len(parts) >= 3 and parts[1].isdigit():
            table = funcs if parts[0] == "func" else rels
            table.setdefault(int(parts[1]), []).extend(parts[2:])
        else:
            raise ValueError(f"bad language line: {ln!r}")
    return Language(funcs, rels, name=name)
