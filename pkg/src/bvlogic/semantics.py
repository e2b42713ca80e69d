"""Finite Boolean-valued structures, realization, forcing and the soundness check."""

from __future__ import annotations

import itertools
import os
import random
from functools import lru_cache
from typing import Callable, Iterable, Optional, Sequence

import numpy as np

from . import boolalg
from .boolalg import FinCBA
from .errors import guard
from .proof import ProofTree, diagnose
from .syntax import (
    All,
    App,
    AppRel,
    Equal,
    Falsum,
    Func,
    Imp,
    Language,
    Rel,
    Symbol,
    Var,
    bounded_by,
    free_bound,
    is_sentence,
    load_language,
)


class PreconditionError(ValueError):
    """An operation was called outside its preconditions."""


class BStructure:
    """A finite carrier ``0..size-1`` with B-valued relations and a graded equality.

    ``funcs`` maps each function symbol to an integer array of shape
    ``(size,) * arity`` holding carrier indices; ``rels`` maps each relation
    symbol to an array of the same shape holding algebra elements; ``eq`` is a
    ``(size, size)`` array of algebra elements.
    """

    def __init__(self, language: Language, algebra: FinCBA, size: int, funcs: dict, rels: dict, eq):
        if size < 1:
            raise ValueError("carrier must be non-empty")
        self.language = language
        self.algebra = algebra
        self.size = size
        self.funcs = {}
        self.rels = {}
        for sym in language.function_symbols():
            arr = np.asarray(funcs[sym] if sym in funcs else funcs[language.func_name(sym)], dtype=np.int64)
            if arr.shape != (size,) * sym.arity:
                raise ValueError(f"table for {language.func_name(sym)} has shape {arr.shape}")
            if arr.size and (arr.min() < 0 or arr.max() >= size):
                raise ValueError(f"table for {language.func_name(sym)} leaves the carrier")
            self.funcs[sym] = arr
        for sym in language.relation_symbols():
            arr = np.asarray(rels[sym] if sym in rels else rels[language.rel_name(sym)], dtype=np.int64)
            if arr.shape != (size,) * sym.arity:
                raise ValueError(f"table for {language.rel_name(sym)} has shape {arr.shape}")
            if arr.size and (arr.min() < 0 or arr.max() >= algebra.size):
                raise ValueError(f"table for {language.rel_name(sym)} leaves the algebra")
            self.rels[sym] = arr
        self.eq = np.asarray(eq, dtype=np.int64)
        if self.eq.shape != (size, size):
            raise ValueError("equality table must be size x size")
        if self.eq.min() < 0 or self.eq.max() >= algebra.size:
            raise ValueError("equality table leaves the algebra")

    def __repr__(self):
        return f"<BStructure {self.language.name} over {self.algebra.name}, carrier {self.size}>"

    @classmethod
    def from_callables(cls, language, algebra, size, funcs=None, rels=None, eq=None):
        """Build tables from Python callables keyed by symbol name.

        ``eq`` defaults to the discrete equality (top on the diagonal, bottom elsewhere).
        """
        funcs = funcs or {}
        rels = rels or {}
        ftab = {}
        for sym in language.function_symbols():
            fn = funcs[language.func_name(sym)]
            ftab[sym] = _tabulate(fn, size, sym.arity)
        rtab = {}
        for sym in language.relation_symbols():
            fn = rels[language.rel_name(sym)]
            rtab[sym] = _tabulate(fn, size, sym.arity)
        if eq is None:
            eqt = [[algebra.top if x == y else algebra.bot for y in range(size)] for x in range(size)]
        else:
            eqt = [[eq(x, y) for y in range(size)] for x in range(size)]
        return cls(language, algebra, size, ftab, rtab, eqt)


def _tabulate(fn, size, arity):
    if arity == 0:
        return np.asarray(fn() if callable(fn) else fn, dtype=np.int64)
    out = np.empty((size,) * arity, dtype=np.int64)
    for args in itertools.product(range(size), repeat=arity):
        out[args] = fn(*args)
    return out


# ---------------------------------------------------------------------------
# Validation


def structure_failure(S: BStructure) -> Optional[str]:
    """First violated congruence law, or None.

    Function and relation congruence are checked one argument position at a
    time. Given transitivity this is equivalent to the all-arguments form:
    change the arguments one by one and chain the inequalities.
    """
    guard(S.size, 32, "structure carrier size")
    guard(S.algebra.size, 1 << 8, "algebra carrier size")
    B, E, n = S.algebra, S.eq, S.size
    for x in range(n):
        if E[x, x] != B.top:
            return f"reflexivity fails at {x}"
    for x in range(n):
        for y in range(n):
            if E[x, y] != E[y, x]:
                return f"symmetry fails at ({x}, {y})"
    for x in range(n):
        for y in range(n):
            exy = int(E[x, y])
            for z in range(n):
                if not B.le(B.meet(exy, int(E[y, z])), int(E[x, z])):
                    return f"transitivity fails at ({x}, {y}, {z})"
    lang = S.language
    for sym, table in S.funcs.items():
        for args in itertools.product(range(n), repeat=sym.arity):
            fx = int(table[args])
            for i in range(sym.arity):
                for y in range(n):
                    other = args[:i] + (y,) + args[i + 1:]
                    if not B.le(int(E[args[i], y]), int(E[fx, int(table[other])])):
                        return f"function congruence fails for {lang.func_name(sym)} at {args} vs {other}"
    for sym, table in S.rels.items():
        for args in itertools.product(range(n), repeat=sym.arity):
            rx = int(table[args])
            for i in range(sym.arity):
                for y in range(n):
                    other = args[:i] + (y,) + args[i + 1:]
                    if not B.le(B.meet(int(E[args[i], y]), rx), int(table[other])):
                        return f"relation congruence fails for {lang.rel_name(sym)} at {args} vs {other}"
    return None


def validate_structure(S: BStructure) -> tuple[bool, Optional[str]]:
    msg = structure_failure(S)
    return msg is None, msg


# ---------------------------------------------------------------------------
# Realization


def realize_term(S: BStructure, t, v: Sequence[int], args: Sequence[int] = ()) -> int:
    """Carrier element denoted by ``t`` under assignment ``v`` (``v[i]`` is variable ``i``)."""
    if len(args) != t.arity:
        raise PreconditionError(f"expected {t.arity} arguments, got {len(args)}")
    if not bounded_by(t, len(v)):
        raise PreconditionError("term has free variables outside the assignment")
    return _term(S, t, tuple(v), tuple(args))


def _term(S, t, v, args):
    if isinstance(t, Var):
        return v[t.index]
    if isinstance(t, Func):
        return int(S.funcs[t.symbol][args])
    # App: the argument is consumed first, ahead of the remaining ones
    return _term(S, t.head, v, (_term(S, t.arg, v, ()),) + args)


def realize_formula(S: BStructure, phi, v: Sequence[int] = (), args: Sequence[int] = ()) -> int:
    """Truth value of ``phi`` in the algebra of ``S``."""
    if len(args) != phi.arity:
        raise PreconditionError(f"expected {phi.arity} arguments, got {len(args)}")
    if not bounded_by(phi, len(v)):
        raise PreconditionError("formula has free variables outside the assignment")
    return _Realizer(S).formula(phi, tuple(v), tuple(args))


_free_bound = lru_cache(maxsize=1 << 16)(free_bound)


class _Realizer:
    """One evaluation pass; caches values per (formula, assignment)."""

    def __init__(self, S: BStructure):
        self.S = S
        self.B = S.algebra
        self.carrier = range(S.size)
        self.cache: dict = {}

    def formula(self, phi, v, args):
        # only the variables phi can see matter, so trim the assignment
        key = (phi, v[: _free_bound(phi)], args)
        hit = self.cache.get(key)
        if hit is not None:
            return hit
        S, B = self.S, self.B
        if isinstance(phi, Falsum):
            out = B.bot
        elif isinstance(phi, Equal):
            out = int(S.eq[_term(S, phi.lhs, v, ()), _term(S, phi.rhs, v, ())])
        elif isinstance(phi, Rel):
            out = int(S.rels[phi.symbol][args])
        elif isinstance(phi, AppRel):
            out = self.formula(phi.head, v, (_term(S, phi.arg, v, ()),) + args)
        elif isinstance(phi, Imp):
            out = B.imp(self.formula(phi.lhs, v, ()), self.formula(phi.rhs, v, ()))
        elif isinstance(phi, All):
            out = B.inf(self.formula(phi.body, (m,) + v, ()) for m in self.carrier)
        else:
            raise TypeError(f"not a formula: {phi!r}")
        self.cache[key] = out
        return out


def sentence_value(S: BStructure, phi) -> int:
    if not is_sentence(phi):
        raise PreconditionError("expected a sentence")
    return _Realizer(S).formula(phi, (), ())


def forces(S: BStructure, gamma: int, phi) -> bool:
    """``gamma <= [[phi]]``."""
    return S.algebra.le(gamma, sentence_value(S, phi))


def validate_soundness(S: BStructure, ctx: Iterable, phi, tree: ProofTree) -> bool:
    """Compare the meet of the context's values with the value of ``phi``.

    Preconditions (a checking derivation, closed formulas, a valid non-empty
    structure) raise :class:`PreconditionError`. A ``False`` return means the
    semantics disagrees with the proof checker, which is a bug.
    """
    ctx = list(ctx)
    failure = diagnose(tree, ctx, phi)
    if failure is not None:
        raise PreconditionError(f"proof does not check: {failure.path}: {failure.message}")
    for f in ctx + [phi]:
        if not is_sentence(f):
            raise PreconditionError("context and goal must be sentences")
    msg = structure_failure(S)
    if msg:
        raise PreconditionError(f"invalid structure: {msg}")
    r = _Realizer(S)
    B = S.algebra
    lhs = B.inf(r.formula(f, (), ()) for f in ctx)
    return B.le(lhs, r.formula(phi, (), ()))


# ---------------------------------------------------------------------------
# Random valid structures


def random_structure(language: Language, algebra: FinCBA, size: int, rng: random.Random) -> BStructure:
    """A random structure that satisfies every congruence law by construction.

    Function tables are drawn first. For each atom of the algebra a random
    partition of the carrier is closed under the functions; equality holds at
    an atom exactly when two elements share a block, and each relation at an
    atom is a union of blocks.
    """
    n = size
    funcs = {}
    for sym in language.function_symbols():
        funcs[sym] = np.array(
            [rng.randrange(n) for _ in range(n**sym.arity)], dtype=np.int64
        ).reshape((n,) * sym.arity)
    atoms = algebra.atoms()
    partitions = []
    for _ in atoms:
        blocks = rng.randint(1, n)
        parent = [rng.randrange(blocks) for _ in range(n)]
        partitions.append(_close_under(funcs, _canonical_blocks(parent), n))
    eq = np.empty((n, n), dtype=np.int64)
    for x in range(n):
        for y in range(n):
            eq[x, y] = algebra.sup(a for a, part in zip(atoms, partitions) if part[x] == part[y])
    rels = {}
    for sym in language.relation_symbols():
        table = np.empty((n,) * sym.arity, dtype=np.int64)
        picks = []
        for part in partitions:
            nblocks = max(part) + 1
            chosen = {
                cls for cls in itertools.product(range(nblocks), repeat=sym.arity) if rng.random() < 0.5
            }
            picks.append((part, chosen))
        for args in itertools.product(range(n), repeat=sym.arity):
            table[args] = algebra.sup(
                a
                for a, (part, chosen) in zip(atoms, picks)
                if tuple(part[x] for x in args) in chosen
            )
        rels[sym] = table
    return BStructure(language, algebra, n, funcs, rels, eq)


def _canonical_blocks(labels: list[int]) -> list[int]:
    seen: dict = {}
    return [seen.setdefault(x, len(seen)) for x in labels]


def _close_under(funcs: dict, blocks: list[int], n: int) -> list[int]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)
            return True
        return False

    for x in range(n):
        for y in range(x + 1, n):
            if blocks[x] == blocks[y]:
                union(x, y)
    changed = True
    while changed:
        changed = False
        for sym, table in funcs.items():
            for args in itertools.product(range(n), repeat=sym.arity):
                for i in range(sym.arity):
                    for y in range(n):
                        if y != args[i] and find(y) == find(args[i]):
                            other = args[:i] + (y,) + args[i + 1:]
                            changed |= union(int(table[args]), int(table[other]))
    return _canonical_blocks([find(x) for x in range(n)])


# ---------------------------------------------------------------------------
# Structure files


def dump_structure(S: BStructure, language_ref: str, algebra_ref: str) -> str:
    """Text form: header references, carrier size, then one table per symbol.

    Tables are flattened in lexicographic argument order with the last
    argument varying along each row; nullary tables are a single value.
    """
    lines = ["structure", f"language {language_ref}", f"algebra {algebra_ref}", f"carrier {S.size}", "eq"]
    lines += [" ".join(map(str, row)) for row in S.eq.tolist()]
    for sym, table in S.funcs.items():
        lines.append(f"func {S.language.func_name(sym)} {sym.arity}")
        lines += _table_rows(table, S.size)
    for sym, table in S.rels.items():
        lines.append(f"rel {S.language.rel_name(sym)} {sym.arity}")
        lines += _table_rows(table, S.size)
    return "\n".join(lines)


def _table_rows(table: np.ndarray, n: int) -> list[str]:
    if table.ndim == 0:
        return [str(int(table))]
    return [" ".join(map(str, row)) for row in table.reshape(-1, n).tolist()]


def resolve_language(ref: str, base_dir: str = ".") -> Language:
    from .corpus import DEMO_LANGUAGE, LZFC

    builtin = {"zfc": LZFC, "demo": DEMO_LANGUAGE}
    if ref in builtin:
        return builtin[ref]
    with open(os.path.join(base_dir, ref), encoding="utf-8") as fh:
        return load_language(fh.read())


def resolve_algebra(ref: str, base_dir: str = ".") -> FinCBA:
    parts = ref.split()
    if len(parts) == 2 and parts[0] == "powerset" and parts[1].isdigit():
        return boolalg.powerset_algebra(int(parts[1]))
    if len(parts) == 2 and parts[0] == "ro":
        with open(os.path.join(base_dir, parts[1]), encoding="utf-8") as fh:
            return boolalg.regular_open_algebra(boolalg.load_topology(fh.read()))
    raise ValueError(f"unknown algebra reference {ref!r}")


def load_structure(text: str, base_dir: str = ".", language: Optional[Language] = None,
                   algebra: Optional[FinCBA] = None) -> BStructure:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]
    it = iter(lines)

    def field(prefix):
        ln = next(it, None)
        if ln is None or not (ln == prefix or ln.startswith(prefix + " ")):
            raise ValueError(f"expected '{prefix}' line, got {ln!r}")
        return ln[len(prefix):].strip()

    field("structure")
    lang_ref = field("language")
    alg_ref = field("algebra")
    lang = language or resolve_language(lang_ref, base_dir)
    B = algebra or resolve_algebra(alg_ref, base_dir)
    n = int(field("carrier"))
    field("eq")
    eq = [[int(v) for v in next(it).split()] for _ in range(n)]
    funcs: dict = {}
    rels: dict = {}
    for ln in it:
        parts = ln.split()
        if len(parts) != 3 or parts[0] not in ("func", "rel"):
            raise ValueError(f"expected a 'func NAME ARITY' or 'rel NAME ARITY' line, got {ln!r}")
        kind, name, arity = parts[0], parts[1], int(parts[2])
        rows = 1 if arity == 0 else n ** (arity - 1)
        vals = [int(v) for _ in range(rows) for v in next(it).split()]
        table = np.array(vals, dtype=np.int64).reshape((n,) * arity)
        sym = lang.func_symbol(name) if kind == "func" else lang.rel_symbol(name)
        if sym.arity != arity:
            raise ValueError(f"{name} declared with arity {arity}, language says {sym.arity}")
        (funcs if kind == "func" else rels)[sym] = table
    return BStructure(lang, B, n, funcs, rels, eq)


__all__ = [
    "BStructure",
    "PreconditionError",
    "structure_failure",
    "validate_structure",
    "realize_term",
    "realize_formula",
    "sentence_value",
    "forces",
    "validate_soundness",
    "random_structure",
    "dump_structure",
    "load_structure",
    "resolve_language",
    "resolve_algebra",
    "Symbol",
]
