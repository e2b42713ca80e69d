"""Hereditarily finite sets and their Boolean-valued counterparts.

A :class:`PSet` is a finite tree of children. A :class:`BSet` attaches an
element of a finite Boolean algebra to each child; the algebra element of
entry ``i`` is read as "how true it is that child ``i`` belongs".

Equality, membership and subset take values in the algebra::

    bv_eq(x, y)     = (meet_i  b_i => join_j b'_j & bv_eq(x_i, y_j))
                    & (meet_j b'_j => join_i b_i & bv_eq(x_i, y_j))
    bv_mem(x, y)    = join_j b'_j & bv_eq(x, y_j)
    bv_subset(x, y) = meet_i b_i => bv_mem(x_i, y)
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Optional, Sequence

from . import sexpr
from .boolalg import FinCBA, powerset_algebra
from .errors import guard


class AlgebraMismatch(ValueError):
    pass


class CongruenceError(ValueError):
    pass


# ---------------------------------------------------------------------------
# PSet


@dataclass(frozen=True, eq=True)
class PSet:
    children: tuple = ()
    _hash: int = field(default=0, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))
        object.__setattr__(self, "_hash", hash(("pset", self.children)))

    def __hash__(self):
        return self._hash

    def __len__(self):
        return len(self.children)

    def rank(self) -> int:
        return _pset_rank(self)


EMPTY = PSet()


@lru_cache(maxsize=None)
def _pset_rank(x: PSet) -> int:
    return 1 + max((_pset_rank(c) for c in x.children), default=-1)


@lru_cache(maxsize=1 << 18)
def pset_equiv(x: PSet, y: PSet) -> bool:
    """Extensional equivalence: every child of each side is equivalent to some child of the other."""
    if x is y or x == y:
        return True
    return all(any(pset_equiv(a, b) for b in y.children) for a in x.children) and all(
        any(pset_equiv(a, b) for a in x.children) for b in y.children
    )


def pset_mem(x: PSet, y: PSet) -> bool:
    return any(pset_equiv(x, c) for c in y.children)


def pset_subset(x: PSet, y: PSet) -> bool:
    return all(pset_mem(c, y) for c in x.children)


def ordinal_mk(n: int) -> PSet:
    """Von Neumann natural ``n = {0, ..., n-1}``."""
    guard(n, 8, "ordinal")
    if n < 0:
        raise ValueError("ordinal must be non-negative")
    out = [EMPTY]
    for k in range(1, n + 1):
        out.append(PSet(tuple(out[:k])))
    return out[n]


def pset_succ(x: PSet) -> PSet:
    return PSet(x.children + (x,))


def enumerate_psets(rank: int, width: int) -> list[PSet]:
    """All PSets of rank at most ``rank`` with at most ``width`` children per node.

    Children are taken as multisets in a fixed order, so no two results are
    syntactically equal (extensionally equal ones do repeat).
    """
    level = [EMPTY]
    for _ in range(rank):
        level = _multisets(level, width, PSet)
    return level


def _multisets(pool: list, width: int, build) -> list:
    out = []
    for k in range(width + 1):
        for combo in itertools.combinations_with_replacement(range(len(pool)), k):
            out.append(build(tuple(pool[i] for i in combo)))
    return out


# ---------------------------------------------------------------------------
# BSet


class BSet:
    """Finite B-name: a tuple of ``(child, bval)`` entries over one algebra."""

    __slots__ = ("elems", "algebra", "_hash")

    def __init__(self, elems: Iterable = (), algebra: Optional[FinCBA] = None):
        elems = tuple((c, int(b)) for c, b in elems)
        if algebra is None:
            if not elems:
                raise ValueError("an empty BSet needs an explicit algebra")
            algebra = elems[0][0].algebra
        for c, b in elems:
            if c.algebra is not algebra:
                raise AlgebraMismatch("children must share the parent's algebra")
            if not algebra.contains(b):
                raise ValueError(f"{b} is not an element of {algebra!r}")
        self.elems = elems
        self.algebra = algebra
        self._hash = hash((id(algebra), elems))

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if self is other:
            return True
        return (
            isinstance(other, BSet)
            and self._hash == other._hash
            and self.algebra is other.algebra
            and self.elems == other.elems
        )

    def __len__(self):
        return len(self.elems)

    def __repr__(self):
        return f"BSet({list(self.elems)!r})" if self.elems else "BSet(empty)"

    def children(self) -> list["BSet"]:
        return [c for c, _ in self.elems]

    def bvals(self) -> list[int]:
        return [b for _, b in self.elems]


def empty_bset(B: FinCBA) -> BSet:
    return BSet((), B)


def _same(x: BSet, y: BSet) -> FinCBA:
    if x.algebra is not y.algebra:
        raise AlgebraMismatch("BSets over different algebras")
    return x.algebra


@lru_cache(maxsize=1 << 20)
def _eq(x: BSet, y: BSet) -> int:
    B = x.algebra
    if x is y or x == y:
        # reflexivity is a consequence of the recursion; skipping it is only a shortcut
        return B.top
    left = B.inf(
        B.imp(b, B.sup(B.meet(b2, _eq(c, c2)) for c2, b2 in y.elems)) for c, b in x.elems
    )
    if left == B.bot:
        return left
    right = B.inf(
        B.imp(b2, B.sup(B.meet(b, _eq(c, c2)) for c, b in x.elems)) for c2, b2 in y.elems
    )
    return B.meet(left, right)


def bv_eq(x: BSet, y: BSet) -> int:
    _same(x, y)
    return _eq(x, y)


def bv_mem(x: BSet, y: BSet) -> int:
    B = _same(x, y)
    return B.sup(B.meet(b, _eq(x, c)) for c, b in y.elems)


def bv_subset(x: BSet, y: BSet) -> int:
    B = _same(x, y)
    return B.inf(B.imp(b, bv_mem(c, y)) for c, b in x.elems)


def clear_caches() -> None:
    _eq.cache_clear()
    pset_equiv.cache_clear()


def check(x: PSet, B: FinCBA) -> BSet:
    """The canonical image of a PSet: same shape, every entry valued top."""
    return _check(x, B)


@lru_cache(maxsize=1 << 16)
def _check(x: PSet, B: FinCBA) -> BSet:
    return BSet(((_check(c, B), B.top) for c in x.children), B)


def bv_powerset(x: BSet) -> BSet:
    """Powerset via indicator functions on the positions of ``x``.

    Indicators are enumerated lexicographically, first position most
    significant, algebra elements in handle order.
    """
    B = x.algebra
    guard(len(x.elems), 4, "powerset entries")
    guard(B.size, 16, "algebra size")
    kids = x.children()
    out = []
    for chi in itertools.product(B.elements(), repeat=len(kids)):
        child = BSet(zip(kids, chi), B)
        out.append((child, bv_subset(child, x)))
    return BSet(out, B)


@dataclass
class BExtResult:
    holds: bool
    witness: Optional[tuple] = None

    def __bool__(self):
        return self.holds


def b_ext_check(phi: Callable[[BSet], int], universe: Sequence[BSet]) -> BExtResult:
    """Check ``bv_eq(x, y) & phi(x) <= phi(y)`` for all pairs of the given universe.

    Only the supplied sets are examined, so a pass is evidence, not proof.
    """
    universe = list(universe)
    if not universe:
        return BExtResult(True)
    B = universe[0].algebra
    vals = [phi(u) for u in universe]
    for i, x in enumerate(universe):
        for j, y in enumerate(universe):
            if not B.le(B.meet(bv_eq(x, y), vals[i]), vals[j]):
                return BExtResult(False, (x, y))
    return BExtResult(True)


@dataclass
class ComprehensionResult:
    subset: BSet
    holds: bool
    witness: Optional[BSet] = None

    def __bool__(self):
        return self.holds


def comprehension(
    x: BSet, phi: Callable[[BSet], int], gamma: Optional[int] = None, universe: Sequence[BSet] = ()
) -> ComprehensionResult:
    """Separate ``x`` by ``phi``: entry values become ``bval & phi(child)``.

    Verifies ``gamma <= y subset x`` and, for each ``z`` in ``universe``,
    ``gamma <= (z in y <=> z in x & phi z)``. ``phi`` must pass the
    extensionality check on ``universe`` together with the children of ``x``.
    """
    B = x.algebra
    gamma = B.top if gamma is None else gamma
    pool = list(universe) + [c for c in x.children() if c not in universe]
    if not b_ext_check(phi, pool):
        raise CongruenceError("predicate is not extensional on the test universe")
    y = BSet(((c, B.meet(b, phi(c))) for c, b in x.elems), B)
    if not B.le(gamma, bv_subset(y, x)):
        return ComprehensionResult(y, False, None)
    for z in universe:
        rhs = B.meet(bv_mem(z, x), phi(z))
        if not B.le(gamma, B.iff(bv_mem(z, y), rhs)):
            return ComprehensionResult(y, False, z)
    return ComprehensionResult(y, True)


def mixture(parts: Sequence[tuple[int, BSet]], algebra: Optional[FinCBA] = None) -> BSet:
    """Glue ``u_i`` along an antichain ``a_i``; then ``a_i <= bv_eq(result, u_i)``."""
    parts = list(parts)
    if not parts:
        if algebra is None:
            raise ValueError("an empty mixture needs an explicit algebra")
        return empty_bset(algebra)
    B = parts[0][1].algebra
    if algebra is not None and algebra is not B:
        raise AlgebraMismatch("parts are not over the given algebra")
    for (a, u), (a2, u2) in itertools.combinations(parts, 2):
        if B.meet(a, a2) != B.bot:
            raise ValueError(f"mixture weights {B.label(a)} and {B.label(a2)} are not disjoint")
    elems = []
    for a, u in parts:
        if u.algebra is not B:
            raise AlgebraMismatch("parts over different algebras")
        elems.extend((c, B.meet(a, b)) for c, b in u.elems)
    return BSet(elems, B)


def enumerate_bsets(B: FinCBA, rank: int, width: int) -> list[BSet]:
    """All BSets of rank at most ``rank`` with at most ``width`` entries per level (as multisets)."""
    level = [empty_bset(B)]
    for _ in range(rank):
        pairs = [(c, b) for c in level for b in B.elements()]
        level = _multisets(pairs, width, lambda es: BSet(es, B))
    return level


# ---------------------------------------------------------------------------
# S-expressions


def pset_to_sexpr(x: PSet):
    return ["pset", *(pset_to_sexpr(c) for c in x.children)]


def dumps_pset(x: PSet) -> str:
    return sexpr.write(pset_to_sexpr(x))


def pset_from_sexpr(e) -> PSet:
    if not isinstance(e, list) or not e or e[0] != "pset":
        raise ValueError(f"expected (pset ...), got {sexpr.write(e)}")
    return PSet(tuple(pset_from_sexpr(c) for c in e[1:]))


def loads_pset(text: str) -> PSet:
    return pset_from_sexpr(sexpr.read(text))


def bset_to_sexpr(x: BSet, ref: Optional[str] = None):
    ref = ref or x.algebra.name
    return ["bset", ref, *([bset_to_sexpr(c, ref), str(b)] for c, b in x.elems)]


def dumps_bset(x: BSet, ref: Optional[str] = None) -> str:
    return sexpr.write(bset_to_sexpr(x, ref))


def _algebra_from_ref(ref: str) -> FinCBA:
    m = re.fullmatch(r"powerset(\d+)", ref)
    if m is None:
        raise ValueError(f"cannot resolve algebra {ref!r}; pass the algebra explicitly")
    return powerset_algebra(int(m.group(1)))


def bset_from_sexpr(e, algebra: Optional[FinCBA] = None) -> BSet:
    if not isinstance(e, list) or len(e) < 2 or e[0] != "bset" or not isinstance(e[1], str):
        raise ValueError("expected (bset REF (CHILD BVAL) ...)")
    B = algebra or _algebra_from_ref(e[1])
    elems = []
    for entry in e[2:]:
        if not isinstance(entry, list) or len(entry) != 2 or not isinstance(entry[1], str):
            raise ValueError("bset entries are (CHILD BVAL-INDEX)")
        elems.append((bset_from_sexpr(entry[0], B), int(entry[1])))
    return BSet(elems, B)


def loads_bset(text: str, algebra: Optional[FinCBA] = None) -> BSet:
    return bset_from_sexpr(sexpr.read(text), algebra)


__all__ = [
    "PSet",
    "EMPTY",
    "BSet",
    "AlgebraMismatch",
    "CongruenceError",
    "pset_equiv",
    "pset_mem",
    "pset_subset",
    "pset_succ",
    "ordinal_mk",
    "enumerate_psets",
    "empty_bset",
    "bv_eq",
    "bv_mem",
    "bv_subset",
    "check",
    "bv_powerset",
    "b_ext_check",
    "BExtResult",
    "comprehension",
    "ComprehensionResult",
    "mixture",
    "enumerate_bsets",
    "clear_caches",
    "dumps_pset",
    "loads_pset",
    "dumps_bset",
    "loads_bset",
]
