"""Finite complete Boolean algebras and decision procedures over them.

Elements are integer handles ``0 .. size-1`` into the carrier. The concrete
encoding behind a handle (a bit mask for powerset algebras, an index into the
list of regular open sets for RO algebras) stays inside the algebra.
"""

from __future__ import annotations

import itertools
import random
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import SizeGuardError, guard

EXHAUSTIVE_AXIOM_LIMIT = 64
SPOT_CHECK_TRIPLES = 1000


class AxiomError(ValueError):
    pass


class FinCBA:
    """Base class. Subclasses provide ``size``, ``top``, ``bot`` and the three operations."""

    name = "B"
    size: int
    top: int
    bot: int

    def meet(self, a: int, b: int) -> int:
        raise NotImplementedError

    def join(self, a: int, b: int) -> int:
        raise NotImplementedError

    def neg(self, a: int) -> int:
        raise NotImplementedError

    def label(self, a: int) -> str:
        return str(a)

    def _rank(self, a: int) -> int:
        """Any function strictly increasing along ``<``."""
        return sum(1 for b in self.elements() if self.le(b, a))

    # derived operations

    def imp(self, a: int, b: int) -> int:
        return self.join(self.neg(a), b)

    def iff(self, a: int, b: int) -> int:
        return self.meet(self.imp(a, b), self.imp(b, a))

    def le(self, a: int, b: int) -> bool:
        return self.meet(a, b) == a

    def lt(self, a: int, b: int) -> bool:
        return a != b and self.le(a, b)

    def inf(self, xs: Iterable[int]) -> int:
        out = self.top
        for x in xs:
            out = self.meet(out, x)
        return out

    def sup(self, xs: Iterable[int]) -> int:
        out = self.bot
        for x in xs:
            out = self.join(out, x)
        return out

    def elements(self) -> range:
        return range(self.size)

    def contains(self, a) -> bool:
        return isinstance(a, (int, np.integer)) and 0 <= a < self.size

    def __len__(self):
        return self.size

    def __repr__(self):
        return f"<{type(self).__name__} {self.name} size={self.size}>"

    # atoms

    def atoms(self) -> list[int]:
        if not hasattr(self, "_atoms"):
            found: list[int] = []
            nonzero = [a for a in self.elements() if a != self.bot]
            for a in sorted(nonzero, key=self._rank):
                if not any(self.le(t, a) for t in found):
                    found.append(a)
            self._atoms = found
        return self._atoms

    def atom_mask(self, a: int) -> int:
        """Bit ``i`` set iff the ``i``-th atom lies below ``a``."""
        m = 0
        for i, t in enumerate(self.atoms()):
            if self.le(t, a):
                m |= 1 << i
        return m

    def tables(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Meet, join and negation as arrays (small carriers only)."""
        guard(self.size, 4096, "carrier size for operation tables")
        if not hasattr(self, "_tables"):
            n = self.size
            meet = np.empty((n, n), dtype=np.int64)
            join = np.empty((n, n), dtype=np.int64)
            for a in range(n):
                for b in range(a, n):
                    meet[a, b] = meet[b, a] = self.meet(a, b)
                    join[a, b] = join[b, a] = self.join(a, b)
            neg = np.array([self.neg(a) for a in range(n)], dtype=np.int64)
            self._tables = (meet, join, neg)
        return self._tables


# ---------------------------------------------------------------------------
# Axiom battery


def axiom_failure(B: FinCBA, seed: int = 0) -> Optional[str]:
    """First violated Boolean-algebra law, or None.

    Exhaustive over all triples when the carrier has at most 64 elements,
    otherwise 1000 seeded random triples.
    """
    if B.size <= EXHAUSTIVE_AXIOM_LIMIT:
        return _exhaustive_failure(B)
    rng = random.Random(seed)
    for _ in range(SPOT_CHECK_TRIPLES):
        a, b, c = (rng.randrange(B.size) for _ in range(3))
        msg = _triple_failure(B, a, b, c)
        if msg:
            return msg
    return None


def check_axioms(B: FinCBA) -> None:
    msg = axiom_failure(B)
    if msg:
        raise AxiomError(f"{B.name}: {msg}")


def _exhaustive_failure(B: FinCBA) -> Optional[str]:
    M, J, N = B.tables()
    n = B.size
    a = np.arange(n)[:, None, None]
    b = np.arange(n)[None, :, None]
    c = np.arange(n)[None, None, :]
    top, bot = B.top, B.bot
    two = [
        ("meet commutativity", M, M.T),
        ("join commutativity", J, J.T),
        ("absorption a&(a|b)=a", M[np.arange(n)[:, None], J], np.broadcast_to(np.arange(n)[:, None], (n, n))),
        ("absorption a|(a&b)=a", J[np.arange(n)[:, None], M], np.broadcast_to(np.arange(n)[:, None], (n, n))),
    ]
    for law, lhs, rhs in two:
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            return f"{law} fails at {tuple(int(v) for v in bad[0])}"
    three = [
        ("meet associativity", M[M[a, b], c], M[a, M[b, c]]),
        ("join associativity", J[J[a, b], c], J[a, J[b, c]]),
        ("distributivity a&(b|c)", M[a, J[b, c]], J[M[a, b], M[a, c]]),
        ("distributivity a|(b&c)", J[a, M[b, c]], M[J[a, b], J[a, c]]),
    ]
    for law, lhs, rhs in three:
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            return f"{law} fails at {tuple(int(v) for v in bad[0])}"
    idx = np.arange(n)
    if np.any(M[idx, N] != bot):
        return f"complement a&~a=bot fails at {int(np.argmax(M[idx, N] != bot))}"
    if np.any(J[idx, N] != top):
        return f"complement a|~a=top fails at {int(np.argmax(J[idx, N] != top))}"
    if np.any(M[idx, top] != idx) or np.any(J[idx, bot] != idx):
        return "top/bot identity fails"
    return None


def _triple_failure(B: FinCBA, a: int, b: int, c: int) -> Optional[str]:
    m, j, ng = B.meet, B.join, B.neg
    checks = [
        ("meet commutativity", m(a, b) == m(b, a)),
        ("join commutativity", j(a, b) == j(b, a)),
        ("meet associativity", m(m(a, b), c) == m(a, m(b, c))),
        ("join associativity", j(j(a, b), c) == j(a, j(b, c))),
        ("absorption a&(a|b)=a", m(a, j(a, b)) == a),
        ("absorption a|(a&b)=a", j(a, m(a, b)) == a),
        ("distributivity a&(b|c)", m(a, j(b, c)) == j(m(a, b), m(a, c))),
        ("distributivity a|(b&c)", j(a, m(b, c)) == m(j(a, b), j(a, c))),
        ("complement a&~a=bot", m(a, ng(a)) == B.bot),
        ("complement a|~a=top", j(a, ng(a)) == B.top),
        ("top/bot identity", m(a, B.top) == a and j(a, B.bot) == a),
    ]
    for law, ok in checks:
        if not ok:
            return f"{law} fails at {(a, b, c)}"
    return None


# ---------------------------------------------------------------------------
# Concrete algebras


class PowersetAlgebra(FinCBA):
    """Subsets of ``{0..n-1}``; the handle of a subset is its bit mask."""

    def __init__(self, n: int, name: Optional[str] = None):
        if n < 0:
            raise ValueError("n must be non-negative")
        self.n = n
        self.size = 1 << n
        self.full = self.size - 1
        self.top = self.full
        self.bot = 0
        self.name = name or f"powerset{n}"

    def meet(self, a, b):
        return a & b

    def join(self, a, b):
        return a | b

    def neg(self, a):
        return self.full ^ a

    def imp(self, a, b):
        return (self.full ^ a) | b

    def le(self, a, b):
        return a & ~b == 0

    def inf(self, xs):
        out = self.full
        for x in xs:
            out &= x
        return out

    def sup(self, xs):
        out = 0
        for x in xs:
            out |= x
        return out

    def _rank(self, a):
        return bin(a).count("1")

    def atoms(self):
        return [1 << i for i in range(self.n)]

    def atom_mask(self, a):
        return a

    def label(self, a):
        return "{" + ",".join(str(i) for i in range(self.n) if a >> i & 1) + "}"


@lru_cache(maxsize=None)
def powerset_algebra(n: int) -> PowersetAlgebra:
    """All subsets of an ``n``-element set (``n <= 16``), checked against the axiom battery."""
    guard(n, 16, "powerset ground size")
    B = PowersetAlgebra(n)
    check_axioms(B)
    return B


def two_element_algebra() -> PowersetAlgebra:
    return powerset_algebra(1)


class TableAlgebra(FinCBA):
    """An algebra given by explicit operation tables."""

    def __init__(self, labels: Sequence[str], meet, join, neg, top: int, bot: int, name: str = "table"):
        self.labels = list(labels)
        self.size = len(self.labels)
        self._m = np.asarray(meet, dtype=np.int64)
        self._j = np.asarray(join, dtype=np.int64)
        self._n = np.asarray(neg, dtype=np.int64)
        self.top, self.bot = int(top), int(bot)
        self.name = name
        if self._m.shape != (self.size, self.size) or self._j.shape != (self.size, self.size):
            raise ValueError("binary tables must be size x size")
        if self._n.shape != (self.size,):
            raise ValueError("negation table must have one entry per element")
        self._tables = (self._m, self._j, self._n)
        check_axioms(self)

    def meet(self, a, b):
        return int(self._m[a, b])

    def join(self, a, b):
        return int(self._j[a, b])

    def neg(self, a):
        return int(self._n[a])

    def label(self, a):
        return self.labels[a]


# ---------------------------------------------------------------------------
# Finite topological spaces


class FinTopSpace:
    """Points ``0..n-1``; opens stored as bit masks."""

    def __init__(self, n: int, opens: Iterable):
        self.n = n
        self.full = (1 << n) - 1
        masks = set()
        for U in opens:
            masks.add(U if isinstance(U, int) else _mask(U))
        self.opens = tuple(sorted(masks))
        bad = self._invalid_reason()
        if bad:
            raise ValueError(f"not a topology: {bad}")

    def _invalid_reason(self) -> Optional[str]:
        s = set(self.opens)
        if 0 not in s:
            return "missing empty set"
        if self.full not in s:
            return "missing full set"
        for U in self.opens:
            if U & ~self.full:
                return f"open {_points(U)} has points outside the space"
        for U, V in itertools.combinations(self.opens, 2):
            if U | V not in s:
                return f"union of {_points(U)} and {_points(V)} not open"
            if U & V not in s:
                return f"intersection of {_points(U)} and {_points(V)} not open"
        return None

    @classmethod
    def discrete(cls, n: int) -> "FinTopSpace":
        return cls(n, range(1 << n))

    @classmethod
    def indiscrete(cls, n: int) -> "FinTopSpace":
        return cls(n, [0, (1 << n) - 1])

    @classmethod
    def sierpinski(cls) -> "FinTopSpace":
        return cls(2, [0, 0b10, 0b11])

    def __repr__(self):
        return f"FinTopSpace({self.n}, {[sorted(_points(U)) for U in self.opens]})"

    def __eq__(self, other):
        return isinstance(other, FinTopSpace) and (self.n, self.opens) == (other.n, other.opens)

    def __hash__(self):
        return hash((self.n, self.opens))


def _mask(points: Iterable[int]) -> int:
    m = 0
    for p in points:
        m |= 1 << p
    return m


def _points(mask: int) -> list[int]:
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


def interior(X: FinTopSpace, S: int) -> int:
    """Largest open subset of ``S`` (sets as bit masks)."""
    out = 0
    for U in X.opens:
        if U & ~S == 0:
            out |= U
    return out


def closure(X: FinTopSpace, S: int) -> int:
    return X.full & ~interior(X, X.full & ~S)


def perp(X: FinTopSpace, U: int) -> int:
    """Complement of the closure."""
    return X.full & ~closure(X, U)


def is_regular_open(X: FinTopSpace, U: int) -> bool:
    return U in X.opens and perp(X, perp(X, U)) == U


class RegularOpenAlgebra(FinCBA):
    """Regular open sets of a finite space with the operations of Def. 5.1 style RO algebras:
    meet is intersection, join and suprema are ``perp(perp(union))``, negation is ``perp``.
    """

    def __init__(self, X: FinTopSpace, name: Optional[str] = None):
        self.space = X
        self._perp = lru_cache(maxsize=None)(lambda U: perp(X, U))
        self.carrier = sorted(U for U in X.opens if self._perp(self._perp(U)) == U)
        self.index = {U: i for i, U in enumerate(self.carrier)}
        self.size = len(self.carrier)
        self.top = self.index[X.full]
        self.bot = self.index[0]
        self.name = name or f"RO{X.n}"

    def encoding(self, a: int) -> int:
        return self.carrier[a]

    def meet(self, a, b):
        return self.index[self.carrier[a] & self.carrier[b]]

    def join(self, a, b):
        p = self._perp
        return self.index[p(p(self.carrier[a] | self.carrier[b]))]

    def neg(self, a):
        return self.index[self._perp(self.carrier[a])]

    def le(self, a, b):
        return self.carrier[a] & ~self.carrier[b] == 0

    def sup(self, xs):
        u = 0
        for x in xs:
            u |= self.carrier[x]
        p = self._perp
        return self.index[p(p(u))]

    def inf(self, xs):
        u = self.space.full
        for x in xs:
            u &= self.carrier[x]
        return self.index[u]

    def _rank(self, a):
        return bin(self.carrier[a]).count("1")

    def label(self, a):
        return "{" + ",".join(map(str, _points(self.carrier[a]))) + "}"


def regular_open_algebra(X: FinTopSpace) -> RegularOpenAlgebra:
    guard(X.n, 12, "number of points")
    B = RegularOpenAlgebra(X)
    check_axioms(B)
    return B


def all_topologies(n: int) -> list[FinTopSpace]:
    """Every topology on ``n`` labelled points (small ``n`` only)."""
    guard(n, 4, "points for topology enumeration")
    full = (1 << n) - 1
    middle = list(range(1, full))
    out = []
    for bits in range(1 << len(middle)):
        fam = {0, full} | {middle[i] for i in range(len(middle)) if bits >> i & 1}
        if all(U | V in fam and U & V in fam for U in fam for V in fam):
            out.append(FinTopSpace(n, fam))
    return out


def is_sigma_closed(B: FinCBA) -> bool:
    """Every finite algebra is sigma-closed.

    With the whole set of nonzero elements as the dense suborder, a descending
    chain in a finite poset is eventually constant, and that constant is a
    lower bound.
    """
    return True


def powerset_isomorphism(B: FinCBA) -> Optional[dict]:
    """Map each element to its atom mask if that is an isomorphism onto ``P(atoms)``."""
    k = len(B.atoms())
    if B.size != 1 << k:
        return None
    phi = {a: B.atom_mask(a) for a in B.elements()}
    if len(set(phi.values())) != B.size:
        return None
    for a in B.elements():
        if phi[B.neg(a)] != ((1 << k) - 1) ^ phi[a]:
            return None
        for b in B.elements():
            if phi[B.meet(a, b)] != phi[a] & phi[b] or phi[B.join(a, b)] != phi[a] | phi[b]:
                return None
    return phi


# ---------------------------------------------------------------------------
# Antichains, density, Yoneda


@dataclass
class AntichainResult:
    size: int
    witness: list[int]
    exact: bool
    upper_bound: int


EXACT_ANTICHAIN_LIMIT = 1 << 8
ANTICHAIN_LIMIT = 1 << 16


def is_antichain(B: FinCBA, xs: Sequence[int]) -> bool:
    return all(x != B.bot for x in xs) and all(
        B.meet(x, y) == B.bot for x, y in itertools.combinations(xs, 2)
    )


def antichains(B: FinCBA) -> AntichainResult:
    """Largest family of pairwise disjoint nonzero elements.

    Greedy over elements by increasing rank, then an exact branch-and-bound
    search when the carrier has at most 256 elements.
    """
    guard(B.size, ANTICHAIN_LIMIT, "carrier size for antichain search")
    atoms = B.atoms()
    masks = {a: B.atom_mask(a) for a in B.elements() if a != B.bot}
    order = sorted(masks, key=lambda a: (bin(masks[a]).count("1"), a))

    used = 0
    greedy = []
    for a in order:
        if masks[a] & used == 0:
            greedy.append(a)
            used |= masks[a]
    best = list(greedy)
    exact = False
    if B.size <= EXACT_ANTICHAIN_LIMIT:
        exact = True

        def search(i, chosen, used_mask):
            nonlocal best
            free = bin(((1 << len(atoms)) - 1) & ~used_mask).count("1")
            if len(chosen) + free <= len(best):
                return
            if len(chosen) > len(best):
                best = list(chosen)
            for j in range(i, len(order)):
                m = masks[order[j]]
                if m & used_mask == 0:
                    chosen.append(order[j])
                    search(j + 1, chosen, used_mask | m)
                    chosen.pop()

        search(0, [], 0)
    return AntichainResult(len(best), best, exact, len(atoms))


def is_dense_suborder(B: FinCBA, P: Iterable[int]) -> bool:
    """Both density clauses: members are nonzero, and every nonzero element is above a member."""
    P = list(P)
    if any(p == B.bot for p in P):
        return False
    if B.size <= ANTICHAIN_LIMIT:
        targets = (b for b in B.elements() if b != B.bot)
    else:
        # every nonzero element of a finite algebra lies above an atom
        targets = iter(B.atoms())
    return all(any(B.le(p, b) for p in P) for b in targets)


def yoneda_le(B: FinCBA, a: int, b: int) -> bool:
    """Decide ``a <= b`` as: every ``g <= a`` also satisfies ``g <= b``."""
    return all(B.le(g, b) for g in B.elements() if B.le(g, a))


# ---------------------------------------------------------------------------
# Lattice expressions and tautology checking

_EXPR_TOKEN = re.compile(r"\s*(=>|<=>|[()&|~]|[A-Za-z_][A-Za-z0-9_]*)")


def parse_lattice_expr(text: str):
    """Parse ``&``, ``|``, ``~``, ``=>``, ``<=>``, ``top``, ``bot`` and atom names.

    Precedence, loosest first: ``<=>``, ``=>`` (right associative), ``|``, ``&``, ``~``.
    """
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _EXPR_TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"bad lattice expression at column {pos}: {text!r}")
        tokens.append(m.group(1))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    expr, i = _p_iff(tokens, 0)
    if i != len(tokens):
        raise ValueError(f"trailing tokens in lattice expression: {tokens[i:]}")
    return expr


def _p_iff(t, i):
    lhs, i = _p_imp(t, i)
    while i < len(t) and t[i] == "<=>":
        rhs, i = _p_imp(t, i + 1)
        lhs = ("iff", lhs, rhs)
    return lhs, i


def _p_imp(t, i):
    lhs, i = _p_or(t, i)
    if i < len(t) and t[i] == "=>":
        rhs, i = _p_imp(t, i + 1)
        return ("imp", lhs, rhs), i
    return lhs, i


def _p_or(t, i):
    lhs, i = _p_and(t, i)
    while i < len(t) and t[i] == "|":
        rhs, i = _p_and(t, i + 1)
        lhs = ("or", lhs, rhs)
    return lhs, i


def _p_and(t, i):
    lhs, i = _p_not(t, i)
    while i < len(t) and t[i] == "&":
        rhs, i = _p_not(t, i + 1)
        lhs = ("and", lhs, rhs)
    return lhs, i


def _p_not(t, i):
    if i >= len(t):
        raise ValueError("unexpected end of lattice expression")
    if t[i] == "~":
        x, i = _p_not(t, i + 1)
        return ("not", x), i
    if t[i] == "(":
        x, i = _p_iff(t, i + 1)
        if i >= len(t) or t[i] != ")":
            raise ValueError("missing ')' in lattice expression")
        return x, i + 1
    if t[i] in ("top", "bot"):
        return (t[i],), i + 1
    if re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", t[i]):
        return ("atom", t[i]), i + 1
    raise ValueError(f"unexpected token {t[i]!r}")


def expr_atoms(e) -> list[str]:
    if e[0] == "atom":
        return [e[1]]
    out: list[str] = []
    for sub in e[1:]:
        for a in expr_atoms(sub):
            if a not in out:
                out.append(a)
    return out


def eval_lattice_expr(B: FinCBA, e, env: dict) -> int:
    op = e[0]
    if op == "atom":
        return env[e[1]]
    if op == "top":
        return B.top
    if op == "bot":
        return B.bot
    if op == "not":
        return B.neg(eval_lattice_expr(B, e[1], env))
    x = eval_lattice_expr(B, e[1], env)
    y = eval_lattice_expr(B, e[2], env)
    return {"and": B.meet, "or": B.join, "imp": B.imp, "iff": B.iff}[op](x, y)


@dataclass
class TautologyResult:
    holds: bool
    witness: Optional[dict]
    method: str


MAX_TAUTOLOGY_ATOMS = 8
EXHAUSTIVE_ASSIGNMENTS = 1 << 16


def tautology_le(B: FinCBA, lhs, rhs, method: str = "auto") -> TautologyResult:
    """Decide whether ``lhs <= rhs`` under every assignment of elements of ``B`` to atoms.

    ``method`` is ``"exhaustive"`` (all assignments), ``"two-valued"`` (reduce to
    the two-element algebra, valid because each atom of a finite algebra gives a
    homomorphism onto it), or ``"auto"`` (exhaustive when small, else two-valued).
    """
    if isinstance(lhs, str):
        lhs = parse_lattice_expr(lhs)
    if isinstance(rhs, str):
        rhs = parse_lattice_expr(rhs)
    names = expr_atoms(("and", lhs, rhs))
    guard(len(names), MAX_TAUTOLOGY_ATOMS, "atoms in lattice inequality")
    if method == "auto":
        method = "exhaustive" if B.size ** len(names) <= EXHAUSTIVE_ASSIGNMENTS else "two-valued"
    if method == "exhaustive":
        for vals in itertools.product(B.elements(), repeat=len(names)):
            env = dict(zip(names, vals))
            if not B.le(eval_lattice_expr(B, lhs, env), eval_lattice_expr(B, rhs, env)):
                return TautologyResult(False, env, method)
        return TautologyResult(True, None, method)
    if method != "two-valued":
        raise ValueError(f"unknown method {method!r}")
    if B.size == 1:
        return TautologyResult(True, None, method)
    two = PowersetAlgebra(1)
    for vals in itertools.product((0, 1), repeat=len(names)):
        env = dict(zip(names, vals))
        if not two.le(eval_lattice_expr(two, lhs, env), eval_lattice_expr(two, rhs, env)):
            lifted = {k: (B.top if v else B.bot) for k, v in env.items()}
            return TautologyResult(False, lifted, method)
    return TautologyResult(True, None, method)


# ---------------------------------------------------------------------------
# File formats


def dump_topology(X: FinTopSpace) -> str:
    """``points N`` then one open per line; the empty open is written ``-``."""
    lines = [f"points {X.n}"]
    for U in sorted(X.opens, key=lambda U: (bin(U).count("1"), _points(U))):
        pts = _points(U)
        lines.append(" ".join(map(str, pts)) if pts else "-")
    return "\n".join(lines)


def load_topology(text: str) -> FinTopSpace:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines or not re.fullmatch(r"points\s+\d+", lines[0]):
        raise ValueError("topology file must start with 'points N'")
    n = int(lines[0].split()[1])
    opens = []
    for ln in lines[1:]:
        if ln == "-":
            opens.append(0)
            continue
        pts = [int(tok) for tok in ln.split()]
        if any(p < 0 or p >= n for p in pts):
            raise ValueError(f"point out of range in open {ln!r}")
        opens.append(_mask(pts))
    return FinTopSpace(n, opens)


def dump_algebra(B: FinCBA) -> str:
    M, J, N = B.tables()
    atoms = B.atoms()
    lines = [f"algebra {B.name}", f"size {B.size}", f"top {B.top}", f"bot {B.bot}", "carrier"]
    lines += [f"{a} {B.label(a)}" for a in B.elements()]
    lines.append("atoms " + " ".join(map(str, atoms)))
    lines.append("meet")
    lines += [" ".join(map(str, row)) for row in M.tolist()]
    lines.append("join")
    lines += [" ".join(map(str, row)) for row in J.tolist()]
    lines.append("neg")
    lines.append(" ".join(map(str, N.tolist())))
    return "\n".join(lines)


def load_algebra_dump(text: str) -> TableAlgebra:
    lines = text.splitlines()
    it = iter(lines)

    def expect(prefix):
        ln = next(it)
        if not ln.startswith(prefix):
            raise ValueError(f"expected {prefix!r}, got {ln!r}")
        return ln[len(prefix):].strip()

    name = expect("algebra")
    n = int(expect("size"))
    top = int(expect("top"))
    bot = int(expect("bot"))
    expect("carrier")
    labels = [next(it).split(" ", 1)[1] for _ in range(n)]
    expect("atoms")
    expect("meet")
    meet = [[int(v) for v in next(it).split()] for _ in range(n)]
    expect("join")
    join = [[int(v) for v in next(it).split()] for _ in range(n)]
    expect("neg")
    neg = [int(v) for v in next(it).split()]
    return TableAlgebra(labels, meet, join, neg, top, bot, name=name)


__all__ = [
    "FinCBA",
    "PowersetAlgebra",
    "TableAlgebra",
    "RegularOpenAlgebra",
    "FinTopSpace",
    "AxiomError",
    "SizeGuardError",
    "powerset_algebra",
    "two_element_algebra",
    "regular_open_algebra",
    "interior",
    "closure",
    "perp",
    "is_regular_open",
    "all_topologies",
    "axiom_failure",
    "check_axioms",
    "antichains",
    "is_antichain",
    "is_dense_suborder",
    "yoneda_le",
    "tautology_le",
    "parse_lattice_expr",
    "eval_lattice_expr",
    "is_sigma_closed",
    "powerset_isomorphism",
    "dump_topology",
    "load_topology",
    "dump_algebra",
    "load_algebra_dump",
]
