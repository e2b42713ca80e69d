"""Finite shadows of Cohen forcing and the Δ-system lemma.

A Cohen condition specifies finitely many points that are in (``ins``) and
out (``out``) of a generic subset of a ground set. Its image under ``iota``
is the set of all subsets of the ground set that agree with it, as a bitmask
over the ``2**len(ground)`` subsets.
"""

from __future__ import annotations

import itertools
import math
import random
from collections import Counter
from dataclasses import dataclass
from typing import Hashable, Iterable, Optional, Sequence

from .boolalg import PowersetAlgebra, antichains, is_dense_suborder
from .errors import guard


@dataclass(frozen=True)
class CohenCondition:
    ins: frozenset = frozenset()
    out: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "ins", frozenset(self.ins))
        object.__setattr__(self, "out", frozenset(self.out))
        if self.ins & self.out:
            raise ValueError(f"condition puts {sorted(self.ins & self.out)} both in and out")

    def extends(self, other: "CohenCondition") -> bool:
        return other.ins <= self.ins and other.out <= self.out

    def support(self) -> frozenset:
        return self.ins | self.out


def compatible(p: CohenCondition, q: CohenCondition) -> bool:
    return not (p.ins & q.out or q.ins & p.out)


def combine(p: CohenCondition, q: CohenCondition) -> Optional[CohenCondition]:
    if not compatible(p, q):
        return None
    return CohenCondition(p.ins | q.ins, p.out | q.out)


def default_ground(n: int) -> list[tuple[int, int]]:
    """``n`` index pairs, standing in for a product of an ordinal with the naturals."""
    return [(i % 2, i // 2) for i in range(n)]


class CohenAlgebra(PowersetAlgebra):
    """Powerset of the subsets of a ground set; point ``j`` is the subset with mask ``j``."""

    def __init__(self, ground: Sequence[Hashable]):
        ground = list(ground)
        guard(len(ground), 12, "ground size")
        if len(set(ground)) != len(ground):
            raise ValueError("ground elements must be distinct")
        super().__init__(1 << len(ground), name=f"cohen{len(ground)}")
        self.ground = ground
        self.position = {g: i for i, g in enumerate(ground)}

    def subset(self, point: int) -> frozenset:
        return frozenset(g for i, g in enumerate(self.ground) if point >> i & 1)


def _as_algebra(ground) -> CohenAlgebra:
    return ground if isinstance(ground, CohenAlgebra) else CohenAlgebra(ground)


def cohen_iota(p: CohenCondition, ground) -> int:
    """Handle of ``{S subset ground | p.ins <= S, p.out disjoint from S}``."""
    C = _as_algebra(ground)
    missing = p.support() - set(C.position)
    if missing:
        raise ValueError(f"condition mentions {sorted(missing)} outside the ground set")
    need_in = sum(1 << C.position[g] for g in p.ins)
    need_out = sum(1 << C.position[g] for g in p.out)
    mask = 0
    for point in range(1 << len(C.ground)):
        if point & need_in == need_in and not point & need_out:
            mask |= 1 << point
    return mask


def all_conditions(ground: Sequence[Hashable]) -> list[CohenCondition]:
    """Every condition over the ground: each point is in, out, or unspecified."""
    out = []
    for choice in itertools.product((0, 1, 2), repeat=len(ground)):
        out.append(
            CohenCondition(
                frozenset(g for g, c in zip(ground, choice) if c == 1),
                frozenset(g for g, c in zip(ground, choice) if c == 2),
            )
        )
    return out


def total_conditions(ground: Sequence[Hashable]) -> list[CohenCondition]:
    ground = list(ground)
    return [
        CohenCondition(frozenset(g for i, g in enumerate(ground) if m >> i & 1),
                       frozenset(g for i, g in enumerate(ground) if not m >> i & 1))
        for m in range(1 << len(ground))
    ]


def cohen_density_check(ground, exclude_total: bool = False) -> bool:
    """Is the image of all conditions dense, with no condition sent to bottom?

    ``exclude_total`` drops the fully specified conditions first, which
    breaks density: the singletons of the algebra lose their witnesses.
    """
    C = _as_algebra(ground)
    guard(len(C.ground), 8, "ground size")
    conds = all_conditions(C.ground)
    if exclude_total:
        conds = [p for p in conds if len(p.support()) < len(C.ground)]
    image = [cohen_iota(p, C) for p in conds]
    if any(v == C.bot for v in image):
        return False
    return is_dense_suborder(C, image)


def cohen_antichain(conditions: Sequence[CohenCondition], ground) -> dict:
    """Map each index pair ``(i, j)``, ``i < j``, to whether the images meet to bottom."""
    C = _as_algebra(ground)
    imgs = [cohen_iota(p, C) for p in conditions]
    return {
        (i, j): C.meet(imgs[i], imgs[j]) == C.bot
        for i, j in itertools.combinations(range(len(imgs)), 2)
    }


def max_antichain_size(ground) -> int:
    """Largest antichain in the Cohen algebra, by the generic search."""
    return antichains(_as_algebra(ground)).size


# ---------------------------------------------------------------------------
# Δ-systems


def is_delta_system(family: Sequence[Iterable], indices: Sequence[int], root: Iterable) -> bool:
    """Do the selected members pairwise intersect exactly in ``root``? Needs two or more distinct indices."""
    indices = list(indices)
    if len(indices) < 2 or len(set(indices)) != len(indices):
        return False
    if any(not 0 <= i < len(family) for i in indices):
        return False
    root = frozenset(root)
    sets = [frozenset(family[i]) for i in indices]
    return all(a & b == root for a, b in itertools.combinations(sets, 2))


def sunflower_bound(k: int, target: int) -> int:
    """Families with more than this many distinct sets of size at most ``k`` contain a sunflower of size ``target``."""
    f = 1
    for i in range(2, k + 1):
        f *= i
    return f * (target - 1) ** k


def delta_extract(family: Sequence[Iterable], target: int) -> Optional[tuple[list[int], frozenset]]:
    """Find ``target`` indices forming a Δ-system, with its root.

    The distinct members are padded with private dummy points to a common
    size and the classical argument runs: a maximal disjoint subfamily
    either suffices, or some element of its union lies in many members and
    we recurse on those members with that element removed. Above the
    sunflower bound that first pass always succeeds. Below it the search
    continues over the remaining branches, so ``None`` means no Δ-system of
    that size exists. A repeated member can serve as its own root, which is
    checked separately.
    """
    if target < 2:
        raise ValueError("target must be at least 2")
    sets = [frozenset(s) for s in family]
    groups: dict[frozenset, list[int]] = {}
    for i, s in enumerate(sets):
        groups.setdefault(s, []).append(i)
    reps = [idx[0] for idx in groups.values()]
    found = None
    if len(reps) >= target:
        k = max(len(sets[i]) for i in reps)
        padded = {
            i: frozenset(("real", x) for x in sets[i]) | frozenset(("pad", i, j) for j in range(k - len(sets[i])))
            for i in reps
        }
        found = _sunflower(padded, target)
    if found is None:
        found = _with_repeats(sets, groups, target)
    if found is None:
        return None
    chosen = sorted(found)
    root = frozenset.intersection(*(sets[i] for i in chosen))
    assert is_delta_system(sets, chosen, root)
    return chosen, root


def _with_repeats(sets, groups, target):
    # c copies of A plus members S > A whose remainders S - A are pairwise disjoint
    for A, idx in groups.items():
        if len(idx) < 2:
            continue
        if len(idx) >= target:
            return idx[:target]
        need = target - len(idx)
        rest = {groups[S][0]: S - A for S in groups if S > A}
        pick = _disjoint_pick(rest, need)
        if pick is not None:
            return idx + pick
    return None


def _disjoint_pick(members: dict, target: int) -> Optional[list[int]]:
    """Exact search for ``target`` pairwise disjoint members."""
    order = sorted(members, key=lambda i: (len(members[i]), i))

    def go(start, chosen, used):
        if len(chosen) == target:
            return list(chosen)
        for pos in range(start, len(order)):
            if len(order) - pos < target - len(chosen):
                break
            i = order[pos]
            if not used & members[i]:
                got = go(pos + 1, chosen + [i], used | members[i])
                if got is not None:
                    return got
        return None

    return go(0, [], frozenset())


def _sunflower(members: dict, target: int) -> Optional[list[int]]:
    # all members have the same size and are distinct
    if len(members) < target:
        return None
    if any(not s for s in members.values()):
        return None  # all members empty means at most one distinct member
    disjoint, used = [], set()
    for i in sorted(members, key=lambda i: sorted(map(repr, members[i]))):
        if not used & members[i]:
            disjoint.append(i)
            used |= members[i]
    if len(disjoint) >= target:
        return disjoint[:target]
    counts = Counter(x for s in members.values() for x in s)
    popular = sorted(counts.items(), key=lambda kv: (kv[0] not in used, -kv[1], repr(kv[0])))
    tried_exact = False
    for x, n in popular:
        if x not in used and not tried_exact:
            # the root may avoid every element of the greedy union only if it is empty
            tried_exact = True
            pick = _disjoint_pick(members, target)
            if pick is not None:
                return pick
        if n < target:
            continue
        sub = {i: s - {x} for i, s in members.items() if x in s}
        found = _sunflower(sub, target)
        if found is not None:
            return found
    if not tried_exact:
        return _disjoint_pick(members, target)
    return None


def delta_extract_exhaustive(family: Sequence[Iterable], target: int) -> Optional[tuple[list[int], frozenset]]:
    """Reference search over all index subsets of size ``target``. Small families only."""
    guard(len(family), 16, "family size")
    sets = [frozenset(s) for s in family]
    for combo in itertools.combinations(range(len(sets)), target):
        root = sets[combo[0]] & sets[combo[1]]
        if is_delta_system(sets, combo, root):
            return list(combo), root
    return None


def random_family(rng: random.Random, n: int, k: int, universe: int, distinct: bool = False) -> list[frozenset]:
    """``n`` random sets with sizes in ``0..k`` drawn from ``range(universe)``.

    With ``distinct`` no set repeats, which the sunflower bound needs:
    copies of one set only form a sunflower among themselves.
    """
    if distinct:
        room = sum(math.comb(universe, i) for i in range(min(k, universe) + 1))
        if room < n:
            raise ValueError(f"only {room} distinct sets of size <= {k} over {universe} points")
        seen: dict = {}
        while len(seen) < n:
            s = frozenset(rng.sample(range(universe), rng.randint(0, min(k, universe))))
            seen.setdefault(s, None)
        return list(seen)
    return [frozenset(rng.sample(range(universe), rng.randint(0, min(k, universe)))) for _ in range(n)]


def dump_family(family: Sequence[Iterable]) -> str:
    lines = [" ".join(map(str, sorted(s))) if s else "-" for s in family]
    return "\n".join(lines) + "\n"


def load_family(text: str) -> list[frozenset]:
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if line == "-":
            out.append(frozenset())
            continue
        try:
            out.append(frozenset(int(tok) for tok in line.split()))
        except ValueError:
            raise ValueError(f"line {lineno}: expected integers or '-'") from None
    return out


__all__ = [
    "CohenCondition",
    "CohenAlgebra",
    "compatible",
    "combine",
    "default_ground",
    "cohen_iota",
    "all_conditions",
    "total_conditions",
    "cohen_density_check",
    "cohen_antichain",
    "max_antichain_size",
    "is_delta_system",
    "sunflower_bound",
    "delta_extract",
    "delta_extract_exhaustive",
    "random_family",
    "dump_family",
    "load_family",
]
