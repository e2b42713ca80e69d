import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bvlogic.boolalg import FinTopSpace, powerset_algebra, regular_open_algebra, two_element_algebra
from bvlogic.errors import SizeGuardError
from bvlogic.setmodels import (
    EMPTY,
    AlgebraMismatch,
    BSet,
    CongruenceError,
    PSet,
    b_ext_check,
    bv_eq,
    bv_mem,
    bv_powerset,
    bv_subset,
    check,
    comprehension,
    dumps_bset,
    dumps_pset,
    empty_bset,
    enumerate_bsets,
    enumerate_psets,
    loads_bset,
    loads_pset,
    mixture,
    ordinal_mk,
    pset_equiv,
    pset_mem,
)

B2 = powerset_algebra(2)
TWO = two_element_algebra()


def hf(x: PSet) -> frozenset:
    """Classical hereditarily finite set a PSet denotes."""
    return frozenset(hf(c) for c in x.children)


def naive_eq(x: BSet, y: BSet) -> int:
    # unmemoized transcription of the recursion, used as an oracle
    B = x.algebra
    left = B.top
    for c, b in x.elems:
        s = B.bot
        for c2, b2 in y.elems:
            s = B.join(s, B.meet(b2, naive_eq(c, c2)))
        left = B.meet(left, B.imp(b, s))
    right = B.top
    for c2, b2 in y.elems:
        s = B.bot
        for c, b in x.elems:
            s = B.join(s, B.meet(b, naive_eq(c, c2)))
        right = B.meet(right, B.imp(b2, s))
    return B.meet(left, right)


def test_pset_examples():
    assert pset_equiv(EMPTY, EMPTY)
    assert pset_equiv(PSet((EMPTY,)), PSet((EMPTY, EMPTY)))
    assert not pset_equiv(ordinal_mk(2), PSet((EMPTY,)))
    assert ordinal_mk(0) == EMPTY
    assert pset_equiv(ordinal_mk(1), PSet((EMPTY,)))
    three = ordinal_mk(3)
    ordinals = [ordinal_mk(i) for i in range(5)]
    assert [i for i, o in enumerate(ordinals) if pset_mem(o, three)] == [0, 1, 2]
    with pytest.raises(SizeGuardError):
        ordinal_mk(9)


def test_pset_equiv_matches_hereditary_sets():
    universe = enumerate_psets(3, 2)
    for x in universe:
        for y in universe:
            assert pset_equiv(x, y) == (hf(x) == hf(y))
            assert pset_mem(x, y) == (hf(x) in hf(y))


def test_bv_eq_examples():
    e = empty_bset(B2)
    assert bv_eq(e, e) == B2.top
    for b in B2.elements():
        one = BSet([(e, b)], B2)
        assert bv_eq(one, e) == B2.neg(b)
        assert bv_mem(e, one) == b
    b1, b2 = 1, 2
    pair = BSet([(e, b1), (e, b2)], B2)
    assert bv_mem(e, pair) == B2.join(b1, b2)
    assert all(bv_mem(x, e) == B2.bot for x in enumerate_bsets(B2, 1, 2))


def test_bv_subset_examples():
    e = empty_bset(B2)
    xs = enumerate_bsets(B2, 2, 2)
    assert all(bv_subset(e, y) == B2.top for y in xs)
    for p in enumerate_psets(2, 2):
        assert bv_subset(check(p, B2), check(p, B2)) == B2.top
    # x has entries (e, {0}) and ({e}, top); y = {e} with value {1}
    single = BSet([(e, B2.top)], B2)
    x = BSet([(e, 1), (single, B2.top)], B2)
    y = BSet([(e, 2)], B2)
    # first entry: {0} => {1} = {1}; second: top => (bv_eq(single, e) & {1}) = bot
    assert bv_subset(x, y) == B2.bot
    assert bv_subset(BSet([(e, 1)], B2), y) == 2


def test_algebra_mismatch():
    with pytest.raises(AlgebraMismatch):
        bv_eq(empty_bset(B2), empty_bset(TWO))
    with pytest.raises(AlgebraMismatch):
        bv_mem(empty_bset(B2), empty_bset(TWO))


def test_bv_eq_agrees_with_naive_recursion():
    xs = enumerate_bsets(B2, 2, 2)
    rng = random.Random(4)
    for x, y in [(rng.choice(xs), rng.choice(xs)) for _ in range(400)]:
        assert bv_eq(x, y) == naive_eq(x, y)


def test_graded_equivalence_on_small_universe():
    xs = enumerate_bsets(B2, 2, 1) + enumerate_bsets(B2, 1, 2)
    xs = list(dict.fromkeys(xs))
    for x in xs:
        assert bv_eq(x, x) == B2.top
    for x, y in itertools.product(xs, repeat=2):
        assert bv_eq(x, y) == bv_eq(y, x)
        assert B2.le(B2.meet(bv_subset(x, y), bv_subset(y, x)), bv_eq(x, y))
    for x, y, z in itertools.product(xs, repeat=3):
        assert B2.le(B2.meet(bv_eq(x, y), bv_eq(y, z)), bv_eq(x, z))


def test_check_is_absolute():
    universe = enumerate_psets(2, 2)
    for B in (TWO, B2, regular_open_algebra(FinTopSpace(3, [0, 1, 2, 3, 7]))):
        for x in universe:
            for y in universe:
                e = bv_eq(check(x, B), check(y, B))
                assert e == (B.top if pset_equiv(x, y) else B.bot)
                m = bv_mem(check(x, B), check(y, B))
                assert m == (B.top if pset_mem(x, y) else B.bot)


def test_check_shape():
    assert check(EMPTY, B2) == empty_bset(B2)
    two = check(ordinal_mk(2), B2)
    assert len(two) == 2 and two.bvals() == [B2.top, B2.top]
    assert two.children()[1].bvals() == [B2.top]


def test_powerset_examples():
    p = bv_powerset(empty_bset(B2))
    assert len(p) == 1 and p.bvals() == [B2.top]
    c = check(PSet((EMPTY,)), TWO)
    pc = bv_powerset(c)
    assert len(pc) == 2 and pc.bvals() == [TWO.top, TWO.top]
    assert bv_mem(check(EMPTY, TWO), pc) == TWO.top
    assert bv_mem(c, pc) == TWO.top
    big = BSet([(empty_bset(B2), 0)] * 5, B2)
    with pytest.raises(SizeGuardError):
        bv_powerset(big)


def test_powerset_over_four_elements_contains_every_subset():
    x = check(ordinal_mk(2), B2)
    px = bv_powerset(x)
    assert len(px) == 16
    for y in enumerate_bsets(B2, 1, 1):
        assert B2.le(bv_subset(y, x), bv_mem(y, px))


def test_comprehension_examples():
    e = empty_bset(B2)
    x = check(ordinal_mk(2), B2)
    universe = enumerate_bsets(B2, 1, 2)
    top = comprehension(x, lambda z: B2.top, universe=universe)
    assert top and top.subset.bvals() == x.bvals()
    bot = comprehension(x, lambda z: B2.bot, universe=universe)
    assert bot and bv_eq(bot.subset, e) == B2.top
    for w in enumerate_bsets(B2, 1, 2):
        r = comprehension(x, lambda z: bv_mem(z, w), universe=enumerate_bsets(B2, 2, 1))
        assert r.holds


def test_comprehension_rejects_non_extensional():
    e = empty_bset(TWO)
    one = BSet([(e, TWO.top)], TWO)
    dup = BSet([(e, TWO.top), (e, TWO.top)], TWO)
    counting = lambda z: TWO.top if len(z) == 1 else TWO.bot  # noqa: E731
    res = b_ext_check(counting, [one, dup])
    assert not res and res.witness == (one, dup)
    with pytest.raises(CongruenceError):
        comprehension(BSet([(one, TWO.top), (dup, TWO.top)], TWO), counting)


def test_b_ext_examples():
    xs = enumerate_bsets(B2, 1, 2)
    for w in xs[:6]:
        assert b_ext_check(lambda z: bv_mem(z, w), xs)
    assert b_ext_check(lambda z: 2, xs)


def test_mixture_examples():
    u = check(ordinal_mk(1), B2)
    assert bv_eq(mixture([(B2.top, u)]), u) == B2.top
    assert mixture([], B2) == empty_bset(B2)
    v = check(ordinal_mk(2), B2)
    m = mixture([(1, u), (2, v)])
    assert B2.le(1, bv_eq(m, u)) and B2.le(2, bv_eq(m, v))
    with pytest.raises(ValueError):
        mixture([(1, u), (3, v)])


@settings(max_examples=80, deadline=None)
@given(st.data())
def test_mixture_property(data):
    xs = enumerate_bsets(B2, 2, 1)
    # split the carrier into an antichain by assigning each atom to a part
    k = data.draw(st.integers(1, 3))
    owner = data.draw(st.lists(st.integers(0, k - 1), min_size=2, max_size=2))
    weights = [sum(1 << i for i in range(2) if owner[i] == j) for j in range(k)]
    parts = [(w, data.draw(st.sampled_from(xs))) for w in weights]
    m = mixture(parts)
    for a, u in parts:
        assert B2.le(a, bv_eq(m, u))


def test_sexpr_round_trip():
    for p in enumerate_psets(2, 2):
        assert loads_pset(dumps_pset(p)) == p
    assert dumps_pset(ordinal_mk(2)) == "(pset (pset) (pset (pset)))"
    for x in enumerate_bsets(B2, 2, 1):
        assert loads_bset(dumps_bset(x)) == x
    x = BSet([(empty_bset(B2), 1)], B2)
    assert dumps_bset(x) == "(bset powerset2 ((bset powerset2) 1))"
    R = regular_open_algebra(FinTopSpace(3, [0, 1, 2, 3, 7]))
    y = BSet([(empty_bset(R), 2)], R)
    assert loads_bset(dumps_bset(y, "ro3"), R) == y
    with pytest.raises(ValueError):
        loads_bset(dumps_bset(y, "ro3"))


def test_enumeration_counts():
    assert len(enumerate_psets(1, 2)) == 3  # {}, {0}, {0,0}
    assert len(enumerate_bsets(B2, 2, 2)) == 1891
