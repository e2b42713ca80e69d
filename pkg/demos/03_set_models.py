"""
Sets with Boolean truth values
==============================

Hereditarily finite sets, their Boolean-valued relatives, and the usual
relations computed as algebra elements.
"""

from bvlogic.boolalg import powerset_algebra, two_element_algebra
from bvlogic.setmodels import (
    BSet,
    EMPTY,
    bv_eq,
    bv_mem,
    bv_powerset,
    bv_subset,
    check,
    comprehension,
    dumps_bset,
    empty_bset,
    enumerate_bsets,
    mixture,
    ordinal_mk,
    pset_equiv,
    pset_mem,
)

# ## Plain finite sets

two, three = ordinal_mk(2), ordinal_mk(3)
print(pset_mem(two, three), pset_mem(three, two), pset_equiv(two, ordinal_mk(2)))

# ## Boolean-valued sets

B = powerset_algebra(2)
e = empty_bset(B)
maybe = BSet([(e, 1)], B)  # contains the empty set "on atom 0"
print(dumps_bset(maybe))
print(B.label(bv_mem(e, maybe)), B.label(bv_eq(maybe, e)))

# Checked sets only ever take the values top and bottom
x, y = check(two, B), check(three, B)
print(B.label(bv_eq(x, y)), B.label(bv_mem(x, y)), B.label(bv_subset(x, y)))

# ## Powerset by indicator functions

T = two_element_algebra()
P = bv_powerset(check(ordinal_mk(1), T))
print(len(P), [T.label(v) for v in P.bvals()])
print(T.label(bv_mem(check(EMPTY, T), P)))

# ## Separation and mixtures

w = BSet([(e, 2), (maybe, 3)], B)
sep = comprehension(check(two, B), lambda z: bv_mem(z, w), universe=enumerate_bsets(B, 1, 2))
print(sep.holds, [B.label(v) for v in sep.subset.bvals()])

u, v = check(ordinal_mk(1), B), check(ordinal_mk(2), B)
m = mixture([(1, u), (2, v)])
print(B.label(bv_eq(m, u)), B.label(bv_eq(m, v)))
