"""
Boolean-valued structures
=========================

Truth values live in a finite Boolean algebra instead of {true, false}.
"""

import random

import numpy as np

from bvlogic.boolalg import FinTopSpace, powerset_algebra, regular_open_algebra, tautology_le
from bvlogic.corpus import DEMO_LANGUAGE as L
from bvlogic.corpus import proof_corpus
from bvlogic.semantics import BStructure, forces, random_structure, sentence_value, validate_soundness, validate_structure
from bvlogic.syntax import All, Equal, Var, ex, or_

# ## Algebras

B = powerset_algebra(2)
print([B.label(e) for e in B.elements()])
print(B.label(B.imp(1, 2)), B.label(B.neg(1)))

# Regular open sets of a three point space: {0,1} is open but not regular
X = FinTopSpace(3, [0b000, 0b001, 0b010, 0b011, 0b111])
R = regular_open_algebra(X)
print([R.label(e) for e in R.elements()])

# Lattice inequalities can be decided by brute force or on two values
print(tautology_le(R, "(a => b) & (b => c)", "a => c"))
print(tautology_le(B, "a | b", "a"))

# ## A structure by hand

# Two points that are equal "on atom 0" only, with a predicate that holds at
# the first point on atom 0 and everywhere at the second.
S = BStructure.from_callables(
    L, B, 2,
    funcs={"zero": 0, "s": lambda x: x},
    rels={"a": 3, "b": 1, "c": 0, "P": lambda x: [1, 3][x], "Q": lambda x: 0, "R": lambda x, y: 3},
    eq=lambda x, y: 3 if x == y else 1,
)
print(validate_structure(S))

x0 = Var(0)
for f in [All(L.atom("P", x0)), ex(L.atom("P", x0)), All(Equal(x0, L.func("zero"))), or_(L.atom("b"), L.atom("Q", L.func("zero")))]:
    print(B.label(sentence_value(S, f)))

print(forces(S, 1, All(L.atom("P", x0))), forces(S, 2, All(L.atom("P", x0))))

# If P(0) is only true on atom 0, so is P(1): values respect graded equality.
bad = BStructure.from_callables(L, B, 2, {"zero": 0, "s": lambda x: x},
                                {"a": 0, "b": 0, "c": 0, "P": lambda x: [1, 0][x], "Q": lambda x: 0, "R": lambda x, y: 0},
                                eq=lambda x, y: 3 if x == y else 1)
print(validate_structure(bad))

# ## Soundness on random structures

rng = random.Random(0)
structures = [random_structure(L, alg, n, rng) for alg in (B, R) for n in (1, 2, 3) for _ in range(3)]
print(structures[4].eq)
counts = np.array([[validate_soundness(S, c, g, t) for _, c, g, t in proof_corpus()] for S in structures])
print(counts.shape, counts.all())
