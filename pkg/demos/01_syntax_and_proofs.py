"""
Terms, formulas and derivations
===============================

Nameless variables, substitution, and a small natural deduction checker.
"""

# ## A language and some syntax

from bvlogic.corpus import DEMO_LANGUAGE as L
from bvlogic.proof import AllE, Axm, ImpE, ImpI, check, diagnose, dumps_proof
from bvlogic.syntax import All, Equal, Imp, Var, dumps, lift, subst

print([L.func_name(s) for s in L.function_symbols()], [L.rel_name(s) for s in L.relation_symbols()])

zero = L.func("zero")
x0, x1 = Var(0), Var(1)
phi = All(Imp(L.atom("P", x0), L.atom("R", x0, x1)))
print(dumps(phi, L))

# Variable 1 under the binder is the first free variable. Lifting shifts it,
# substitution replaces it and lifts the replacement under the binder.

print(dumps(lift(phi, 2, 0), L))
print(dumps(subst(phi, L.term("s", x0), 0), L))

# ## Checking a derivation

a, b = L.atom("a"), L.atom("b")
k = ImpI(a, ImpI(b, Axm(a)))
print(dumps_proof(k, L))
print(check(k, set(), Imp(a, Imp(b, a))))

# Modus ponens out of a universal hypothesis
all_p = All(L.atom("P", x0))
tree = ImpE(L.atom("P", zero), ImpI(L.atom("P", zero), Axm(L.atom("P", zero))), AllE(L.atom("P", x0), zero, Axm(all_p)))
print(check(tree, {all_p}, L.atom("P", zero)))

# ## When a derivation is wrong

bad = ImpI(a, Axm(b))
print(check(bad, set(), Imp(a, a)))
print(diagnose(bad, set(), Imp(a, a)))

# Equality needs reflexivity, not an assumption
print(diagnose(Axm(Equal(x0, x0)), set(), Equal(x0, x0)))
