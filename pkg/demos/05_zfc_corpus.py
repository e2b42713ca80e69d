"""
Set theory as data
==================

The axioms of set theory and the continuum hypothesis, written with names,
elaborated to nameless form and printed back.
"""

from bvlogic.boolalg import two_element_algebra
from bvlogic.corpus import AXIOM_TEXT, CH_TEXT, LZFC, ch_sentence, elaborate, axiom_corpus, parse, to_text
from bvlogic.semantics import BStructure, sentence_value
from bvlogic.syntax import dumps, is_sentence, size

# ## Surface syntax

print(AXIOM_TEXT["axiom_of_union"])
nf = parse(AXIOM_TEXT["axiom_of_union"])
f = elaborate(nf)
print(dumps(f, LZFC))
print(to_text(f))

# Printing uses only the primitive connectives, and parses back to the same thing
print(elaborate(to_text(f)) == f)

# ## The whole corpus

for name, g in axiom_corpus().items():
    print(f"{name:40s} closed={is_sentence(g)} size={size(g)}")

# ## CH

print(CH_TEXT)
ch = ch_sentence()
print(size(ch), is_sentence(ch))
print(to_text(ch)[:200], "...")

# ## A tiny model

# Two sets: the empty set and its singleton, with honest membership.
B = two_element_algebra()
S = BStructure.from_callables(
    LZFC, B, 2,
    funcs={"empty": 0, "omega": 1, "pair": lambda a, b: 1, "P": lambda a: 1, "U": lambda a: 0},
    rels={"in": lambda a, b: int((a, b) == (0, 1))},
)
for name, g in axiom_corpus().items():
    print(f"{name:40s} {sentence_value(S, g) == B.top}")
