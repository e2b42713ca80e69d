import random
from pathlib import Path

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bvlogic.boolalg import FinTopSpace, powerset_algebra, regular_open_algebra
from bvlogic.corpus import DEMO_LANGUAGE, proof_corpus
from bvlogic.errors import SizeGuardError
from bvlogic.proof import ImpI, Axm
from bvlogic.semantics import (
    BStructure,
    PreconditionError,
    dump_structure,
    forces,
    load_structure,
    random_structure,
    realize_formula,
    realize_term,
    sentence_value,
    validate_soundness,
    validate_structure,
)
from bvlogic.syntax import FALSUM, All, Equal, Imp, Language, Var, ex, is_sentence, lift, or_
from oracles import enumerate_syntax

GOLDEN = Path(__file__).parent / "golden"
V0, V1 = Var(0), Var(1)
B2 = powerset_algebra(2)
UNARY = Language(functions={0: ("c",), 2: ("g",)}, relations={1: ("P",)}, name="u")


def discrete(lang, B, n, funcs, rels):
    return BStructure.from_callables(lang, B, n, funcs, rels)


def test_discrete_equality_is_valid():
    S = discrete(UNARY, B2, 3, {"c": 0, "g": lambda x, y: (x * y + 1) % 3}, {"P": lambda x: [0, 1, 3][x]})
    assert validate_structure(S) == (True, None)


def test_asymmetric_equality_rejected():
    S = BStructure.from_callables(
        UNARY, B2, 2, {"c": 0, "g": lambda x, y: 0}, {"P": lambda x: 0},
        eq=lambda x, y: B2.top if x == y else (1 if x < y else 0),
    )
    ok, msg = validate_structure(S)
    assert not ok and msg.startswith("symmetry")


def test_graded_equality_relation_congruence_failure():
    # eq(0,1) = {0}; P(0) = {0,1} but P(1) = {1}: {0} & {0,1} is not below {1}
    L = Language(relations={1: ("P",)}, name="p")
    good = BStructure.from_callables(L, B2, 2, {}, {"P": lambda x: 0b11}, eq=lambda x, y: 3 if x == y else 1)
    assert validate_structure(good)[0]
    bad = BStructure.from_callables(L, B2, 2, {}, {"P": lambda x: [0b11, 0b10][x]}, eq=lambda x, y: 3 if x == y else 1)
    ok, msg = validate_structure(bad)
    assert not ok and "relation congruence" in msg and "P" in msg


def test_function_congruence_and_transitivity_failures():
    L = Language(functions={1: ("f",)}, name="f")
    S = BStructure.from_callables(L, B2, 2, {"f": lambda x: x}, {}, eq=lambda x, y: 3 if x == y else 1)
    assert validate_structure(S)[0]
    # eq(0,1) = {0} but f sends 0 and 1 to points that are never equal
    E3 = lambda x, y: 3 if x == y else (1 if {x, y} == {0, 1} else 0)  # noqa: E731
    bad = BStructure.from_callables(L, B2, 3, {"f": lambda x: [0, 2, 2][x]}, {}, eq=E3)
    ok, msg = validate_structure(bad)
    assert not ok and "congruence" in msg and "f" in msg
    # 0 ~ 1 and 1 ~ 2 everywhere, but 0 ~ 2 nowhere
    E = np.array([[3, 3, 0], [3, 3, 3], [0, 3, 3]])
    L0 = Language(name="empty")
    T = BStructure(L0, B2, 3, {}, {}, E)
    ok, msg = validate_structure(T)
    assert not ok and msg.startswith("transitivity")
    R = BStructure(L0, B2, 2, {}, {}, [[2, 0], [0, 3]])
    assert validate_structure(R)[1].startswith("reflexivity")


def test_guards_and_empty_carrier():
    with pytest.raises(ValueError):
        BStructure(Language(name="e"), B2, 0, {}, {}, np.zeros((0, 0)))
    big = BStructure(Language(name="e"), B2, 33, {}, {}, np.where(np.eye(33, dtype=bool), 3, 0))
    with pytest.raises(SizeGuardError):
        validate_structure(big)


def test_realize_term_examples():
    g = lambda x, y: (2 * x + y) % 3  # noqa: E731
    S = discrete(UNARY, B2, 3, {"c": 2, "g": g}, {"P": lambda x: 0})
    assert realize_term(S, V0, [1]) == 1
    assert realize_term(S, UNARY.func("c"), []) == 2
    t = UNARY.term("g", UNARY.term("g", V0, UNARY.func("c")), UNARY.term("g", V1, V0))
    for x in range(3):
        for y in range(3):
            assert realize_term(S, t, [x, y]) == g(g(x, 2), g(y, x))
    assert realize_term(S, UNARY.func("g"), [], [1, 2]) == g(1, 2)
    with pytest.raises(PreconditionError):
        realize_term(S, V1, [0])


def test_realize_formula_examples():
    S = discrete(UNARY, B2, 2, {"c": 1, "g": lambda x, y: x}, {"P": lambda x: [1, 2][x]})
    assert realize_formula(S, FALSUM) == B2.bot
    assert realize_formula(S, All(Equal(V0, V0))) == B2.top
    assert realize_formula(S, ex(Equal(V0, UNARY.func("c")))) == B2.top
    # P is {0} at 0 and {1} at 1: forall P is the meet, exists P the join
    assert realize_formula(S, All(UNARY.atom("P", V0))) == 0
    assert realize_formula(S, ex(UNARY.atom("P", V0))) == 3
    assert realize_formula(S, UNARY.rel("P"), [], [1]) == 2
    with pytest.raises(PreconditionError):
        realize_formula(S, UNARY.atom("P", V0), [])


def test_forces_examples():
    S = discrete(UNARY, B2, 2, {"c": 0, "g": lambda x, y: x}, {"P": lambda x: [1, 0][x]})
    phi = or_(UNARY.atom("P", UNARY.func("c")), Equal(UNARY.func("c"), UNARY.term("g", UNARY.func("c"), UNARY.func("c"))))
    assert forces(S, B2.bot, phi)
    assert forces(S, B2.top, All(Equal(V0, V0)))
    psi = or_(UNARY.atom("P", UNARY.func("c")), FALSUM)
    assert sentence_value(S, psi) == 1
    assert forces(S, 1, psi) and not forces(S, 2, psi) and not forces(S, 3, psi)
    with pytest.raises(PreconditionError):
        forces(S, B2.top, Equal(V0, V0))


def test_forcing_is_monotone():
    rng = random.Random(3)
    for _ in range(10):
        S = random_structure(DEMO_LANGUAGE, B2, 3, rng)
        for _, ctx, goal, _ in proof_corpus():
            for g in B2.elements():
                if forces(S, g, goal):
                    assert all(forces(S, h, goal) for h in B2.elements() if B2.le(h, g))


def test_soundness_examples():
    a = DEMO_LANGUAGE.atom("a")
    rng = random.Random(11)
    corpus = {name: (ctx, goal, tree) for name, ctx, goal, tree in proof_corpus()}
    for _ in range(5):
        S = random_structure(DEMO_LANGUAGE, B2, 3, rng)
        assert validate_structure(S)[0]
        assert validate_soundness(S, [], Imp(a, a), ImpI(a, Axm(a)))
        assert validate_soundness(S, *corpus["K"])
        assert validate_soundness(S, *corpus["implication_chain"])
    with pytest.raises(PreconditionError):
        validate_soundness(S, [], Imp(a, a), Axm(a))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32), st.integers(1, 4), st.sampled_from([0, 1, 2, 3]))
def test_random_structures_are_valid(seed, n, k):
    B = powerset_algebra(k)
    S = random_structure(DEMO_LANGUAGE, B, n, random.Random(seed))
    assert validate_structure(S) == (True, None)


def test_random_structures_over_ro_algebras_are_valid():
    R = regular_open_algebra(FinTopSpace(4, list(range(8)) + [15]))
    for seed in range(20):
        S = random_structure(DEMO_LANGUAGE, R, 3, random.Random(seed))
        assert validate_structure(S)[0]


def test_realization_invariant_under_lift():
    L = Language(functions={1: ("f",)}, relations={2: ("R",)}, name="two")
    _, forms = enumerate_syntax(L, 6, 2)
    rng = random.Random(7)
    S = random_structure(L, B2, 2, rng)
    for f in forms:
        for v in [(0, 1), (1, 0)]:
            base = realize_formula(S, f, v)
            # lifting by one at cutoff m inserts a slot at position m of the assignment
            for m in range(3):
                v2 = v[:m] + (1,) + v[m:]
                assert realize_formula(S, lift(f, 1, m), v2) == base


def test_structure_file_round_trip_and_golden():
    S = discrete(UNARY, B2, 2, {"c": 1, "g": lambda x, y: (x + y) % 2}, {"P": lambda x: [1, 2][x]})
    text = dump_structure(S, "u.lang", "powerset 2")
    again = load_structure(text, language=UNARY)
    assert dump_structure(again, "u.lang", "powerset 2") == text
    rng = random.Random(1)
    D = random_structure(DEMO_LANGUAGE, B2, 2, rng)
    text = dump_structure(D, "demo", "powerset 2")
    assert text + "\n" == (GOLDEN / "structure_demo.txt").read_text()
    loaded = load_structure(text)
    assert np.array_equal(loaded.eq, D.eq)
    assert all(np.array_equal(loaded.rels[s], D.rels[s]) for s in D.rels)


def test_structure_file_errors():
    with pytest.raises(ValueError):
        load_structure("structure\nlanguage demo\nalgebra powerset 99\ncarrier 1\neq\n1")
    with pytest.raises(ValueError):
        load_structure("structure\nlanguage demo\nalgebra nope\ncarrier 1\neq\n1")


def test_two_valued_collapse_small():
    from oracles import classical_truth

    L = Language(relations={1: ("P",)}, name="one")
    B = powerset_algebra(1)
    _, forms = enumerate_syntax(L, 7, 2)
    sentences = [f for f in forms if is_sentence(f)]
    assert len(sentences) > 50
    P = L.relation_symbols()[0]
    for n in (1, 2):
        for pmask in range(1 << n):
            S = BStructure(L, B, n, {}, {P: [pmask >> i & 1 for i in range(n)]},
                           [[1 if x == y else 0 for y in range(n)] for x in range(n)])
            rels = {P: {(i,) for i in range(n) if pmask >> i & 1}}
            eqm = [[x == y for y in range(n)] for x in range(n)]
            for f in sentences:
                assert (sentence_value(S, f) == 1) == classical_truth(f, n, {}, rels, eqm)
