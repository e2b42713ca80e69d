import time

import pytest

from bvlogic.corpus import DEMO_LANGUAGE as L
from bvlogic.corpus import proof_corpus
from bvlogic.proof import (
    AllE,
    AllI,
    Axm,
    FalsumE,
    ImpE,
    ImpI,
    Ref,
    Subst2,
    check,
    diagnose,
    dumps_proof,
    loads_proof,
    provable_search,
)
from bvlogic.syntax import FALSUM, All, Equal, Imp, Var, lift, not_

a, b, c = L.atom("a"), L.atom("b"), L.atom("c")
V0, V1 = Var(0), Var(1)
CORPUS = proof_corpus()


def test_axiom_rule():
    assert check(Axm(a), {a}, a)
    assert not check(Axm(a), {b}, a)
    assert not check(Axm(a), {a}, b)


def test_identity_and_ref():
    assert check(ImpI(a, Axm(a)), set(), Imp(a, a))
    assert check(Ref(V0), set(), Equal(V0, V0))
    assert not check(Ref(V0), set(), Equal(V0, V1))


def test_corpus_checks():
    assert len(CORPUS) >= 10
    names = {n for n, *_ in CORPUS}
    assert {"K", "S", "implication_chain", "identity"} <= names
    for name, ctx, goal, tree in CORPUS:
        assert check(tree, ctx, goal), name


def test_weakening_on_corpus():
    extra = {c, L.atom("P", L.func("zero")), All(Equal(V0, V0)), FALSUM}
    for name, ctx, goal, tree in CORPUS:
        assert check(tree, set(ctx) | extra, goal), name


def test_alli_lifts_context():
    # P(var 0) in the context mentions a free variable; after allI it becomes P(var 1)
    open_hyp = L.atom("P", V0)
    tree = AllI(Axm(L.atom("P", V1)))
    assert check(tree, {open_hyp}, All(L.atom("P", V1)))
    assert lift(open_hyp, 1, 0) == L.atom("P", V1)
    # the unlifted hypothesis does not discharge the goal under the binder
    assert not check(AllI(Axm(open_hyp)), {open_hyp}, All(open_hyp))


def test_alle_and_subst2_checks():
    body = L.atom("P", V0)
    zero = L.func("zero")
    assert check(AllE(body, zero, Axm(All(body))), {All(body)}, L.atom("P", zero))
    # wrong witness
    assert not check(AllE(body, zero, Axm(All(body))), {All(body)}, L.atom("P", L.term("s", zero)))
    eq = Equal(zero, L.term("s", zero))
    tree = Subst2(zero, L.term("s", zero), body, Axm(eq), Axm(L.atom("P", zero)))
    assert check(tree, {eq, L.atom("P", zero)}, L.atom("P", L.term("s", zero)))
    assert not check(tree, {eq}, L.atom("P", L.term("s", zero)))


def test_falsume_adds_negated_goal():
    tree = FalsumE(a, ImpE(a, Axm(not_(a)), Axm(a)))
    # needs a in the context to refute not a
    assert check(tree, {a}, a)
    assert not check(tree, set(), a)


@pytest.mark.parametrize(
    "tree, ctx, goal, where",
    [
        (ImpI(b, Axm(a)), set(), Imp(a, a), "root/ImpI"),
        (ImpI(a, Axm(b)), set(), Imp(a, a), "root/ImpI[0]/Axm"),
        (ImpE(a, Axm(Imp(a, b)), Axm(c)), {Imp(a, b)}, b, "root/ImpE[1]/Axm"),
        (AllI(Ref(V1)), set(), All(Equal(V0, V0)), "root/AllI[0]/Ref"),
    ],
)
def test_diagnostics(tree, ctx, goal, where):
    assert not check(tree, ctx, goal)
    failure = diagnose(tree, ctx, goal)
    assert failure is not None
    assert failure.path == where
    assert failure.message


@pytest.mark.parametrize("junk", [None, 3, "axm", (Axm(a),), ImpI(a, None)])
def test_check_never_raises(junk):
    assert check(junk, {a}, a) is False
    assert check(Axm(a), {a}, junk) is False


def test_provable_search_examples():
    t = provable_search({a}, a, 1)
    assert t is not None and check(t, {a}, a)
    k = Imp(a, Imp(b, a))
    t = provable_search(set(), k, 3)
    assert t is not None and check(t, set(), k)
    start = time.perf_counter()
    assert provable_search(set(), FALSUM, 12) is None
    assert time.perf_counter() - start < 30
    with pytest.raises(ValueError):
        provable_search(set(), a, 13)


def test_provable_search_results_check():
    goals = [
        (set(), Imp(a, a)),
        ({Imp(a, b), Imp(b, c)}, Imp(a, c)),
        ({a, Imp(a, b)}, b),
        (set(), All(Equal(V0, V0))),
        ({FALSUM}, c),
        (set(), Imp(not_(not_(a)), a)),
    ]
    for ctx, goal in goals:
        t = provable_search(ctx, goal, 6)
        assert t is not None, goal
        assert check(t, ctx, goal)


def test_proof_sexpr_round_trip():
    for name, ctx, goal, tree in CORPUS:
        text = dumps_proof(tree, L)
        assert loads_proof(text, L) == tree, name
        assert dumps_proof(loads_proof(text, L), L) == text


def test_identity_sexpr_text():
    assert dumps_proof(ImpI(a, Axm(a)), L) == "(impI (rel a) (axm (rel a)))"
