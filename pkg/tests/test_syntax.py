import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bvlogic import sexpr
from bvlogic.syntax import (
    FALSUM,
    All,
    App,
    AppRel,
    ArityError,
    Equal,
    Func,
    Imp,
    Language,
    Rel,
    Var,
    and_,
    apply,
    bounded_by,
    dump_language,
    dumps,
    ex,
    free_bound,
    iff,
    is_sentence,
    lift,
    load_language,
    loads_formula,
    loads_term,
    not_,
    or_,
    size,
    subst,
    universal_closure,
)
from oracles import enumerate_syntax, oracle_lift, oracle_subst

L = Language(functions={0: ("c",), 1: ("f",), 2: ("g",)}, relations={0: ("p",), 1: ("P",), 2: ("R",)}, name="t")
V0, V1, V2, V3 = (Var(i) for i in range(4))


def test_language_rejects_duplicate_names():
    with pytest.raises(ValueError):
        Language(functions={0: ("a",)}, relations={0: ("a",)})


def test_language_file_round_trip():
    assert load_language(dump_language(L)) == L


def test_arity_checked_at_construction():
    f = L.func("f")
    assert f.arity == 1
    assert App(f, V0).arity == 0
    with pytest.raises(ArityError):
        App(App(f, V0), V0)
    with pytest.raises(ArityError):
        App(f, f)
    with pytest.raises(ArityError):
        Equal(f, V0)
    with pytest.raises(ArityError):
        Imp(L.rel("P"), FALSUM)
    with pytest.raises(ArityError):
        All(L.rel("R"))
    assert AppRel(L.rel("R"), V0).arity == 1


def test_apply_order():
    t = apply(L.func("g"), V0, V1)
    assert t == App(App(L.func("g"), V0), V1)


def test_lift_examples():
    assert lift(V0, 1, 0) == V1
    assert lift(V0, 1, 1) == V0
    assert lift(All(Equal(V0, V1)), 2, 0) == All(Equal(V0, V3))


def test_subst_examples():
    s = L.term("f", L.func("c"))
    assert subst(V0, s, 0) == s
    assert subst(V3, s, 1) == V2
    s_open = L.term("f", V0)
    assert subst(All(Equal(V0, V1)), s_open, 0) == All(Equal(V0, lift(s_open, 1, 0)))
    assert subst(All(Equal(V0, V1)), s_open, 0) == All(Equal(V0, L.term("f", V1)))


def test_subst_rejects_non_terms():
    with pytest.raises(ArityError):
        subst(V0, L.func("f"), 0)


def test_bounded_by_examples():
    assert not bounded_by(V0, 0)
    assert bounded_by(All(Equal(V0, V0)), 0)
    assert bounded_by(Imp(Equal(V2, V2), FALSUM), 3)
    assert not bounded_by(Imp(Equal(V2, V2), FALSUM), 2)


def test_derived_connectives():
    assert not_(FALSUM) == Imp(FALSUM, FALSUM)
    assert ex(Equal(V0, V0)) == not_(All(not_(Equal(V0, V0))))
    # and(falsum, falsum) unfolded once by hand
    nf = Imp(FALSUM, FALSUM)
    assert and_(FALSUM, FALSUM) == Imp(Imp(Imp(nf, FALSUM), nf), FALSUM)
    a, b = L.atom("p"), L.atom("P", V0)
    assert or_(a, b) == Imp(not_(a), b)
    assert iff(a, b) == and_(Imp(a, b), Imp(b, a))


def test_universal_closure():
    f = Equal(V0, V2)
    assert free_bound(f) == 3
    assert is_sentence(universal_closure(f))
    assert universal_closure(All(Equal(V0, V0))) == All(Equal(V0, V0))


def test_sexpr_canonical_form():
    f = All(Imp(AppRel(L.rel("P"), V0), Equal(V0, L.term("f", L.func("c")))))
    text = dumps(f, L)
    assert text == "(all (imp (apprel (rel P) (var 0)) (eq (var 0) (app (func f) (func c)))))"
    assert loads_formula("  (all\n(imp (apprel (rel P) (var 0))   (eq (var 0) (app (func f) (func c)))))", L) == f
    assert dumps(FALSUM, L) == "falsum"
    assert loads_term("(var 7)", L) == Var(7)


@pytest.mark.parametrize("bad", ["(var x)", "(func nope)", "(app (func c) (var 0))", "(var 0) (var 1)", "("])
def test_sexpr_rejects(bad):
    with pytest.raises(sexpr.SExprError):
        loads_term(bad, L)


# -- exhaustive laws over small syntax --------------------------------------

L2 = Language(functions={1: ("f",)}, relations={2: ("R",)}, name="two")
TERMS, FORMULAS = enumerate_syntax(L2, 7, 3)
SMALL = TERMS[:6] + FORMULAS


def test_enumeration_is_nonempty_and_well_formed():
    assert len(FORMULAS) > 500
    assert all(f.arity == 0 and size(f) <= 7 for f in FORMULAS)


def test_lift_zero_and_compose():
    for t in SMALL:
        for m in range(3):
            assert lift(t, 0, m) is t or lift(t, 0, m) == t
            for n1 in range(3):
                once = lift(t, n1, m)
                assert once.arity == t.arity and size(once) == size(t)
                for n2 in range(3):
                    assert lift(once, n2, m) == lift(t, n1 + n2, m)


def test_subst_lift_cancel():
    for t in SMALL:
        for s in TERMS[:6]:
            for n in range(3):
                assert subst(lift(t, 1, n), s, n) == t


def test_bounded_by_monotone():
    for t in SMALL:
        b = free_bound(t)
        assert bounded_by(t, b)
        assert all(bounded_by(t, l) for l in range(b, b + 3))
        assert b == 0 or not bounded_by(t, b - 1)


def test_lift_agrees_with_named_oracle():
    for t in FORMULAS:
        for n in range(3):
            for m in range(3):
                assert lift(t, n, m) == oracle_lift(t, n, m), (t, n, m)


def test_subst_agrees_with_named_oracle():
    for t in FORMULAS:
        for s in TERMS[:6]:
            for n in range(3):
                assert subst(t, s, n) == oracle_subst(t, s, n), (t, s, n)


def test_closed_formulas_size_8_agree_with_oracle():
    _, forms = enumerate_syntax(L2, 8, 2)
    closed = [f for f in forms if is_sentence(f)]
    assert closed
    for f in closed:
        # substitution into a sentence is the identity; lifting too
        assert subst(f, V1, 0) == f == oracle_subst(f, V1, 0)
        assert lift(f, 2, 0) == f == oracle_lift(f, 2, 0)
        body = f.body if isinstance(f, All) else None
        if body is not None:
            for s in TERMS[:4]:
                assert subst(body, s, 0) == oracle_subst(body, s, 0)


# -- hypothesis: random larger syntax --------------------------------------


def _terms(depth):
    base = st.one_of(st.integers(0, 4).map(Var), st.just(L.func("c")))
    if depth == 0:
        return base
    sub = _terms(depth - 1)
    return st.one_of(
        base,
        sub.map(lambda a: L.term("f", a)),
        st.tuples(sub, sub).map(lambda ab: L.term("g", *ab)),
    )


def _formulas(depth):
    t = _terms(2)
    base = st.one_of(
        st.just(FALSUM),
        st.just(L.atom("p")),
        t.map(lambda a: L.atom("P", a)),
        st.tuples(t, t).map(lambda ab: Equal(*ab)),
        st.tuples(t, t).map(lambda ab: L.atom("R", *ab)),
    )
    if depth == 0:
        return base
    sub = _formulas(depth - 1)
    return st.one_of(base, sub.map(All), st.tuples(sub, sub).map(lambda ab: Imp(*ab)))


@settings(max_examples=300, deadline=None)
@given(_formulas(4), _terms(2), st.integers(0, 3), st.integers(0, 3))
def test_random_formulas_against_oracle(f, s, n, m):
    assert lift(f, n, m) == oracle_lift(f, n, m)
    assert subst(f, s, n) == oracle_subst(f, s, n)
    assert subst(lift(f, 1, n), s, n) == f


@settings(max_examples=200, deadline=None)
@given(_formulas(4))
def test_sexpr_round_trip(f):
    text = dumps(f, L)
    assert loads_formula(text, L) == f
    assert dumps(loads_formula(text, L), L) == text
    assert not text.endswith("\n") and "  " not in text
