from itertools import product
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gmtilde.catkit import (
    ALPHA_MINUS,
    ALPHA_PLUS,
    ID_S,
    CategoryError,
    FiniteCategory,
    FiniteMonoid,
    SetFunctor,
    Span,
    category_from_json,
    classifying_category,
    cyclic_group,
    cyclic_with_zero,
    discrete_category,
    enumerate_set_functors,
    groupoid_equiv_check,
    lax_from_tw,
    monoid_from_json,
    p_category,
    pm_pullback_equivalence,
    point_category,
    span_associator,
    span_compose,
    spans_isomorphic,
    twisted_arrow,
    twisted_arrow_checks,
    two_element_monoid,
)


def arrow_category():
    # 0 -> 1
    return FiniteCategory(
        ("0", "1"),
        {"i0": ("0", "0"), "i1": ("1", "1"), "a": ("0", "1")},
        {"0": "i0", "1": "i1"},
        {("i0", "i0"): "i0", ("i1", "i1"): "i1", ("a", "i0"): "a", ("i1", "a"): "a"},
    )


def sample_categories():
    return [
        point_category(),
        discrete_category(["a", "b", "c"]),
        arrow_category(),
        classifying_category(cyclic_group(2)),
        classifying_category(cyclic_group(3)),
        classifying_category(two_element_monoid()),
        p_category(two_element_monoid()),
        p_category(cyclic_with_zero()),
    ]


def brute_force_tw_count(C):
    n = 0
    for f, (a, b) in C.morphisms.items():
        for f2, (a2, b2) in C.morphisms.items():
            for u, v in product(C.hom(a, a2), C.hom(b2, b)):
                n += C.table[(v, C.table[(f2, u)])] == f
    return n


def test_p_category_counts_and_structure():
    P = p_category(two_element_monoid())
    assert len(P) == 5
    assert P.comp(ALPHA_MINUS, ALPHA_PLUS) == ID_S
    assert P.comp(ALPHA_PLUS, ALPHA_MINUS) == "0"
    assert len(p_category(cyclic_with_zero())) == 6
    with pytest.raises(CategoryError):
        p_category(cyclic_group(2))


def test_law_violations_are_rejected():
    table = {("i", "i"): "i", ("i", "e"): "e", ("e", "i"): "e", ("e", "e"): "i"}
    FiniteCategory(("*",), {"i": ("*", "*"), "e": ("*", "*")}, {"*": "i"}, table)
    bad_unit = {**table, ("i", "e"): "i"}
    with pytest.raises(CategoryError):
        FiniteCategory(("*",), {"i": ("*", "*"), "e": ("*", "*")}, {"*": "i"}, bad_unit)
    with pytest.raises(CategoryError):
        FiniteCategory(("*",), {"i": ("*", "*"), "e": ("*", "*")}, {"*": "i"}, {("i", "i"): "i"})
    # (a*b)*a = b but a*(b*a) = a
    els = ("1", "a", "b")
    tab = {("1", x): x for x in els} | {(x, "1"): x for x in els}
    tab |= {("a", "a"): "b", ("a", "b"): "a", ("b", "a"): "b", ("b", "b"): "b"}
    with pytest.raises(CategoryError):
        classifying_category(FiniteMonoid(els, tab, "1"))


def test_json_loaders():
    M = monoid_from_json({"elements": ["1", "0"], "table": [["1", "0"], ["0", "0"]], "unit": "1"})
    assert M.zero == "0"
    C = category_from_json({
        "objects": ["x"],
        "morphisms": {"id": ["x", "x"]},
        "identities": {"x": "id"},
        "compose": [["id", "id", "id"]],
    })
    assert len(C) == 1


@pytest.mark.parametrize("C", sample_categories(), ids=lambda C: f"{C.name}-{len(C)}")
def test_twisted_arrow_is_a_category(C):
    T = twisted_arrow(C)  # laws checked on construction
    assert set(T.objects) == set(C.morphisms)
    assert len(T) == brute_force_tw_count(C)
    rep = twisted_arrow_checks(C, T)
    assert rep.ok, rep.render_text()


def test_twisted_arrow_examples():
    T = twisted_arrow(point_category())
    assert len(T.objects) == 1 and len(T) == 1
    T = twisted_arrow(classifying_category(cyclic_group(2)))
    assert len(T.objects) == 2 and len(T) == 8 and T.is_groupoid()
    T = twisted_arrow(p_category(two_element_monoid()))
    assert len(T.objects) == 5 and len(T) == 34


def test_groupoid_equivalence():
    assert groupoid_equiv_check(classifying_category(cyclic_group(2))).ok
    assert groupoid_equiv_check(classifying_category(cyclic_group(3))).ok
    assert groupoid_equiv_check(discrete_category(["a", "b", "c"])).ok
    with pytest.raises(CategoryError):
        groupoid_equiv_check(p_category(two_element_monoid()))


def test_span_examples():
    A, B, E = ("a1", "a2"), ("b1", "b2", "b3"), ("e1", "e2")
    s = Span.from_maps(A, ["c"], B, {"c": "a1"}, {"c": "b2"})
    # D is the graph of a function B -> E
    f = {"b1": "e1", "b2": "e2", "b3": "e2"}
    d = Span.from_maps(B, B, E, {b: b for b in B}, f)
    comp = span_compose(s, d)
    assert comp.apex == (("c", "b2"),) and comp.to_right == ("e2",)
    ident = Span.identity(A)
    left_unit = span_compose(ident, s)
    assert spans_isomorphic(left_unit, s, {(x, y): y for x, y in left_unit.apex})
    empty = Span(A, (), B, (), ())
    assert span_compose(empty, d).apex == ()
    with pytest.raises(CategoryError):
        span_compose(s, s)


@st.composite
def span_chains(draw):
    sets = [tuple(range(draw(st.integers(0, 3)))) for _ in range(4)]

    def span(X, Y):
        apex = tuple(range(draw(st.integers(0, 4)))) if X and Y else ()
        lm = tuple(draw(st.sampled_from(X)) for _ in apex)
        rm = tuple(draw(st.sampled_from(Y)) for _ in apex)
        return Span(X, apex, Y, lm, rm)

    return span(sets[0], sets[1]), span(sets[1], sets[2]), span(sets[2], sets[3])


@given(span_chains())
def test_span_composition_associative(chain):
    s1, s2, s3 = chain
    ok, mapping = span_associator(s1, s2, s3)
    assert ok
    # apex size: count matching pairs directly
    n = sum(1 for r1, l2 in product(s1.to_right, s2.to_left) if r1 == l2)
    assert len(span_compose(s1, s2).apex) == n


def constant_functor(T, X):
    return SetFunctor(T, {o: X for o in T.objects}, {m: {x: x for x in X} for m in T.morphisms})


def test_lax_functor_examples():
    C = point_category()
    lax = lax_from_tw(C, constant_functor(twisted_arrow(C), (0,)))
    assert lax.report.ok and all(lax.bijective.values())
    C = p_category(two_element_monoid())
    lax = lax_from_tw(C, constant_functor(twisted_arrow(C), (0, 1)))
    assert lax.report.ok
    assert lax.bijective[(ALPHA_PLUS, ALPHA_MINUS)]
    assert C.comp(ALPHA_MINUS, ALPHA_PLUS) == ID_S


def test_non_functor_is_rejected():
    C = classifying_category(cyclic_group(2))
    T = twisted_arrow(C)
    F = constant_functor(T, (0, 1))
    m = next(m for m in T.morphisms if m not in T.identities.values())
    F.maps[m] = {0: 0, 1: 0}
    with pytest.raises(CategoryError):
        lax_from_tw(C, F)


def test_groupoid_lax_functors_are_strict():
    C = classifying_category(cyclic_group(2))
    T = twisted_arrow(C)
    functors = list(enumerate_set_functors(T, max_size=3))
    # connected groupoid, two objects with automorphisms Z/2: involutions times bijections
    involutions = [1, 1, 2, 4]
    assert len(functors) == sum(involutions[n] * factorial(n) for n in range(4))
    for F in functors:
        lax = lax_from_tw(C, F, T)
        assert lax.report.ok and all(lax.bijective.values())


def test_orbit_enumeration_matches_labelled_count():
    T = twisted_arrow(p_category(two_element_monoid()))
    labelled = sum(1 for _ in enumerate_set_functors(T, max_size=2))
    orbits = list(enumerate_set_functors(T, max_size=2, up_to_iso=True))
    assert sum(F.relabelings // F.automorphisms for F in orbits) == labelled == 92
    assert len(orbits) == 16
    for F in orbits:
        assert F.check() is None


@pytest.mark.slow
def test_pm_pullback_equivalence_size_three():
    rep = pm_pullback_equivalence(max_size=3)
    assert rep.ok, rep.render_text()
    assert rep.data["functors"] == 105 and rep.data["labelled_functors"] == 21912
    assert 0 < rep.data["bijective"] < rep.data["functors"]


def test_pm_pullback_equivalence_other_monoid():
    rep = pm_pullback_equivalence(cyclic_with_zero(), max_size=2)
    assert rep.ok, rep.render_text()
