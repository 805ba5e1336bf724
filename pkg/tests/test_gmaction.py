from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gmtilde.gmaction import (
    AlgebraMap,
    GradedAlgebra,
    NotAFixedPoint,
    PointNotOnScheme,
    attractor,
    cartesian_j_check,
    contraction_check,
    fixed_subscheme,
    identity_map,
    is_isomorphism,
    killed_ideal,
    localize_check,
    repeller,
    tangent_weight_dims,
)
from gmtilde.groebner import ideal_member
from gmtilde.polycore import NonHomogeneousError, derivative, evaluate, weighted_degree
from strategies import graded_algebras, homogeneous_polynomials, rings


def alg(variables, relations=()):
    return GradedAlgebra.from_strings(variables, relations)


HYPERSURFACE = alg([("x1", 1), ("x2", 1), ("y1", -1), ("y2", -1)], ["x1*y1 + x2*y2"])


def test_construction_rejects_inhomogeneous_relations():
    with pytest.raises(NonHomogeneousError):
        alg([("x", 1), ("y", 2)], ["x + y"])


def test_fixed_subscheme_examples():
    assert str(fixed_subscheme(alg([("x", 1), ("y", 0)])).algebra) == "Q[y]"
    A = alg([("x", 0), ("y", 0)], ["x^2 - y^3"])
    assert fixed_subscheme(A).algebra.relations == A.relations
    A0 = fixed_subscheme(alg([("x", 1), ("y", -1)], ["x*y"])).algebra
    assert A0.describe() == "Q (no variables, no relations)"
    assert not A0.is_zero_ring()


def test_attractor_examples():
    assert str(attractor(alg([("x", 1), ("y", -1)])).algebra) == "Q[x]"
    for n in (1, 2, 5):
        A = alg([("x", n)])
        assert str(attractor(A).algebra) == "Q[x]"
        # A- = k[x]/(x), pruned to Q
        minus = repeller(A).algebra
        assert minus.names == () and not minus.is_zero_ring()
    assert str(attractor(HYPERSURFACE).algebra) == "Q[x1, x2]"


def test_repeller_examples():
    assert str(repeller(alg([("x", 1), ("y", -1)])).algebra) == "Q[y]"
    A = alg([("x", 1), ("y", 0), ("z", 2)], ["x^2*y - z*y"])
    assert repeller(A).algebra == fixed_subscheme(A).algebra


def test_structure_maps_checks_pass():
    for A in (HYPERSURFACE, alg([("x", 1), ("y", -1), ("z", 0)], ["x*y - z"])):
        for loc in (attractor(A), repeller(A)):
            assert loc.ok, loc.checks.render_text()


def test_cartesian_examples():
    A = alg([("x", 1), ("y", -1)])
    rep = cartesian_j_check(A)
    assert rep.ok and rep.data["ideal"] == ["x", "y"]
    rep = cartesian_j_check(HYPERSURFACE)
    assert rep.ok and rep.data["ideal"] == ["x1", "x2", "y1", "y2"]
    rep = cartesian_j_check(alg([("x", 0), ("y", 0)], ["x*y"]))
    assert rep.ok and rep.data["ideal"] == ["x*y"]


def test_tangent_weight_examples():
    tw = tangent_weight_dims(alg([("x", 1), ("y", -1)], ["x*y"]), {"x": 0, "y": 0})
    assert tw.dims == {-1: 1, 1: 1}
    assert tw.dim_fixed == 0 and tw.dim_attractor == 1
    assert tw.ok
    tw = tangent_weight_dims(alg([("x", 2)]), {"x": 0})
    assert tw.dims == {2: 1} and tw.dim_attractor == 1
    tw = tangent_weight_dims(alg([("x", 0), ("y", 0)]), {"x": 3, "y": Fraction(-1, 2)})
    assert tw.dims == {0: 2} and tw.dim_fixed == 2


def test_tangent_weight_errors():
    with pytest.raises(NotAFixedPoint):
        tangent_weight_dims(alg([("x", 1)]), {"x": 1})
    with pytest.raises(PointNotOnScheme):
        tangent_weight_dims(alg([("x", 0), ("y", 0)], ["x - y"]), {"x": 1, "y": 0})


def test_tangent_on_cusp_counts_singular_tangent_space():
    A = alg([("x", 2), ("y", 3)], ["x^3 - y^2"])
    tw = tangent_weight_dims(A, {"x": 0, "y": 0})
    assert tw.dims == {2: 1, 3: 1} and tw.ok


def test_localize_examples():
    rep = localize_check(alg([("x", 1)]), "x")
    assert rep.check("attractor_of_localization_is_zero_ring").status == "pass"
    A = alg([("x", 1), ("y", 0)])
    rep = localize_check(A, "y")
    assert rep.ok
    assert rep.check("attractor_commutes_with_localization").status == "pass"
    rep = localize_check(alg([("x", 1), ("y", -1)]), "x*y", closed=["x"])
    assert rep.ok
    # (A/F)+ = Q[x]/(x), which is k
    plus = attractor(alg([("x", 1), ("y", -1)], ["x"])).algebra
    assert not plus.is_zero_ring()
    assert all(plus.contains(g) for g in plus.ring.gens)


def test_localize_rejects_inhomogeneous():
    with pytest.raises(NonHomogeneousError):
        localize_check(alg([("x", 1), ("y", 0)]), "x + y")


def test_contraction_examples():
    rep = contraction_check(alg([("x", 1), ("y", 0)]))
    assert rep.ok and rep.data["p_plus_iso"]
    assert rep.data["extension_witness"] == {"x": "x*s", "y": "y"}
    rep = contraction_check(alg([("x", 1), ("y", -1)]))
    assert rep.ok and not rep.data["p_plus_iso"]
    rep = contraction_check(alg([("x", 2), ("y", 3)], ["x^3 - y^2"]))
    assert rep.ok and rep.data["p_plus_iso"]


def test_algebra_map_checks():
    A = alg([("x", 1), ("y", -1)], ["x*y"])
    B = alg([("x", 1), ("y", -1)], ["x*y"])
    swap_weights = AlgebraMap(A, B, {"x": "y", "y": "x"}, "negate")
    assert swap_weights.is_well_defined()
    bad = AlgebraMap(alg([("x", 1), ("y", -1)]), alg([("x", 1), ("y", -1)], ["x*y - 0"]), {"x": "x", "y": "y"})
    assert bad.is_well_defined()
    broken = AlgebraMap(A, alg([("x", 1), ("y", -1)]), {"x": "x", "y": "y"})
    assert broken.relation_failures()
    ok, _ = is_isomorphism(identity_map(A), identity_map(A))
    assert ok


# -- properties --------------------------------------------------------------


@st.composite
def ring_and_negative_poly(draw):
    R = draw(rings(weights=st.integers(-3, 3)))
    p = draw(homogeneous_polynomials(R, max_degree=4, max_terms=4))
    return R, p


@given(ring_and_negative_poly())
def test_negative_degree_elements_lie_in_killed_ideal(data):
    R, p = data
    d = weighted_degree(p)
    A = GradedAlgebra(R, [])
    if d < 0:
        assert ideal_member(p, killed_ideal(A, "+"))
        # every monomial of negative weight has a negative-weight variable
        for e, _ in p.terms():
            assert any(k and w < 0 for k, w in zip(e, R.weights))
    if d > 0:
        assert ideal_member(p, killed_ideal(A, "-"))


@settings(max_examples=60)
@given(graded_algebras())
def test_repeller_is_attractor_of_negated(A):
    assert repeller(A).algebra == attractor(A.negate()).algebra.negate()


@settings(max_examples=60)
@given(graded_algebras())
def test_structure_map_identities(A):
    for loc in (attractor(A), repeller(A)):
        ok, w = loc.i.compose(loc.q).is_identity()
        assert ok, w
        ok, w = loc.i.compose(loc.p).agrees_with(fixed_subscheme(A).quotient)
        assert ok, w


@settings(max_examples=60)
@given(graded_algebras())
def test_cartesian_check_on_random_algebras(A):
    assert cartesian_j_check(A).ok


@settings(max_examples=60)
@given(graded_algebras(), st.data())
def test_jacobian_block_structure_at_fixed_points(A, data):
    # fixed points: weight-zero coordinates chosen on the weight-zero locus;
    # only use the origin of the moving directions and zero weight-zero coordinates
    point = {n: Fraction(0) for n in A.names}
    if any(evaluate(r, point) for r in A.relations):
        return
    for r, d in zip(A.relations, A.degrees):
        for n, w in A.ring.variables:
            if d != w:
                assert evaluate(derivative(r, n), point) == 0
    tw = tangent_weight_dims(A, point)
    assert tw.ok, tw.checks.render_text()
