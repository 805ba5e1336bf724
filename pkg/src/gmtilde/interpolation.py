"""The interpolating family over the affine line for an affine graded scheme.

For ``A = Q[b_1..b_s]/(r_1..r_q)`` with weights ``n_j`` the family is
presented as ``B = Q[t, y_1..y_s]/(R_1..R_q)`` where each monomial ``m`` of
``r_k`` is lifted to ``t^c(m) * y^m``.  The generic fibre (t = c ≠ 0) is A
again, the special fibre (t = 0) is the fibre product of attractor and
repeller over the fixed locus.

Here the ``y_j`` keep the names of the ``b_j``; the parameter is called ``t``
unless A already uses that name.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional, Sequence, Tuple

from .checks import Report
from .gmaction import (
    AlgebraMap,
    GradedAlgebra,
    attractor,
    fixed_subscheme,
    is_isomorphism,
    repeller,
)
from .groebner import Ideal, ideal_contains, normal_form, ring_map_kernel, saturate
from .polycore import Polynomial, PolyRing, substitute


def mu(n1: int, n2: int) -> int:
    """t-exponent in the product of two basis elements of weights n1, n2."""
    return (abs(n1) + abs(n2) - abs(n1 + n2)) // 2


def c_exponent(exponents: Sequence[int], weights: Sequence[int]) -> int:
    """t-power attached to the monomial with the given exponent vector."""
    total = sum(e * abs(w) for e, w in zip(exponents, weights))
    deg = sum(e * w for e, w in zip(exponents, weights))
    twice = total - abs(deg)
    # parity: total and deg agree mod 2
    assert twice % 2 == 0 and twice >= 0
    return twice // 2


def _fresh(taken, stem):
    name, i = stem, 0
    while name in taken:
        i += 1
        name = f"{stem}{i}"
    return name


def bidegree_of(exp, t_bideg, y_bidegs):
    a = exp[0] * t_bideg[0] + sum(e * b[0] for e, b in zip(exp[1:], y_bidegs))
    b = exp[0] * t_bideg[1] + sum(e * b[1] for e, b in zip(exp[1:], y_bidegs))
    return (a, b)


@dataclass
class InterpolationAlgebra:
    base: GradedAlgebra
    algebra: GradedAlgebra
    t: str
    lifted_relations: Tuple[Polynomial, ...]
    pi1_exponents: Dict[str, int]
    pi2_exponents: Dict[str, int]
    bidegrees: Dict[str, Tuple[int, int]]
    checks: Report = field(default_factory=lambda: Report("interpolation algebra"))

    @property
    def ring(self):
        return self.algebra.ring

    @property
    def names(self):
        return self.base.names

    def ideal(self):
        return self.algebra.ideal()

    def lift(self, p: Polynomial) -> Polynomial:
        """Lift a polynomial of A monomial by monomial (t^c(m) * y^m)."""
        ring = self.ring
        ws = self.base.weights
        d = {}
        for e, c in p.terms():
            d[(c_exponent(e, ws),) + tuple(e)] = c
        return Polynomial(ring, d)

    def specialize(self, p: Polynomial, value) -> Polynomial:
        """Substitute t = value; the result lives in A's ring."""
        ring = self.base.ring
        imgs = {n: ring.gen(n) for n in self.names}
        imgs[self.t] = ring.constant(value)
        return substitute(p, imgs, ring)

    def rescaled(self, factor) -> GradedAlgebra:
        """Presentation with relations R(factor * t, y)."""
        ring = self.ring
        imgs = {n: ring.gen(n) for n in ring.names}
        imgs[self.t] = ring.gen(self.t) * factor
        return GradedAlgebra(ring, [substitute(r, imgs, ring) for r in self.lifted_relations])

    def describe(self):
        return str(self.algebra)


def build_interpolation(A: GradedAlgebra) -> InterpolationAlgebra:
    """Lift every relation of A; asserts bihomogeneity and specialization."""
    t = _fresh(set(A.names), "t")
    ring = PolyRing([(t, 0)] + list(A.ring.variables))
    ws = A.weights
    lifted = []
    for r in A.relations:
        d = {}
        for e, c in r.terms():
            d[(c_exponent(e, ws),) + tuple(e)] = c
        lifted.append(Polynomial(ring, d))
    B = GradedAlgebra(ring, lifted, "B")
    pi1 = {n: max(0, -w) for n, w in A.ring.variables}
    pi2 = {n: max(0, w) for n, w in A.ring.variables}
    bideg = {t: (-1, 1)}
    for n, w in A.ring.variables:
        bideg[n] = (w, 0) if w >= 0 else (0, w)
    out = InterpolationAlgebra(A, B, t, tuple(lifted), pi1, pi2, bideg)
    rep = out.checks
    t_bd = bideg[t]
    y_bd = [bideg[n] for n in A.names]
    bad = []
    for r, dk, rt in zip(A.relations, A.degrees, lifted):
        want = (dk, 0) if dk >= 0 else (0, dk)
        if any(bidegree_of(e, t_bd, y_bd) != want for e, _ in rt.terms()):
            bad.append(rt)
    rep.add("lifted_relations_bihomogeneous", not bad, bad[0] if bad else None)
    spec_bad = [r for r, rt in zip(A.relations, lifted) if out.specialize(rt, 1) != r]
    rep.add("lifted_relations_specialize_at_t_equal_1", not spec_bad, spec_bad[0] if spec_bad else None)
    return out


def interpolation_bidegree_check(B: InterpolationAlgebra) -> bool:
    return B.checks.check("lifted_relations_bihomogeneous").ok


# ---------------------------------------------------------------------------
# embedding into A^1 x Z x Z


@dataclass
class EmbeddingIdeal:
    ring: PolyRing
    ideal: Ideal
    t: str
    u: Dict[str, str]
    v: Dict[str, str]
    checks: Report

    def reduced(self):
        return self.ideal.groebner().basis


def _embedding_ring(B: InterpolationAlgebra):
    taken = set(B.ring.names)
    u, v = {}, {}
    variables = [(B.t, 0)]
    for n, w in B.base.ring.variables:
        u[n] = _fresh(taken, f"u_{n}")
        taken.add(u[n])
    for n, w in B.base.ring.variables:
        v[n] = _fresh(taken, f"v_{n}")
        taken.add(v[n])
    variables += [(u[n], w) for n, w in B.base.ring.variables]
    variables += [(v[n], w) for n, w in B.base.ring.variables]
    return PolyRing(variables), u, v


def embedding_ideal(B: InterpolationAlgebra) -> EmbeddingIdeal:
    """Kernel of Q[t,u,v] -> B, u_j -> t^max(0,-n_j) y_j, v_j -> t^max(0,n_j) y_j."""
    ring, u, v = _embedding_ring(B)
    R = B.ring
    tv = R.gen(B.t)
    images = [tv]
    images += [tv ** B.pi1_exponents[n] * R.gen(n) for n in B.names]
    images += [tv ** B.pi2_exponents[n] * R.gen(n) for n in B.names]
    kernel = ring_map_kernel(ring, images, B.ideal())
    rep = Report("embedding ideal")
    # kernel meets Q[t] trivially
    only_t = [g for g in kernel.groebner().basis if set(g.variables_used()) <= {B.t}]
    rep.add("kernel_meets_Q_t_trivially", not only_t, only_t[0] if only_t else None)
    # at t = 1, u = v = b lands in the ideal of A
    A = B.base
    imgs = {B.t: A.ring.one}
    for n in B.names:
        imgs[u[n]] = A.ring.gen(n)
        imgs[v[n]] = A.ring.gen(n)
    gbA = A.ideal().groebner()
    bad = [g for g in kernel.generators if normal_form(substitute(g, imgs, A.ring), gbA)]
    rep.add("specializes_into_relations_of_A", not bad, bad[0] if bad else None)
    # each y_j is hit (by u_j or v_j), so Q[t,u,v] -> B is onto
    rep.add(
        "map_to_interpolation_algebra_surjective",
        all(B.pi1_exponents[n] == 0 or B.pi2_exponents[n] == 0 for n in B.names),
    )
    return EmbeddingIdeal(ring, kernel, B.t, u, v, rep)


# ---------------------------------------------------------------------------
# fibres


@dataclass
class Fiber:
    value: Fraction
    algebra: GradedAlgebra
    comparison: Optional[GradedAlgebra]
    forward: Optional[AlgebraMap]
    inverse: Optional[AlgebraMap]
    checks: Report

    @property
    def isomorphic(self):
        return self.checks.ok


def fiber_product_presentation(A: GradedAlgebra):
    """A⁺ ⊗_{A⁰} A⁻ with variables p_* (weights ≥ 0) and m_* (weights ≤ 0)."""
    plus = attractor(A).algebra
    minus = repeller(A).algebra
    taken = set()
    pn, mn = {}, {}
    for n in plus.names:
        pn[n] = _fresh(taken, f"p_{n}")
        taken.add(pn[n])
    for n in minus.names:
        mn[n] = _fresh(taken, f"m_{n}")
        taken.add(mn[n])
    ring = PolyRing([(pn[n], w) for n, w in plus.ring.variables] + [(mn[n], w) for n, w in minus.ring.variables])
    rels = [r.change_ring(ring, pn) for r in plus.relations]
    rels += [r.change_ring(ring, mn) for r in minus.relations]
    for n, w in A.ring.variables:
        if w == 0:
            rels.append(ring.gen(pn[n]) - ring.gen(mn[n]))
    return GradedAlgebra(ring, rels, "A+ x_A0 A-"), pn, mn


def fiber_at(B: InterpolationAlgebra, value) -> Fiber:
    """Fibre of the family at t = value, compared with A or with A⁺ ⊗_{A⁰} A⁻."""
    value = Fraction(value)
    A = B.base
    ring = A.ring
    F = GradedAlgebra(ring, [B.specialize(r, value) for r in B.lifted_relations], f"fiber at {value}")
    rep = Report(f"fiber at t = {value}")
    if value:
        fwd = AlgebraMap(A, F, {n: ring.gen(n) * value ** B.pi1_exponents[n] for n in A.names}, "same", "A->fiber")
        inv = AlgebraMap(F, A, {n: ring.gen(n) * value ** (-B.pi1_exponents[n]) for n in A.names}, "same", "fiber->A")
        ok, w = is_isomorphism(fwd, inv)
        rep.add("fiber_isomorphic_to_A", ok, w)
        return Fiber(value, F, A, fwd, inv, rep)
    P, pn, mn = fiber_product_presentation(A)
    fimg = {}
    for n, w in A.ring.variables:
        fimg[n] = P.ring.gen(pn[n]) if w >= 0 else P.ring.gen(mn[n])
    fwd = AlgebraMap(F, P, fimg, "same", "fiber->product")
    iimg = {}
    for n in pn:
        iimg[pn[n]] = ring.gen(n)
    for n in mn:
        iimg[mn[n]] = ring.gen(n)
    inv = AlgebraMap(P, F, iimg, "same", "product->fiber")
    ok, w = is_isomorphism(fwd, inv)
    rep.add("zero_fiber_isomorphic_to_fiber_product", ok, w)
    return Fiber(value, F, P, fwd, inv, rep)


# ---------------------------------------------------------------------------
# closure of the action graph


def _graph_target(A: GradedAlgebra, t_name):
    taken = set(A.names) | {t_name}
    s = _fresh(taken, "s")
    ring = PolyRing([(t_name, 0), (s, 0)] + list(A.ring.variables))
    rels = [r.change_ring(ring) for r in A.relations] + [ring.gen(t_name) * ring.gen(s) - 1]
    return ring, Ideal(ring, rels), s


def _graph_images(A, ring, t_name, s):
    tv, sv = ring.gen(t_name), ring.gen(s)
    u = [ring.gen(n) for n in A.names]
    v = [(tv ** w if w >= 0 else sv ** (-w)) * ring.gen(n) for n, w in A.ring.variables]
    return [tv] + u + v


@dataclass
class ClosureComparison:
    closure_ideal: Ideal
    ztilde_ideal: Ideal
    equal: bool
    witness: Optional[Polynomial]
    checks: Report


def closure_ideal(A: GradedAlgebra, emb: EmbeddingIdeal) -> Ideal:
    ring, J, s = _graph_target(A, emb.t)
    return ring_map_kernel(emb.ring, _graph_images(A, ring, emb.t, s), J)


def ztilde_in_closure(B: InterpolationAlgebra, emb: EmbeddingIdeal = None):
    """Each embedding generator vanishes on the action graph (direct substitution)."""
    emb = emb or embedding_ideal(B)
    A = B.base
    ring, J, s = _graph_target(A, emb.t)
    images = dict(zip(emb.ring.names, _graph_images(A, ring, emb.t, s)))
    gb = J.groebner()
    bad = [g for g in emb.ideal.generators if normal_form(substitute(g, images, ring), gb)]
    return not bad, (bad[0] if bad else None)


def graph_closure_compare(A: GradedAlgebra, B: InterpolationAlgebra = None) -> ClosureComparison:
    B = B or build_interpolation(A)
    emb = embedding_ideal(B)
    clo = closure_ideal(A, emb)
    zt = emb.ideal
    rep = Report("closure of the action graph")
    contained = ideal_contains(clo, zt)
    rep.add("ztilde_ideal_contained_in_closure", contained)
    missing = [g for g in clo.groebner().basis if normal_form(g, zt.groebner())]
    equal = contained and not missing
    witness = None
    if missing:
        missing.sort(key=lambda g: (len(g), g.total_degree(), str(g)))
        witness = missing[0]
    rep.data["equal"] = equal
    rep.data["closure_ideal"] = [str(g) for g in clo.groebner().basis]
    rep.data["ztilde_ideal"] = [str(g) for g in zt.groebner().basis]
    if witness is not None:
        rep.data["witness"] = str(witness)
    return ClosureComparison(clo, zt, equal, witness, rep)


def t_torsion(B: InterpolationAlgebra) -> Ideal:
    """Elements of (relations : t^∞) that are not already zero in B."""
    I = B.ideal()
    sat = saturate(I, B.ring.gen(B.t))
    gb = I.groebner()
    extra = [g for g in sat.groebner().basis if normal_form(g, gb)]
    return Ideal(B.ring, extra)


# ---------------------------------------------------------------------------
# the anti-action of the two-dimensional torus


def _scale_factor(n, l1, l2):
    return l1 ** n if n >= 0 else l2 ** (-n)


def anti_action_map(B: InterpolationAlgebra, l1, l2, source_scale=1) -> AlgebraMap:
    """Pull-back of functions along the map of fibres over λ₁λ₂t to t.

    Domain: relations R(a*t, y); codomain: relations R(a*λ₁λ₂*t, y), where
    ``a = source_scale``.  On generators: t ↦ t, y_j ↦ λ₁^n_j y_j (n_j ≥ 0)
    or λ₂^-n_j y_j (n_j < 0), with 0^0 = 1.
    """
    l1, l2, a = Fraction(l1), Fraction(l2), Fraction(source_scale)
    src = B.rescaled(a)
    tgt = B.rescaled(a * l1 * l2)
    ring = B.ring
    imgs = {B.t: ring.gen(B.t)}
    for n, w in B.base.ring.variables:
        imgs[n] = ring.gen(n) * _scale_factor(w, l1, l2)
    return AlgebraMap(src, tgt, imgs, None, f"phi({l1},{l2})")


def _zero_fiber(B):
    A = B.base
    return GradedAlgebra(A.ring, [B.specialize(r, 0) for r in B.lifted_relations], "fiber at 0")


def anti_action_fiber_map(B: InterpolationAlgebra, l1, l2, t_value) -> AlgebraMap:
    """Ring map from the fibre at ``t_value`` to the fibre at λ₁λ₂·t_value."""
    l1, l2, tv = Fraction(l1), Fraction(l2), Fraction(t_value)
    A = B.base
    dom = GradedAlgebra(A.ring, [B.specialize(r, tv) for r in B.lifted_relations])
    cod = GradedAlgebra(A.ring, [B.specialize(r, l1 * l2 * tv) for r in B.lifted_relations])
    imgs = {n: A.ring.gen(n) * _scale_factor(w, l1, l2) for n, w in A.ring.variables}
    return AlgebraMap(dom, cod, imgs, None, f"phi({l1},{l2},{tv})")


def anti_action_checks(B: InterpolationAlgebra, samples=20, seed=0) -> Report:
    rep = Report("anti-action")
    ident = anti_action_map(B, 1, 1)
    ok_same = ident.source == ident.target
    ok, w = ident.is_identity()
    rep.add("identity_at_1_1", ok and ok_same, w)

    rng = random.Random(seed)
    values = [Fraction(0), Fraction(1), Fraction(-1), Fraction(2), Fraction(1, 2), Fraction(-3), Fraction(3, 2)]
    bad_rel, bad_comp = None, None
    for _ in range(samples):
        l1, l2, m1, m2 = (rng.choice(values) for _ in range(4))
        first = anti_action_map(B, l1, l2)
        fails = first.relation_failures()
        if fails and bad_rel is None:
            bad_rel = f"phi({l1},{l2}): {fails[0]}"
        # φ_λ then φ_λ' at the rescaled parameter equals φ_{λλ'}
        second = anti_action_map(B, m1, m2, source_scale=l1 * l2)
        if second.relation_failures() and bad_rel is None:
            bad_rel = f"phi({m1},{m2}) at scale {l1 * l2}"
        comp = second.compose(first)
        direct = anti_action_map(B, l1 * m1, l2 * m2)
        ok_tgt = comp.target == direct.target
        ok, w = comp.agrees_with(direct)
        if not (ok and ok_tgt) and bad_comp is None:
            bad_comp = f"lambda=({l1},{l2}), lambda'=({m1},{m2}): {w}"
    rep.add("relations_preserved", bad_rel is None, bad_rel)
    rep.add("composition_law", bad_comp is None, bad_comp)

    A = B.base
    Z0 = _zero_fiber(B)
    # φ_{1,0,1}, φ_{0,1,1}, φ_{0,0,1}: Z̃_0 -> Z factor through Z⁺, Z⁻, Z⁰
    plus, minus, fixed = attractor(A), repeller(A), fixed_subscheme(A)
    for (l1, l2), label, through in (
        ((1, 0), "plus", (plus.p, lambda n, w: w >= 0)),
        ((0, 1), "minus", (minus.p, lambda n, w: w <= 0)),
        ((0, 0), "fixed", (fixed.quotient, lambda n, w: w == 0)),
    ):
        phi = anti_action_fiber_map(B, l1, l2, 1)
        # phi : A (fibre at 1) -> fibre at 0, compared to A -> A^± -> fibre at 0
        quot, keep = through
        proj = AlgebraMap(quot.target, Z0, {n: A.ring.gen(n) for n in quot.target.names}, None)
        composite = proj.compose(quot)
        well = not phi.relation_failures()
        ok, w = phi.agrees_with(composite)
        rep.add(f"phi_{l1}{l2}1_factors_through_{label}", well and ok, w)
    for l1, l2 in ((1, 0), (0, 1), (0, 0)):
        e = anti_action_fiber_map(B, l1, l2, 0)
        well = not e.relation_failures()
        ok, w = e.compose(e).agrees_with(e)
        rep.add(f"phi_{l1}{l2}0_idempotent", well and ok, w)
    return rep


# ---------------------------------------------------------------------------
# composition isomorphisms


def _suffixed(names, suffix, taken):
    out = {}
    for n in names:
        out[n] = _fresh(taken, f"{n}{suffix}")
        taken.add(out[n])
    return out


def _side_check(B: InterpolationAlgebra, sign: str) -> Tuple[bool, Optional[str], str]:
    """B ⊗_A A⁺ ≅ A⁺[t] (sign '+', via π₂) or A⁻ ⊗_A B ≅ A⁻[t] (sign '-', via π₁)."""
    A = B.base
    side = attractor(A) if sign == "+" else repeller(A)
    S = side.algebra
    t = B.t
    taken = set(B.ring.names)
    wn = _suffixed(S.names, "_w", taken)
    ring = PolyRing(list(B.ring.variables) + [(wn[n], S.ring.weight(n)) for n in S.names])
    tv = ring.gen(t)
    rels = [r.change_ring(ring) for r in B.lifted_relations]
    rels += [r.change_ring(ring, wn) for r in S.relations]
    exps = B.pi2_exponents if sign == "+" else B.pi1_exponents
    for n, w in A.ring.variables:
        pimg = ring.gen(wn[n]) if n in wn else ring.zero
        rels.append(tv ** exps[n] * ring.gen(n) - pimg)
    T = GradedAlgebra(ring, rels, "tensor")
    # target A^±[t]
    tring = PolyRing([(t, 0)] + list(S.ring.variables))
    St = GradedAlgebra(tring, [r.change_ring(tring) for r in S.relations], "A±[t]")
    fimg = {t: tring.gen(t)}
    for n, w in A.ring.variables:
        fimg[n] = tring.gen(n) if n in wn else tring.zero
    for n in S.names:
        fimg[wn[n]] = tring.gen(t) ** exps[n] * tring.gen(n)
    fwd = AlgebraMap(T, St, fimg, None)
    iimg = {t: ring.gen(t)}
    for n in S.names:
        iimg[n] = ring.gen(n)
    inv = AlgebraMap(St, T, iimg, None)
    ok, w = is_isomorphism(fwd, inv)
    return ok, w, str(St)


def _two_parameter_check(B: InterpolationAlgebra):
    A = B.base
    taken = set(A.names)
    t1 = _fresh(taken, "t1")
    taken.add(t1)
    t2 = _fresh(taken, "t2")
    taken.add(t2)
    ws = A.ring.variables
    # L = B ⊗_{Q[t], t = t1 t2} Q[t1, t2]
    Lring = PolyRing([(t1, 0), (t2, 0)] + list(ws))
    sub = {n: Lring.gen(n) for n in A.names}
    sub[B.t] = Lring.gen(t1) * Lring.gen(t2)
    L = GradedAlgebra(Lring, [substitute(r, sub, Lring) for r in B.lifted_relations], "L")
    # R = B(t1) ⊗_A B(t2), left through π₂, right through π₁
    left = _suffixed(A.names, "_l", taken)
    right = _suffixed(A.names, "_r", taken)
    Rring = PolyRing([(t1, 0), (t2, 0)] + [(left[n], w) for n, w in ws] + [(right[n], w) for n, w in ws])
    T1, T2 = Rring.gen(t1), Rring.gen(t2)
    rels = []
    for r in B.lifted_relations:
        m1 = {n: Rring.gen(left[n]) for n in A.names}
        m1[B.t] = T1
        m2 = {n: Rring.gen(right[n]) for n in A.names}
        m2[B.t] = T2
        rels.append(substitute(r, m1, Rring))
        rels.append(substitute(r, m2, Rring))
    for n, w in ws:
        rels.append(T1 ** max(0, w) * Rring.gen(left[n]) - T2 ** max(0, -w) * Rring.gen(right[n]))
    R = GradedAlgebra(Rring, rels, "R")
    L1, L2 = Lring.gen(t1), Lring.gen(t2)
    rimg = {t1: L1, t2: L2}
    for n, w in ws:
        y = Lring.gen(n)
        rimg[left[n]] = y if w >= 0 else L2 ** (-w) * y
        rimg[right[n]] = L1 ** w * y if w >= 0 else y
    fwd = AlgebraMap(R, L, rimg, None)
    limg = {t1: Rring.gen(t1), t2: Rring.gen(t2)}
    for n, w in ws:
        limg[n] = Rring.gen(left[n]) if w >= 0 else Rring.gen(right[n])
    inv = AlgebraMap(L, R, limg, None)
    return is_isomorphism(fwd, inv)


def composition_checks(A: GradedAlgebra, B: InterpolationAlgebra = None) -> Report:
    B = B or build_interpolation(A)
    rep = Report("composition isomorphisms")
    ok, w, desc = _side_check(B, "+")
    rep.add("a_family_restricted_to_attractor_is_trivial", ok, w)
    ok, w, desc = _side_check(B, "-")
    rep.add("b_family_restricted_to_repeller_is_trivial", ok, w)
    ok, w = _two_parameter_check(B)
    rep.add("c_two_parameter_composition", ok, w)
    return rep
