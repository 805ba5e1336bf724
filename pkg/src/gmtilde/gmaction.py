"""Graded algebras (affine schemes with a multiplicative-group action).

A :class:`GradedAlgebra` is ``Q[b_1..b_s]/(r_1..r_q)`` where each ``b_j``
has an integer weight and each ``r_k`` is weight-homogeneous.  From it we
build the fixed-point algebra, the attractor and the repeller together with
their structure maps, and run the presentation-level checks on them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Sequence

from .checks import Report
from .groebner import Ideal, ideal_equal, normal_form
from .polycore import (
    NonHomogeneousError,
    Polynomial,
    PolyRing,
    PolynomialError,
    derivative,
    evaluate,
    matrix_rank,
    parse_rational,
    substitute,
    weighted_degree,
)


class NotAFixedPoint(ValueError):
    pass


class PointNotOnScheme(ValueError):
    pass


class GradedAlgebra:
    """Finitely presented Z-graded algebra over Q."""

    def __init__(self, ring: PolyRing, relations: Sequence = (), name: str = None):
        rels = []
        for r in relations:
            if isinstance(r, str):
                r = ring.parse(r)
            elif r.ring != ring:
                r = r.change_ring(ring)
            if r:
                rels.append(r)
        self.ring = ring
        self.relations = tuple(rels)
        # raises NonHomogeneousError with witnesses
        self.degrees = tuple(weighted_degree(r) for r in rels)
        self.name = name

    @classmethod
    def from_strings(cls, variables, relations=(), name=None):
        """``variables`` as ``[(name, weight), ...]``, relations as strings."""
        return cls(PolyRing(variables), relations, name)

    @property
    def names(self):
        return self.ring.names

    @property
    def weights(self):
        return self.ring.weights

    def weight(self, name):
        return self.ring.weight(name)

    def ideal(self) -> Ideal:
        return Ideal(self.ring, self.relations)

    def is_zero_ring(self) -> bool:
        return self.ideal().is_unit()

    def negate(self) -> "GradedAlgebra":
        ring = self.ring.with_weights([-w for w in self.ring.weights])
        return GradedAlgebra(ring, [r.change_ring(ring) for r in self.relations], self.name)

    def reduce(self, p: Polynomial) -> Polynomial:
        return normal_form(p, self.ideal().groebner())

    def contains(self, p: Polynomial) -> bool:
        """Is ``p`` zero in this algebra?"""
        return not self.reduce(p)

    def presentation(self):
        return {
            "variables": [{"name": n, "weight": w} for n, w in self.ring.variables],
            "relations": [str(r) for r in self.relations],
        }

    def key(self):
        return (self.ring.variables, tuple(self.relations))

    def __eq__(self, other):
        return isinstance(other, GradedAlgebra) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __str__(self):
        if not self.ring.names:
            base = "Q"
        else:
            base = "Q[" + ", ".join(self.ring.names) + "]"
        if self.relations:
            base += "/(" + ", ".join(map(str, self.relations)) + ")"
        return base

    def __repr__(self):
        ws = ", ".join(f"{n}:{w}" for n, w in self.ring.variables)
        return f"GradedAlgebra([{ws}], relations=[{', '.join(map(str, self.relations))}])"

    def describe(self):
        if not self.ring.names and not self.relations:
            return "Q (no variables, no relations)"
        return str(self)


class AlgebraMap:
    """Algebra homomorphism given by the images of the source generators.

    ``weight_rule`` maps a source weight to the expected weight of its image
    (``None`` disables the homogeneity check on images).
    """

    def __init__(self, source: GradedAlgebra, target: GradedAlgebra, images: Mapping, weight_rule="same", name=None):
        imgs = {}
        for n in source.names:
            if n not in images:
                raise PolynomialError(f"map {name or ''} has no image for {n!r}")
            v = images[n]
            if isinstance(v, str):
                v = target.ring.parse(v)
            elif not isinstance(v, Polynomial):
                v = target.ring.constant(v)
            elif v.ring != target.ring:
                v = v.change_ring(target.ring)
            imgs[n] = v
        self.source = source
        self.target = target
        self.images = imgs
        self.name = name
        if weight_rule == "same":
            weight_rule = lambda w: w  # noqa: E731
        elif weight_rule == "negate":
            weight_rule = lambda w: -w  # noqa: E731
        self.weight_rule = weight_rule

    def __call__(self, p: Polynomial) -> Polynomial:
        if p.ring != self.source.ring:
            p = p.change_ring(self.source.ring)
        return substitute(p, self.images, self.target.ring)

    def image_weight_violations(self):
        if self.weight_rule is None:
            return []
        bad = []
        for n, w in self.source.ring.variables:
            img = self.images[n]
            if not img:
                continue
            try:
                d = weighted_degree(img)
            except NonHomogeneousError:
                bad.append(n)
                continue
            if d != self.weight_rule(w):
                bad.append(n)
        return bad

    def relation_failures(self) -> List[Polynomial]:
        """Source relations whose image is nonzero in the target."""
        gb = self.target.ideal().groebner()
        return [r for r in self.source.relations if normal_form(self(r), gb)]

    def is_well_defined(self):
        return not self.relation_failures() and not self.image_weight_violations()

    def compose(self, first: "AlgebraMap") -> "AlgebraMap":
        """``self ∘ first``."""
        imgs = {n: self(first.images[n]) for n in first.source.names}
        rule = None
        if self.weight_rule is not None and first.weight_rule is not None:
            rule = lambda w, a=self.weight_rule, b=first.weight_rule: a(b(w))  # noqa: E731
        return AlgebraMap(first.source, self.target, imgs, rule)

    def agrees_with(self, other: "AlgebraMap"):
        """Generator images agree modulo target relations; returns (ok, witness)."""
        gb = self.target.ideal().groebner()
        for n in self.source.names:
            diff = self.images[n] - other.images[n].change_ring(self.target.ring)
            if normal_form(diff, gb):
                return False, f"{n}: {self.images[n]} vs {other.images[n]}"
        return True, None

    def is_identity(self):
        if self.source.ring.names != self.target.ring.names:
            return False, "source and target differ"
        return _agree_names(self)

    def describe(self):
        return {n: str(v) for n, v in self.images.items()}

    def __repr__(self):
        body = ", ".join(f"{n} -> {v}" for n, v in self.images.items())
        return f"AlgebraMap({self.name or ''}: {body})"


def _agree_names(f):
    gb = f.target.ideal().groebner()
    for n in f.source.names:
        if normal_form(f.images[n] - f.target.ring.gen(n), gb):
            return False, n
    return True, None


def identity_map(A: GradedAlgebra) -> AlgebraMap:
    return AlgebraMap(A, A, {n: A.ring.gen(n) for n in A.names}, name="id")


def is_isomorphism(f: AlgebraMap, g: AlgebraMap):
    """Check that ``f`` and ``g`` are well defined and mutually inverse.

    Returns ``(ok, witness)`` where ``witness`` names the first failure.
    """
    for m, label in ((f, "forward"), (g, "inverse")):
        bad = m.relation_failures()
        if bad:
            return False, f"{label} map does not preserve relation {bad[0]}"
    ok, w = g.compose(f).is_identity()
    if not ok:
        return False, f"inverse∘forward differs from identity at {w}"
    ok, w = f.compose(g).is_identity()
    if not ok:
        return False, f"forward∘inverse differs from identity at {w}"
    return True, None


@dataclass
class RationalPoint:
    algebra: GradedAlgebra
    coordinates: Dict[str, Fraction]

    def __post_init__(self):
        coords = {}
        for n in self.algebra.names:
            if n not in self.coordinates:
                raise PolynomialError(f"point has no coordinate for {n!r}")
            v = self.coordinates[n]
            coords[n] = parse_rational(v) if isinstance(v, str) else Fraction(v)
        extra = set(self.coordinates) - set(self.algebra.names)
        if extra:
            raise PolynomialError(f"point has unknown coordinate(s) {sorted(extra)}")
        self.coordinates = coords
        for r in self.algebra.relations:
            if evaluate(r, coords):
                raise PointNotOnScheme(f"relation {r} does not vanish at the point")

    def is_fixed(self):
        return all(not self.coordinates[n] for n, w in self.algebra.ring.variables if w)


# ---------------------------------------------------------------------------
# fixed points, attractor, repeller


def _kill(A: GradedAlgebra, keep, name=None) -> GradedAlgebra:
    """Presentation of A modulo the generators not in ``keep``, pruned."""
    ring = A.ring.subring(keep) if keep else PolyRing([])
    zero = {n: (ring.gen(n) if n in keep else ring.zero) for n in A.names}
    rels = []
    seen = set()
    for r in A.relations:
        img = substitute(r, zero, ring)
        if img and img not in seen:
            seen.add(img)
            rels.append(img)
    return GradedAlgebra(ring, rels, name)


def _projection(A, B, name=None, weight_rule="same"):
    imgs = {n: (B.ring.gen(n) if n in B.ring else B.ring.zero) for n in A.names}
    return AlgebraMap(A, B, imgs, weight_rule, name)


def _inclusion(A, B, name=None):
    return AlgebraMap(A, B, {n: B.ring.gen(n) for n in A.names}, "same", name)


def killed_ideal(A: GradedAlgebra, which: str) -> Ideal:
    """Relations of A plus the generators killed in A⁰ / A⁺ / A⁻, in A's ring.

    ``which`` is ``"0"``, ``"+"`` or ``"-"``.
    """
    if which == "0":
        killed = [n for n, w in A.ring.variables if w != 0]
    elif which == "+":
        killed = [n for n, w in A.ring.variables if w < 0]
    elif which == "-":
        killed = [n for n, w in A.ring.variables if w > 0]
    else:
        raise ValueError(which)
    return Ideal(A.ring, list(A.relations) + [A.ring.gen(n) for n in killed])


@dataclass
class FixedLocus:
    algebra: GradedAlgebra
    quotient: AlgebraMap


def fixed_subscheme(A: GradedAlgebra) -> FixedLocus:
    """A⁰: kill every generator of nonzero weight."""
    keep = [n for n, w in A.ring.variables if w == 0]
    A0 = _kill(A, keep, "A0")
    return FixedLocus(A0, _projection(A, A0, "A->A0"))


@dataclass
class HyperbolicLocus:
    """Attractor (sign ``+``) or repeller (sign ``-``) with structure maps.

    ``p``: A ↠ A±,  ``q``: A⁰ → A±,  ``i``: A± ↠ A⁰.
    """

    sign: str
    algebra: GradedAlgebra
    fixed: GradedAlgebra
    p: AlgebraMap
    q: AlgebraMap
    i: AlgebraMap
    checks: Report = field(default_factory=lambda: Report("structure maps"))

    @property
    def ok(self):
        return self.checks.ok


def _hyperbolic(A: GradedAlgebra, sign: str) -> HyperbolicLocus:
    if sign == "+":
        keep = [n for n, w in A.ring.variables if w >= 0]
    else:
        keep = [n for n, w in A.ring.variables if w <= 0]
    Apm = _kill(A, keep, "A" + sign)
    fx = fixed_subscheme(A)
    A0 = fx.algebra
    p = _projection(A, Apm, "p" + sign)
    q = _inclusion(A0, Apm, "q" + sign)
    i = _projection(Apm, A0, "i" + sign)
    locus = HyperbolicLocus(sign, Apm, A0, p, q, i)
    rep = locus.checks
    for m in (p, q, i):
        bad = m.relation_failures()
        rep.add(f"{m.name}_well_defined", not bad, bad[0] if bad else None)
    ok, w = i.compose(q).is_identity()
    rep.add(f"i{sign}_after_q{sign}_is_identity", ok, w)
    ok, w = i.compose(p).agrees_with(fx.quotient)
    rep.add(f"i{sign}_after_p{sign}_is_quotient_to_fixed", ok, w)
    return locus


def attractor(A: GradedAlgebra) -> HyperbolicLocus:
    """A⁺: kill every generator of negative weight."""
    return _hyperbolic(A, "+")


def repeller(A: GradedAlgebra) -> HyperbolicLocus:
    """A⁻, computed as the attractor of the inverse action."""
    flipped = _hyperbolic(A.negate(), "+")
    direct = _hyperbolic(A, "-")
    rep = direct.checks
    rep.add(
        "repeller_is_attractor_of_inverse_action",
        flipped.algebra.negate() == direct.algebra,
        None if flipped.algebra.negate() == direct.algebra else str(flipped.algebra.negate()),
    )
    return direct


def cartesian_j_check(A: GradedAlgebra) -> Report:
    """(A⁺ relations) + (A⁻ relations) = (A⁰ relations) as ideals of A's ring."""
    plus, minus, zero = killed_ideal(A, "+"), killed_ideal(A, "-"), killed_ideal(A, "0")
    total = Ideal(A.ring, plus.generators + minus.generators)
    rep = Report("A+ ⊗_A A- = A0")
    ok = ideal_equal(total, zero)
    witness = None
    if not ok:
        missing = [g for g in zero.generators if normal_form(g, total.groebner())]
        witness = str(missing[0]) if missing else "extra generator"
    rep.add("sum_of_ideals_equals_fixed_ideal", ok, witness)
    rep.data["ideal"] = [str(g) for g in zero.groebner().basis]
    return rep


# ---------------------------------------------------------------------------
# tangent spaces


def _jacobian(relations, names, point):
    return [[evaluate(derivative(r, n), point) for n in names] for r in relations]


@dataclass
class TangentWeights:
    dims: Dict[int, int]
    dim_fixed: int
    dim_attractor: int
    dim_repeller: int
    block_violations: List[str]
    checks: Report

    @property
    def ok(self):
        return self.checks.ok


def tangent_weight_dims(A: GradedAlgebra, point: Mapping) -> TangentWeights:
    """Per-weight dimensions of the tangent space at a fixed point."""
    z = RationalPoint(A, dict(point))
    if not z.is_fixed():
        moving = [n for n, w in A.ring.variables if w and z.coordinates[n]]
        raise NotAFixedPoint(f"not a fixed point: nonzero coordinate at weight-nonzero variable(s) {moving}")
    coords = z.coordinates
    names = A.names
    J = _jacobian(A.relations, names, coords)
    violations = []
    for k, (r, d) in enumerate(zip(A.relations, A.degrees)):
        for j, (n, w) in enumerate(A.ring.variables):
            if d != w and J[k][j]:
                violations.append(f"d{r}/d{n} = {J[k][j]}")
    dims = {}
    for w in sorted(set(A.weights)):
        cols = [j for j, x in enumerate(A.weights) if x == w]
        rows = [k for k, d in enumerate(A.degrees) if d == w]
        block = [[J[k][j] for j in cols] for k in rows]
        dims[w] = len(cols) - matrix_rank(block)

    def tangent_dim(B: GradedAlgebra):
        pt = {n: coords[n] for n in B.names}
        if not B.names:
            return 0
        return len(B.names) - matrix_rank(_jacobian(B.relations, B.names, pt))

    A0 = fixed_subscheme(A).algebra
    Ap = attractor(A).algebra
    Am = repeller(A).algebra
    d0, dp, dm = tangent_dim(A0), tangent_dim(Ap), tangent_dim(Am)
    rep = Report("tangent weights")
    rep.add("jacobian_blocks_vanish_off_diagonal", not violations, violations[0] if violations else None)
    rep.add("fixed_tangent_is_weight_zero_part", d0 == dims.get(0, 0), None, f"{d0} vs {dims.get(0, 0)}")
    nonneg = sum(v for w, v in dims.items() if w >= 0)
    nonpos = sum(v for w, v in dims.items() if w <= 0)
    rep.add("attractor_tangent_is_nonnegative_part", dp == nonneg, None, f"{dp} vs {nonneg}")
    rep.add("repeller_tangent_is_nonpositive_part", dm == nonpos, None, f"{dm} vs {nonpos}")
    rep.data["dims"] = {str(w): v for w, v in dims.items()}
    rep.data["dim_T_fixed"] = d0
    rep.data["dim_T_attractor"] = dp
    rep.data["dim_T_repeller"] = dm
    return TangentWeights(dims, d0, dp, dm, violations, rep)


# ---------------------------------------------------------------------------
# localization and closed subschemes


def _fresh_name(ring, stem):
    name, i = stem, 0
    while name in ring:
        i += 1
        name = f"{stem}{i}"
    return name


def localize(A: GradedAlgebra, f: Polynomial, inverse_name="w"):
    """A_f = A[w]/(w*f - 1) with w of weight -deg f."""
    d = weighted_degree(f)
    if d is None:
        raise PolynomialError("cannot localize at zero")
    w = _fresh_name(A.ring, inverse_name)
    ring = PolyRing(list(A.ring.variables) + [(w, -d)])
    rels = [r.change_ring(ring) for r in A.relations]
    rels.append(ring.gen(w) * f.change_ring(ring) - 1)
    return GradedAlgebra(ring, rels, "A_f"), w


def localize_check(A: GradedAlgebra, f, closed=None) -> Report:
    """Localization and closed-subscheme compatibility of the attractor.

    ``closed`` is an optional list of homogeneous generators of an ideal F.
    """
    if isinstance(f, str):
        f = A.ring.parse(f)
    try:
        d = weighted_degree(f)
    except NonHomogeneousError:
        raise
    rep = Report("localization")
    Af, w = localize(A, f)
    rep.data["degree"] = d
    if d != 0:
        side = attractor(Af) if d > 0 else repeller(Af)
        label = "attractor" if d > 0 else "repeller"
        zero = side.algebra.is_zero_ring()
        rep.add(f"{label}_of_localization_is_zero_ring", zero)
        rep.data[label] = "zero ring" if zero else str(side.algebra)
    else:
        for sign, build in (("+", attractor), ("-", repeller)):
            loc_side = build(Af).algebra
            side = build(A)
            pf = side.p(f)
            base = side.algebra.ring
            ring = PolyRing(list(base.variables) + [(w, 0)])
            rels = [r.change_ring(ring) for r in side.algebra.relations] + [ring.gen(w) * pf.change_ring(ring) - 1]
            other = Ideal(ring, rels)
            mine = Ideal(ring, [r.change_ring(ring) for r in loc_side.relations])
            label = "attractor" if sign == "+" else "repeller"
            ok = loc_side.ring.names == ring.names and ideal_equal(mine, other)
            rep.add(f"{label}_commutes_with_localization", ok)
            # p(f) is q(f restricted to the fixed locus)
            fx = fixed_subscheme(A)
            f0 = fx.quotient(f)
            diff = pf - side.q(f0)
            rep.add(f"{label}_open_is_preimage_under_q", side.algebra.contains(diff), None if side.algebra.contains(diff) else diff)
    if closed:
        gens = [A.ring.parse(g) if isinstance(g, str) else g for g in closed]
        for g in gens:
            weighted_degree(g)
        AF = GradedAlgebra(A.ring, list(A.relations) + gens, "A/F")
        for sign, build in (("+", attractor), ("-", repeller)):
            lhs = build(AF).algebra
            side = build(A)
            rhs = Ideal(side.algebra.ring, list(side.algebra.relations) + [side.p(g) for g in gens])
            ok = ideal_equal(Ideal(side.algebra.ring, lhs.relations), rhs)
            label = "attractor" if sign == "+" else "repeller"
            rep.add(f"{label}_commutes_with_closed_subscheme", ok)
            if sign == "+":
                rep.data["attractor_of_closed"] = "zero ring" if lhs.is_zero_ring() else lhs.describe()
    return rep


# ---------------------------------------------------------------------------
# contraction


def contraction_check(A: GradedAlgebra) -> Report:
    """Nonnegative weights ⇔ p⁺ is an isomorphism; records the monoid coaction."""
    rep = Report("contraction")
    gb = A.ideal().groebner()
    effective_negative = [n for n, w in A.ring.variables if w < 0 and normal_form(A.ring.gen(n), gb)]
    weights_ok = not effective_negative
    iso = ideal_equal(A.ideal(), killed_ideal(A, "+"))
    rep.add("nonnegative_weights_iff_p_plus_iso", weights_ok == iso, None, f"weights>=0: {weights_ok}, p+ iso: {iso}")
    rep.data["p_plus_iso"] = iso
    rep.data["negative_generators"] = [n for n, w in A.ring.variables if w < 0]
    if iso:
        # coaction A -> A[s], b -> s^n b, extends the action to the monoid A^1
        s = _fresh_name(A.ring, "s")
        ring = PolyRing(list(A.ring.variables) + [(s, 0)])
        target = GradedAlgebra(ring, [r.change_ring(ring) for r in A.relations])
        sv = ring.gen(s)
        imgs = {}
        for n, w in A.ring.variables:
            imgs[n] = (sv ** w * ring.gen(n)) if w >= 0 else ring.gen(n)
        coaction = AlgebraMap(A, target, imgs, None, "coaction")
        bad = coaction.relation_failures()
        rep.add("monoid_coaction_well_defined", not bad, bad[0] if bad else None)
        counit = AlgebraMap(target, A, {**{n: A.ring.gen(n) for n in A.names}, s: A.ring.one}, None)
        ok, w = counit.compose(coaction).is_identity()
        rep.add("monoid_coaction_unit_at_s_equals_1", ok, w)
        rep.data["extension_witness"] = coaction.describe()
    return rep
