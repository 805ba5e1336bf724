"""Chart-level checks for the hyperbola family and its chain resolutions.

Every map here is a Laurent monomial map (coefficient times a product of
integer powers of coordinates), so gluing data is exact and cheap to compose.

Chart ``r`` of the ``n``-fold chain has coordinates
``t1..t(r-1), tau1, tau2, t(r+1)..tn`` with ``tr = tau1*tau2``.  The
projective coordinates ``xi_0..xi_n`` are

    xi_i = t(i+1)...t(r-1) * tau1          for i < r
    xi_i = 1 / (tau2 * t(r+1)...t(i))      for i >= r

and satisfy ``xi_(i-1) = t_i * xi_i``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Dict, List, Sequence, Tuple

from .checks import Report
from .groebner import Ideal, normal_form
from .interpolation import mu
from .polycore import PolyRing


@dataclass(frozen=True)
class LaurentMonomial:
    coeff: Fraction
    exps: Tuple[int, ...]

    @classmethod
    def var(cls, i, n):
        e = [0] * n
        e[i] = 1
        return cls(Fraction(1), tuple(e))

    @classmethod
    def one(cls, n):
        return cls(Fraction(1), (0,) * n)

    def __mul__(self, other):
        return LaurentMonomial(self.coeff * other.coeff, tuple(a + b for a, b in zip(self.exps, other.exps)))

    def __pow__(self, k):
        return LaurentMonomial(self.coeff ** k, tuple(a * k for a in self.exps))

    def inverse(self):
        return self ** -1

    def scale(self, c):
        return LaurentMonomial(self.coeff * c, self.exps)

    def is_polynomial(self):
        return all(e >= 0 for e in self.exps)

    def support(self):
        return {i for i, e in enumerate(self.exps) if e}

    def evaluate(self, values):
        v = self.coeff
        for x, e in zip(values, self.exps):
            if e < 0:
                if x == 0:
                    raise ZeroDivisionError("monomial undefined at point")
                v /= x ** (-e)
            elif e:
                v *= x ** e
        return v

    def render(self, names):
        num, den = [], []
        for n, e in zip(names, self.exps):
            if e > 0:
                num.append(n if e == 1 else f"{n}^{e}")
            elif e < 0:
                den.append(n if e == -1 else f"{n}^{-e}")
        body = "*".join(num) or "1"
        if den:
            body += "/" + ("(" + "*".join(den) + ")" if len(den) > 1 else den[0])
        if self.coeff == 1:
            return body
        if self.coeff == -1:
            return "-" + body
        return f"{self.coeff}*{body}"


@dataclass
class MonomialMap:
    """Map between coordinate systems: each target coordinate as a Laurent monomial."""

    source: Tuple[str, ...]
    target: Tuple[str, ...]
    images: Tuple[LaurentMonomial, ...]

    def pullback(self, m: LaurentMonomial) -> LaurentMonomial:
        out = LaurentMonomial(m.coeff, (0,) * len(self.source))
        for img, e in zip(self.images, m.exps):
            if e:
                out = out * img ** e
        return out

    def compose(self, first: "MonomialMap") -> "MonomialMap":
        """``self ∘ first`` (apply ``first`` then ``self``)."""
        if first.target != self.source:
            raise ValueError("coordinate systems do not match")
        return MonomialMap(first.source, self.target, tuple(first.pullback(m) for m in self.images))

    def evaluate(self, values):
        return tuple(m.evaluate(values) for m in self.images)

    def is_identity(self):
        if self.source != self.target:
            return False
        n = len(self.source)
        return all(m == LaurentMonomial.var(i, n) for i, m in enumerate(self.images))

    def first_difference(self, other: "MonomialMap"):
        for name, a, b in zip(self.target, self.images, other.images):
            if a != b:
                return f"{name}: {a.render(self.source)} vs {b.render(other.source)}"
        return None

    def describe(self):
        return {t: m.render(self.source) for t, m in zip(self.target, self.images)}


def identity(names) -> MonomialMap:
    n = len(names)
    return MonomialMap(tuple(names), tuple(names), tuple(LaurentMonomial.var(i, n) for i in range(n)))


# ---------------------------------------------------------------------------
# the n-fold chain atlas


def chart_names(n, r):
    return tuple([f"t{j}" for j in range(1, r)] + ["tau1", "tau2"] + [f"t{j}" for j in range(r + 1, n + 1)])


class _ChartCoords:
    """Laurent expressions for t_j and xi_i in chart r."""

    def __init__(self, n, r):
        self.n, self.r = n, r
        self.names = chart_names(n, r)
        self.dim = len(self.names)
        self._idx = {nm: i for i, nm in enumerate(self.names)}

    def var(self, name):
        return LaurentMonomial.var(self._idx[name], self.dim)

    def t(self, j):
        if j == self.r:
            return self.var("tau1") * self.var("tau2")
        return self.var(f"t{j}")

    def xi(self, i):
        r = self.r
        one = LaurentMonomial.one(self.dim)
        if i < r:
            m = self.var("tau1")
            for j in range(i + 1, r):
                m = m * self.var(f"t{j}")
            return m
        m = self.var("tau2")
        for j in range(r + 1, i + 1):
            m = m * self.var(f"t{j}")
        return one * m.inverse()

    def coordinates_of_chart(self, s):
        """Coordinates of chart s written in this chart (Laurent)."""
        out = []
        for name in chart_names(self.n, s):
            if name == "tau1":
                out.append(self.xi(s - 1))
            elif name == "tau2":
                out.append(self.xi(s).inverse())
            else:
                out.append(self.t(int(name[1:])))
        return tuple(out)


@dataclass
class Transition:
    source: int
    target: int
    forward: MonomialMap
    backward: MonomialMap
    invertible_source: LaurentMonomial
    invertible_target: LaurentMonomial

    @property
    def adjacent(self):
        return abs(self.source - self.target) == 1


@dataclass
class ChartAtlas:
    n: int
    charts: List[PolyRing]
    transitions: Dict[Tuple[int, int], Transition]

    def chart(self, r) -> PolyRing:
        return self.charts[r - 1]

    def describe(self):
        return {
            "n": self.n,
            "charts": [{"index": r, "coordinates": list(c.names)} for r, c in enumerate(self.charts, 1)],
            "transitions": [
                {
                    "from": a,
                    "to": b,
                    "invertible": tr.invertible_source.render(tr.forward.source),
                    "map": tr.forward.describe(),
                    "inverse": tr.backward.describe(),
                }
                for (a, b), tr in sorted(self.transitions.items())
            ],
        }


def _negative_part(m: LaurentMonomial):
    return LaurentMonomial(Fraction(1), tuple(-e if e < 0 else 0 for e in m.exps))


def _overlap_unit(forward: MonomialMap):
    """Smallest monomial whose inversion makes every image regular."""
    exps = [0] * len(forward.source)
    for m in forward.images:
        for i, e in enumerate(m.exps):
            if e < 0:
                exps[i] = max(exps[i], 1)
    return LaurentMonomial(Fraction(1), tuple(exps))


def _declared_unit(n, r, s):
    """Monomial declared invertible on chart r for the overlap with chart s."""
    cc = _ChartCoords(n, r)
    if r < s:
        m = cc.var("tau2")
        for j in range(r + 1, s):
            m = m * cc.var(f"t{j}")
    else:
        m = cc.var("tau1")
        for j in range(s + 1, r):
            m = m * cc.var(f"t{j}")
    return m


def build_xn_atlas(n: int) -> ChartAtlas:
    if n < 1:
        raise ValueError("n must be at least 1")
    charts = [PolyRing(chart_names(n, r)) for r in range(1, n + 1)]
    transitions = {}
    for r in range(1, n + 1):
        for s in range(1, n + 1):
            if r == s:
                continue
            cr, cs = _ChartCoords(n, r), _ChartCoords(n, s)
            fwd = MonomialMap(cr.names, cs.names, cr.coordinates_of_chart(s))
            bwd = MonomialMap(cs.names, cr.names, cs.coordinates_of_chart(r))
            transitions[(r, s)] = Transition(r, s, fwd, bwd, _declared_unit(n, r, s), _declared_unit(n, s, r))
    return ChartAtlas(n, charts, transitions)


def corrupt_transition(atlas: ChartAtlas, pair=(1, 2), coordinate=0) -> ChartAtlas:
    """Negative control: flip the sign of one image in one transition."""
    trs = dict(atlas.transitions)
    tr = trs[pair]
    imgs = list(tr.forward.images)
    imgs[coordinate] = imgs[coordinate].scale(-1)
    trs[pair] = Transition(tr.source, tr.target, MonomialMap(tr.forward.source, tr.forward.target, tuple(imgs)),
                           tr.backward, tr.invertible_source, tr.invertible_target)
    return ChartAtlas(atlas.n, atlas.charts, trs)


def _is_unit_given(m: LaurentMonomial, unit: LaurentMonomial):
    """m is a unit on the locus where ``unit`` is invertible."""
    allowed = {i for i, e in enumerate(unit.exps) if e > 0}
    return m.support() <= allowed and m.coeff != 0


def _regular_given(m: LaurentMonomial, unit: LaurentMonomial):
    """m is regular after inverting ``unit``."""
    allowed = {i for i, e in enumerate(unit.exps) if e > 0}
    return all(e >= 0 or i in allowed for i, e in enumerate(m.exps))


def verify_transitions(atlas: ChartAtlas) -> Report:
    rep = Report(f"chart transitions (n = {atlas.n})")
    n = atlas.n
    pair_fail = None
    units_fail = None
    pairs_checked = 0
    for (r, s), tr in sorted(atlas.transitions.items()):
        if r > s:
            continue
        pairs_checked += 1
        for label, comp in (("back∘forth", tr.backward.compose(tr.forward)), ("forth∘back", tr.forward.compose(tr.backward))):
            if not comp.is_identity() and pair_fail is None:
                pair_fail = f"charts ({r},{s}) {label}: {comp.first_difference(identity(comp.source))}"
        if not all(_regular_given(m, tr.invertible_source) for m in tr.forward.images) or not all(
            _regular_given(m, tr.invertible_target) for m in tr.backward.images
        ):
            units_fail = units_fail or f"charts ({r},{s}): map not regular on declared overlap"
        # the declared unit on one side is a unit on the other
        if not _is_unit_given(tr.forward.pullback(tr.invertible_target), tr.invertible_source):
            units_fail = units_fail or f"charts ({r},{s}): overlap loci disagree"
    rep.add("transition_inverses", pair_fail is None, pair_fail)
    rep.add("declared_invertibles_are_monomials_and_suffice", units_fail is None, units_fail)
    cocycle_fail = None
    triple_fail = None
    triples = 0
    for r, s, q in combinations(range(1, n + 1), 3):
        triples += 1
        for a, b, c in ((r, s, q), (q, s, r), (r, q, s), (s, r, q)):
            comp = atlas.transitions[(b, c)].forward.compose(atlas.transitions[(a, b)].forward)
            direct = atlas.transitions[(a, c)].forward
            diff = comp.first_difference(direct)
            if diff and cocycle_fail is None:
                cocycle_fail = f"charts ({a},{b},{c}): {diff}"
        # U_r ∩ U_q ⊆ U_s: the (r,s) unit is a unit on the (r,q) overlap
        if not _is_unit_given(atlas.transitions[(r, s)].invertible_source, atlas.transitions[(r, q)].invertible_source):
            triple_fail = triple_fail or f"U{r} ∩ U{q} not inside U{s}"
    rep.add("cocycle_on_triples", cocycle_fail is None, cocycle_fail)
    rep.add("triple_overlap_contained_in_middle_chart", triple_fail is None, triple_fail)
    rep.data["adjacent_pairs"] = max(n - 1, 0)
    rep.data["effective_triples"] = max(n - 2, 0)
    rep.data["pairs_checked"] = pairs_checked
    rep.data["triples_checked"] = triples
    return rep


def resolution_map_check(atlas: ChartAtlas, n: int = None) -> Report:
    """u = xi_0, v = 1/xi_n: polynomial, u*v = t1...tn, iso off the centre."""
    n = atlas.n if n is None else n
    rep = Report(f"resolution map (n = {n})")
    bad_poly, bad_eq = None, None
    ynames = ("u", "v") + tuple(f"t{j}" for j in range(1, n + 1))
    pis = {}
    for r in range(1, n + 1):
        cc = _ChartCoords(n, r)
        u, v = cc.xi(0), cc.xi(n).inverse()
        ts = [cc.t(j) for j in range(1, n + 1)]
        if not (u.is_polynomial() and v.is_polynomial()):
            bad_poly = bad_poly or f"chart {r}: u = {u.render(cc.names)}, v = {v.render(cc.names)}"
        prod_t = LaurentMonomial.one(cc.dim)
        for m in ts:
            prod_t = prod_t * m
        if u * v != prod_t:
            bad_eq = bad_eq or f"chart {r}"
        pis[r] = MonomialMap(cc.names, ynames, (u, v, *ts))
    rep.add("u_and_v_are_regular", bad_poly is None, bad_poly)
    rep.add("uv_equals_product_of_t", bad_eq is None, bad_eq)

    # inverse maps on opens of the target covering the complement of the centre
    def coords(names):
        return {nm: LaurentMonomial.var(i, len(names)) for i, nm in enumerate(names)}

    iso_fail = None
    opens = []
    # {u != 0}: coordinates u, t1..tn ; chart 1
    names_u = ("u",) + tuple(f"t{j}" for j in range(1, n + 1))
    c = coords(names_u)
    prod = LaurentMonomial.one(len(names_u))
    for j in range(1, n + 1):
        prod = prod * c[f"t{j}"]
    y_on_u = MonomialMap(names_u, ynames, (c["u"], prod * c["u"].inverse(), *[c[f"t{j}"] for j in range(1, n + 1)]))
    inv1 = []
    for nm in chart_names(n, 1):
        if nm == "tau1":
            inv1.append(c["u"])
        elif nm == "tau2":
            inv1.append(c["t1"] * c["u"].inverse())
        else:
            inv1.append(c[nm])
    opens.append(("u != 0", 1, y_on_u, MonomialMap(names_u, chart_names(n, 1), tuple(inv1))))
    # {v != 0}: coordinates v, t1..tn ; chart n
    names_v = ("v",) + tuple(f"t{j}" for j in range(1, n + 1))
    c = coords(names_v)
    prod = LaurentMonomial.one(len(names_v))
    for j in range(1, n + 1):
        prod = prod * c[f"t{j}"]
    y_on_v = MonomialMap(names_v, ynames, (prod * c["v"].inverse(), c["v"], *[c[f"t{j}"] for j in range(1, n + 1)]))
    invn = []
    for nm in chart_names(n, n):
        if nm == "tau2":
            invn.append(c["v"])
        elif nm == "tau1":
            invn.append(c[f"t{n}"] * c["v"].inverse())
        else:
            invn.append(c[nm])
    opens.append(("v != 0", n, y_on_v, MonomialMap(names_v, chart_names(n, n), tuple(invn))))
    # {t_j != 0 for j != r}: coordinates u, v, t_j (j != r) ; chart r
    for r in range(1, n + 1):
        others = [j for j in range(1, n + 1) if j != r]
        names_r = ("u", "v") + tuple(f"t{j}" for j in others)
        c = coords(names_r)
        rest = LaurentMonomial.one(len(names_r))
        for j in others:
            rest = rest * c[f"t{j}"]
        tr = c["u"] * c["v"] * rest.inverse()
        ts = [tr if j == r else c[f"t{j}"] for j in range(1, n + 1)]
        y_on_r = MonomialMap(names_r, ynames, (c["u"], c["v"], *ts))
        before = LaurentMonomial.one(len(names_r))
        for j in range(1, r):
            before = before * c[f"t{j}"]
        after = LaurentMonomial.one(len(names_r))
        for j in range(r + 1, n + 1):
            after = after * c[f"t{j}"]
        invr = []
        for nm in chart_names(n, r):
            if nm == "tau1":
                invr.append(c["u"] * before.inverse())
            elif nm == "tau2":
                invr.append(c["v"] * after.inverse())
            else:
                invr.append(c[nm])
        opens.append((f"t_j != 0 for j != {r}", r, y_on_r, MonomialMap(names_r, chart_names(n, r), tuple(invr))))
    for label, r, y_map, inv in opens:
        forward = pis[r].compose(inv)  # open -> chart -> Y
        d = forward.first_difference(y_map)
        if d and iso_fail is None:
            iso_fail = f"{label}: {d}"
        # chart -> Y -> open -> chart is the identity (on the preimage)
        to_open = MonomialMap(pis[r].source, y_map.source, tuple(_restrict(pis[r], y_map.source)))
        back = inv.compose(to_open)
        if not back.is_identity() and iso_fail is None:
            iso_fail = f"{label}: chart {r} round trip {back.first_difference(identity(back.source))}"
    rep.add("isomorphism_away_from_centre", iso_fail is None, iso_fail)

    # every zero pattern off the centre lies in one of the opens
    cover_fail = None
    for pattern in product((False, True), repeat=n + 2):
        zu, zv, *zt = pattern
        nz = sum(zt)
        # consistency with u*v = t1...tn
        if (zu or zv) != (nz > 0):
            continue
        in_centre = zu and zv and nz >= 2
        if in_centre:
            continue
        covered = (not zu) or (not zv) or nz <= 1
        if not covered and cover_fail is None:
            cover_fail = str(pattern)
    rep.add("opens_cover_complement_of_centre", cover_fail is None, cover_fail)
    return rep


def _restrict(pi: MonomialMap, names):
    idx = {nm: i for i, nm in enumerate(pi.target)}
    return [pi.images[idx[nm]] for nm in names]


# ---------------------------------------------------------------------------
# e_n basis and the blow-up charts


def e_basis_identity(bound: int) -> Report:
    """e_a * e_b = t^mu(a,b) * e_(a+b) in Q[t,tau1,tau2]/(tau1*tau2 - t)."""
    ring = PolyRing(["tau1", "tau2", "t"])
    I = Ideal(ring, [ring.parse("tau1*tau2 - t")])
    gb = I.groebner()
    t1, t2, t = ring.gens

    def e(n):
        return t1 ** n if n >= 0 else t2 ** (-n)

    rep = Report(f"e_n basis identity (|n| <= {bound})")
    fail = None
    count = 0
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            count += 1
            diff = e(a) * e(b) - t ** mu(a, b) * e(a + b)
            if normal_form(diff, gb) and fail is None:
                fail = f"n1={a}, n2={b}"
    rep.add("e_product_identity", fail is None, fail)
    rep.data["pairs_checked"] = count
    return rep


def _m(coeff, *exps):
    return LaurentMonomial(Fraction(coeff), tuple(exps))


def blowup_check() -> Report:
    rep = Report("blow-up charts")
    A = ("t", "lam")
    X = ("tau1", "tau2")
    P = ("a", "b")
    # sigma+ : (t, lam) -> (t, lam t) ; (tau1, tau2) -> (tau1 tau2, tau1)
    sp_A = MonomialMap(A, P, (_m(1, 1, 0), _m(1, 1, 1)))
    sp_X = MonomialMap(X, P, (_m(1, 1, 1), _m(1, 1, 0)))
    glue_p = MonomialMap(A, X, (_m(1, 1, 1), _m(1, 0, -1)))  # (t,lam) -> (lam t, 1/lam)
    d = sp_X.compose(glue_p).first_difference(sp_A)
    rep.add("sigma_plus_charts_agree_on_overlap", d is None, d)
    # sigma- : (t, lam) -> (t, lam/t) ; (tau1, tau2) -> (tau1 tau2, 1/tau2)
    sm_A = MonomialMap(A, P, (_m(1, 1, 0), _m(1, -1, 1)))
    sm_X = MonomialMap(X, P, (_m(1, 1, 1), _m(1, 0, -1)))
    glue_m = MonomialMap(A, X, (_m(1, 0, 1), _m(1, 1, -1)))  # (t,lam) -> (lam, t/lam)
    d = sm_X.compose(glue_m).first_difference(sm_A)
    rep.add("sigma_minus_charts_agree_on_overlap", d is None, d)
    # in the coordinate mu = 1/lam the minus charts become (t, mu t) and (tau1 tau2, tau2)
    M = ("t", "mu")
    sm_A_mu = MonomialMap(M, P, (_m(1, 1, 0), _m(1, 1, 1)))
    to_lam = MonomialMap(M, A, (_m(1, 1, 0), _m(1, 0, -1)))
    inv_b = MonomialMap(P, P, (_m(1, 1, 0), _m(1, 0, -1)))
    d = inv_b.compose(sm_A.compose(to_lam)).first_difference(sm_A_mu)
    rep.add("sigma_minus_in_inverted_coordinate", d is None, d)

    sm_X_mu = MonomialMap(X, P, (_m(1, 1, 1), _m(1, 0, 1)))
    charts = (
        # label, chart A map, chart X map, inverse on {a != 0}, inverse on {b != 0}, exceptional coordinate in X
        ("plus", sp_A, sp_X, MonomialMap(P, A, (_m(1, 1, 0), _m(1, -1, 1))), MonomialMap(P, X, (_m(1, 0, 1), _m(1, 1, -1))), 0),
        ("minus_mu", sm_A_mu, sm_X_mu, MonomialMap(P, M, (_m(1, 1, 0), _m(1, -1, 1))), MonomialMap(P, X, (_m(1, 1, -1), _m(1, 0, 1))), 1),
    )
    one = (Fraction(1), Fraction(1))
    for label, sA, sX, inv_a, inv_b, exc in charts:
        ok_a = sA.compose(inv_a).is_identity() and inv_a.compose(sA).is_identity()
        ok_b = sX.compose(inv_b).is_identity() and inv_b.compose(sX).is_identity()
        rep.add(f"sigma_{label}_iso_off_origin", ok_a and ok_b)
        # over (0,0): t = 0 in chart A, one coordinate axis in chart X
        excA = all(m.exps[0] > 0 for m in sA.images)
        excX = all(m.exps[exc] > 0 for m in sX.images)
        rep.add(f"sigma_{label}_exceptional_fibre_is_a_line_in_each_chart", excA and excX)
        pa, px = inv_a.evaluate(one), inv_b.evaluate(one)
        ok = sA.evaluate(pa) == one and sX.evaluate(px) == one
        if label == "plus":
            ok = ok and glue_p.evaluate(pa) == px
        rep.add(f"sigma_{label}_fibre_over_1_1_is_one_point", ok)
    return rep


# ---------------------------------------------------------------------------
# fibres of the chain resolution


@dataclass
class ProjectiveCoordinatePoint:
    """Point of the chain given by projective coordinates xi_0..xi_n and t."""

    xi: Tuple[Tuple[Fraction, Fraction], ...]
    t: Tuple[Fraction, ...]

    def __post_init__(self):
        xi = tuple((Fraction(p), Fraction(q)) for p, q in self.xi)
        t = tuple(Fraction(x) for x in self.t)
        if len(xi) != len(t) + 1:
            raise ValueError("need n+1 projective coordinates for n parameters")
        for p, q in xi:
            if p == 0 and q == 0:
                raise ValueError("projective coordinate (0:0)")
        for i in range(1, len(xi)):
            # xi_(i-1) = t_i * xi_i  means  t_i * p_i * q_(i-1) = p_(i-1) * q_i
            (p1, q1), (p0, q0) = xi[i], xi[i - 1]
            if t[i - 1] * p1 * q0 != p0 * q1:
                raise ValueError(f"relation xi_{i - 1} = t_{i} * xi_{i} fails")
        if xi[0][1] == 0:
            raise ValueError("xi_0 is infinite")
        if xi[-1][0] == 0:
            raise ValueError("xi_n is zero")
        self.xi = xi
        self.t = t

    @property
    def n(self):
        return len(self.t)

    def in_chart(self, r):
        """xi_(r-1) finite and xi_r nonzero."""
        return self.xi[r - 1][1] != 0 and self.xi[r][0] != 0

    def chart_coordinates(self, r):
        p0, q0 = self.xi[r - 1]
        p1, q1 = self.xi[r]
        tau1, tau2 = p0 / q0, q1 / p1
        out = []
        for name in chart_names(self.n, r):
            if name == "tau1":
                out.append(tau1)
            elif name == "tau2":
                out.append(tau2)
            else:
                out.append(self.t[int(name[1:]) - 1])
        return tuple(out)

    @classmethod
    def from_chart(cls, n, r, values):
        names = chart_names(n, r)
        vals = dict(zip(names, (Fraction(v) for v in values)))
        tau1, tau2 = vals["tau1"], vals["tau2"]
        t = [vals.get(f"t{j}", tau1 * tau2 if j == r else None) for j in range(1, n + 1)]
        xi = []
        for i in range(n + 1):
            if i < r:
                p = tau1
                for j in range(i + 1, r):
                    p *= t[j - 1]
                xi.append((p, Fraction(1)))
            else:
                q = tau2
                for j in range(r + 1, i + 1):
                    q *= t[j - 1]
                xi.append((Fraction(1), q))
        return cls(tuple(xi), tuple(t))


def fiber_curve_type(n: int, t: Sequence) -> int:
    """Number of nodes of the fibre chain over t (= number of zero t_i)."""
    if len(t) != n:
        raise ValueError(f"expected {n} parameters, got {len(t)}")
    return sum(1 for x in t if Fraction(x) == 0)


def fiber_component_count(n: int, t: Sequence, generic=(Fraction(7), Fraction(11, 3))) -> int:
    """Brute-force oracle: glue chart-wise fibre components via projective coordinates."""
    t = [Fraction(x) for x in t]
    comps = []  # (chart, kind)
    samples = {}
    for r in range(1, n + 1):
        tr = t[r - 1]
        fixed = {f"t{j}": t[j - 1] for j in range(1, n + 1) if j != r}
        if tr != 0:
            kinds = {"hyperbola": (generic[0], tr / generic[0])}
        else:
            kinds = {"tau1_axis": (generic[0], Fraction(0)), "tau2_axis": (Fraction(0), generic[1])}
        for kind, (a, b) in kinds.items():
            vals = []
            for name in chart_names(n, r):
                vals.append(a if name == "tau1" else b if name == "tau2" else fixed[name])
            comps.append((r, kind))
            samples[(r, kind)] = ProjectiveCoordinatePoint.from_chart(n, r, vals)
    parent = {c: c for c in comps}

    def find(c):
        while parent[c] != c:
            parent[c] = parent[parent[c]]
            c = parent[c]
        return c

    def classify(point, s):
        coords = dict(zip(chart_names(n, s), point.chart_coordinates(s)))
        if t[s - 1] != 0:
            return (s, "hyperbola")
        if coords["tau2"] == 0 and coords["tau1"] != 0:
            return (s, "tau1_axis")
        if coords["tau1"] == 0 and coords["tau2"] != 0:
            return (s, "tau2_axis")
        return None

    for c, pt in samples.items():
        for s in range(1, n + 1):
            if s != c[0] and pt.in_chart(s):
                other = classify(pt, s)
                if other is not None:
                    parent[find(c)] = find(other)
    return len({find(c) for c in comps})


def fiber_type_check(n: int, t: Sequence) -> Report:
    rep = Report(f"fibre over {tuple(str(Fraction(x)) for x in t)}")
    m = fiber_curve_type(n, t)
    comps = fiber_component_count(n, t)
    rep.add("node_count_matches_component_oracle", comps == m + 1, None, f"m = {m}, components = {comps}")
    rep.data["m"] = m
    rep.data["components"] = comps
    return rep


def xn_checks(n: int, samples=20, seed=0) -> Report:
    """All chart-level checks for the n-fold chain."""
    atlas = build_xn_atlas(n)
    rep = Report(f"chain atlas n = {n}")
    rep.extend(verify_transitions(atlas), "transitions")
    rep.extend(resolution_map_check(atlas, n), "resolution")
    rng = random.Random(seed)
    bad = None
    for _ in range(samples):
        t = [Fraction(0) if rng.random() < 0.4 else Fraction(rng.randint(-9, 9) or 1, rng.randint(1, 5)) for _ in range(n)]
        r = fiber_type_check(n, t)
        if not r.ok and bad is None:
            bad = str([str(x) for x in t])
    for pattern in product((0, 1), repeat=n):
        t = [Fraction(0) if z else Fraction(2) for z in pattern]
        if not fiber_type_check(n, t).ok and bad is None:
            bad = str(pattern)
    rep.add("fibre_type_matches_oracle", bad is None, bad)
    rep.data["charts"] = n
    rep.data["adjacent_pairs"] = n - 1
    rep.data["effective_triples"] = max(n - 2, 0)
    return rep
