"""Finite categories given by composition tables, spans of finite sets, and
the passage from functors on a twisted arrow category to lax functors into
correspondences.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from typing import Dict, Hashable, Mapping, Tuple

from .checks import Report


class CategoryError(ValueError):
    pass


class FiniteCategory:
    """Category with finitely many objects and morphisms.

    ``morphisms`` maps a morphism name to ``(source, target)``;
    ``identities`` maps each object to its identity morphism;
    ``compose`` maps ``(g, f)`` (g after f) to the name of ``g∘f`` for every
    composable pair.  Unit and associativity laws are checked on creation.
    """

    def __init__(self, objects, morphisms: Mapping, identities: Mapping, compose: Mapping, name=None, check=True):
        self.objects = tuple(objects)
        self.morphisms = dict(morphisms)
        self.identities = dict(identities)
        self.table = dict(compose)
        self.name = name
        self._hom = {}
        for m, (s, t) in self.morphisms.items():
            self._hom.setdefault((s, t), []).append(m)
        if check:
            self._check()

    def source(self, m):
        return self.morphisms[m][0]

    def target(self, m):
        return self.morphisms[m][1]

    def hom(self, a, b):
        return list(self._hom.get((a, b), ()))

    def comp(self, g, f):
        """``g ∘ f``."""
        try:
            return self.table[(g, f)]
        except KeyError:
            raise CategoryError(f"{g} and {f} are not composable") from None

    def composable_pairs(self):
        """(f, g) with target(f) = source(g)."""
        for f, (_, b) in self.morphisms.items():
            for g in self.morphisms:
                if self.morphisms[g][0] == b:
                    yield f, g

    def _check(self):
        obs = set(self.objects)
        for m, (s, t) in self.morphisms.items():
            if s not in obs or t not in obs:
                raise CategoryError(f"morphism {m} has unknown endpoint")
        for o in self.objects:
            i = self.identities.get(o)
            if i is None or self.morphisms.get(i) != (o, o):
                raise CategoryError(f"object {o} lacks an identity")
        for f, g in self.composable_pairs():
            h = self.table.get((g, f))
            if h is None:
                raise CategoryError(f"composite {g}∘{f} missing")
            if self.morphisms.get(h) != (self.source(f), self.target(g)):
                raise CategoryError(f"composite {g}∘{f} = {h} has wrong endpoints")
        for m, (s, t) in self.morphisms.items():
            if self.table[(m, self.identities[s])] != m or self.table[(self.identities[t], m)] != m:
                raise CategoryError(f"unit law fails at {m}")
        for f, g in self.composable_pairs():
            gf = self.table[(g, f)]
            for h in self.hom_from(self.target(g)):
                if self.table[(h, gf)] != self.table[(self.table[(h, g)], f)]:
                    raise CategoryError(f"associativity fails at ({h}, {g}, {f})")

    def hom_from(self, a):
        return [m for m, (s, _) in self.morphisms.items() if s == a]

    def is_groupoid(self):
        return all(self.inverse(m) is not None for m in self.morphisms)

    def inverse(self, m):
        s, t = self.morphisms[m]
        for n in self.hom(t, s):
            if self.table[(n, m)] == self.identities[s] and self.table[(m, n)] == self.identities[t]:
                return n
        return None

    def __len__(self):
        return len(self.morphisms)

    def describe(self):
        return {
            "objects": [str(o) for o in self.objects],
            "morphisms": {str(m): [str(s), str(t)] for m, (s, t) in self.morphisms.items()},
            "morphism_count": len(self.morphisms),
        }


class FiniteMonoid:
    """Monoid given by a multiplication table."""

    def __init__(self, elements, table: Mapping, unit):
        self.elements = tuple(elements)
        self.table = dict(table)
        self.unit = unit
        els = set(self.elements)
        if unit not in els:
            raise CategoryError("unit is not an element")
        for a in self.elements:
            for b in self.elements:
                if self.table.get((a, b)) not in els:
                    raise CategoryError(f"product {a}*{b} missing or outside the monoid")
        for a in self.elements:
            if self.mul(unit, a) != a or self.mul(a, unit) != a:
                raise CategoryError(f"unit law fails at {a}")
        for a, b, c in product(self.elements, repeat=3):
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                raise CategoryError(f"associativity fails at ({a}, {b}, {c})")

    def mul(self, a, b):
        return self.table[(a, b)]

    @property
    def zero(self):
        for z in self.elements:
            if all(self.mul(z, m) == z and self.mul(m, z) == z for m in self.elements):
                return z
        return None


class FiniteMonoidWithZero(FiniteMonoid):
    def __init__(self, elements, table, unit, zero=None):
        super().__init__(elements, table, unit)
        found = super().zero
        if found is None or (zero is not None and zero != found):
            raise CategoryError("monoid has no zero element" if found is None else f"{zero} is not a zero")
        self._zero = found

    @property
    def zero(self):
        return self._zero


def monoid_from_json(data) -> FiniteMonoid:
    elements = [str(e) for e in data["elements"]]
    table = {}
    rows = data["table"]
    for a, row in zip(elements, rows):
        for b, c in zip(elements, row):
            table[(a, b)] = str(c)
    return FiniteMonoid(elements, table, str(data["unit"]))


def two_element_monoid() -> FiniteMonoidWithZero:
    """{1, 0} under multiplication."""
    els = ("1", "0")
    table = {(a, b): ("1" if a == b == "1" else "0") for a in els for b in els}
    return FiniteMonoidWithZero(els, table, "1")


def cyclic_with_zero() -> FiniteMonoidWithZero:
    """{1, 0, 2} with 2*2 = 1."""
    els = ("1", "0", "2")
    table = {}
    for a in els:
        for b in els:
            if "0" in (a, b):
                table[(a, b)] = "0"
            elif a == b:
                table[(a, b)] = "1"
            else:
                table[(a, b)] = "2"
    return FiniteMonoidWithZero(els, table, "1")


ALPHA_PLUS, ALPHA_MINUS, ID_S = "alpha+", "alpha-", "id_s"


def p_category(M: FiniteMonoid) -> FiniteCategory:
    """Two objects b, s; End(b) = M; α⁺: s → b, α⁻: b → s; α⁺∘α⁻ = 0, α⁻∘α⁺ = id_s."""
    zero = M.zero
    if zero is None:
        raise CategoryError("monoid has no zero element")
    for reserved in (ALPHA_PLUS, ALPHA_MINUS, ID_S):
        if reserved in M.elements:
            raise CategoryError(f"element name {reserved!r} is reserved")
    mors = {m: ("b", "b") for m in M.elements}
    mors[ID_S] = ("s", "s")
    mors[ALPHA_PLUS] = ("s", "b")
    mors[ALPHA_MINUS] = ("b", "s")
    table = {}
    for a in M.elements:
        for b in M.elements:
            table[(a, b)] = M.mul(a, b)
        table[(a, ALPHA_PLUS)] = ALPHA_PLUS
        table[(ALPHA_MINUS, a)] = ALPHA_MINUS
    table[(ID_S, ID_S)] = ID_S
    table[(ALPHA_PLUS, ID_S)] = ALPHA_PLUS
    table[(ID_S, ALPHA_MINUS)] = ALPHA_MINUS
    table[(ALPHA_PLUS, ALPHA_MINUS)] = zero
    table[(ALPHA_MINUS, ALPHA_PLUS)] = ID_S
    return FiniteCategory(("b", "s"), mors, {"b": M.unit, "s": ID_S}, table, "P_M")


def classifying_category(G: FiniteMonoid, obj="*") -> FiniteCategory:
    """One-object category with End(*) = G."""
    mors = {g: (obj, obj) for g in G.elements}
    table = {(a, b): G.mul(a, b) for a in G.elements for b in G.elements}
    return FiniteCategory((obj,), mors, {obj: G.unit}, table, "BG")


def cyclic_group(n) -> FiniteMonoid:
    els = tuple(f"g{i}" for i in range(n))
    table = {(f"g{i}", f"g{j}"): f"g{(i + j) % n}" for i in range(n) for j in range(n)}
    return FiniteMonoid(els, table, "g0")


def discrete_category(objects) -> FiniteCategory:
    mors = {f"id_{o}": (o, o) for o in objects}
    table = {(f"id_{o}", f"id_{o}"): f"id_{o}" for o in objects}
    return FiniteCategory(tuple(objects), mors, {o: f"id_{o}" for o in objects}, table, "discrete")


def point_category() -> FiniteCategory:
    return discrete_category(["*"])


def category_from_json(data) -> FiniteCategory:
    objects = [str(o) for o in data["objects"]]
    mors = {str(m): (str(s), str(t)) for m, (s, t) in data["morphisms"].items()}
    ids = {str(o): str(m) for o, m in data["identities"].items()}
    table = {}
    for entry in data["compose"]:
        g, f, h = (str(x) for x in entry)
        table[(g, f)] = h
    return FiniteCategory(objects, mors, ids, table, data.get("name"))


# ---------------------------------------------------------------------------
# twisted arrows


def twisted_arrow(C: FiniteCategory) -> FiniteCategory:
    """Objects: arrows of C.  A morphism f → f′ is (u, v) with f = v∘f′∘u.

    Morphism names are tuples ``(f, f′, u, v)``.
    """
    objects = tuple(C.morphisms)
    mors = {}
    for f in objects:
        a, b = C.morphisms[f]
        for f2 in objects:
            a2, b2 = C.morphisms[f2]
            for u in C.hom(a, a2):
                for v in C.hom(b2, b):
                    if C.comp(v, C.comp(f2, u)) == f:
                        mors[(f, f2, u, v)] = (f, f2)
    ids = {f: (f, f, C.identities[C.source(f)], C.identities[C.target(f)]) for f in objects}
    table = {}
    for m1, (f, f2) in mors.items():
        for m2, (g, g2) in mors.items():
            if g != f2:
                continue
            # m2 ∘ m1 : f -> g2, (u2∘u1, v1∘v2)
            u = C.comp(m2[2], m1[2])
            v = C.comp(m1[3], m2[3])
            table[(m2, m1)] = (f, g2, u, v)
    return FiniteCategory(objects, mors, ids, table, f"Tw({C.name or 'C'})")


def tw_to_target(C: FiniteCategory, f, which):
    """Canonical morphism f → id_source(f) (which='source') or f → id_target(f)."""
    a, b = C.morphisms[f]
    if which == "source":
        return (f, C.identities[a], C.identities[a], f)
    return (f, C.identities[b], f, C.identities[b])


def tw_square(C: FiniteCategory, f, g):
    """Morphisms g∘f → g, g∘f → f, f → id_c2, g → id_c2 for f: c1→c2, g: c2→c3."""
    gf = C.comp(g, f)
    c2 = C.target(f)
    to_g = (gf, g, f, C.identities[C.target(g)])
    to_f = (gf, f, C.identities[C.source(f)], g)
    f_to_mid = tw_to_target(C, f, "target")
    g_to_mid = (g, C.identities[c2], C.identities[c2], g)
    return to_g, to_f, f_to_mid, g_to_mid


def twisted_arrow_checks(C: FiniteCategory, T: FiniteCategory = None) -> Report:
    T = T or twisted_arrow(C)
    rep = Report(f"twisted arrows of {C.name or 'C'}")
    bad = None
    for f in C.morphisms:
        for which in ("source", "target"):
            m = tw_to_target(C, f, which)
            if m not in T.morphisms and bad is None:
                bad = f"{f} -> id ({which})"
    rep.add("canonical_span_diagram_exists", bad is None, bad)
    bad = None
    for f, g in C.composable_pairs():
        to_g, to_f, f_mid, g_mid = tw_square(C, f, g)
        if not all(m in T.morphisms for m in (to_g, to_f, f_mid, g_mid)):
            bad = bad or f"({f}, {g}) missing"
            continue
        if T.comp(g_mid, to_g) != T.comp(f_mid, to_f):
            bad = bad or f"({f}, {g}) does not commute"
    rep.add("square_commutes_for_every_composable_pair", bad is None, bad)
    rep.data["objects"] = len(T.objects)
    rep.data["morphisms"] = len(T.morphisms)
    return rep


def groupoid_equiv_check(C: FiniteCategory) -> Report:
    """For a groupoid, Tw(C) → C, (f: c1 → c2) ↦ c1, is an equivalence."""
    if not C.is_groupoid():
        bad = next(m for m in C.morphisms if C.inverse(m) is None)
        raise CategoryError(f"not a groupoid: {bad} has no inverse")
    T = twisted_arrow(C)
    rep = Report(f"Tw({C.name or 'C'}) -> C")

    # the functor: (f, f2, u, v) : f -> f2 maps to u : src f -> src f2
    def on_obj(f):
        return C.source(f)

    def on_mor(m):
        return m[2]

    functorial = all(
        on_mor(T.comp(m2, m1)) == C.comp(on_mor(m2), on_mor(m1))
        for (m2, m1) in T.table
    ) and all(on_mor(T.identities[f]) == C.identities[on_obj(f)] for f in T.objects)
    rep.add("is_a_functor", functorial)
    ess = all(any(on_obj(f) == c for f in T.objects) for c in C.objects)
    rep.add("essentially_surjective", ess)
    ff_fail = None
    for f in T.objects:
        for f2 in T.objects:
            image = [on_mor(m) for m in T.hom(f, f2)]
            target = C.hom(on_obj(f), on_obj(f2))
            if sorted(map(str, image)) != sorted(map(str, target)) or len(set(image)) != len(image):
                ff_fail = ff_fail or f"Hom({f}, {f2})"
    rep.add("fully_faithful", ff_fail is None, ff_fail)
    return rep


# ---------------------------------------------------------------------------
# spans of finite sets


@dataclass(frozen=True)
class Span:
    left: Tuple
    apex: Tuple
    right: Tuple
    to_left: Tuple  # image of each apex element, same order as apex
    to_right: Tuple

    def __post_init__(self):
        L, R = set(self.left), set(self.right)
        if len(self.to_left) != len(self.apex) or len(self.to_right) != len(self.apex):
            raise CategoryError("span legs must be total on the apex")
        if not set(self.to_left) <= L or not set(self.to_right) <= R:
            raise CategoryError("span legs land outside the boundary sets")

    @classmethod
    def from_maps(cls, left, apex, right, lmap: Mapping, rmap: Mapping):
        apex = tuple(apex)
        return cls(tuple(left), apex, tuple(right), tuple(lmap[a] for a in apex), tuple(rmap[a] for a in apex))

    @classmethod
    def identity(cls, X):
        X = tuple(X)
        return cls(X, X, X, X, X)

    def legs(self):
        return dict(zip(self.apex, self.to_left)), dict(zip(self.apex, self.to_right))


def span_compose(s1: Span, s2: Span) -> Span:
    """Apex = fibre product over the middle set."""
    if tuple(s1.right) != tuple(s2.left):
        raise CategoryError("boundary mismatch: right set of the first span must equal left set of the second")
    apex, lft, rgt = [], [], []
    for a, la, ra in zip(s1.apex, s1.to_left, s1.to_right):
        for b, lb, rb in zip(s2.apex, s2.to_left, s2.to_right):
            if ra == lb:
                apex.append((a, b))
                lft.append(la)
                rgt.append(rb)
    return Span(s1.left, tuple(apex), s2.right, tuple(lft), tuple(rgt))


def span_associator(s1: Span, s2: Span, s3: Span):
    """The bijection ((a,b),c) ↦ (a,(b,c)) between the two triple composites.

    Returns ``(ok, mapping)``; ``ok`` says the map is a bijection commuting
    with both legs.
    """
    left = span_compose(span_compose(s1, s2), s3)
    right = span_compose(s1, span_compose(s2, s3))
    mapping = {((a, b), c): (a, (b, c)) for (a, b), c in left.apex}
    image = set(mapping.values())
    ok = len(image) == len(mapping) and image == set(right.apex)
    if ok:
        ll, lr = left.legs()
        rl, rr = right.legs()
        ok = all(ll[x] == rl[y] and lr[x] == rr[y] for x, y in mapping.items())
    return ok, mapping


def spans_isomorphic(s1: Span, s2: Span, bijection: Mapping):
    if set(bijection) != set(s1.apex) or set(bijection.values()) != set(s2.apex) or len(set(bijection.values())) != len(bijection):
        return False
    l1, r1 = s1.legs()
    l2, r2 = s2.legs()
    return all(l1[a] == l2[b] and r1[a] == r2[b] for a, b in bijection.items())


# ---------------------------------------------------------------------------
# functors to finite sets and the associated lax functor


@dataclass
class SetFunctor:
    """Functor to finite sets: objects ↦ tuples, morphisms ↦ dicts."""

    category: FiniteCategory
    sets: Dict[Hashable, Tuple]
    maps: Dict[Hashable, Dict]
    automorphisms: int = 1
    relabelings: int = 1

    def check(self):
        """Returns a failure message or None."""
        C = self.category
        for m, (s, t) in C.morphisms.items():
            f = self.maps.get(m)
            if f is None or set(f) != set(self.sets[s]) or not set(f.values()) <= set(self.sets[t]):
                return f"{m} is not a map F({s}) -> F({t})"
        for o, i in C.identities.items():
            if any(self.maps[i][x] != x for x in self.sets[o]):
                return f"identity of {o} not sent to identity"
        for (g, f), h in C.table.items():
            mg, mf, mh = self.maps[g], self.maps[f], self.maps[h]
            for x in self.sets[C.source(f)]:
                if mg[mf[x]] != mh[x]:
                    return f"F({g})∘F({f}) != F({h})"
        return None


def is_pullback_square(top: Dict, left: Dict, right: Dict, bottom: Dict, apex, B, Cset) -> bool:
    """Square apex → B (top), apex → C (left), B → D (right), C → D (bottom)."""
    for a in apex:
        if right[top[a]] != bottom[left[a]]:
            return False
    for b in B:
        for c in Cset:
            if right[b] == bottom[c]:
                n = sum(1 for a in apex if top[a] == b and left[a] == c)
                if n != 1:
                    return False
    return True


@dataclass
class LaxFunctor:
    spans: Dict[Hashable, Span]
    comparisons: Dict[Tuple, Dict]
    bijective: Dict[Tuple, bool]
    report: Report


def _fibre_product(X, fx, Y, fy):
    return [(x, y) for x in X for y in Y if fx[x] == fy[y]]


def lax_from_tw(C: FiniteCategory, F: SetFunctor, T: FiniteCategory = None) -> LaxFunctor:
    """Span F(id_c1) ← F(f) → F(id_c2) per arrow, comparison maps per composable pair."""
    T = T or F.category
    problem = F.check()
    if problem:
        raise CategoryError(f"not a functor: {problem}")
    rep = Report("lax functor from twisted arrows")
    spans = {}
    for f in C.morphisms:
        a, b = C.morphisms[f]
        ls = F.maps[tw_to_target(C, f, "source")]
        rs = F.maps[tw_to_target(C, f, "target")]
        spans[f] = Span.from_maps(F.sets[C.identities[a]], F.sets[f], F.sets[C.identities[b]], ls, rs)
    comparisons, bij = {}, {}
    well = None
    for f, g in C.composable_pairs():
        to_g, to_f, f_mid, g_mid = tw_square(C, f, g)
        gf = C.comp(g, f)
        target = span_compose(spans[f], spans[g])
        cmp = {x: (F.maps[to_f][x], F.maps[to_g][x]) for x in F.sets[gf]}
        if not set(cmp.values()) <= set(target.apex):
            well = well or f"({f}, {g})"
        # legs agree
        ls, rs = spans[gf].legs()
        lt, rt = target.legs()
        for x, y in cmp.items():
            if y in lt and (ls[x] != lt[y] or rs[x] != rt[y]):
                well = well or f"({f}, {g}) legs"
        comparisons[(f, g)] = cmp
        bij[(f, g)] = len(set(cmp.values())) == len(cmp) and set(cmp.values()) == set(target.apex)
    rep.add("comparison_maps_land_in_composite_span", well is None, well)
    # unitality: identity arrows give identity spans, comparisons with identities are bijections
    unit_fail = None
    for o, i in C.identities.items():
        s = spans[i]
        if list(s.to_left) != list(s.apex) or list(s.to_right) != list(s.apex):
            unit_fail = unit_fail or f"span of identity at {o}"
    for (f, g), ok in bij.items():
        if (f in C.identities.values() or g in C.identities.values()) and not ok:
            unit_fail = unit_fail or f"comparison ({f}, {g})"
    rep.add("unital", unit_fail is None, unit_fail)
    # coherence on composable triples
    coh = None
    triples = 0
    for f, g in C.composable_pairs():
        for h in C.hom_from(C.target(g)):
            triples += 1
            gf = C.comp(g, f)
            hg = C.comp(h, g)
            hgf = C.comp(h, gf)
            for x in F.sets[hgf]:
                a, c = comparisons[(gf, h)][x]
                a1, b1 = comparisons[(f, g)][a]
                a2, bc = comparisons[(f, hg)][x]
                b2, c2 = comparisons[(g, h)][bc]
                if (a1, b1, c) != (a2, b2, c2):
                    coh = coh or f"({f}, {g}, {h}) at {x}"
    rep.add("associativity_coherence", coh is None, coh)
    rep.data["composable_pairs"] = len(comparisons)
    rep.data["composable_triples"] = triples
    rep.data["bijective_comparisons"] = sum(bij.values())
    return LaxFunctor(spans, comparisons, bij, rep)


# ---------------------------------------------------------------------------
# enumerating functors


def _generated(T: FiniteCategory, gens):
    have = set(T.identities.values()) | set(gens)
    frontier = list(have)
    while frontier:
        new = []
        for f in frontier:
            for g in list(have):
                for a, b in ((g, f), (f, g)):
                    h = T.table.get((a, b))
                    if h is not None and h not in have:
                        have.add(h)
                        new.append(h)
        frontier = new
    return have


def generators(T: FiniteCategory):
    """A small set of morphisms generating T under composition.

    Greedy: add any morphism not yet generated, then drop redundant ones.
    """
    ids = set(T.identities.values())
    chosen = []
    have = set(ids)
    # arrows with many factorizations through them first
    for m in sorted((m for m in T.morphisms if m not in ids), key=str):
        if m not in have:
            chosen.append(m)
            have = _generated(T, chosen)
    for m in list(chosen):
        rest = [x for x in chosen if x != m]
        if len(_generated(T, rest)) == len(T.morphisms):
            chosen = rest
    return chosen


def _words(T: FiniteCategory, gens):
    """Express every morphism as a list of generators, applied right to left."""
    words = {i: () for i in T.identities.values()}
    frontier = list(words)
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                if T.source(g) == T.target(m):
                    h = T.table[(g, m)]
                    if h not in words:
                        words[h] = (g,) + words[m]
                        nxt.append(h)
        frontier = nxt
    missing = [m for m in T.morphisms if m not in words]
    if missing:
        raise CategoryError(f"generators do not reach {missing[0]}")
    return words


def _apply_word(word, maps, start):
    """Compose tuple-encoded maps along ``word`` starting from identity on ``start`` elements."""
    cur = tuple(range(start))
    for g in reversed(word):
        mg = maps[g]
        cur = tuple(mg[x] for x in cur)
    return cur


def enumerate_set_functors(T: FiniteCategory, max_size=3, size_choices=None, limit=None, up_to_iso=False):
    """Functors T → FinSet with |F(o)| ≤ max_size, sets being {0..k-1}.

    Every morphism is written as a word in a generating set; backtracking
    assigns generator maps and checks each functoriality equation as soon
    as all generators it mentions are assigned.

    With ``up_to_iso`` one functor per isomorphism class is produced: at each
    level only orbit representatives under the stabilizer of the maps chosen
    so far are kept.  The functor then carries ``automorphisms`` (the order
    of its stabilizer) and ``relabelings`` (the order of the full group).
    """
    gens = generators(T)
    words = _words(T, gens)
    raw = set()
    for (g, f), h in T.table.items():
        lhs, rhs = words[g] + words[f], words[h]
        if lhs != rhs:
            raw.add((lhs, rhs, T.source(f)))
    # greedy order: next generator is the one closing the most equations
    order, placed = [], set()
    while len(order) < len(gens):
        def closes(g):
            return sum(1 for l, r, _ in raw if g in l + r and set(l + r) <= placed | {g})
        g = max((x for x in gens if x not in placed), key=lambda x: (closes(x), -gens.index(x)))
        order.append(g)
        placed.add(g)
    gens = order
    rank = {g: i for i, g in enumerate(gens)}
    equations = {}
    for lhs, rhs, o in raw:
        level = max((rank[x] for x in lhs + rhs), default=-1)
        equations.setdefault(level, set()).add((lhs, rhs, o))
    equations = {k: sorted(v, key=str) for k, v in equations.items()}
    objs = list(T.objects)
    pos = {o: i for i, o in enumerate(objs)}
    size_iter = size_choices if size_choices is not None else product(range(max_size + 1), repeat=len(objs))
    count = 0
    for sizes in size_iter:
        size = dict(zip(objs, sizes))
        if any(size[T.source(m)] and not size[T.target(m)] for m in T.morphisms):
            continue
        maps = {}
        group = list(product(*(list(permutations(range(k))) for k in sizes))) if up_to_iso else None
        full_order = len(group) if up_to_iso else 1

        def ok_here(idx):
            return all(_apply_word(l, maps, size[o]) == _apply_word(r, maps, size[o])
                       for l, r, o in equations.get(idx, ()))

        def extend(idx, H):
            nonlocal count
            if idx == len(gens):
                count += 1
                F = _to_functor(T, words, maps, size)
                if up_to_iso:
                    F.automorphisms = len(H)
                    F.relabelings = full_order
                yield F
                return
            g = gens[idx]
            sx, sy = pos[T.source(g)], pos[T.target(g)]
            seen = set()
            for values in product(range(size[T.target(g)]), repeat=size[T.source(g)]):
                if values in seen:
                    continue
                maps[g] = values
                if not ok_here(idx):
                    continue
                stab = None
                if up_to_iso:
                    stab = []
                    for h in H:
                        px, py = h[sx], h[sy]
                        img = [0] * len(values)
                        for i, v in enumerate(values):
                            img[px[i]] = py[v]
                        img = tuple(img)
                        seen.add(img)
                        if img == values:
                            stab.append(h)
                yield from extend(idx + 1, stab)
                if limit is not None and count >= limit:
                    return
            maps.pop(g, None)

        yield from extend(0, group)
        if limit is not None and count >= limit:
            return


def _to_functor(T, words, maps, size):
    sets = {o: tuple(range(size[o])) for o in T.objects}
    full = {}
    for m, w in words.items():
        img = _apply_word(w, maps, size[T.source(m)])
        full[m] = dict(enumerate(img))
    return SetFunctor(T, sets, full)


def pm_pullback_equivalence(M: FiniteMonoid = None, max_size=3, limit=None, up_to_iso=True) -> Report:
    """For every functor F on Tw(P_M): the (α⁺, α⁻) comparison is a bijection
    iff F sends the square for (α⁺, α⁻) to a pullback.

    Both properties are invariant under isomorphism of functors, so by
    default one functor per isomorphism class is examined.
    """
    M = M or two_element_monoid()
    C = p_category(M)
    T = twisted_arrow(C)
    rep = Report("P_M comparison vs pullback")
    count = 0
    bij_count = 0
    mismatch = incoherent = None
    labelled = 0
    for F in enumerate_set_functors(T, max_size=max_size, limit=limit, up_to_iso=up_to_iso):
        count += 1
        labelled += F.relabelings // F.automorphisms if up_to_iso else 1
        lax = lax_from_tw(C, F, T)
        is_bij = lax.bijective[(ALPHA_PLUS, ALPHA_MINUS)]
        to_g, to_f, f_mid, g_mid = tw_square(C, ALPHA_PLUS, ALPHA_MINUS)
        gf = C.comp(ALPHA_MINUS, ALPHA_PLUS)
        pb = is_pullback_square(
            F.maps[to_f], F.maps[to_g], F.maps[f_mid], F.maps[g_mid],
            F.sets[gf], F.sets[ALPHA_PLUS], F.sets[ALPHA_MINUS],
        )
        bij_count += is_bij
        if is_bij != pb and mismatch is None:
            mismatch = f"sizes {[len(F.sets[o]) for o in T.objects]}"
        if not lax.report.ok and incoherent is None:
            incoherent = ", ".join(c.name for c in lax.report.failures())
    rep.add("bijection_iff_pullback", mismatch is None, mismatch)
    rep.add("lax_data_coherent_for_every_functor", incoherent is None, incoherent)
    rep.data["functors"] = count
    rep.data["labelled_functors"] = labelled
    rep.data["bijective"] = bij_count
    return rep
