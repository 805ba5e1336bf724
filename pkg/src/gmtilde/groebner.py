"""Buchberger Gröbner bases over Q, plus the ideal operations built on them.

Internally polynomials are dicts ``exponent -> int`` kept primitive (content
divided out), which avoids Fraction arithmetic in the inner loop.  The public
results are monic :class:`~gmtilde.polycore.Polynomial` values.

Pair handling uses the Gebauer-Möller criteria with sugar selection.  The
number of S-pairs per computation is capped (``GM_GB_BUDGET`` overrides the
default); exceeding it raises :class:`GroebnerBudgetExceeded`.
"""

from __future__ import annotations

import heapq
import os
from fractions import Fraction
from math import gcd
from typing import Iterable, List, Sequence

from .polycore import Polynomial, PolyRing, PolynomialError

DEFAULT_BUDGET = 50_000


class GroebnerBudgetExceeded(RuntimeError):
    """The S-pair budget ran out before the basis was complete."""

    def __init__(self, budget, processed):
        self.budget = budget
        self.processed = processed
        super().__init__(f"Groebner S-pair budget exceeded ({processed} > {budget}); set GM_GB_BUDGET to raise it")


def s_pair_budget():
    raw = os.environ.get("GM_GB_BUDGET")
    if raw is None or not raw.strip():
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"GM_GB_BUDGET must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError("GM_GB_BUDGET must be positive")
    return value


# ---------------------------------------------------------------------------
# internal integer polynomials


def _content(d):
    g = 0
    for c in d.values():
        g = gcd(g, c)
        if g == 1:
            break
    return g


def _to_int(p: Polynomial):
    """Clear denominators; returns (dict, denominator D) with dict = D*p."""
    den = 1
    for _, c in p.terms():
        den = den * c.denominator // gcd(den, c.denominator)
    return {e: int(c * den) for e, c in p.terms()}, den


def _primitive(d, key):
    """Divide by content and make the leading coefficient positive."""
    if not d:
        return d
    g = _content(d)
    lead = max(d, key=key)
    if d[lead] < 0:
        g = -g
    if g != 1:
        d = {e: c // g for e, c in d.items()}
    return d


class _Elem:
    __slots__ = ("terms", "lm", "lc", "sugar")

    def __init__(self, d, key, sugar=None):
        items = sorted(d.items(), key=lambda t: key(t[0]), reverse=True)
        self.terms = items
        self.lm = items[0][0]
        self.lc = items[0][1]
        self.sugar = max(sum(e) for e in d) if sugar is None else sugar


def _divides(a, b):
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def _coprime(a, b):
    for x, y in zip(a, b):
        if x and y:
            return False
    return True


def _reduce(f, elems, key, negkey, full=True):
    """Reduce dict ``f`` by ``elems``.

    Returns ``(remainder, scale)`` with ``remainder ≡ scale * f`` modulo the
    ideal and ``scale`` a positive integer.  ``full=False`` stops at the first
    irreducible leading term (top reduction only).
    """
    f = dict(f)
    rem = {}
    scale = 1
    heap = [(negkey(e), e) for e in f]
    heapq.heapify(heap)
    lms = [(g.lm, g) for g in elems]
    while heap:
        _, e = heapq.heappop(heap)
        c = f.pop(e, None)
        if c is None:
            continue
        for lm, g in lms:
            if _divides(lm, e):
                break
        else:
            rem[e] = c
            if not full:
                # remaining terms are untouched
                for e2, c2 in f.items():
                    rem[e2] = c2
                return rem, scale
            continue
        b = g.lc
        q = gcd(c, b)
        mf, mg = b // q, c // q
        if mf < 0:
            mf, mg = -mf, -mg
        if mf != 1:
            scale *= mf
            for k in f:
                f[k] *= mf
            for k in rem:
                rem[k] *= mf
        shift = tuple(x - y for x, y in zip(e, lm))
        for ge, gc in g.terms[1:]:
            ne = tuple(x + y for x, y in zip(ge, shift))
            old = f.get(ne)
            if old is None:
                f[ne] = -mg * gc
                heapq.heappush(heap, (negkey(ne), ne))
            else:
                v = old - mg * gc
                if v:
                    f[ne] = v
                else:
                    del f[ne]
        if len(f) > 8 and scale > 1 << 64:
            # keep coefficient growth in check
            g2 = gcd(_content(f), _content(rem)) if rem else _content(f)
            if g2 > 1:
                f = {k: v // g2 for k, v in f.items()}
                rem = {k: v // g2 for k, v in rem.items()}
                # scale stays an integer only if g2 divides it; otherwise fold into a rational later
                scale = Fraction(scale, g2)
    return rem, scale


def _spoly(a: _Elem, b: _Elem):
    l = _lcm(a.lm, b.lm)
    sa = tuple(x - y for x, y in zip(l, a.lm))
    sb = tuple(x - y for x, y in zip(l, b.lm))
    q = gcd(a.lc, b.lc)
    ca, cb = b.lc // q, a.lc // q
    d = {}
    for e, c in a.terms[1:]:
        ne = tuple(x + y for x, y in zip(e, sa))
        d[ne] = d.get(ne, 0) + ca * c
    for e, c in b.terms[1:]:
        ne = tuple(x + y for x, y in zip(e, sb))
        v = d.get(ne, 0) - cb * c
        if v:
            d[ne] = v
        else:
            d.pop(ne, None)
    sugar = max(a.sugar + sum(sa), b.sugar + sum(sb))
    return d, sugar


def _buchberger(polys: List[dict], ring: PolyRing, budget: int):
    key = ring.key

    def negkey(e):
        return tuple(-x for x in key(e))

    store: List[_Elem] = []
    active: List[int] = []
    pairs = []  # (sugar, negkey-free sort key, i, j)

    def pair_entry(i, j):
        l = _lcm(store[i].lm, store[j].lm)
        s = max(store[i].sugar + sum(l) - sum(store[i].lm), store[j].sugar + sum(l) - sum(store[j].lm))
        return (s, key(l), i, j)

    def update(h):
        nonlocal active, pairs
        hlm = store[h].lm
        cands = [(g, _lcm(hlm, store[g].lm)) for g in active]
        kept = []
        for idx, (g1, l1) in enumerate(cands):
            if _coprime(hlm, store[g1].lm):
                kept.append((g1, l1))
                continue
            others = [l2 for g2, l2 in cands[idx + 1:]] + [l2 for g2, l2 in kept]
            if not any(_divides(l2, l1) for l2 in others):
                kept.append((g1, l1))
        new_pairs = [(g1, l1) for g1, l1 in kept if not _coprime(hlm, store[g1].lm)]
        survivors = []
        for entry in pairs:
            _, _, i, j = entry
            lij = _lcm(store[i].lm, store[j].lm)
            if (
                _divides(hlm, lij)
                and _lcm(store[i].lm, hlm) != lij
                and _lcm(hlm, store[j].lm) != lij
            ):
                continue
            survivors.append(entry)
        for g1, _ in new_pairs:
            survivors.append(pair_entry(min(g1, h), max(g1, h)))
        pairs = survivors
        active = [g for g in active if not _divides(hlm, store[g].lm)] + [h]

    def add(d, sugar=None):
        d = _primitive(d, key)
        store.append(_Elem(d, key, sugar))
        update(len(store) - 1)

    # seed: interreduce inputs one by one for a smaller start
    for d in sorted(polys, key=lambda d: key(max(d, key=key))):
        if not d:
            continue
        r, _ = _reduce(d, [store[i] for i in active], key, negkey)
        if r:
            if all(not any(e) for e in r):
                return [{(0,) * ring.nvars: 1}]
            add(r, max(sum(e) for e in d))

    processed = 0
    while pairs:
        # smallest sugar, then smallest lcm
        best = min(range(len(pairs)), key=pairs.__getitem__)
        s, _, i, j = pairs.pop(best)
        processed += 1
        if processed > budget:
            raise GroebnerBudgetExceeded(budget, processed)
        d, sugar = _spoly(store[i], store[j])
        if not d:
            continue
        r, _ = _reduce(d, [store[k] for k in active], key, negkey)
        if r:
            if all(not any(e) for e in r):
                return [{(0,) * ring.nvars: 1}]
            add(r, sugar)

    # reduced basis: inter-reduce the (already minimal) active set
    basis = [store[i] for i in active]
    out = []
    for idx, g in enumerate(basis):
        others = basis[:idx] + basis[idx + 1:]
        tail = dict(g.terms[1:])
        r, sc = _reduce(tail, others, key, negkey)
        # g ≡ lc*x^lm + tail; reduced form is sc*lc*x^lm + r, scaled
        head = g.lc * sc
        res = dict(r)
        res[g.lm] = head
        out.append(res)
    return out


def _monic_poly(ring, d):
    lead = max(d, key=ring.key)
    lc = Fraction(d[lead])
    return Polynomial(ring, {e: Fraction(c) / lc for e, c in d.items()})


# ---------------------------------------------------------------------------
# public types


class Ideal:
    """Ideal generated by finitely many polynomials of one ring."""

    __slots__ = ("ring", "generators")

    def __init__(self, ring: PolyRing, generators: Iterable = ()):
        gens = []
        for g in generators:
            if isinstance(g, str):
                g = ring.parse(g)
            elif not isinstance(g, Polynomial):
                g = ring.constant(g)
            if g.ring != ring:
                if set(g.ring.names) <= set(ring.names):
                    g = g.change_ring(ring)
                else:
                    raise PolynomialError(f"generator {g} is not in {ring}")
            if g:
                gens.append(g)
        self.ring = ring
        self.generators = tuple(gens)

    def groebner(self, order=None) -> "GroebnerBasis":
        return groebner_basis(self, order)

    def __contains__(self, p):
        return ideal_member(p, self)

    def is_unit(self):
        return self.groebner().is_unit()

    def is_zero(self):
        return not self.generators

    def reduced_generators(self):
        """Reduced Gröbner basis in the ring's own order (canonical form)."""
        return self.groebner().basis

    def __repr__(self):
        return f"Ideal({self.ring}, [{', '.join(map(str, self.generators))}])"

    def __str__(self):
        return "(" + ", ".join(map(str, self.generators)) + ")" if self.generators else "(0)"


class GroebnerBasis:
    """Reduced Gröbner basis: monic, sorted by descending leading term."""

    __slots__ = ("ideal", "order", "ring", "basis", "flag", "_elems")

    def __init__(self, ideal, ring, basis, elems):
        self.ideal = ideal
        self.ring = ring
        self.order = ring.order
        self.basis = tuple(basis)
        self.flag = "minimal+reduced"
        self._elems = elems

    def is_unit(self):
        return len(self.basis) == 1 and self.basis[0].is_constant()

    def leading_exponents(self):
        return [g.leading_exponent for g in self.basis]

    def normal_form(self, p):
        return normal_form(p, self)

    def __contains__(self, p):
        return not normal_form(p, self)

    def __iter__(self):
        return iter(self.basis)

    def __len__(self):
        return len(self.basis)

    def __repr__(self):
        return f"GroebnerBasis([{', '.join(map(str, self.basis))}], order={self.order!r})"


_CACHE = {}
_CACHE_LIMIT = 4096


def groebner_basis(ideal: Ideal, order=None) -> GroebnerBasis:
    """Reduced Gröbner basis of ``ideal`` for ``order`` (default: the ring's)."""
    ring = ideal.ring if order is None else ideal.ring.with_order(order)
    gens = tuple(g.change_ring(ring) if g.ring != ring else g for g in ideal.generators)
    cache_key = (ring, gens)
    hit = _CACHE.get(cache_key)
    if hit is not None:
        return hit
    budget = s_pair_budget()
    ints = [_to_int(g)[0] for g in gens]
    raw = _buchberger(ints, ring, budget)
    polys = [_monic_poly(ring, d) for d in raw if d]
    polys.sort(key=lambda p: ring.key(p.leading_exponent), reverse=True)
    key = ring.key
    elems = [_Elem(_primitive(_to_int(p)[0], key), key) for p in polys]
    gb = GroebnerBasis(Ideal(ring, gens), ring, polys, elems)
    if len(_CACHE) >= _CACHE_LIMIT:
        _CACHE.clear()
    _CACHE[cache_key] = gb
    return gb


def clear_cache():
    _CACHE.clear()


def normal_form(p: Polynomial, gb: GroebnerBasis) -> Polynomial:
    """Remainder of ``p`` on division by the reduced basis ``gb``."""
    if p.ring != gb.ring:
        if p.ring.names == gb.ring.names and p.ring.weights == gb.ring.weights:
            p = p.change_ring(gb.ring)
        else:
            raise PolynomialError(f"ring mismatch: {p.ring!r} vs {gb.ring!r}")
    if not p:
        return p
    d, den = _to_int(p)
    key = gb.ring.key

    def negkey(e):
        return tuple(-x for x in key(e))

    rem, scale = _reduce(d, gb._elems, key, negkey)
    factor = Fraction(1) / (Fraction(scale) * den)
    return Polynomial(gb.ring, {e: c * factor for e, c in rem.items()})


def _as_poly(p, ring):
    if isinstance(p, str):
        return ring.parse(p)
    if not isinstance(p, Polynomial):
        return ring.constant(p)
    return p


def ideal_member(p, ideal: Ideal) -> bool:
    p = _as_poly(p, ideal.ring)
    if p.ring.names != ideal.ring.names:
        raise PolynomialError(f"ring mismatch: {p.ring!r} vs {ideal.ring!r}")
    return not normal_form(p, ideal.groebner())


def ideal_equal(a: Ideal, b: Ideal) -> bool:
    if a.ring.names != b.ring.names:
        raise PolynomialError(f"ring mismatch: {a.ring!r} vs {b.ring!r}")
    ga, gb_ = a.groebner(), b.groebner()
    return all(not normal_form(g, gb_) for g in a.generators) and all(
        not normal_form(g, ga) for g in b.generators
    )


def ideal_contains(big: Ideal, small: Ideal) -> bool:
    """``small ⊆ big``."""
    gb = big.groebner()
    return all(not normal_form(g, gb) for g in small.generators)


def non_members(big: Ideal, candidates: Iterable[Polynomial]) -> List[Polynomial]:
    gb = big.groebner()
    return [g for g in candidates if normal_form(g, gb)]


# ---------------------------------------------------------------------------
# elimination and friends


def eliminate(ideal: Ideal, drop: Iterable[str]) -> Ideal:
    """``ideal ∩ Q[kept variables]`` as an ideal of the kept-variable ring."""
    drop = list(dict.fromkeys(drop))
    ring = ideal.ring
    for n in drop:
        ring.index(n)
    kept = [v for v in ring.variables if v[0] not in drop]
    dropped = [v for v in ring.variables if v[0] in drop]
    elim_ring = PolyRing(dropped + kept, ("block", len(dropped)))
    gb = groebner_basis(Ideal(elim_ring, [g.change_ring(elim_ring) for g in ideal.generators]))
    target = ring.subring(n for n, _ in kept)
    k = len(dropped)
    out = [g.change_ring(target) for g in gb.basis if all(not any(e[:k]) for e, _ in g.terms())]
    return Ideal(target, out)


def _fresh(ring: PolyRing, stem: str) -> str:
    name, i = stem, 0
    while name in ring:
        i += 1
        name = f"{stem}{i}"
    return name


def saturate(ideal: Ideal, f: Polynomial) -> Ideal:
    """``ideal : f^∞`` via an auxiliary inverse variable."""
    ring = ideal.ring
    f = _as_poly(f, ring)
    if not f:
        raise PolynomialError("cannot saturate by the zero polynomial")
    if f.is_constant():
        return Ideal(ring, ideal.generators)
    w = _fresh(ring, "w_sat")
    big = PolyRing([(w, 0)] + list(ring.variables), ring.order if isinstance(ring.order, str) else "grevlex")
    gens = [g.change_ring(big) for g in ideal.generators]
    gens.append(big.one - big.gen(w) * f.change_ring(big))
    res = eliminate(Ideal(big, gens), [w])
    return Ideal(ring, [g.change_ring(ring) for g in res.generators])


def ring_map_kernel(source: PolyRing, images: Sequence[Polynomial], target_ideal: Ideal = None, target: PolyRing = None) -> Ideal:
    """Kernel of ``source -> target/J`` sending the i-th variable to ``images[i]``."""
    if len(images) != source.nvars:
        raise PolynomialError(f"expected {source.nvars} images, got {len(images)}")
    if target is None:
        target = target_ideal.ring if target_ideal is not None else images[0].ring
    images = [_as_poly(im, target) for im in images]
    for im in images:
        if im.ring.names != target.names:
            raise PolynomialError("images must lie in the target ring")
    # rename source variables that clash with target ones
    rename = {}
    taken = set(target.names)
    for n in source.names:
        new = n
        i = 0
        while new in taken:
            i += 1
            new = f"{n}_src{i}" if i > 1 else f"{n}_src"
        rename[n] = new
        taken.add(new)
    graph_ring = PolyRing(list(target.variables) + [(rename[n], w) for n, w in source.variables], "grevlex")
    gens = []
    if target_ideal is not None:
        gens.extend(g.change_ring(graph_ring) for g in target_ideal.generators)
    for n, im in zip(source.names, images):
        gens.append(graph_ring.gen(rename[n]) - im.change_ring(graph_ring))
    res = eliminate(Ideal(graph_ring, gens), target.names)
    back = {rename[n]: n for n in source.names}
    return Ideal(source, [g.change_ring(source, back) for g in res.generators])


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic S-polynomial of two nonzero polynomials of one ring."""
    ring = f.ring
    l = _lcm(f.leading_exponent, g.leading_exponent)
    mf = ring.monomial(tuple(x - y for x, y in zip(l, f.leading_exponent)), 1 / f.leading_coefficient)
    mg = ring.monomial(tuple(x - y for x, y in zip(l, g.leading_exponent)), 1 / g.leading_coefficient)
    return mf * f - mg * g


def is_groebner_basis(gb: GroebnerBasis) -> bool:
    """Every S-polynomial reduces to zero and the basis is reduced."""
    basis = gb.basis
    for i, f in enumerate(basis):
        if f.leading_coefficient != 1:
            return False
        for j, g in enumerate(basis):
            if i == j:
                continue
            lm = g.leading_exponent
            if any(_divides(lm, e) for e, _ in f.terms()):
                return False
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            if normal_form(s_polynomial(basis[i], basis[j]), gb):
                return False
    return True
