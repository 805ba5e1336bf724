"""Hypothesis strategies shared by the test modules."""

from fractions import Fraction

from hypothesis import strategies as st

from gmtilde.gmaction import GradedAlgebra
from gmtilde.polycore import Polynomial, PolyRing

NAMES = ("x", "y", "z", "w")

small_fractions = st.builds(
    Fraction,
    st.integers(-6, 6),
    st.integers(1, 4),
)
nonzero_fractions = small_fractions.filter(bool)


@st.composite
def rings(draw, max_vars=4, weights=st.integers(-3, 3), orders=st.sampled_from(["lex", "grevlex"])):
    n = draw(st.integers(1, max_vars))
    ws = [draw(weights) for _ in range(n)]
    return PolyRing(list(zip(NAMES[:n], ws)), draw(orders))


@st.composite
def monomials(draw, ring, max_degree):
    idx = draw(st.lists(st.integers(0, ring.nvars - 1), max_size=max_degree))
    exp = [0] * ring.nvars
    for i in idx:
        exp[i] += 1
    return tuple(exp)


@st.composite
def polynomials(draw, ring, max_degree=4, max_terms=5, min_terms=0):
    k = draw(st.integers(min_terms, max_terms))
    terms = {}
    for _ in range(k):
        terms[draw(monomials(ring, max_degree))] = draw(nonzero_fractions)
    return Polynomial(ring, terms)


@st.composite
def homogeneous_polynomials(draw, ring, max_degree=3, max_terms=3, degree=None):
    """Nonzero weighted-homogeneous polynomial (picks a degree from a random monomial)."""
    from itertools import product

    monos = [e for e in product(range(max_degree + 1), repeat=ring.nvars) if 0 < sum(e) <= max_degree]
    first = draw(st.sampled_from(monos))
    d = ring.weight_of(first) if degree is None else degree
    same = [e for e in monos if ring.weight_of(e) == d]
    if not same:
        same = [first]
    chosen = draw(st.lists(st.sampled_from(same), min_size=1, max_size=max_terms, unique=True))
    return Polynomial(ring, {e: draw(nonzero_fractions) for e in chosen})


@st.composite
def graded_algebras(draw, max_vars=4, max_relations=2, max_degree=3):
    ring = draw(rings(max_vars=max_vars, orders=st.just("grevlex")))
    k = draw(st.integers(0, max_relations))
    rels = [draw(homogeneous_polynomials(ring, max_degree=max_degree)) for _ in range(k)]
    return GradedAlgebra(ring, rels)
