"""
Functors out of twisted arrows as spans
=======================================

A functor from Tw(C) to finite sets gives a span for every arrow of C and
a comparison map for every composable pair.  For the two-object category
built from the monoid {1, 0} we count functors and check when the
comparison for the split idempotent is a bijection.
"""

from gmtilde import catkit

M = catkit.two_element_monoid()
P = catkit.p_category(M)
T = catkit.twisted_arrow(P)
print(f"P has {len(P)} arrows; Tw(P) has {len(T.objects)} objects and {len(T)} arrows")

F = catkit.SetFunctor(
    T,
    {o: (0, 1) for o in T.objects},
    {m: {0: 0, 1: 1} for m in T.morphisms},
)
lax = catkit.lax_from_tw(P, F, T)
print(lax.report.render_text())

rep = catkit.pm_pullback_equivalence(M, max_size=2)
print(rep.render_text())
