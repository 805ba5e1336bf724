"""
Two charts of the projective line
=================================

Each chart carries the scaling action; the attractor of one chart is the
whole chart, of the other a single point.
"""

from gmtilde.cli import demo_p1
from gmtilde.gmaction import GradedAlgebra, attractor, fixed_subscheme, repeller

# chart around 0 (weight 1) and around infinity (weight -1)
charts = {
    "near 0": GradedAlgebra.from_strings([("x", 1)], []),
    "near infinity": GradedAlgebra.from_strings([("y", -1)], []),
}

for label, A in charts.items():
    print(label)
    print("  fixed    :", fixed_subscheme(A).algebra.describe())
    print("  attractor:", attractor(A).algebra.describe())
    print("  repeller :", repeller(A).algebra.describe())

# the CLI demo glues the charts and checks the overlap
report = demo_p1()
print()
print(report.render_text())
