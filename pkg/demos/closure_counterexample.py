"""
When the closure of the action graph is smaller
===============================================

For smooth affine varieties the family agrees with the closure of the
graph of the action.  The cone x1*y1 + x2*y2 = 0 is singular at the origin
and the two differ; the script prints an element separating them.
"""

from gmtilde.gmaction import GradedAlgebra
from gmtilde.interpolation import graph_closure_compare

cone = GradedAlgebra.from_strings(
    [("x1", 1), ("x2", 1), ("y1", -1), ("y2", -1)], ["x1*y1 + x2*y2"]
)
cmp = graph_closure_compare(cone)
print("equal:", cmp.equal)
print("separating element:", cmp.witness)

# a smooth control: the plane with opposite weights
plane = GradedAlgebra.from_strings([("x", 1), ("y", -1)], [])
print("plane equal:", graph_closure_compare(plane).equal)
