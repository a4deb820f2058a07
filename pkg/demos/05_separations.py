"""The two exponential separations, measured in rounds.

First gap: with only the size known, strong election is linear while weak
election finishes in logarithmically many rounds on the same graphs.
Second gap: adding the diameter to the size collapses strong election from
linear to logarithmic.
"""

from anonet.election import elect
from anonet.families import pendant_chorded_ring, uniform_chorded_ring
from anonet.graph import diameter
from anonet.views import level_of_symmetry

print(f"{'graph':<10}{'n':>5}{'D':>5}  {'sle-size':>9}{'sle-size-diam':>15}{'wle-diam':>10}")
for k in (2, 3):
    for name, g in ((f"ring_{k}", uniform_chorded_ring(k)),
                    (f"pendant_{k}", pendant_chorded_ring(k))):
        slow = elect(g, "sle-size").rounds
        fast = elect(g, "sle-size-diam").rounds
        weak = elect(g, "wle-diam").rounds
        print(f"{name:<10}{g.n:>5}{diameter(g):>5}  {slow:>9}{fast:>15}{weak:>10}")

g = uniform_chorded_ring(3)
slow = elect(g, "sle-size").rounds
fast = elect(g, "sle-size-diam").rounds
print(f"\nOn the 36-node ring the size-only strong program needs {slow} rounds")
print(f"(exactly 2n-2); telling nodes the diameter cuts that to {fast}.")
print(f"Measured gap: {slow}/{fast} = {slow / fast:.1f}x at n=36, and the ratio")
print("doubles with every doubling of n because the diameter only grows by a")
print("constant: that is the exponential separation, realized at desk scale.")
