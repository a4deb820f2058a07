"""The three numbers that govern election time: D, lambda, Lambda.

Refining the view partition one depth at a time shows how long symmetry
survives.  lambda is the first depth where some node's view class stops
shrinking (for solvable graphs: where some node becomes unique); Lambda is
where the whole partition freezes; and Lambda <= D + lambda always.
"""

from anonet import (
    diameter,
    full_partition,
    is_solvable,
    level_of_symmetry,
    partition_at_depth,
    stabilization_depth,
    symmetric_clique,
    twin_clique,
    uniform_cycle,
)
from anonet.families import spiked_torus

print(f"{'graph':<14}{'n':>4}{'D':>4}{'lambda':>8}{'Lambda':>8}{'sigma':>7}  solvable")
for name, g in [
    ("cycle_6", uniform_cycle(6)),
    ("clique_Q3", symmetric_clique(3)),
    ("clique_Q5", symmetric_clique(5)),
    ("twin_Qt3", twin_clique(3)),
    ("torus_T4", spiked_torus(4)),
]:
    pi = full_partition(g)
    print(
        f"{name:<14}{g.n:>4}{diameter(g):>4}{level_of_symmetry(g):>8}"
        f"{stabilization_depth(g):>8}{pi.sigma:>7}  {is_solvable(g)}"
    )

print("\nHow the partition of the 32-node clique refines, depth by depth:")
g = symmetric_clique(5)
for t in range(6):
    print(f"  depth {t}: {len(partition_at_depth(g, t))} classes")
print("Each extra doubling of the clique buys exactly one more depth of")
print("symmetry, which is what makes election provably need D + lambda rounds.")
