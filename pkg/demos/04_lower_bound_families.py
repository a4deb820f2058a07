"""The graph families that witness the lower bounds.

Three constructions, three obstructions:
  - clique necklaces keep two nodes indistinguishable until depth D+lambda,
    so no algorithm can elect faster than D+lambda rounds;
  - the spiked/twisted torus pair shares one diameter while only one member
    is solvable, so knowing D alone can never certify impossibility;
  - the chorded rings make a solvable graph locally identical to an
    unsolvable one for a linear number of rounds, so size-only strong
    election needs linear time.
"""

from anonet.families import (
    clique_necklace,
    pendant_chorded_ring,
    spiked_torus,
    twisted_tori,
    uniform_chorded_ring,
)
from anonet.graph import bfs_distances, diameter
from anonet.views import (
    ViewInterner,
    depth0_colors,
    full_partition,
    is_solvable,
    level_of_symmetry,
    refine_step,
)

print("necklace R(D=2, lambda=2): one symmetric clique plus three twin cliques")
g = clique_necklace(2, 2)
c = 8
x, xbar = 2 * c, 2 * c + c // 2
eng = ViewInterner()
colors = depth0_colors(g, eng)
for t in range(1, 5):
    colors = refine_step(g, colors, eng)
    print(f"  depth {t}: antipodal twins equal: {colors[x] == colors[xbar]}")
print("  equal through depth D+lambda-1 = 3, split only at 4: any correct")
print("  algorithm needs at least D+lambda rounds here.")

print("\ntorus pair, equal diameters, opposite solvability:")
for k in (3, 4):
    t, m = spiked_torus(k), twisted_tori(k)
    print(
        f"  k={k}: D(T)={diameter(t)} solvable={is_solvable(t)}  |  "
        f"D(M)={diameter(m)} solvable={is_solvable(m)}"
    )

print("\nchorded rings of one size, locally identical far from the pendant:")
for k in (2, 3):
    ring = uniform_chorded_ring(k)
    pend = pendant_chorded_ring(k)
    depth = (1 << k) - 1
    eng = ViewInterner()
    a = depth0_colors(ring, eng)
    b = depth0_colors(pend, eng)
    for _ in range(depth):
        a = refine_step(ring, a, eng)
        b = refine_step(pend, b, eng)
    dist = bfs_distances(pend, pend.n - 1)
    far = [u for u in range(pend.n) if dist[u] >= (1 << k) + 3]
    print(
        f"  k={k}: n={ring.n}, |Pi(ring)|={len(full_partition(ring))}, "
        f"{len(far)} far nodes all share the ring's depth-{depth} view: "
        f"{all(b[u] == a[0] for u in far)}"
    )
