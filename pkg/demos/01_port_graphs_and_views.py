"""Port graphs and views: what an anonymous node can actually learn.

A node has no identity.  All it ever sees is its own degree, the ports it
owns, and, round by round, what its neighbors saw.  The depth-t view packs
all of that into one tree: every walk of length t leaving the node, written
as the ports met along the way.
"""

from anonet import (
    PortGraph,
    canonical_encode,
    serialize_graph,
    view_at_depth,
)

# A path on three nodes.  Node 1 is the middle; ports are chosen so the two
# ends look different one hop out (node 0 enters the middle through port 0,
# node 2 through port 1).
p3 = PortGraph(3, [(0, 0, 1, 0), (1, 1, 2, 0)])
print(serialize_graph(p3))


def show(label, tree, indent="  "):
    print(f"{label}: degree {tree.degree}")
    for p, q, sub in tree.children:
        print(f"{indent}port {p} -> far port {q}, subtree degree {sub.degree}")


show("depth-1 view of the middle node", view_at_depth(p3, 1, 1))
show("depth-1 view of node 0", view_at_depth(p3, 0, 1))
show("depth-1 view of node 2", view_at_depth(p3, 2, 1))

enc0 = canonical_encode(view_at_depth(p3, 0, 1))
enc2 = canonical_encode(view_at_depth(p3, 2, 1))
print("\nnodes 0 and 2 share a degree but their depth-1 views already differ:")
print("  encoding of node 0's view:", enc0.hex())
print("  encoding of node 2's view:", enc2.hex())
print("  distinct:", enc0 != enc2)

print("\nThe canonical byte encoding is a total order on views of one depth,")
print("so 'smallest view' is well-defined; that is the election tie-breaker.")
