"""Explore the 1-skeleton, test the link condition, list stabilizers.

Writes `ball.dot` (render with `dot -Tpng ball.dot -o ball.png` if
graphviz is installed).
"""

from collections import Counter

from cubex import CubeComplex, VSystem, graph_to_dot
from cubex.oracle import random_vertex, rng_from_seed

vs = VSystem()
cx = CubeComplex(vs)

base = vs.base_vertex()
graph = cx.bfs(base, radius=3)
print("ball of radius 3 around the one-element base vertex:")
print("  vertices:", len(graph.vertices), " edges:", len(graph.edges))
print("  heights:", dict(sorted(Counter(graph.heights).items())))

with open("ball.dot", "w") as fh:
    fh.write(graph_to_dot(graph))
print("  wrote ball.dot")

# the link of every vertex satisfies the flag condition: every clique of
# pairwise-compatible moves spans an actual cube
for v in graph.vertices[:6]:
    report = cx.check_flag(v, max_clique=4)
    print(
        f"flag check at height-{v.height} vertex:",
        "ok" if report.passed else "FAILED",
        f"({report.node_count} moves, {report.cliques_checked} cliques)",
    )

# stabilizers grow factorially with height: every permutation of the
# elements is realized by exactly one assembled group element
rng = rng_from_seed(99)
for k in (1, 2, 3, 4):
    v = random_vertex(vs, rng, k)
    print(f"|stabilizer| of a height-{k} vertex:", len(cx.stabilizer(v)))
