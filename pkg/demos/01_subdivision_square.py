"""Build a square of vertices by subdividing two balls independently.

A vertex is a set of partial-map classes whose supports tile the Cantor
set.  Writing B_w for the identity class supported on the ball named w,
the vertex {B_0, B_10, B_11} can expand at B_0 and at B_10
independently; the four on/off combinations are the corners of a
2-cube.
"""

from cubex import Cube, CubeComplex, VElement, VSystem, cube_vertices, validate_vertex


def ball(w):
    return VElement((("", w),))


vs = VSystem()
cx = CubeComplex(vs)

v = validate_vertex([ball("0"), ball("10"), ball("11")])
print("vertex:", [str(b) for b in v], "height", v.height)
print("full support?", vs.is_full_support(v))

moves = cx.moves_at(v)
print(f"\n{len(moves)} moves are available (k^2 for height k={v.height}):")
for m in moves:
    print(f"  {m.kind:8s} {m.target}")

square = Cube.make(v, [ball("0"), ball("10")])
print("\ncorners of the square spanned by expanding B_0 and B_10:")
for corner in cube_vertices(square):
    print("  height", corner.height, [str(b) for b in corner])

# the same square is found by enumerating all cubes through v
assert square in cx.cubes_at(v, max_dim=2)

# the maximal cube at v expands everything at once: a 3-cube
top = max(cx.cubes_at(v, max_dim=3), key=lambda c: c.dim)
print("\nmaximal cube dimension:", top.dim, "with", 2**top.dim, "corners")
