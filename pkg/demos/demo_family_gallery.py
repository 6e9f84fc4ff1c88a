"""Walk through every built-in body family and its headline numbers."""

from circlehold import (
    bevelled_cylinder,
    five_vertex_flat,
    flat_tetrahedron,
    octahedron_iceberg,
    rectangle_circle,
    seven_vertex_iceberg,
    simplex_hull_nd,
    skew_tetrahedron,
    wd_tetrahedron,
)

GALLERY = [
    ("octahedron-iceberg", lambda: octahedron_iceberg(1.05, 50.0)),
    ("seven-vertex", lambda: seven_vertex_iceberg(1.38, 5.0)),
    ("rectangle-circle", lambda: rectangle_circle(1.38, 5.0)),
    ("flat-tetra", lambda: flat_tetrahedron(0.2)),
    ("five-vertex-flat", lambda: five_vertex_flat(0.2)),
    ("skew-tetra", lambda: skew_tetrahedron(0.05)),
    ("bevelled-cylinder", lambda: bevelled_cylinder(10.0, 64)),
    ("wd-tetra", lambda: wd_tetrahedron(1.0, 1.0, 1.0)),
    ("simplex-hull (n=5)", lambda: simplex_hull_nd(5, 1.001, 1000.0)),
]


def main() -> None:
    for name, make in GALLERY:
        inst = make()
        verts = len(inst.body.vertices)
        dim = inst.body.vertices.shape[1]
        print(f"\n{name}: {verts} vertices in dimension {dim}")
        for key in sorted(inst.predictions):
            pred = inst.predictions[key]
            print(f"  {key} = {pred.value}    [{pred.formula}]")


if __name__ == "__main__":
    main()
