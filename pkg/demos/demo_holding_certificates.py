"""End-to-end holding evidence for three circle/body pairs.

1. a tetrahedron whose waist circle is certifiably stuck,
2. a loose ring around a cube, which the escape search slides off the top,
3. the projection chain that bounds body width by 3/2 of a held circle's
   diameter.
"""

import numpy as np

from circlehold import (
    Circle3,
    build_hull,
    chain_certificate,
    escape_search,
    holding_report,
    octahedron_iceberg,
    wd_tetrahedron,
)


def main() -> None:
    # --- a circle that is stuck -------------------------------------------
    inst = wd_tetrahedron(1.0, 1.0, 1.0)
    rep = holding_report(inst.body, inst.circle, budget=5000)
    print(f"tetra waist circle d={inst.circle.diameter:.6f}: {rep.verdict}")
    for reason in rep.reasons:
        print(f"  - {reason}")

    # --- a circle that is not --------------------------------------------
    cube = build_hull(np.array([[x, y, z] for x in (0, 1)
                                for y in (0, 1) for z in (0, 1)], float))
    ring = Circle3((0.5, 0.5, 0.5), 1.8, (0, 0, 1))
    esc = escape_search(cube, ring, budget=20000)
    print(f"\nloose ring around a cube: {esc.outcome} after "
          f"{esc.checks_used} clearance checks, path of {len(esc.path or [])} poses")
    if esc.path:
        top = esc.path[-1].center[2]
        print(f"  final pose sits at z = {top:.2f}, well above the cube")

    # --- the width bound ----------------------------------------------------
    oc = octahedron_iceberg(1.05, 50.0)
    cert = chain_certificate(oc.body, oc.circle)
    v = cert.values
    print(f"\nprojection chain for the a=1.05 spindle (side: {cert.side}):")
    print(f"  width {v['width']:.6f} <= narrowest far-half shadow "
          f"{v['min_wh_far_half']:.6f}")
    print(f"  < waist-region width {v['min_wh_region']:.6f} "
          f"<= 1.5 x diameter = {v['diameter_bound']:.6f}")
    print(f"  all checks hold: {all(cert.checks.values())}")
    print(f"  => diameter/width ratio {oc.circle.diameter / v['width']:.6f} "
          f"(always > 2/3)")


if __name__ == "__main__":
    main()
