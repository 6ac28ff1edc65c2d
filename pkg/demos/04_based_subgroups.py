"""Minimal and maximal weakly normal subsystems on a strongly closed subgroup.

The group here is (C3 x C3) : S3, order 54, at p = 3.  Its Sylow
3-subgroup P is extraspecial of order 27; the base Q = C3 x C3 and the
centre R = Z(P) are both strongly closed.  Both carry weakly normal
subsystems, so both are based, and the minimal and maximal systems
R_F(T) and R^F(T) exist on each.  The surprise is how little the two
carriers have to do with each other:

  - R^F(R) is a copy of the S3 fusion system on C3, with three morphisms;
  - R^F(Q) is plain inner fusion on Q;
  - R^F(R) is not contained in R^F(Q), even though R < Q.

Between the two ranges sit exactly three saturated subsystems on Q that
contain both R^F(R) and R_F(Q), and none of them is weakly normal.
"""

from fusionkit import (
    based_range,
    enumerate_subsystems_on,
    fusion_of_group,
    group_centre,
    inner_fusion,
    is_isomorphic_fusion,
    is_saturated,
    is_subsystem,
    load_group_spec,
    normality_status,
    strongly_closed_subgroups,
)


def main():
    G, _ = load_group_spec("ea9_s3")
    F = fusion_of_group(G, 3)
    Q = G.generated_subgroup([G.generator_indices[0], G.generator_indices[1]])
    R = group_centre(F.P)
    print(f"ambient system: {F}")
    print(f"strongly closed orders: "
          f"{sorted(len(T) for T in strongly_closed_subgroups(F))}")

    range_r = based_range(F, R)
    range_q = based_range(F, Q)
    S3, _ = load_group_spec("s3")
    print(f"R^F(R) is the S3 system on C3: "
          f"{is_isomorphic_fusion(range_r.maximal, fusion_of_group(S3, 3))}")
    print(f"R^F(Q) is inner fusion on Q: "
          f"{range_q.maximal == inner_fusion(Q, 3)}")
    print(f"R^F(R) <= R^F(Q): "
          f"{is_subsystem(range_r.maximal, range_q.maximal)}")
    print(f"R_F(R) <= R_F(Q): "
          f"{is_subsystem(range_r.minimal, range_q.minimal)}")

    candidates = [
        E for E in enumerate_subsystems_on(F, Q)
        if is_saturated(E).saturated
        and is_subsystem(range_r.maximal, E)
        and is_subsystem(range_q.minimal, E)
    ]
    print(f"saturated systems on Q between the ranges: {len(candidates)}")
    print(f"any weakly normal: "
          f"{any(normality_status(F, E).weakly_normal for E in candidates)}")

    print()
    print("So maximality does not pass to smaller carriers, and saturated")
    print("subsystems on a based carrier can fail weak normality en masse.")


if __name__ == "__main__":
    main()
