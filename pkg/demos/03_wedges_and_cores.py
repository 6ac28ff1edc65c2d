"""Wedges on incomparable carriers, and the T-core.

First, D8 x C2: the subgroups Q = <x, y> and R = <xz, y> are both
isomorphic to D8, and neither contains the other.  Their inner fusion
systems are weakly normal in the ambient inner system, they agree on the
automizer of S = Q n R, but the system that shared automizer generates on
S is not saturated.  The wedge lands on S and returns plain inner fusion.

Second, S3 x S3 at p = 3: the first factor K gives a subsystem E_K that is
normal in F_P(G) but merely weakly normal in F_P(H) for the index-two
subgroup H.  The T-core of the intersection recovers E_K exactly.
"""

from fusionkit import (
    Subgroup,
    fusion_of_group,
    generated_fusion,
    inner_fusion,
    intersect_raw,
    intersection_wedge,
    is_saturated,
    load_group_spec,
    normality_status,
    t_core,
)


def d8xc2_part():
    G, _ = load_group_spec("d8xc2")
    F = fusion_of_group(G, 2)
    x, y, z = G.generator_indices
    Q = G.generated_subgroup([x, y])
    R = G.generated_subgroup([G.mul(x, z), y])
    S = Subgroup(G, Q._set & R._set)
    E1 = fusion_of_group(Q, 2, Q)
    E2 = fusion_of_group(R, 2, R)

    print("--- D8 x C2 ---")
    print(f"|Q| = {len(Q)}, |R| = {len(R)}, |Q n R| = {len(S)}")
    print(f"both weakly normal: "
          f"{normality_status(F, E1).weakly_normal and normality_status(F, E2).weakly_normal}")
    same = set(E1.iso_mappings(S, S)) == set(E2.iso_mappings(S, S))
    print(f"automizers of S agree: {same}")

    naive = generated_fusion(S, 2, E1.isos_between(S, S))
    print(f"system generated by that automizer saturated: "
          f"{is_saturated(naive).saturated}")

    W = intersection_wedge(F, E1, E2)
    print(f"wedge = F_S(S): {W == inner_fusion(S, 2)}")


def s3xs3_part():
    G, _ = load_group_spec("s3xs3")
    F = fusion_of_group(G, 3)
    r1, s1, r2, s2 = G.generator_indices
    K = G.generated_subgroup([r1, s1])
    EK = fusion_of_group(K, 3, G.generated_subgroup([r1]))
    H = G.generated_subgroup([r1, r2, G.mul(s1, s2)])
    FH = fusion_of_group(H, 3, G.generated_subgroup([r1, r2]))

    print("--- S3 x S3 ---")
    print(f"E_K normal in F_P(G): {normality_status(F, EK).normal}")
    in_h = normality_status(FH, EK)
    print(f"E_K in F_P(H): weakly normal {in_h.weakly_normal}, "
          f"normal {in_h.normal}")

    raw = intersect_raw(EK, FH)
    core = t_core(FH, raw, EK.P)
    print(f"T-core of the intersection is E_K: {core == EK}")
    print(f"wedge is E_K: {intersection_wedge(F, EK, FH) == EK}")


def main():
    d8xc2_part()
    print()
    s3xs3_part()


if __name__ == "__main__":
    main()
