"""Why intersecting weakly normal subsystems needs care.

Inside A4 x A4, take the Sylow 2-subgroup P = V4 x V4 and two overgroups
H1 = P<x> and H2 = P<y>, where x and y are order-three elements acting as
the same 3-cycle on the first factor but as mutually inverse 3-cycles on
the second.  Both F_P(H1) and F_P(H2) are weakly normal in F_P(A4 x A4),
but their categorical intersection is not saturated: a diagonal
automorphism survives on one factor with no automorphism of P above it.

The wedge operation repairs this: the largest weakly normal subsystem
inside the intersection is plain inner fusion on P.
"""

from fusionkit import (
    fusion_of_group,
    inner_fusion,
    intersect_raw,
    intersection_wedge,
    is_saturated,
    load_group_spec,
    normality_status,
)


def main():
    G, _ = load_group_spec("a4xa4")
    F = fusion_of_group(G, 2)
    P = F.P
    print(f"ambient system: {F}")

    a = G.index_of((1, 0, 3, 2, 4, 5, 6, 7))
    b = G.index_of((2, 3, 0, 1, 4, 5, 6, 7))
    c = G.index_of((0, 1, 2, 3, 5, 4, 7, 6))
    d = G.index_of((0, 1, 2, 3, 6, 7, 4, 5))
    x = next(g for g in range(len(G)) if G.element_order(g) == 3
             and G.conj(a, g) == b and G.conj(c, g) == d)
    y = next(g for g in range(len(G)) if G.element_order(g) == 3
             and G.conj(a, g) == b and G.conj(d, g) == c)

    E1 = fusion_of_group(G.generated_subgroup(list(P.elements) + [x]), 2, P)
    E2 = fusion_of_group(G.generated_subgroup(list(P.elements) + [y]), 2, P)
    print(f"E1 weakly normal: {normality_status(F, E1).weakly_normal}")
    print(f"E2 weakly normal: {normality_status(F, E2).weakly_normal}")

    raw = intersect_raw(E1, E2)
    print(f"raw intersection: {raw}")
    print(f"automizer of P in the intersection: "
          f"{len(raw.iso_mappings(P, P))} map(s)")
    U = G.generated_subgroup([a, b])
    print(f"automizer of the first factor: "
          f"{len(raw.iso_mappings(U, U))} map(s)")
    print(f"raw intersection saturated: {is_saturated(raw).saturated}")

    W = intersection_wedge(F, E1, E2)
    print(f"wedge: {W}")
    print(f"wedge is inner fusion on P: {W == inner_fusion(P, 2)}")


if __name__ == "__main__":
    main()
