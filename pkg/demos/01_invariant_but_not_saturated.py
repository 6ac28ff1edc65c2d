"""The classic failure: an F-invariant subsystem that is not saturated.

Take F = F_P(A4) at p = 2, so P is the Klein four-group and the odd part
of A4 cycles its three involutions.  Keep only the isomorphisms between
subgroups of order at most two, and close up.  The result E contains all
inner maps, is stable under F-conjugation, and satisfies the surjectivity
property at every subgroup, yet it is not saturated: the cross maps
between the order-two subgroups have nothing to extend to, because E has
no automorphism of P to carry them.
"""

from fusionkit import (
    fusion_of_group,
    generated_fusion,
    is_saturated,
    is_saturated_puig,
    load_group_spec,
    normality_status,
    subgroup_status,
)
from fusionkit.saturation import has_surjectivity_property


def main():
    G, _ = load_group_spec("a4")
    F = fusion_of_group(G, 2)
    print(f"ambient system: {F}")

    isos = [
        phi
        for Q in F.subgroups()
        if len(Q) <= 2
        for phi in F.isos_from(Q)
        if len(phi.codomain) <= 2
    ]
    E = generated_fusion(F.P, 2, isos)
    print(f"subsystem from order-two maps: {E}")

    status = normality_status(F, E)
    print(f"F-invariant: {status.invariant}")
    print(
        "surjectivity property everywhere:",
        all(has_surjectivity_property(E, Q) for Q in E.subgroups()),
    )
    print(f"saturated: {is_saturated(E).saturated}")
    print(f"saturated (second criterion): {is_saturated_puig(E).saturated}")

    for Q in E.subgroups():
        if len(Q) == 2:
            st = subgroup_status(E, Q)
            print(
                f"order-two subgroup {Q.elements}: fully automized "
                f"{st.fully_automized}, receptive {st.receptive}"
            )
            break

    print()
    print("So invariance plus surjectivity does not give saturation;")
    print("weak normality has to require saturation separately.")


if __name__ == "__main__":
    main()
