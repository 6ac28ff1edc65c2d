"""Centres of fusion systems, the hypercentre, and perfect systems.

Three views of the same subgroup: the centre Z(F) (elements fixable by
every morphism after extension), the limit of the upper central series
computed through quotients, and X_F, the largest subgroup whose
p-centralizer recovers all of F.  The library asserts their agreement on
every construction; this script just shows them side by side.

Perfect systems (no quotient onto a nontrivial inner system of an abelian
group) stop their central series immediately: Z_2(F) = Z_1(F), because
commutation with a second-centre element defines a morphism into the
centre that a perfect system cannot support nontrivially.
"""

from fusionkit import (
    fusion_of_group,
    group_vs_fusion_centres,
    inner_fusion,
    is_perfect,
    load_group_spec,
    upper_central_series,
    verify_perfect_z2,
    x_subgroup,
)


def show(name, p, F):
    series = upper_central_series(F)
    X = x_subgroup(F)
    print(f"{name} at p={p}:")
    print(f"  Z(F) order {len(series.terms[0])}, "
          f"series orders {[len(S) for S in series.terms]}, "
          f"hypercentre order {len(series.limit)}, "
          f"X_F order {len(X.value)}")
    print(f"  perfect: {is_perfect(F)}")
    if is_perfect(F):
        report = verify_perfect_z2(F)
        print(f"  Z_2 = Z_1 verified: {report.holds}")


def main():
    for name, p in [("s4", 2), ("sl23", 2), ("a4", 2), ("ea9_s3", 3)]:
        G, _ = load_group_spec(name)
        show(name, p, fusion_of_group(G, p))
        print()

    G, _ = load_group_spec("d8")
    show("d8 (inner)", 2, inner_fusion(G.full_subgroup, 2))
    print()

    print("group centres versus fusion centres (needs trivial coprime core):")
    for name, p in [("s4", 2), ("sl23", 2), ("ea9_s3", 3)]:
        G, _ = load_group_spec(name)
        report = group_vs_fusion_centres(G, p)
        print(f"  {name}: Z_i(G) = Z_i(F) for all i: {report.equal}")


if __name__ == "__main__":
    main()
