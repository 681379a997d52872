"""Smoke tests for the python bindings: a thin pass over the main operations."""

import twocat_py as tc


def check(cond, what):
    if not cond:
        raise SystemExit(f"FAIL: {what}")
    print(f"ok: {what}")


def main():
    zz = tc.Zigzag(-4, 4)
    check(zz.interior() == [-1, 0, 1], "interior vertices")
    check(zz.hom_dim_ff(0, 0, 0, 0) == 4, "End F(0,0) is 4-dimensional")
    check(zz.hom_dim_ff(0, 0, 1, 1) == 1, "Hom(F(0,0), F(1,1)) is 1-dimensional")
    check(zz.hom_dim_ff(-1, 0, 1, 0) == 0, "distant F's have no homs")
    check(zz.hom_dim_id_f(0, 0) == 2, "Hom(Id, F(0,0)) is 2-dimensional")
    check(zz.hom_dim_id_f(0, 1) == 1, "Hom(Id, F(0,1)) is 1-dimensional")
    check(zz.hom_dim_f_id(0, 0) == 2, "Hom(F(0,0), Id) is 2-dimensional")
    check(zz.compose_multiplicity(0, 0, 0, 0) == 2, "F(0,0)oF(0,0) has multiplicity 2")
    zz6 = tc.Zigzag(-6, 6)
    check(zz6.compose_multiplicity(0, 1, 3, 2) == 0, "distant composition vanishes")
    check(zz.self_injective(), "zigzag algebra is self-injective")
    check(zz.adjoint_check(0, 1), "adjunction dimension table")

    cells = zz.cells()
    check(cells["j_cells"] == 2, "two J-cells")
    check(cells["strongly_regular"], "strongly regular J-cells")

    z = zz.z_algebra()
    check(z["local"], "Z is local")
    check(z["generator_products_vanish"], "Z generator products vanish")

    co = zz.coalgebra(0)
    check(co["axioms"], "coalgebra axioms")
    check(co["equivalence"], "comodule equivalence dimensions")
    check(co["regular_comodule_end_dim"] == 2, "regular comodule End dimension")

    ad = zz.adelman_selftest()
    check(ad["embedded_end_dim"] == 4, "embedded End dimension")
    check(ad["kernel_universal"], "kernel universal property")
    check(ad["bound_holds"], "hom dimension bound")

    a2 = tc.CoxeterSystem([[1, 3], [3, 1]])
    check(a2.order([0, 1]) == "6", "A2 order")
    check(a2.longest_length([0, 1]) == 3, "A2 longest length")
    check(a2.poincare([0, 1]) == "1 + 2*q + 2*q^2 + q^3", "A2 poincare polynomial")
    check(a2.graded_rank([], [0]) == "1 + q^2", "graded rank of R over R^s")
    check(len(a2.soergel_objects()) == 4, "A2 object count")

    a1t = tc.CoxeterSystem([[1, tc.INF], [tc.INF, 1]])
    check(not a1t.is_finite([0, 1]), "affine pair is infinite")
    check(len(a1t.soergel_objects()) == 3, "affine object count")

    a1 = tc.CoxeterSystem([[1]])
    dims = a1.invariant_dims([0], 8)
    check(dims == [1, 0, 1, 0, 1, 0, 1, 0, 1], "rank-1 invariant dimensions")

    print("smoke: all checks passed")


if __name__ == "__main__":
    main()
